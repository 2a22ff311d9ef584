use num_integer::Integer;

use super::bridge::{bridge, BridgeMeta};
use super::ScrollProfile;
use crate::error::Result;
use crate::polyring::{Domain, Polynomial};

/// Expanding a weight generator with `r_k` above this many degrees gets a
/// warning: coefficients of `B^c` grow like `C(m, .)^c`.
pub const DEFAULT_EXPANSION_WARN_DEGREE: u64 = 64;

/// A bridge `B_{n_i, n_j}` (block `i` on the X side, block `j > i` on the Y
/// side) together with its exponent `c_{i,j}` in `G_{i+j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightedBridge {
    pub i: u32,
    pub j: u32,
    pub meta: BridgeMeta,
    pub c: u64,
}

impl WeightedBridge {
    /// `e_{i,j} = m_{i,j} * c_{i,j}`, the exponent of the minor `alpha_{i,j}`
    /// in the restriction of `B^c` to the product of two curves.
    pub fn e(&self) -> u64 {
        self.meta.m * self.c
    }
}

/// All bridges of weight `k = i + j`, with `r_k = lcm(p_{i,j} + q_{i,j})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightGroup {
    pub k: u32,
    pub r: u64,
    pub pairs: Vec<WeightedBridge>,
}

impl WeightGroup {
    pub fn c(&self, i: u32, j: u32) -> Option<u64> {
        self.pairs
            .iter()
            .find(|w| w.i == i && w.j == j)
            .map(|w| w.c)
    }
}

/// Weight groups `k = 3..=2d-1`; empty when `d < 2`.
pub fn weight_groups(profile: &ScrollProfile) -> Vec<WeightGroup> {
    let d = profile.d();
    if d < 2 {
        return Vec::new();
    }
    (3..=2 * d - 1)
        .map(|k| {
            let metas: Vec<(u32, u32, BridgeMeta)> = (1..=d)
                .filter_map(|i| {
                    let j = k.checked_sub(i)?;
                    (i < j && j <= d).then_some(i)
                })
                .map(|i| {
                    let j = k - i;
                    let meta = BridgeMeta::new(profile.n(i), profile.n(j))
                        .expect("profile sizes are positive");
                    (i, j, meta)
                })
                .collect();
            let r = metas
                .iter()
                .fold(1u64, |acc, (_, _, m)| acc.lcm(&m.degree()));
            let pairs = metas
                .into_iter()
                .map(|(i, j, meta)| WeightedBridge {
                    i,
                    j,
                    meta,
                    c: r / meta.degree(),
                })
                .collect();
            WeightGroup { k, r, pairs }
        })
        .collect()
}

/// Bridges of a group, aligned with `group.pairs`.
pub fn group_bridges(profile: &ScrollProfile, group: &WeightGroup) -> Result<Vec<Polynomial>> {
    group
        .pairs
        .iter()
        .map(|w| bridge(profile.n(w.i), profile.n(w.j), w.i, w.j).map(|(_, b)| b))
        .collect()
}

/// `G_k = sum_{i+j=k} B_{n_i,n_j}^{c_{i,j}}`, fully expanded.
pub fn g_polynomial(profile: &ScrollProfile, group: &WeightGroup) -> Result<Polynomial> {
    g_polynomial_with_guard(profile, group, DEFAULT_EXPANSION_WARN_DEGREE)
}

pub fn g_polynomial_with_guard(
    profile: &ScrollProfile,
    group: &WeightGroup,
    warn_degree: u64,
) -> Result<Polynomial> {
    if group.r > warn_degree {
        log::warn!(
            "expanding G[{}] of degree {} (> {warn_degree}); coefficients and term counts grow quickly",
            group.k,
            group.r
        );
    }
    let bridges = group_bridges(profile, group)?;
    Ok(expand_power_sum(&bridges, &group.pairs))
}

pub(crate) fn expand_power_sum(bridges: &[Polynomial], pairs: &[WeightedBridge]) -> Polynomial {
    bridges
        .iter()
        .zip(pairs)
        .fold(Polynomial::zero(Domain::Integer), |acc, (b, w)| {
            acc + b.pow(u32::try_from(w.c).expect("exponent fits in u32"))
        })
}
