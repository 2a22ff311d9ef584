use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::polyring::{binomial, Domain, Monomial, Polynomial, VarId};

/// Arithmetic data of the bridge between blocks of sizes `a` and `b`:
/// `m = lcm(a, b) = a*p = b*q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BridgeMeta {
    pub a: u32,
    pub b: u32,
    pub m: u64,
    pub p: u64,
    pub q: u64,
}

impl BridgeMeta {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidBridge { a, b });
        }
        let m = (a as u64).lcm(&(b as u64));
        Ok(BridgeMeta {
            a,
            b,
            m,
            p: m / a as u64,
            q: m / b as u64,
        })
    }

    /// Total degree `p + q` of the bridge.
    pub fn degree(&self) -> u64 {
        self.p + self.q
    }
}

/// The bridge `B_{a,b}` between `x[x_block][0..=a]` and `x[y_block][0..=b]`.
///
/// Term `alpha` (for `alpha = 0..=m`, with `alpha = c*p + r = e*q + f`) is
/// `(-1)^alpha C(m, alpha) X_{a-c}^{p-r} X_{a-c-1}^r Y_e^{q-f} Y_{e+1}^f`.
/// Factors with exponent zero are omitted, which covers the out-of-range
/// `X_{-1}` and `Y_{b+1}` at `alpha = m`.
pub fn bridge(a: u32, b: u32, x_block: u32, y_block: u32) -> Result<(BridgeMeta, Polynomial)> {
    let meta = BridgeMeta::new(a, b)?;
    let BridgeMeta { m, p, q, .. } = meta;
    let (a64, b64) = (a as i64, b as i64);
    let mut terms = Vec::with_capacity(m as usize + 1);
    for alpha in 0..=m {
        let (c, r) = (alpha / p, alpha % p);
        let (e, f) = (alpha / q, alpha % q);
        let mut pairs: Vec<(VarId, u32)> = Vec::with_capacity(4);
        let mut push = |block: u32, slot: i64, exp: u64, bound: i64| {
            if exp == 0 {
                return;
            }
            assert!((0..=bound).contains(&slot), "bridge index out of range");
            pairs.push((VarId::x(block, slot as u32), exp as u32));
        };
        push(x_block, a64 - c as i64, p - r, a64);
        push(x_block, a64 - c as i64 - 1, r, a64);
        push(y_block, e as i64, q - f, b64);
        push(y_block, e as i64 + 1, f, b64);
        let mut coeff = binomial(m, alpha)?;
        if alpha % 2 == 1 {
            coeff = -coeff;
        }
        terms.push((
            Domain::Integer.from_bigint(&coeff),
            Monomial::from_pairs(pairs),
        ));
    }
    Ok((meta, Polynomial::from_terms(Domain::Integer, terms)?))
}

/// The same bridge, built without any division: pair the descending list of
/// degree-`p` X-monomials `X_a^p, X_a^{p-1} X_{a-1}, ..., X_0^p` with the
/// ascending list of degree-`q` Y-monomials `Y_0^q, Y_0^{q-1} Y_1, ..., Y_b^q`
/// position by position, weighting position `k` by `(-1)^k C(m, k)`.
pub fn bridge_via_lists(a: u32, b: u32, x_block: u32, y_block: u32) -> Result<Polynomial> {
    let meta = BridgeMeta::new(a, b)?;
    let (p, q) = (meta.p as u32, meta.q as u32);

    let mut xs: Vec<Monomial> = Vec::new();
    for hi in (1..=a).rev() {
        for r in 0..p {
            xs.push(Monomial::from_pairs([
                (VarId::x(x_block, hi), p - r),
                (VarId::x(x_block, hi - 1), r),
            ]));
        }
    }
    xs.push(Monomial::var_pow(VarId::x(x_block, 0), p));

    let mut ys: Vec<Monomial> = Vec::new();
    for lo in 0..b {
        for f in 0..q {
            ys.push(Monomial::from_pairs([
                (VarId::x(y_block, lo), q - f),
                (VarId::x(y_block, lo + 1), f),
            ]));
        }
    }
    ys.push(Monomial::var_pow(VarId::x(y_block, b), q));
    debug_assert_eq!(xs.len(), ys.len());

    // Running binomial C(m, k), updated multiplicatively.
    let m = BigInt::from(meta.m);
    let mut binom = BigInt::from(1);
    let mut terms = Vec::with_capacity(xs.len());
    for (k, (xm, ym)) in xs.iter().zip(&ys).enumerate() {
        let signed = if k % 2 == 1 {
            -binom.clone()
        } else {
            binom.clone()
        };
        terms.push((Domain::Integer.from_bigint(&signed), xm.mul(ym)));
        binom = binom * (&m - k) / (k + 1);
    }
    Polynomial::from_terms(Domain::Integer, terms)
}
