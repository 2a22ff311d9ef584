//! Randomized checks with seeded, reproducible draws.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::param::ParamMap;
use super::variety::{compile_system, FieldGenerator};
use crate::error::{Error, Result};
use crate::polyring::{is_prime, Domain, FieldEvaluator, Polynomial, VarId};
use crate::scroll::{equation_set, ScrollProfile};

/// The Mersenne prime `2^61 - 1`.
pub const DEFAULT_LARGE_PRIME: u64 = (1 << 61) - 1;
/// Required ratio between the modulus and the total degree.
pub const DEFAULT_SAFETY_FACTOR: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub q: u64,
    pub trials: u64,
    /// Draws that produced the zero tuple and were skipped.
    pub skipped: u64,
    pub seed: u64,
    /// `(point, label)` for every generator that did not vanish.
    pub failures: Vec<(Vec<u64>, String)>,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Draws `(u_1, ..., u_d, s, t)` uniformly from `F_q`, maps them onto the
/// scroll, and evaluates every generator of `J` there.
pub fn sample_scroll_points(
    profile: &ScrollProfile,
    q: u64,
    trials: u64,
    seed: u64,
) -> Result<SampleReport> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let set = equation_set(profile)?;
    let (j, _) = compile_system(&set, q)?;
    let labels: Vec<String> = set.j_generators().iter().map(|g| g.label()).collect();
    let map = ParamMap::new(profile);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SampleReport {
        q,
        trials,
        skipped: 0,
        seed,
        failures: Vec::new(),
    };
    for _ in 0..trials {
        let u: Vec<u64> = (0..profile.d()).map(|_| rng.gen_range(0..q)).collect();
        let s = rng.gen_range(0..q);
        let t = rng.gen_range(0..q);
        let Some(point) = map.point(&u, s, t, q) else {
            report.skipped += 1;
            continue;
        };
        for (g, label) in j.iter().zip(&labels) {
            if g.eval(&point) != 0 {
                report.failures.push((point.clone(), label.clone()));
            }
        }
    }
    Ok(report)
}

/// Evaluates every generator of `J` at one given parameter value.
pub fn eval_j_at(profile: &ScrollProfile, q: u64, point: &[u64]) -> Result<Vec<u64>> {
    let set = equation_set(profile)?;
    let (j, _) = compile_system(&set, q)?;
    Ok(j.iter().map(|g: &FieldGenerator| g.eval(point)).collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum ZippelVerdict {
    /// All trials vanished; a nonzero difference would have survived with
    /// probability at most `failure_bound`.
    ProbablyEqual { trials: u64, failure_bound: f64 },
    DefinitelyDifferent {
        witness: Vec<(String, u64)>,
        value: u64,
    },
}

impl ZippelVerdict {
    pub fn probably_equal(&self) -> bool {
        matches!(self, ZippelVerdict::ProbablyEqual { .. })
    }
}

/// Randomized identity test of two polynomials over `F_q` for a large prime
/// `q`. Integer polynomials are reduced mod `q` first.
pub fn schwartz_zippel_equal(
    p: &Polynomial,
    r: &Polynomial,
    q: u64,
    trials: u64,
    seed: u64,
) -> Result<ZippelVerdict> {
    schwartz_zippel_equal_with(p, r, q, trials, seed, DEFAULT_SAFETY_FACTOR)
}

pub fn schwartz_zippel_equal_with(
    p: &Polynomial,
    r: &Polynomial,
    q: u64,
    trials: u64,
    seed: u64,
    safety_factor: u64,
) -> Result<ZippelVerdict> {
    if p.domain() != r.domain() {
        return Err(Error::DomainMismatch {
            left: p.domain(),
            right: r.domain(),
        });
    }
    let reduce = |x: &Polynomial| match x.domain() {
        Domain::Integer => x.reduce_mod(q),
        Domain::PrimeField(m) if m == q => Ok(x.clone()),
        other => Err(Error::DomainMismatch {
            left: Domain::PrimeField(q),
            right: other,
        }),
    };
    let (pf, rf) = (reduce(p)?, reduce(r)?);
    let layout: Vec<VarId> = pf.variables().union(&rf.variables()).copied().collect();
    let degree = p
        .total_degree()
        .unwrap_or(0)
        .max(r.total_degree().unwrap_or(0));
    let ep = FieldEvaluator::compile(&pf, &layout)?;
    let er = FieldEvaluator::compile(&rf, &layout)?;
    identity_test(
        |x| ep.eval(x),
        |x| er.eval(x),
        &layout,
        degree,
        q,
        trials,
        seed,
        safety_factor,
    )
}

/// Black-box variant: `f` and `g` are evaluated at uniform points of
/// `F_q^layout.len()`. Useful when expanding a generator is too costly.
#[allow(clippy::too_many_arguments)]
pub fn identity_test<F, G>(
    f: F,
    g: G,
    layout: &[VarId],
    degree: u32,
    q: u64,
    trials: u64,
    seed: u64,
    safety_factor: u64,
) -> Result<ZippelVerdict>
where
    F: Fn(&[u64]) -> u64,
    G: Fn(&[u64]) -> u64,
{
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let needed = (degree as u128) * (safety_factor.max(1) as u128);
    if (q as u128) <= needed {
        return Err(Error::ModulusTooSmall {
            q,
            degree,
            factor: safety_factor,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut point = vec![0u64; layout.len()];
    for _ in 0..trials.max(1) {
        for x in point.iter_mut() {
            *x = rng.gen_range(0..q);
        }
        let (a, b) = (f(&point), g(&point));
        if a != b {
            let value = (a + q - b) % q;
            return Ok(ZippelVerdict::DefinitelyDifferent {
                witness: layout
                    .iter()
                    .map(|v| v.to_string())
                    .zip(point.iter().copied())
                    .collect(),
                value,
            });
        }
    }
    let per_trial = degree as f64 / q as f64;
    Ok(ZippelVerdict::ProbablyEqual {
        trials: trials.max(1),
        failure_bound: per_trial.powi(trials.max(1).min(i32::MAX as u64) as i32),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scroll::{bridge, bridge_via_lists, build_profile};

    #[test]
    fn sampling_passes_and_is_reproducible() {
        let p = build_profile(&[2, 2, 3, 4]).unwrap();
        let a = sample_scroll_points(&p, 101, 200, 7).unwrap();
        assert!(a.passed());
        assert_eq!(a, sample_scroll_points(&p, 101, 200, 7).unwrap());
    }

    #[test]
    fn point_on_segre_quadric() {
        let p = build_profile(&[1, 1]).unwrap();
        let pt = ParamMap::new(&p).point(&[1, 1], 1, 0, 7).unwrap();
        assert_eq!(eval_j_at(&p, 7, &pt).unwrap(), vec![0]);
    }

    #[test]
    fn degenerate_draws_are_skipped() {
        // Over F_2 a fair share of draws has s = t = 0 or all u = 0.
        let p = build_profile(&[1, 1]).unwrap();
        let r = sample_scroll_points(&p, 2, 64, 1).unwrap();
        assert!(r.skipped > 0);
        assert!(r.passed());
    }

    #[test]
    fn zippel_examples() {
        let (_, b) = bridge(2, 4, 1, 2).unwrap();
        let l = bridge_via_lists(2, 4, 1, 2).unwrap();
        assert!(schwartz_zippel_equal(&b, &b, DEFAULT_LARGE_PRIME, 5, 0)
            .unwrap()
            .probably_equal());
        assert!(schwartz_zippel_equal(&b, &l, DEFAULT_LARGE_PRIME, 5, 0)
            .unwrap()
            .probably_equal());
        let x0 = Polynomial::var(Domain::Integer, VarId::x(1, 0));
        let x1 = Polynomial::var(Domain::Integer, VarId::x(1, 1));
        match schwartz_zippel_equal(&x0, &x1, DEFAULT_LARGE_PRIME, 5, 0).unwrap() {
            ZippelVerdict::DefinitelyDifferent { witness, value } => {
                assert_eq!(witness.len(), 2);
                assert_ne!(value, 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zippel_refuses_small_modulus() {
        let x0 = Polynomial::var(Domain::Integer, VarId::x(1, 0));
        let sq = x0.pow(7);
        assert!(matches!(
            schwartz_zippel_equal_with(&sq, &sq, 7, 3, 0, 1),
            Err(Error::ModulusTooSmall { .. })
        ));
        assert!(schwartz_zippel_equal_with(&sq, &sq, 11, 3, 0, 1).is_ok());
        assert_eq!(
            schwartz_zippel_equal_with(&sq, &sq, 12, 3, 0, 1),
            Err(Error::NotPrime(12))
        );
    }

    #[test]
    fn power_sum_agrees_with_expansion() {
        let p = build_profile(&[2, 2, 3, 4]).unwrap();
        let set = equation_set(&p).unwrap();
        let g5 = &set.weights[2];
        let q = DEFAULT_LARGE_PRIME;
        let layout = p.variables();
        let expanded =
            FieldEvaluator::compile(&g5.expand().reduce_mod(q).unwrap(), &layout).unwrap();
        let (j, _) = compile_system(&set, q).unwrap();
        let structured = &j[set.curves.len() + 2];
        let v = identity_test(
            |x| expanded.eval(x),
            |x| structured.eval(x),
            &layout,
            15,
            q,
            10,
            3,
            DEFAULT_SAFETY_FACTOR,
        )
        .unwrap();
        assert!(v.probably_equal());
    }
}
