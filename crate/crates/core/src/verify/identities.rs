//! Exact symbolic checks over the integers.

use std::collections::HashMap;

use serde::Serialize;

use super::param::{MinorSymbol, ParamMap};
use crate::error::Result;
use crate::polyring::{Domain, Monomial, Polynomial, VarId};
use crate::scroll::{
    bridge, equation_set, BridgeMeta, ScrollProfile, DEFAULT_EXPANSION_WARN_DEGREE,
};

/// Outcome of an exact identity `lhs == rhs`; `residual = lhs - rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub passed: bool,
    pub residual: Polynomial,
}

impl IdentityCheck {
    fn from_residual(residual: Polynomial) -> Self {
        IdentityCheck {
            passed: residual.is_zero(),
            residual,
        }
    }
}

fn mono(pairs: &[(VarId, u64)]) -> Polynomial {
    Polynomial::int_term(
        1,
        Monomial::from_pairs(pairs.iter().map(|&(v, e)| (v, e as u32))),
    )
}

/// `B_{a,b}(u s^a, u s^(a-1) t, ..., u t^a, v s^b, ..., v t^b) == 0`.
pub fn check_property1(a: u32, b: u32) -> Result<IdentityCheck> {
    let (_, poly) = bridge(a, b, 1, 2)?;
    let mut map = HashMap::new();
    for j in 0..=a as u64 {
        map.insert(
            VarId::x(1, j as u32),
            mono(&[
                (VarId::u(1), 1),
                (VarId::s(), a as u64 - j),
                (VarId::t(), j),
            ]),
        );
    }
    for h in 0..=b as u64 {
        map.insert(
            VarId::x(2, h as u32),
            mono(&[(VarId::v(), 1), (VarId::s(), b as u64 - h), (VarId::t(), h)]),
        );
    }
    Ok(IdentityCheck::from_residual(poly.substitute(&map, true)?))
}

/// `B_{a,b}(s^a, ..., t^a, z^b, ..., w^b) == (t z - s w)^m`.
pub fn check_property2(a: u32, b: u32) -> Result<IdentityCheck> {
    let (BridgeMeta { m, .. }, poly) = bridge(a, b, 1, 2)?;
    let mut map = HashMap::new();
    for j in 0..=a as u64 {
        map.insert(
            VarId::x(1, j as u32),
            mono(&[(VarId::s(), a as u64 - j), (VarId::t(), j)]),
        );
    }
    for h in 0..=b as u64 {
        map.insert(
            VarId::x(2, h as u32),
            mono(&[(VarId::z(), b as u64 - h), (VarId::w(), h)]),
        );
    }
    let lhs = poly.substitute(&map, true)?;
    let z = Domain::Integer;
    let tz_sw = Polynomial::var(z, VarId::t()) * Polynomial::var(z, VarId::z())
        - Polynomial::var(z, VarId::s()) * Polynomial::var(z, VarId::w());
    let rhs = tz_sw.pow(m as u32);
    Ok(IdentityCheck::from_residual(lhs - rhs))
}

/// How a generator was pushed through the parametrization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubstitutionRoute {
    /// The fully expanded polynomial was substituted.
    Expanded,
    /// Each bridge was substituted, then powered and summed.
    PowerSum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorCheck {
    pub label: String,
    pub passed: bool,
    pub route: SubstitutionRoute,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParametrizationReport {
    pub profile: Vec<u32>,
    pub checks: Vec<GeneratorCheck>,
}

impl ParametrizationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Substitutes the scroll parametrization into every minor, curve equation,
/// and weight generator; each must become the zero polynomial.
///
/// Weight generators of degree at most `expand_degree` are expanded first;
/// larger ones go through their bridges.
pub fn check_parametrization(profile: &ScrollProfile) -> Result<ParametrizationReport> {
    check_parametrization_with(profile, DEFAULT_EXPANSION_WARN_DEGREE)
}

pub fn check_parametrization_with(
    profile: &ScrollProfile,
    expand_degree: u64,
) -> Result<ParametrizationReport> {
    let set = equation_set(profile)?;
    let map = ParamMap::new(profile).substitution();
    let mut checks = Vec::new();
    for m in &set.minors {
        checks.push(GeneratorCheck {
            label: m.label(),
            passed: m.poly.substitute(&map, true)?.is_zero(),
            route: SubstitutionRoute::Expanded,
        });
    }
    for c in &set.curves {
        checks.push(GeneratorCheck {
            label: c.label(),
            passed: c.poly.substitute(&map, true)?.is_zero(),
            route: SubstitutionRoute::Expanded,
        });
    }
    for w in &set.weights {
        let (passed, route) = if w.degree() <= expand_degree {
            (
                w.expand().substitute(&map, true)?.is_zero(),
                SubstitutionRoute::Expanded,
            )
        } else {
            let mut image = Polynomial::zero(Domain::Integer);
            for (b, pair) in w.bridges.iter().zip(&w.group.pairs) {
                image = image + b.substitute(&map, true)?.pow(pair.c as u32);
            }
            (image.is_zero(), SubstitutionRoute::PowerSum)
        };
        checks.push(GeneratorCheck {
            label: w.label(),
            passed,
            route,
        });
    }
    Ok(ParametrizationReport {
        profile: profile.blocks().to_vec(),
        checks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerReport {
    pub d: u32,
    pub quadruples: usize,
    /// `(a, i, j, b)` with the nonzero left-hand side.
    pub failures: Vec<((u32, u32, u32, u32), Polynomial)>,
}

impl PluckerReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `alpha_{i,j} alpha_{a,b} - alpha_{a,j} alpha_{i,b} + alpha_{a,i} alpha_{j,b} == 0`
/// for every `a < i < j < b <= d`, as exact polynomial identities in the
/// entries of a generic 2 x d matrix.
pub fn plucker_identity(d: u32) -> PluckerReport {
    let alpha = |x, y| MinorSymbol::new(x, y).poly();
    let mut quadruples = 0;
    let mut failures = Vec::new();
    for a in 1..=d {
        for i in a + 1..=d {
            for j in i + 1..=d {
                for b in j + 1..=d {
                    quadruples += 1;
                    let lhs = alpha(i, j) * alpha(a, b) - alpha(a, j) * alpha(i, b)
                        + alpha(a, i) * alpha(j, b);
                    if !lhs.is_zero() {
                        failures.push(((a, i, j, b), lhs));
                    }
                }
            }
        }
    }
    PluckerReport {
        d,
        quadruples,
        failures,
    }
}
