//! Checks that the constructed generators cut out the scroll.
//!
//! `J <= P` is checked symbolically: the bridge identities, vanishing of every
//! generator under the scroll parametrization, and the three-term Plücker
//! relations used to propagate vanishing minors. The reverse inclusion of
//! zero sets is checked by exhaustive enumeration over small prime fields.

mod identities;
mod param;
mod random;
mod variety;

pub use identities::{
    check_parametrization, check_parametrization_with, check_property1, check_property2,
    plucker_identity, GeneratorCheck, IdentityCheck, ParametrizationReport, PluckerReport,
    SubstitutionRoute,
};
pub use param::{MinorSymbol, ParamMap};
pub use random::{
    eval_j_at, identity_test, sample_scroll_points, schwartz_zippel_equal,
    schwartz_zippel_equal_with, SampleReport, ZippelVerdict, DEFAULT_LARGE_PRIME,
    DEFAULT_SAFETY_FACTOR,
};
pub use variety::{
    compare_equation_set, compare_varieties, compile_system, enumerate_variety, projective_count,
    Enumeration, EnumerationOptions, FieldGenerator, VarietyReport, DEFAULT_BUDGET,
    DEFAULT_MAX_FIELD,
};

use serde::Serialize;

use crate::error::Result;
use crate::scroll::ScrollProfile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
}

/// Everything `verify` runs for one profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub profile: Vec<u32>,
    pub checks: Vec<NamedCheck>,
    pub parametrization: ParametrizationReport,
    pub variety: Option<VarietyReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
            && self.parametrization.passed()
            && self.variety.as_ref().is_none_or(VarietyReport::passed)
    }
}

/// Bridge identities for every block pair, parametrization vanishing, the
/// Plücker relations for `d` columns, and (when `field` is given) the
/// point-set comparison over `F_field`.
pub fn run_verification(
    profile: &ScrollProfile,
    field: Option<u64>,
    opts: &EnumerationOptions,
) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    let d = profile.d();
    for i in 1..=d {
        for j in i + 1..=d {
            let (a, b) = (profile.n(i), profile.n(j));
            checks.push(NamedCheck {
                name: format!("property1 B({a},{b}) [blocks {i},{j}]"),
                passed: check_property1(a, b)?.passed,
            });
            checks.push(NamedCheck {
                name: format!("property2 B({a},{b}) [blocks {i},{j}]"),
                passed: check_property2(a, b)?.passed,
            });
        }
    }
    let pl = plucker_identity(d);
    checks.push(NamedCheck {
        name: format!("plucker d={d} ({} quadruples)", pl.quadruples),
        passed: pl.passed(),
    });
    let parametrization = check_parametrization(profile)?;
    let variety = match field {
        Some(q) => Some(compare_varieties(profile, q, opts)?),
        None => None,
    };
    Ok(VerificationReport {
        profile: profile.blocks().to_vec(),
        checks,
        parametrization,
        variety,
    })
}
