//! Exact sparse multivariate polynomials over Z, Q and F_p.

mod coeff;
mod eval;
mod json;
mod monomial;
mod parse;
mod poly;
mod var;

pub use coeff::{add_mod, binomial, is_prime, mul_mod, pow_mod, sub_mod, Coefficient, Domain};
pub use eval::FieldEvaluator;
pub use json::{DomainRepr, PolyRepr, TermRepr};
pub use monomial::Monomial;
pub use parse::{parse_poly, ParseContext};
pub use poly::Polynomial;
pub use var::{Param, VarId};
