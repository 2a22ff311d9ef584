//! JSON form of scroll polynomials:
//! `{"domain":"Z"|"Q"|{"Fp":p},"terms":[{"coeff":"<decimal>","exps":[[i,j,e],...]},...]}`
//! with `exps` sorted by `(i, j)` and terms in canonical order (leading term
//! first). Output is compact and byte-stable.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::coeff::{Coefficient, Domain};
use super::{Monomial, Polynomial, VarId};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(untagged)]
pub enum DomainRepr {
    Named(String),
    Fp {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermRepr {
    pub coeff: String,
    pub exps: Vec<[u32; 3]>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PolyRepr {
    pub domain: DomainRepr,
    pub terms: Vec<TermRepr>,
}

impl From<Domain> for DomainRepr {
    fn from(d: Domain) -> Self {
        match d {
            Domain::Integer => DomainRepr::Named("Z".into()),
            Domain::Rational => DomainRepr::Named("Q".into()),
            Domain::PrimeField(p) => DomainRepr::Fp { fp: p },
        }
    }
}

impl TryFrom<&DomainRepr> for Domain {
    type Error = Error;
    fn try_from(d: &DomainRepr) -> Result<Domain> {
        match d {
            DomainRepr::Named(s) if s == "Z" => Ok(Domain::Integer),
            DomainRepr::Named(s) if s == "Q" => Ok(Domain::Rational),
            DomainRepr::Named(s) => Err(Error::Json(format!("unknown domain '{s}'"))),
            DomainRepr::Fp { fp } => Domain::prime_field(*fp),
        }
    }
}

impl Polynomial {
    pub fn to_repr(&self) -> Result<PolyRepr> {
        let mut terms = Vec::with_capacity(self.num_terms());
        for (m, c) in self.terms() {
            let mut exps = Vec::with_capacity(m.len());
            for (v, e) in m.iter() {
                match v {
                    VarId::Scroll { block, slot } => exps.push([block, slot, e]),
                    other => return Err(Error::UnsupportedVariable(other)),
                }
            }
            terms.push(TermRepr {
                coeff: c.to_string(),
                exps,
            });
        }
        Ok(PolyRepr {
            domain: self.domain().into(),
            terms,
        })
    }

    pub fn from_repr(repr: &PolyRepr) -> Result<Polynomial> {
        let domain = Domain::try_from(&repr.domain)?;
        let mut parsed = Vec::with_capacity(repr.terms.len());
        for t in &repr.terms {
            let c = match domain {
                Domain::Rational => {
                    let r: BigRational = t
                        .coeff
                        .parse()
                        .map_err(|_| Error::Json(format!("bad rational '{}'", t.coeff)))?;
                    Coefficient::Rational(r)
                }
                _ => {
                    let v: BigInt = t
                        .coeff
                        .parse()
                        .map_err(|_| Error::Json(format!("bad integer '{}'", t.coeff)))?;
                    domain.from_bigint(&v)
                }
            };
            let m = Monomial::from_pairs(t.exps.iter().map(|&[i, j, e]| (VarId::x(i, j), e)));
            parsed.push((c, m));
        }
        Polynomial::from_terms(domain, parsed)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_repr()?)?)
    }

    pub fn from_json(text: &str) -> Result<Polynomial> {
        let repr: PolyRepr = serde_json::from_str(text)?;
        Polynomial::from_repr(&repr)
    }
}
