//! Serializations of an [`EquationSet`]: annotated plain text, JSON, and
//! scripts for Macaulay2 and Singular that declare the ring, the ideal `J`,
//! the prime ideal `P` of 2x2 minors, and a radical-equality query.
//!
//! All output is deterministic for a given profile.

use std::fmt::Write as _;

use serde::Serialize;

use super::equations::EquationSet;
use super::weights::DEFAULT_EXPANSION_WARN_DEGREE;
use crate::error::Result;
use crate::polyring::{PolyRepr, VarId};

/// Weight generators up to this degree are written out expanded in plain
/// text and JSON; larger ones keep their power-sum form.
pub const DEFAULT_EXPAND_DEGREE: u64 = DEFAULT_EXPANSION_WARN_DEGREE;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CasDialect {
    Macaulay2,
    Singular,
}

pub fn to_plain_text(set: &EquationSet, expand_degree: u64) -> String {
    let mut out = String::new();
    writeln!(out, "# {}", set.summary()).unwrap();
    for c in &set.curves {
        writeln!(out, "# {} {}", c.label(), c.description()).unwrap();
        writeln!(out, "{}", c.poly).unwrap();
    }
    for w in &set.weights {
        writeln!(out, "# {} = {}", w.label(), w.description()).unwrap();
        if w.degree() <= expand_degree {
            writeln!(out, "{}", w.expand()).unwrap();
        } else {
            writeln!(out, "{}", w.structured_text()).unwrap();
        }
    }
    out
}

#[derive(Serialize)]
struct SummandJson {
    i: u32,
    j: u32,
    exponent: u64,
    base: PolyRepr,
}

#[derive(Serialize)]
struct GeneratorJson {
    label: String,
    kind: &'static str,
    degree: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<PolyRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    summands: Option<Vec<SummandJson>>,
}

#[derive(Serialize)]
struct EquationSetJson<'a> {
    profile: &'a [u32],
    d: u32,
    #[serde(rename = "N")]
    n: u32,
    #[serde(rename = "J")]
    j: Vec<GeneratorJson>,
    #[serde(rename = "P")]
    p: Vec<GeneratorJson>,
}

pub fn to_json(set: &EquationSet, expand_degree: u64) -> Result<String> {
    let mut j = Vec::with_capacity(set.j_len());
    for c in &set.curves {
        j.push(GeneratorJson {
            label: c.label(),
            kind: "curve",
            degree: c.index as u64 + 1,
            poly: Some(c.poly.to_repr()?),
            summands: None,
        });
    }
    for w in &set.weights {
        let (poly, summands) = if w.degree() <= expand_degree {
            (Some(w.expand().to_repr()?), None)
        } else {
            let mut s = Vec::new();
            for (b, pair) in w.bridges.iter().zip(&w.group.pairs) {
                s.push(SummandJson {
                    i: pair.i,
                    j: pair.j,
                    exponent: pair.c,
                    base: b.to_repr()?,
                });
            }
            (None, Some(s))
        };
        j.push(GeneratorJson {
            label: w.label(),
            kind: "weight",
            degree: w.degree(),
            poly,
            summands,
        });
    }
    let mut p = Vec::with_capacity(set.minors.len());
    for m in &set.minors {
        p.push(GeneratorJson {
            label: m.label(),
            kind: "minor",
            degree: 2,
            poly: Some(m.poly.to_repr()?),
            summands: None,
        });
    }
    let doc = EquationSetJson {
        profile: set.profile.blocks(),
        d: set.profile.d(),
        n: set.profile.ambient_dim(),
        j,
        p,
    };
    Ok(serde_json::to_string(&doc)?)
}

fn cas_name(dialect: CasDialect, v: &VarId) -> String {
    match (dialect, v) {
        (CasDialect::Macaulay2, VarId::Scroll { block, slot }) => format!("x_({block},{slot})"),
        (CasDialect::Singular, VarId::Scroll { block, slot }) => format!("x({block})({slot})"),
        (_, other) => other.to_string(),
    }
}

/// Script declaring the ring, `J`, `P`, and checks `J <= P` and
/// `radical(J) == P`. Weight generators are written as power sums.
pub fn to_cas_script(set: &EquationSet, dialect: CasDialect) -> String {
    let name = |v: &VarId| cas_name(dialect, v);
    let vars: Vec<String> = set.profile.variables().iter().map(&name).collect();
    let j_gens: Vec<String> = set
        .curves
        .iter()
        .map(|c| c.poly.to_string_with(name))
        .chain(
            set.weights
                .iter()
                .map(|w| w.structured_text_with(|p| p.to_string_with(name))),
        )
        .collect();
    let p_gens: Vec<String> = set
        .minors
        .iter()
        .map(|m| m.poly.to_string_with(name))
        .collect();
    let header = format!(
        "{} in P^{}: {} generators of J, {} minors",
        set.profile,
        set.profile.ambient_dim(),
        j_gens.len(),
        p_gens.len()
    );

    let mut out = String::new();
    match dialect {
        CasDialect::Macaulay2 => {
            writeln!(out, "-- {header}").unwrap();
            writeln!(out, "R = QQ[{}];", vars.join(", ")).unwrap();
            writeln!(out, "J = ideal(\n    {}\n);", j_gens.join(",\n    ")).unwrap();
            writeln!(out, "P = ideal(\n    {}\n);", p_gens.join(",\n    ")).unwrap();
            writeln!(out, "print(isSubset(J, P));").unwrap();
            writeln!(out, "print(radical J == P);").unwrap();
        }
        CasDialect::Singular => {
            writeln!(out, "// {header}").unwrap();
            writeln!(out, "LIB \"primdec.lib\";").unwrap();
            writeln!(out, "ring R = 0, ({}), dp;", vars.join(", ")).unwrap();
            writeln!(out, "ideal J =\n    {};", j_gens.join(",\n    ")).unwrap();
            writeln!(out, "ideal P =\n    {};", p_gens.join(",\n    ")).unwrap();
            writeln!(out, "ideal sP = std(P);").unwrap();
            writeln!(out, "ideal srJ = std(radical(J));").unwrap();
            writeln!(out, "print(size(reduce(J, sP)) == 0);").unwrap();
            writeln!(
                out,
                "print(size(reduce(P, srJ)) == 0 && size(reduce(srJ, sP)) == 0);"
            )
            .unwrap();
        }
    }
    out
}
