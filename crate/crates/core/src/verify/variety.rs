//! Exhaustive comparison of `V(J)` and `V(P)` over a prime field.
//!
//! Projective points are enumerated through canonical representatives: the
//! first nonzero coordinate is 1, coordinates in block-major order. For `n`
//! coordinates there are `(q^n - 1) / (q - 1)` of them. The space is split by
//! leading position and then into fixed-size index ranges that are scanned
//! in parallel.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{is_prime, pow_mod, Domain, FieldEvaluator, Polynomial, VarId};
use crate::scroll::{equation_set, EquationSet, ScrollProfile};

pub const DEFAULT_BUDGET: u128 = 100_000_000;
pub const DEFAULT_MAX_FIELD: u64 = 1009;
const CHUNK: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Cap on `representatives * generators` evaluations.
    pub budget: u128,
    pub max_field: u64,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            budget: DEFAULT_BUDGET,
            max_field: DEFAULT_MAX_FIELD,
        }
    }
}

/// Number of canonical representatives of `P^{n-1}(F_q)`; `None` on
/// overflow.
pub fn projective_count(q: u64, n: usize) -> Option<u128> {
    let qn = (q as u128).checked_pow(u32::try_from(n).ok()?)?;
    Some((qn - 1) / (q as u128 - 1))
}

fn check_field(q: u64, opts: &EnumerationOptions) -> Result<()> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q > opts.max_field {
        return Err(Error::FieldTooLarge {
            q,
            cap: opts.max_field,
        });
    }
    Ok(())
}

fn check_budget(q: u64, n: usize, gens: usize, opts: &EnumerationOptions) -> Result<u128> {
    let reps = projective_count(q, n);
    let estimate = reps
        .and_then(|r| r.checked_mul(gens.max(1) as u128))
        .unwrap_or(u128::MAX);
    if estimate > opts.budget {
        return Err(Error::BudgetExceeded {
            estimate,
            budget: opts.budget,
        });
    }
    Ok(reps.expect("bounded by budget"))
}

/// A generator compiled for evaluation over `F_q`.
#[derive(Clone, Debug)]
pub enum FieldGenerator {
    Poly(FieldEvaluator),
    /// `sum base_k(x)^{c_k}`.
    PowerSum(Vec<(FieldEvaluator, u64)>),
}

impl FieldGenerator {
    pub fn eval(&self, values: &[u64]) -> u64 {
        match self {
            FieldGenerator::Poly(ev) => ev.eval(values),
            FieldGenerator::PowerSum(parts) => {
                let q = parts.first().map(|(ev, _)| ev.modulus()).unwrap_or(1);
                parts.iter().fold(0, |acc, (ev, c)| {
                    (acc + pow_mod(ev.eval(values), *c, q)) % q
                })
            }
        }
    }
}

fn to_field(p: &Polynomial, q: u64) -> Result<Polynomial> {
    match p.domain() {
        Domain::Integer => p.reduce_mod(q),
        Domain::PrimeField(r) if r == q => Ok(p.clone()),
        other => Err(Error::DomainMismatch {
            left: Domain::PrimeField(q),
            right: other,
        }),
    }
}

fn compile(p: &Polynomial, q: u64, layout: &[VarId]) -> Result<FieldEvaluator> {
    FieldEvaluator::compile(&to_field(p, q)?, layout)
}

/// `J` and `P` of a scroll reduced mod `q` and compiled against the
/// block-major coordinate layout.
pub fn compile_system(
    set: &EquationSet,
    q: u64,
) -> Result<(Vec<FieldGenerator>, Vec<FieldGenerator>)> {
    let layout = set.profile.variables();
    let mut j = Vec::with_capacity(set.j_len());
    for c in &set.curves {
        j.push(FieldGenerator::Poly(compile(&c.poly, q, &layout)?));
    }
    for w in &set.weights {
        let mut parts = Vec::with_capacity(w.bridges.len());
        for (b, pair) in w.bridges.iter().zip(&w.group.pairs) {
            parts.push((compile(b, q, &layout)?, pair.c));
        }
        j.push(FieldGenerator::PowerSum(parts));
    }
    let mut p = Vec::with_capacity(set.minors.len());
    for m in &set.minors {
        p.push(FieldGenerator::Poly(compile(&m.poly, q, &layout)?));
    }
    Ok((j, p))
}

fn vanishes(gens: &[FieldGenerator], point: &[u64]) -> bool {
    gens.iter().all(|g| g.eval(point) == 0)
}

/// Calls `visit` on every canonical representative in parallel and gathers
/// the per-chunk results. Returns the results in chunk order and the number
/// of representatives visited.
fn scan<T, F>(n: usize, q: u64, visit: F) -> (Vec<T>, u64)
where
    T: Send,
    F: Fn(&[u64], &mut Vec<T>) + Sync,
{
    let mut work: Vec<(usize, u64, u64)> = Vec::new();
    for lead in 0..n {
        let total = q.pow((n - 1 - lead) as u32);
        let mut start = 0;
        while start < total {
            let end = (start + CHUNK).min(total);
            work.push((lead, start, end));
            start = end;
        }
    }
    let parts: Vec<(Vec<T>, u64)> = work
        .into_par_iter()
        .map(|(lead, start, end)| {
            let mut out = Vec::new();
            let mut point = vec![0u64; n];
            point[lead] = 1;
            // Free coordinates lead+1..n hold the base-q digits of the index,
            // most significant first.
            let mut idx = start;
            for k in (lead + 1..n).rev() {
                point[k] = idx % q;
                idx /= q;
            }
            let mut visited = 0;
            for _ in start..end {
                visit(&point, &mut out);
                visited += 1;
                for k in (lead + 1..n).rev() {
                    point[k] += 1;
                    if point[k] < q {
                        break;
                    }
                    point[k] = 0;
                }
            }
            (out, visited)
        })
        .collect();
    let visited = parts.iter().map(|(_, v)| v).sum();
    (parts.into_iter().flat_map(|(v, _)| v).collect(), visited)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Sorted canonical representatives of the common zeros.
    pub points: Vec<Vec<u64>>,
    pub visited: u64,
}

/// All points of `P^{n-1}(F_q)` where every generator vanishes; `layout`
/// fixes the coordinate order. Integer generators are reduced mod `q`.
pub fn enumerate_variety(
    gens: &[Polynomial],
    layout: &[VarId],
    q: u64,
    opts: &EnumerationOptions,
) -> Result<Enumeration> {
    check_field(q, opts)?;
    check_budget(q, layout.len(), gens.len(), opts)?;
    let compiled: Vec<FieldGenerator> = gens
        .iter()
        .map(|g| compile(g, q, layout).map(FieldGenerator::Poly))
        .collect::<Result<_>>()?;
    let (mut points, visited) = scan(layout.len(), q, |pt, out: &mut Vec<Vec<u64>>| {
        if vanishes(&compiled, pt) {
            out.push(pt.to_vec());
        }
    });
    points.sort();
    Ok(Enumeration { points, visited })
}

/// Point-set comparison of `V(J)` and `V(P)` over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VarietyReport {
    pub profile: Vec<u32>,
    pub q: u64,
    #[serde(rename = "count_J")]
    pub count_j: u64,
    #[serde(rename = "count_P")]
    pub count_p: u64,
    /// Points of `V(J)` outside `V(P)`, sorted.
    pub witnesses: Vec<Vec<u64>>,
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub points_enumerated: u64,
    /// Points of `V(P)` outside `V(J)`; nonzero would contradict `J <= P`.
    #[serde(skip)]
    pub reverse_violations: u64,
}

impl VarietyReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty() && self.reverse_violations == 0 && self.count_j == self.count_p
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}

pub fn compare_varieties(
    profile: &ScrollProfile,
    q: u64,
    opts: &EnumerationOptions,
) -> Result<VarietyReport> {
    check_field(q, opts)?;
    let set = equation_set(profile)?;
    compare_equation_set(&set, q, opts)
}

#[derive(Default)]
struct Tally {
    in_j: u64,
    in_p: u64,
    reverse: u64,
    witnesses: Vec<Vec<u64>>,
}

pub fn compare_equation_set(
    set: &EquationSet,
    q: u64,
    opts: &EnumerationOptions,
) -> Result<VarietyReport> {
    let started = Instant::now();
    check_field(q, opts)?;
    let n = set.profile.num_vars();
    check_budget(q, n, set.j_len() + set.minors.len(), opts)?;
    let (j, p) = compile_system(set, q)?;
    let (tallies, visited) = scan(n, q, |pt, out: &mut Vec<Tally>| {
        if out.is_empty() {
            out.push(Tally::default());
        }
        let t = &mut out[0];
        let in_j = vanishes(&j, pt);
        let in_p = vanishes(&p, pt);
        t.in_j += in_j as u64;
        t.in_p += in_p as u64;
        if in_j && !in_p {
            t.witnesses.push(pt.to_vec());
        }
        if in_p && !in_j {
            t.reverse += 1;
        }
    });
    let mut report = VarietyReport {
        profile: set.profile.blocks().to_vec(),
        q,
        count_j: 0,
        count_p: 0,
        witnesses: Vec::new(),
        seed: None,
        elapsed_ms: 0,
        points_enumerated: visited,
        reverse_violations: 0,
    };
    for t in tallies {
        report.count_j += t.in_j;
        report.count_p += t.in_p;
        report.reverse_violations += t.reverse;
        report.witnesses.extend(t.witnesses);
    }
    report.witnesses.sort();
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}
