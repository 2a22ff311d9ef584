use std::cmp::Ordering;
use std::fmt;

use super::VarId;

/// A power product of variables.
///
/// Stored as `(variable, exponent)` pairs sorted by [`VarId`]; no stored
/// exponent is zero. Ordering is graded reverse-lexicographic, where
/// `Ordering::Greater` means "leads".
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        Monomial {
            exps: vec![(v, e)],
            degree: e,
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping
    /// zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(VarId, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e).sum();
        Monomial {
            exps: merged,
            degree,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    /// Sum of exponents over variables selected by `pred`.
    pub fn degree_in<F: Fn(&VarId) -> bool>(&self, pred: F) -> u32 {
        self.exps
            .iter()
            .filter(|(v, _)| pred(v))
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, ea) = self.exps[i];
            let (b, eb) = other.exps[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    exps.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a, ea.checked_add(eb).expect("exponent overflow")));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial {
            exps,
            degree: self
                .degree
                .checked_add(other.degree)
                .expect("degree overflow"),
        }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|&(v, x)| (v, x.checked_mul(e).expect("exponent overflow")))
                .collect(),
            degree: self.degree.checked_mul(e).expect("degree overflow"),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        // Equal degree: find the greatest variable where the exponents
        // differ; the smaller exponent there leads.
        let (mut i, mut j) = (self.exps.len(), other.exps.len());
        while i > 0 && j > 0 {
            let (a, ea) = self.exps[i - 1];
            let (b, eb) = other.exps[j - 1];
            match a.cmp(&b) {
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i -= 1;
                    j -= 1;
                }
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
            }
        }
        match (i, j) {
            (0, 0) => Ordering::Equal,
            (_, 0) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
