use super::ScrollProfile;
use crate::polyring::{Domain, Monomial, Polynomial, VarId};

/// The 2 x (sum n_i) block catalecticant matrix of a scroll. Block `i`,
/// column `j` holds `(x[i][j], x[i][j+1])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalecticantMatrix {
    profile: ScrollProfile,
    columns: Vec<(VarId, VarId)>,
}

/// One 2x2 minor, taken on columns `c1 < c2` (0-based, global).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub columns: (usize, usize),
    pub poly: Polynomial,
}

impl Minor {
    pub fn label(&self) -> String {
        format!("M[{},{}]", self.columns.0, self.columns.1)
    }
}

pub fn catalecticant(profile: &ScrollProfile) -> CatalecticantMatrix {
    let columns = profile
        .blocks()
        .iter()
        .enumerate()
        .flat_map(|(i, &n)| {
            let b = i as u32 + 1;
            (0..n).map(move |j| (VarId::x(b, j), VarId::x(b, j + 1)))
        })
        .collect();
    CatalecticantMatrix {
        profile: profile.clone(),
        columns,
    }
}

impl CatalecticantMatrix {
    pub fn profile(&self) -> &ScrollProfile {
        &self.profile
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> VarId {
        let (top, bottom) = self.columns[col];
        match row {
            0 => top,
            1 => bottom,
            _ => panic!("catalecticant matrix has two rows, got row {row}"),
        }
    }

    pub fn row(&self, row: usize) -> Vec<VarId> {
        (0..self.columns.len())
            .map(|c| self.entry(row, c))
            .collect()
    }
}

/// All 2x2 minors `M[0][c1]*M[1][c2] - M[1][c1]*M[0][c2]` for `c1 < c2`,
/// in lexicographic column order. `dedup` drops later minors that equal an
/// earlier one up to sign.
pub fn minors_2x2(matrix: &CatalecticantMatrix, dedup: bool) -> Vec<Minor> {
    let n = matrix.num_columns();
    let mut out: Vec<Minor> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for c1 in 0..n {
        for c2 in c1 + 1..n {
            let diag = Monomial::from_pairs([(matrix.entry(0, c1), 1), (matrix.entry(1, c2), 1)]);
            let anti = Monomial::from_pairs([(matrix.entry(1, c1), 1), (matrix.entry(0, c2), 1)]);
            let poly = Polynomial::int_term(1, diag) - Polynomial::int_term(1, anti);
            if dedup {
                let neg = -&poly;
                if out.iter().any(|m| m.poly == poly || m.poly == neg) {
                    continue;
                }
            }
            out.push(Minor {
                columns: (c1, c2),
                poly,
            });
        }
    }
    debug_assert!(out.iter().all(|m| m.poly.domain() == Domain::Integer));
    out
}
