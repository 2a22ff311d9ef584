use super::coeff::{mul_mod, Coefficient, Domain};
use super::{Polynomial, VarId};
use crate::error::{Error, Result};

/// A polynomial over `F_p` compiled against a fixed variable layout, for
/// repeated evaluation at many points.
///
/// Each evaluation tabulates the powers of every used variable once, up to the
/// largest exponent in which it occurs, then sums the terms from the table.
#[derive(Clone, Debug)]
pub struct FieldEvaluator {
    modulus: u64,
    /// `(layout index, max exponent, offset into the power table)`.
    slots: Vec<(usize, u32, usize)>,
    table_len: usize,
    /// Coefficient and `(slot, exponent)` factors per term.
    terms: Vec<(u64, Vec<(usize, u32)>)>,
}

impl FieldEvaluator {
    /// `layout[k]` names the variable whose value is passed at index `k` of
    /// [`FieldEvaluator::eval`].
    pub fn compile(p: &Polynomial, layout: &[VarId]) -> Result<Self> {
        let Domain::PrimeField(modulus) = p.domain() else {
            return Err(Error::WrongDomain {
                expected: "F_p".into(),
                found: p.domain(),
            });
        };
        let mut slots: Vec<(usize, u32, usize)> = Vec::new();
        let mut terms = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            let Coefficient::Residue { value, .. } = c else {
                unreachable!("prime field polynomial holds residues")
            };
            let mut factors = Vec::with_capacity(m.len());
            for (v, e) in m.iter() {
                let idx = layout
                    .iter()
                    .position(|w| *w == v)
                    .ok_or(Error::UnmappedVariable(v))?;
                let slot = match slots.iter().position(|s| s.0 == idx) {
                    Some(s) => {
                        slots[s].1 = slots[s].1.max(e);
                        s
                    }
                    None => {
                        slots.push((idx, e, 0));
                        slots.len() - 1
                    }
                };
                factors.push((slot, e));
            }
            terms.push((*value, factors));
        }
        let mut table_len = 0;
        for s in &mut slots {
            s.2 = table_len;
            table_len += s.1 as usize + 1;
        }
        Ok(FieldEvaluator {
            modulus,
            slots,
            table_len,
            terms,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn eval(&self, values: &[u64]) -> u64 {
        let p = self.modulus;
        let mut table = vec![0u64; self.table_len];
        for &(idx, max_e, off) in &self.slots {
            let x = values[idx] % p;
            table[off] = 1 % p;
            for e in 1..=max_e as usize {
                table[off + e] = mul_mod(table[off + e - 1], x, p);
            }
        }
        let mut acc: u64 = 0;
        for (c, factors) in &self.terms {
            let mut t = *c;
            for &(slot, e) in factors {
                if t == 0 {
                    break;
                }
                t = mul_mod(t, table[self.slots[slot].2 + e as usize], p);
            }
            acc += t;
            if acc >= p {
                acc -= p;
            }
        }
        acc
    }
}
