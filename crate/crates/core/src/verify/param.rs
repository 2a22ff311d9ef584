use std::collections::HashMap;

use crate::polyring::{mul_mod, pow_mod, Domain, Monomial, Polynomial, VarId};
use crate::scroll::ScrollProfile;

/// The scroll parametrization `x[i][j] -> u[i] * s^(n_i - j) * t^j`.
#[derive(Clone, Debug)]
pub struct ParamMap {
    profile: ScrollProfile,
}

impl ParamMap {
    pub fn new(profile: &ScrollProfile) -> Self {
        ParamMap {
            profile: profile.clone(),
        }
    }

    pub fn image_monomial(&self, block: u32, slot: u32) -> Monomial {
        let n = self.profile.n(block);
        Monomial::from_pairs([
            (VarId::u(block), 1),
            (VarId::s(), n - slot),
            (VarId::t(), slot),
        ])
    }

    pub fn substitution(&self) -> HashMap<VarId, Polynomial> {
        self.profile
            .variables()
            .into_iter()
            .map(|v| {
                let VarId::Scroll { block, slot } = v else {
                    unreachable!()
                };
                (v, Polynomial::int_term(1, self.image_monomial(block, slot)))
            })
            .collect()
    }

    /// Coordinates over `F_q`, block-major. `None` when every coordinate
    /// vanishes (not a projective point).
    pub fn point(&self, u: &[u64], s: u64, t: u64, q: u64) -> Option<Vec<u64>> {
        assert_eq!(u.len(), self.profile.d() as usize);
        let mut coords = Vec::with_capacity(self.profile.num_vars());
        for (i, &n) in self.profile.blocks().iter().enumerate() {
            for j in 0..=n {
                let v = mul_mod(
                    u[i] % q,
                    mul_mod(pow_mod(s, (n - j) as u64, q), pow_mod(t, j as u64, q), q),
                    q,
                );
                coords.push(v);
            }
        }
        coords.iter().any(|&c| c != 0).then_some(coords)
    }
}

/// `alpha_{i,j} = t[i]*u[j] - u[i]*t[j]`, the 2x2 minor on columns `i, j` of
/// the generic matrix with rows `(t[1] .. t[d])` and `(u[1] .. u[d])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorSymbol {
    pub i: u32,
    pub j: u32,
}

impl MinorSymbol {
    pub fn new(i: u32, j: u32) -> Self {
        MinorSymbol { i, j }
    }

    pub fn poly(&self) -> Polynomial {
        let z = Domain::Integer;
        let v = |x| Polynomial::var(z, x);
        v(VarId::t_col(self.i)) * v(VarId::u(self.j))
            - v(VarId::u(self.i)) * v(VarId::t_col(self.j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scroll::build_profile;

    #[test]
    fn images_are_veronese_per_block() {
        let p = build_profile(&[3, 1]).unwrap();
        let map = ParamMap::new(&p);
        assert_eq!(map.image_monomial(1, 0).to_string(), "s^3*u[1]");
        assert_eq!(map.image_monomial(1, 2).to_string(), "s*t^2*u[1]");
        assert_eq!(map.image_monomial(2, 1).to_string(), "t*u[2]");
        let sub = map.substitution();
        assert_eq!(sub.len(), p.num_vars());
        for (v, img) in &sub {
            let VarId::Scroll { block, .. } = v else {
                unreachable!()
            };
            assert_eq!(img.num_terms(), 1);
            assert_eq!(img.total_degree(), Some(p.n(*block) + 1));
        }
    }

    #[test]
    fn points() {
        let p = build_profile(&[1, 1]).unwrap();
        let map = ParamMap::new(&p);
        assert_eq!(map.point(&[1, 1], 1, 0, 5), Some(vec![1, 0, 1, 0]));
        assert_eq!(map.point(&[2, 3], 0, 0, 5), None);
        assert_eq!(map.point(&[0, 0], 1, 1, 5), None);
        assert_eq!(map.point(&[1, 2], 2, 3, 7), Some(vec![2, 3, 4, 6]));
    }

    #[test]
    fn minor_symbol_antisymmetry() {
        for i in 1..=4 {
            assert!(MinorSymbol::new(i, i).poly().is_zero());
            for j in 1..=4 {
                assert_eq!(
                    MinorSymbol::new(i, j).poly(),
                    -MinorSymbol::new(j, i).poly()
                );
            }
        }
    }
}
