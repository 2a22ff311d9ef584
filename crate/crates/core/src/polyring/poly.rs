use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops;

use num_bigint::BigInt;

use super::coeff::{Coefficient, Domain};
use super::eval::FieldEvaluator;
use super::{Monomial, VarId};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial in canonical form: no zero coefficient is
/// ever stored, and terms are keyed by [`Monomial`] (grevlex).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    domain: Domain,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Polynomial {
    pub fn zero(domain: Domain) -> Self {
        Polynomial {
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(domain: Domain) -> Self {
        Self::constant(domain.one())
    }

    pub fn constant(c: Coefficient) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(domain: Domain, v: VarId) -> Self {
        Self::term(domain.one(), Monomial::var(v))
    }

    pub fn term(c: Coefficient, m: Monomial) -> Self {
        let mut p = Polynomial::zero(c.domain());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Integer-coefficient single term, the common case in scroll code.
    pub fn int_term(c: impl Into<BigInt>, m: Monomial) -> Self {
        Self::term(Coefficient::Integer(c.into()), m)
    }

    /// Sums arbitrary `(coefficient, monomial)` pairs into canonical form.
    pub fn from_terms<I>(domain: Domain, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coefficient, Monomial)>,
    {
        let mut p = Polynomial::zero(domain);
        for (c, m) in terms {
            if c.domain() != domain {
                return Err(Error::DomainMismatch {
                    left: domain,
                    right: c.domain(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order, leading term first.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coefficient)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Coefficient> {
        self.terms.get(m)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().next_back()
    }

    /// Maximum total degree over terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::total_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v))
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_domain(&self, other: &Polynomial) -> Result<()> {
        if self.domain == other.domain {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                left: self.domain,
                right: other.domain,
            })
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_domain(other)?;
        let (mut acc, rest) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &rest.terms {
            acc.add_term(m.clone(), c.clone());
        }
        Ok(acc)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            domain: self.domain,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Result<Polynomial> {
        if c.domain() != self.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: c.domain(),
            });
        }
        let mut out = Polynomial::zero(self.domain);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.mul(c));
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_domain(other)?;
        let mut acc: HashMap<Monomial, Coefficient> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(x) => *x = x.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Polynomial {
            domain: self.domain,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// `self^e` by binary exponentiation; `p^0 = 1`.
    pub fn pow(&self, mut e: u32) -> Polynomial {
        // A single term is powered directly.
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            let mut coeff = self.domain.one();
            for _ in 0..e {
                coeff = coeff.mul(c);
            }
            return Polynomial::term(coeff, m.pow(e));
        }
        let mut acc = Polynomial::one(self.domain);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same domain");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same domain");
            }
        }
        acc
    }

    /// Ring-homomorphism image under `map`.
    ///
    /// Variables without an image are left in place unless `strict` is set,
    /// in which case they are an error.
    pub fn substitute(&self, map: &HashMap<VarId, Polynomial>, strict: bool) -> Result<Polynomial> {
        for img in map.values() {
            self.check_domain(img)?;
        }
        let mut powers: HashMap<(VarId, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(self.domain);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for (v, e) in m.iter() {
                let factor = match map.get(&v) {
                    Some(img) => powers.entry((v, e)).or_insert_with(|| img.pow(e)).clone(),
                    None if strict => return Err(Error::UnmappedVariable(v)),
                    None => Polynomial::term(self.domain.one(), Monomial::var_pow(v, e)),
                };
                term = term.mul(&factor)?;
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Coefficientwise reduction of an integer polynomial into `F_q`.
    pub fn reduce_mod(&self, q: u64) -> Result<Polynomial> {
        let field = Domain::prime_field(q)?;
        if self.domain != Domain::Integer {
            return Err(Error::WrongDomain {
                expected: "Z".into(),
                found: self.domain,
            });
        }
        let mut out = Polynomial::zero(field);
        for (m, c) in &self.terms {
            let Coefficient::Integer(v) = c else {
                unreachable!("integer domain holds integer coefficients")
            };
            out.add_term(m.clone(), field.from_bigint(v));
        }
        Ok(out)
    }

    /// Value at a point over `F_p`. Every variable must be mapped.
    pub fn eval_point(&self, point: &HashMap<VarId, u64>) -> Result<u64> {
        let vars: Vec<VarId> = self.variables().into_iter().collect();
        let mut values = Vec::with_capacity(vars.len());
        for v in &vars {
            values.push(*point.get(v).ok_or(Error::UnmappedVariable(*v))?);
        }
        let ev = FieldEvaluator::compile(self, &vars)?;
        Ok(ev.eval(&values))
    }

    /// Applies `f` to every coefficient, re-normalizing into `domain`.
    pub fn map_coefficients<F>(&self, domain: Domain, f: F) -> Polynomial
    where
        F: Fn(&Coefficient) -> Coefficient,
    {
        let mut out = Polynomial::zero(domain);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl Polynomial {
    /// Canonical text with custom variable spelling, for external systems.
    pub fn to_string_with<F: Fn(&VarId) -> String>(&self, name: F) -> String {
        let mut out = String::new();
        self.write_with(&mut out, &|v: &VarId| name(v))
            .expect("writing to a String");
        out
    }

    fn write_with<W: fmt::Write>(&self, f: &mut W, name: &dyn Fn(&VarId) -> String) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            for (i, (v, e)) in m.iter().enumerate() {
                if i > 0 {
                    f.write_str("*")?;
                }
                f.write_str(&name(&v))?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, &|v: &VarId| v.to_string())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on coefficient domain mismatch; use the named method
            /// for a checked variant.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                Polynomial::$inner(self, rhs).expect("polynomial domain mismatch")
            }
        }
        impl ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                Polynomial::$inner(&self, &rhs).expect("polynomial domain mismatch")
            }
        }
        impl ops::$tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                Polynomial::$inner(&self, rhs).expect("polynomial domain mismatch")
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: Domain = Domain::Integer;

    fn var(v: VarId) -> Polynomial {
        Polynomial::var(Z, v)
    }

    fn x(i: u32, j: u32) -> Polynomial {
        var(VarId::x(i, j))
    }

    fn int(c: i64) -> Polynomial {
        Polynomial::constant(Z.from_i64(c))
    }

    #[test]
    fn add_cancels_and_merges() {
        let a = x(1, 0);
        assert!((&a + &(-&a)).is_zero());
        let b = x(1, 1);
        let sum = &(&a + &b) + &b;
        assert_eq!(sum.to_string(), "x[1][0] + 2*x[1][1]");
    }

    #[test]
    fn add_bridge_prefix() {
        // X_2^2 Y_0 and -4 X_2 X_1 Y_1 with X = block 1, Y = block 2.
        let t1 = &(&x(1, 2) * &x(1, 2)) * &x(2, 0);
        let t2 = &(&(&int(-4) * &x(1, 2)) * &x(1, 1)) * &x(2, 1);
        let sum = &t1 + &t2;
        assert_eq!(sum.num_terms(), 2);
        assert!(sum.is_homogeneous());
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let a = x(1, 0);
        let b = Polynomial::var(Domain::PrimeField(5), VarId::x(1, 0));
        assert!(matches!(a.add(&b), Err(Error::DomainMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(Error::DomainMismatch { .. })));
    }

    #[test]
    fn mul_examples() {
        let p = &x(1, 0) + &x(2, 0);
        assert_eq!(&p * &int(1), p);
        let (xv, yv) = (var(VarId::s()), var(VarId::t()));
        let d = &(&xv - &yv) * &(&xv + &yv);
        assert_eq!(d, &(&xv * &xv) - &(&yv * &yv));
    }

    #[test]
    fn square_of_tz_minus_sw() {
        let (s, t, z, w) = (
            var(VarId::s()),
            var(VarId::t()),
            var(VarId::z()),
            var(VarId::w()),
        );
        let base = &(&t * &z) - &(&s * &w);
        let sq = &base * &base;
        let expected = &(&(&(&t * &t) * &(&z * &z)) - &(&int(2) * &(&(&s * &t) * &(&z * &w))))
            + &(&(&s * &s) * &(&w * &w));
        assert_eq!(sq, expected);
    }

    #[test]
    fn pow_examples() {
        let (s, t, z, w) = (
            var(VarId::s()),
            var(VarId::t()),
            var(VarId::z()),
            var(VarId::w()),
        );
        let p = &(&s * &t) + &x(1, 0);
        assert_eq!(p.pow(0), int(1));
        let base = &(&t * &z) - &(&s * &w);
        let fourth = base.pow(4);
        assert_eq!(fourth.num_terms(), 5);
        let mut coeffs: Vec<String> = Vec::new();
        for k in 0..=4u32 {
            let m = Monomial::from_pairs([
                (VarId::t(), 4 - k),
                (VarId::z(), 4 - k),
                (VarId::s(), k),
                (VarId::w(), k),
            ]);
            coeffs.push(fourth.coefficient(&m).unwrap().to_string());
        }
        assert_eq!(coeffs, vec!["1", "-4", "6", "-4", "1"]);
        assert_eq!(int(-2).pow(3), int(-8));
    }

    #[test]
    fn substitute_examples() {
        let p = &(&x(1, 0) * &x(1, 0)) + &x(1, 1);
        let mut map = HashMap::new();
        map.insert(VarId::x(1, 0), int(0));
        map.insert(VarId::x(1, 1), int(0));
        assert!(p.substitute(&map, true).unwrap().is_zero());

        // X_1 Y_0 - X_0 Y_1 -> t z - s w
        let b = &(&x(1, 1) * &x(2, 0)) - &(&x(1, 0) * &x(2, 1));
        let mut map = HashMap::new();
        map.insert(VarId::x(1, 0), var(VarId::s()));
        map.insert(VarId::x(1, 1), var(VarId::t()));
        map.insert(VarId::x(2, 0), var(VarId::z()));
        map.insert(VarId::x(2, 1), var(VarId::w()));
        let img = b.substitute(&map, true).unwrap();
        let expected =
            &(&var(VarId::t()) * &var(VarId::z())) - &(&var(VarId::s()) * &var(VarId::w()));
        assert_eq!(img, expected);
    }

    #[test]
    fn substitute_strict_rejects_unmapped() {
        let p = &x(1, 0) * &x(1, 1);
        let mut map = HashMap::new();
        map.insert(VarId::x(1, 0), int(3));
        assert_eq!(
            p.substitute(&map, true),
            Err(Error::UnmappedVariable(VarId::x(1, 1)))
        );
        assert_eq!(p.substitute(&map, false).unwrap(), &int(3) * &x(1, 1));
    }

    #[test]
    fn reduce_mod_examples() {
        let p = &(&int(2) * &x(1, 1)) * &x(2, 1);
        assert!(p.reduce_mod(2).unwrap().is_zero());
        let conic = &(&x(1, 0) * &x(1, 2)) - &(&x(1, 1) * &x(1, 1));
        let r = conic.reduce_mod(5).unwrap();
        assert_eq!(r.to_string(), "4*x[1][1]^2 + x[1][0]*x[1][2]");
        assert_eq!(conic.reduce_mod(4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn eval_point_examples() {
        let conic = &(&x(1, 0) * &x(1, 2)) - &(&x(1, 1) * &x(1, 1));
        let c5 = conic.reduce_mod(5).unwrap();
        let ones: HashMap<VarId, u64> = [
            (VarId::x(1, 0), 1),
            (VarId::x(1, 1), 1),
            (VarId::x(1, 2), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(c5.eval_point(&ones).unwrap(), 0);
        let pt: HashMap<VarId, u64> = [
            (VarId::x(1, 0), 1),
            (VarId::x(1, 1), 2),
            (VarId::x(1, 2), 3),
        ]
        .into_iter()
        .collect();
        assert_eq!(c5.eval_point(&pt).unwrap(), 4);
        let mut partial = pt.clone();
        partial.remove(&VarId::x(1, 2));
        assert_eq!(
            c5.eval_point(&partial),
            Err(Error::UnmappedVariable(VarId::x(1, 2)))
        );
        assert!(matches!(
            conic.eval_point(&pt),
            Err(Error::WrongDomain { .. })
        ));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Polynomial::zero(Z).to_string(), "0");
        assert_eq!(int(-7).to_string(), "-7");
        let p = &(&int(-1) * &x(1, 0)) + &int(3);
        assert_eq!(p.to_string(), "-x[1][0] + 3");
    }
}
