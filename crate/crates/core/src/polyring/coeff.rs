use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ring a polynomial's coefficients live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Integer,
    Rational,
    PrimeField(u64),
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integer => f.write_str("Z"),
            Domain::Rational => f.write_str("Q"),
            Domain::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

impl Domain {
    /// Checked constructor for prime fields.
    pub fn prime_field(p: u64) -> Result<Domain> {
        if is_prime(p) {
            Ok(Domain::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Coefficient {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coefficient {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coefficient {
        match *self {
            Domain::Integer => Coefficient::Integer(v.clone()),
            Domain::Rational => Coefficient::Rational(BigRational::from_integer(v.clone())),
            Domain::PrimeField(p) => Coefficient::Residue {
                value: reduce_bigint(v, p),
                modulus: p,
            },
        }
    }
}

/// An exact coefficient. Residues always satisfy `0 <= value < modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Integer(BigInt),
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Coefficient {
    pub fn domain(&self) -> Domain {
        match self {
            Coefficient::Integer(_) => Domain::Integer,
            Coefficient::Rational(_) => Domain::Rational,
            Coefficient::Residue { modulus, .. } => Domain::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Integer(v) => v.is_zero(),
            Coefficient::Rational(v) => v.is_zero(),
            Coefficient::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Integer(v) => v.is_one(),
            Coefficient::Rational(v) => v.is_one(),
            Coefficient::Residue { value, .. } => *value == 1,
        }
    }

    /// True for strictly negative integers and rationals; residues are never
    /// negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Integer(v) => v.is_negative(),
            Coefficient::Rational(v) => v.is_negative(),
            Coefficient::Residue { .. } => false,
        }
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Integer(a), Coefficient::Integer(b)) => Coefficient::Integer(a + b),
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (
                Coefficient::Residue { value: a, modulus },
                Coefficient::Residue {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Coefficient::Residue {
                value: add_mod(*a, *b, *modulus),
                modulus: *modulus,
            },
            _ => panic!("coefficient domain mismatch"),
        }
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Integer(a), Coefficient::Integer(b)) => Coefficient::Integer(a * b),
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (
                Coefficient::Residue { value: a, modulus },
                Coefficient::Residue {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Coefficient::Residue {
                value: mul_mod(*a, *b, *modulus),
                modulus: *modulus,
            },
            _ => panic!("coefficient domain mismatch"),
        }
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Integer(a) => Coefficient::Integer(-a),
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Residue { value, modulus } => Coefficient::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// Absolute value for the ordered domains; residues are returned as-is.
    pub fn abs(&self) -> Coefficient {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Integer value, when the coefficient is an integer (or an integral
    /// rational).
    pub fn as_bigint(&self) -> Option<BigInt> {
        match self {
            Coefficient::Integer(v) => Some(v.clone()),
            Coefficient::Rational(v) if v.is_integer() => Some(v.to_integer()),
            Coefficient::Rational(_) => None,
            Coefficient::Residue { value, .. } => Some(BigInt::from(*value)),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Integer(v) => write!(f, "{v}"),
            Coefficient::Rational(v) => write!(f, "{v}"),
            Coefficient::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Exact binomial coefficient `C(m, alpha)` via the multiplicative formula.
pub fn binomial(m: u64, alpha: u64) -> Result<BigInt> {
    if alpha > m {
        return Err(Error::BinomialDomain { m, alpha });
    }
    let k = alpha.min(m - alpha);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(m, i); C(m, i + 1) = C(m, i) * (m - i) / (i + 1), exact.
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    Ok(acc)
}

pub fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    add_mod(a, p - b % p, p)
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
