use crate::error::{Error, Result};
use crate::polyring::{binomial, Monomial, Polynomial, VarId};

/// `F_i = sum_{a=0}^{i} (-1)^a C(i,a) X_{i+1}^{i-a} X_a X_i^a` in the
/// variables `x[block][0..=n]`, for `1 <= i <= n - 1`.
///
/// The `n - 1` polynomials `F_1, ..., F_{n-1}` cut out the rational normal
/// curve of degree `n` set-theoretically; `F_i` is homogeneous of degree
/// `i + 1`.
pub fn curve_equation(block: u32, n: u32, i: u32) -> Result<Polynomial> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            what: format!(
                "curve equation of a block of size {n} (valid 1..={})",
                n.saturating_sub(1)
            ),
            index: i as u64,
        });
    }
    let x = |j: u32| VarId::x(block, j);
    let mut out = Polynomial::zero(crate::polyring::Domain::Integer);
    for a in 0..=i {
        let mut c = binomial(i as u64, a as u64)?;
        if a % 2 == 1 {
            c = -c;
        }
        let m = Monomial::from_pairs([(x(i + 1), i - a), (x(a), 1), (x(i), a)]);
        out = out + Polynomial::int_term(c, m);
    }
    Ok(out)
}
