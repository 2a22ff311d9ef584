//! Reference polynomials transcribed by hand, in `X_k`-style notation.
#![allow(dead_code)]

use ratscroll::polyring::{parse_poly, ParseContext, Polynomial};
use ratscroll::scroll::EquationSet;

/// Rewrites `X_k` as `x[b][k]` for each `(X, b)` in `letters`, then parses.
pub fn transcribe(text: &str, letters: &[(char, u32)]) -> Polynomial {
    let mut out = String::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match letters.iter().find(|(l, _)| *l == c) {
            Some(&(_, block)) if chars.peek() == Some(&'_') => {
                chars.next();
                let mut idx = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    idx.push(*d);
                    chars.next();
                }
                out.push_str(&format!("x[{block}][{idx}]"));
            }
            _ => out.push(c),
        }
    }
    parse_poly(&out, &ParseContext::default()).unwrap_or_else(|e| panic!("{out}: {e}"))
}

pub const B_2_4: &str = "X_2^2*Y_0 - 4*X_2*X_1*Y_1 + 6*X_1^2*Y_2 - 4*X_1*X_0*Y_3 + X_0^2*Y_4";

pub const B_2_3: &str = "X_2^3*Y_0^2 - 6*X_2^2*X_1*Y_0*Y_1 + 15*X_2*X_1^2*Y_1^2 \
    - 20*X_1^3*Y_1*Y_2 + 15*X_1^2*X_0*Y_2^2 - 6*X_1*X_0^2*Y_2*Y_3 + X_0^3*Y_3^2";

/// The fourth term is printed with a stray `Y_0` in the source (Y-degree 4
/// in a form that is cubic in Y); it is corrected here.
pub const B_3_4: &str = "X_3^4*Y_0^3 - 12*X_3^3*X_2*Y_0^2*Y_1 + 66*X_3^2*X_2^2*Y_0*Y_1^2 \
    - 220*X_3*X_2^3*Y_1^3 + 495*X_2^4*Y_1^2*Y_2 - 792*X_2^3*X_1*Y_1*Y_2^2 \
    + 924*X_2^2*X_1^2*Y_2^3 - 792*X_2*X_1^3*Y_2^2*Y_3 + 495*X_1^4*Y_2*Y_3^2 \
    - 220*X_1^3*X_0*Y_3^3 + 66*X_1^2*X_0^2*Y_3^2*Y_4 - 12*X_1*X_0^3*Y_3*Y_4^2 + X_0^4*Y_4^3";

pub const B_3_4_COEFFS: [i64; 13] = [1, 12, 66, 220, 495, 792, 924, 792, 495, 220, 66, 12, 1];

/// `B_{a,a} = sum_j (-1)^j C(a,j) X_{a-j} Y_j`.
pub fn b_aa_text(a: u32) -> String {
    let mut parts = Vec::new();
    let mut c: u64 = 1;
    for j in 0..=a as u64 {
        let sign = if j % 2 == 0 { "+" } else { "-" };
        parts.push(format!("{sign} {c}*X_{}*Y_{j}", a as u64 - j));
        c = c * (a as u64 - j) / (j + 1);
    }
    parts.join(" ")
}

/// The twelve generators listed for the profile (2,2,3,4), with blocks
/// X, Y, Z, T = 1, 2, 3, 4.
pub fn s2234_reference() -> Vec<Polynomial> {
    let xyzt = [('X', 1), ('Y', 2), ('Z', 3), ('T', 4)];
    let pair = |text: &str, a: char, b: char| {
        let block = |c: char| xyzt.iter().find(|(l, _)| *l == c).unwrap().1;
        transcribe(text, &[('X', block(a)), ('Y', block(b))])
    };
    let mut v: Vec<Polynomial> = [
        "X_0*X_2 - X_1^2",
        "Y_0*Y_2 - Y_1^2",
        "Z_0*Z_2 - Z_1^2",
        "Z_0*Z_3^2 - 2*Z_1*Z_2*Z_3 + Z_2^3",
        "T_0*T_2 - T_1^2",
        "T_0*T_3^2 - 2*T_1*T_2*T_3 + T_2^3",
        "T_0*T_4^3 - 3*T_1*T_3*T_4^2 + 3*T_2*T_3^2*T_4 - T_3^4",
    ]
    .iter()
    .map(|s| transcribe(s, &xyzt))
    .collect();
    v.push(pair(&b_aa_text(2), 'X', 'Y'));
    v.push(pair(B_2_3, 'X', 'Z'));
    v.push(pair(B_2_4, 'X', 'T').pow(5) + pair(B_2_3, 'Y', 'Z').pow(3));
    v.push(pair(B_2_4, 'Y', 'T'));
    v.push(pair(B_3_4, 'Z', 'T'));
    v
}

/// Matches every reference polynomial to a distinct generator of `set`,
/// allowing an overall sign. Returns the unmatched references.
pub fn unmatched_up_to_sign(set: &EquationSet, reference: &[Polynomial]) -> Vec<String> {
    let mut pool: Vec<Polynomial> = set.j_generators().iter().map(|g| g.expand()).collect();
    let mut missing = Vec::new();
    for r in reference {
        let neg = -r.clone();
        match pool.iter().position(|g| *g == *r || *g == neg) {
            Some(i) => {
                pool.swap_remove(i);
            }
            None => missing.push(r.to_string()),
        }
    }
    missing
}
