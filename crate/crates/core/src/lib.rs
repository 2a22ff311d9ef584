//! Explicit set-theoretic defining equations for rational normal scrolls.
//!
//! For a scroll `S(n_1, ..., n_d)` in `P^N` with `N = sum(n_i) + d - 1`, the
//! [`scroll`] module builds `N - 2` homogeneous polynomials (curve equations
//! per block plus one combined bridge power-sum per weight) whose common zero
//! locus is the scroll, together with the 2x2 minors that generate its prime
//! ideal. The [`verify`] module checks the construction symbolically over the
//! integers and exhaustively over small prime fields.

pub mod cli;
pub mod error;
pub mod polyring;
pub mod scroll;
pub mod verify;

pub use error::{Error, Result};
