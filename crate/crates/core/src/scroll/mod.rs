//! Polynomial families attached to a scroll profile: the block catalecticant
//! matrix and its minors, the per-block curve equations, the bridges between
//! blocks, their weight groups, and the assembled generator set `J`.

mod bridge;
mod curve;
mod equations;
pub mod export;
mod matrix;
mod profile;
mod weights;

pub use bridge::{bridge, bridge_via_lists, BridgeMeta};
pub use curve::curve_equation;
pub use equations::{
    equation_set, equation_set_with, BuildOptions, CurveGenerator, EquationSet, JGenerator,
    WeightGenerator,
};
pub use matrix::{catalecticant, minors_2x2, CatalecticantMatrix, Minor};
pub use profile::{build_profile, ScrollProfile};
pub use weights::{
    g_polynomial, g_polynomial_with_guard, group_bridges, weight_groups, WeightGroup,
    WeightedBridge, DEFAULT_EXPANSION_WARN_DEGREE,
};
