use std::fmt;

/// Auxiliary parameters used by the verification routines.
///
/// The derived order (`S < T < TCol(_) < U(_) < V < Z < W`) is part of the
/// canonical monomial order and must not be reshuffled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    S,
    T,
    /// Indexed `t[i]`: first row of the generic 2 x d matrix.
    TCol(u32),
    /// Indexed `u[i]`: per-block scale, or second row of the generic matrix.
    U(u32),
    V,
    Z,
    W,
}

/// A polynomial variable.
///
/// Scroll variables `x[i][j]` sort block-major then by slot; every auxiliary
/// parameter sorts after every scroll variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarId {
    Scroll { block: u32, slot: u32 },
    Param(Param),
}

impl VarId {
    pub const fn x(block: u32, slot: u32) -> Self {
        VarId::Scroll { block, slot }
    }

    pub const fn s() -> Self {
        VarId::Param(Param::S)
    }

    pub const fn t() -> Self {
        VarId::Param(Param::T)
    }

    pub const fn t_col(i: u32) -> Self {
        VarId::Param(Param::TCol(i))
    }

    pub const fn u(i: u32) -> Self {
        VarId::Param(Param::U(i))
    }

    pub const fn v() -> Self {
        VarId::Param(Param::V)
    }

    pub const fn z() -> Self {
        VarId::Param(Param::Z)
    }

    pub const fn w() -> Self {
        VarId::Param(Param::W)
    }

    pub fn is_scroll(&self) -> bool {
        matches!(self, VarId::Scroll { .. })
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Scroll { block, slot } => write!(f, "x[{block}][{slot}]"),
            VarId::Param(p) => match p {
                Param::S => f.write_str("s"),
                Param::T => f.write_str("t"),
                Param::TCol(i) => write!(f, "t[{i}]"),
                Param::U(i) => write!(f, "u[{i}]"),
                Param::V => f.write_str("v"),
                Param::Z => f.write_str("z"),
                Param::W => f.write_str("w"),
            },
        }
    }
}
