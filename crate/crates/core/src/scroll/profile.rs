use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polyring::VarId;

/// Block sizes `(n_1, ..., n_d)` of a rational normal scroll.
///
/// The tuple is kept in the given order: weights of bridges depend on block
/// positions, so `(2, 3)` and `(3, 2)` yield different equation sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScrollProfile {
    blocks: Vec<u32>,
}

pub fn build_profile(n: &[u32]) -> Result<ScrollProfile> {
    ScrollProfile::new(n.to_vec())
}

impl ScrollProfile {
    pub fn new(blocks: Vec<u32>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidProfile(
                "at least one block is required".into(),
            ));
        }
        if let Some(pos) = blocks.iter().position(|&n| n == 0) {
            return Err(Error::InvalidProfile(format!(
                "block {} has size 0; sizes must be positive",
                pos + 1
            )));
        }
        Ok(ScrollProfile { blocks })
    }

    /// Number of blocks `d`.
    pub fn d(&self) -> u32 {
        self.blocks.len() as u32
    }

    /// Size `n_i` of block `i` (1-based).
    pub fn n(&self, i: u32) -> u32 {
        self.blocks[i as usize - 1]
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn sum_n(&self) -> u32 {
        self.blocks.iter().sum()
    }

    /// Ambient dimension `N = sum(n_i) + d - 1`.
    pub fn ambient_dim(&self) -> u32 {
        self.sum_n() + self.d() - 1
    }

    /// `N + 1`, the number of homogeneous coordinates.
    pub fn num_vars(&self) -> usize {
        self.ambient_dim() as usize + 1
    }

    /// Scroll variables in block-major order; this is the coordinate order of
    /// projective points everywhere in the crate.
    pub fn variables(&self) -> Vec<VarId> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| (0..=n).map(move |j| VarId::x(i as u32 + 1, j)))
            .collect()
    }

    /// Position of `v` in [`ScrollProfile::variables`].
    pub fn var_index(&self, v: VarId) -> Option<usize> {
        let VarId::Scroll { block, slot } = v else {
            return None;
        };
        if block == 0 || block > self.d() || slot > self.n(block) {
            return None;
        }
        let before: usize = self.blocks[..block as usize - 1]
            .iter()
            .map(|&n| n as usize + 1)
            .sum();
        Some(before + slot as usize)
    }
}

impl fmt::Display for ScrollProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(u32::to_string).collect();
        write!(f, "S({})", parts.join(","))
    }
}

impl FromStr for ScrollProfile {
    type Err = Error;

    /// Parses `"2,2,3,4"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let n: u32 = part
                .parse()
                .map_err(|_| Error::InvalidProfile(format!("'{part}' is not a block size")))?;
            blocks.push(n);
        }
        ScrollProfile::new(blocks)
    }
}
