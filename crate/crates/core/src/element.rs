use core::fmt;

use crate::error::{Error, Result};

/// Largest supported rank. Elements are stored inline.
pub const MAX_RANK: usize = 32;

/// Normal form `s^a0 s1^a1 ... s_{r-1}^a_{r-1}` with every `a_i` in `{0,1,2}`.
///
/// Positions past the rank are always zero, so derived equality and
/// ordering coincide with equality and lexicographic order of the
/// exponent vectors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    rank: u8,
    exps: [u8; MAX_RANK],
}

impl GroupElement {
    pub fn identity(rank: usize) -> Self {
        debug_assert!(rank <= MAX_RANK);
        GroupElement { rank: rank as u8, exps: [0; MAX_RANK] }
    }

    /// The polycyclic generator with index `i` (0 is `s`, `i >= 1` is `s_i`).
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        if i >= rank {
            return Err(Error::GeneratorOutOfRange { index: i, rank });
        }
        let mut x = GroupElement::identity(rank);
        x.exps[i] = 1;
        Ok(x)
    }

    pub fn from_exponents(rank: usize, exps: &[u8]) -> Result<Self> {
        if exps.len() != rank {
            return Err(Error::LengthMismatch { expected: rank, got: exps.len() });
        }
        let mut x = GroupElement::identity(rank);
        for (index, &value) in exps.iter().enumerate() {
            if value > 2 {
                return Err(Error::BadExponent { index, value });
            }
            x.exps[index] = value;
        }
        Ok(x)
    }

    /// Inverse of [`GroupElement::index`].
    pub fn from_index(rank: usize, mut index: u64) -> Self {
        let mut x = GroupElement::identity(rank);
        for i in (0..rank).rev() {
            x.exps[i] = (index % 3) as u8;
            index /= 3;
        }
        x
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.rank as usize]
    }

    pub fn exp(&self, i: usize) -> u8 {
        self.exps[i]
    }

    pub(crate) fn exps_mut(&mut self) -> &mut [u8; MAX_RANK] {
        &mut self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&a| a == 0)
    }

    /// Base-3 index with `a0` as the most significant digit.
    pub fn index(&self) -> u64 {
        self.exponents().iter().fold(0u64, |acc, &a| acc * 3 + a as u64)
    }

    /// Membership in `gamma_i(S) = <s_i, ..., s_{r-1}>` for `i >= 1`.
    pub fn in_gamma(&self, i: usize) -> bool {
        self.exps[..i.min(self.rank as usize)].iter().all(|&a| a == 0)
    }

    /// Index of the first nonzero exponent, if any.
    pub fn leading(&self) -> Option<usize> {
        self.exponents().iter().position(|&a| a != 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.exponents().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
