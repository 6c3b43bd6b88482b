use core::fmt;

use crate::element::MAX_RANK;
use crate::error::{Error, Result};

/// Canonical `(beta, gamma, delta)` triples for odd rank.
pub const CANONICAL_ODD: [(u8, u8, u8); 6] =
    [(1, 0, 0), (1, 0, 1), (1, 0, 2), (0, 1, 0), (0, 0, 1), (0, 0, 0)];

/// Canonical `(beta, gamma, delta)` triples for even rank.
pub const CANONICAL_EVEN: [(u8, u8, u8); 7] = [
    (1, 0, 0),
    (1, 0, 1),
    (1, 0, 2),
    (0, 1, 0),
    (0, 0, 1),
    (0, 0, 0),
    (0, 2, 0),
];

/// Selects the group `B(r; beta, gamma, delta)` of order `3^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupParams {
    pub r: usize,
    pub beta: u8,
    pub gamma: u8,
    pub delta: u8,
}

impl GroupParams {
    pub fn new(r: usize, beta: u8, gamma: u8, delta: u8) -> Result<Self> {
        if r < 5 {
            return Err(Error::RankTooSmall(r));
        }
        if r > MAX_RANK {
            return Err(Error::RankTooLarge(r));
        }
        for (name, value) in [("beta", beta), ("gamma", gamma), ("delta", delta)] {
            if value > 2 {
                return Err(Error::BadParameter { name, value });
            }
        }
        Ok(GroupParams { r, beta, gamma, delta })
    }

    pub fn triple(&self) -> (u8, u8, u8) {
        (self.beta, self.gamma, self.delta)
    }

    pub fn is_even(&self) -> bool {
        self.r.is_multiple_of(2)
    }

    /// Whether the triple appears in the isomorphism-class list for this parity of `r`.
    pub fn is_canonical(&self) -> bool {
        let t = self.triple();
        if self.is_even() {
            CANONICAL_EVEN.contains(&t)
        } else {
            CANONICAL_ODD.contains(&t)
        }
    }

    pub fn require_canonical(&self) -> Result<()> {
        if self.is_canonical() {
            Ok(())
        } else {
            Err(Error::NonCanonical(*self))
        }
    }

    /// All canonical groups of rank `r` in list order.
    pub fn canonical(r: usize) -> Result<impl Iterator<Item = GroupParams>> {
        GroupParams::new(r, 0, 0, 0)?;
        let list: &'static [(u8, u8, u8)] =
            if r.is_multiple_of(2) { &CANONICAL_EVEN } else { &CANONICAL_ODD };
        Ok(list
            .iter()
            .map(move |&(beta, gamma, delta)| GroupParams { r, beta, gamma, delta }))
    }

    /// `|S| = 3^r`.
    pub fn order(&self) -> u64 {
        3u64.pow(self.r as u32)
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({};{},{},{})", self.r, self.beta, self.gamma, self.delta)
    }
}
