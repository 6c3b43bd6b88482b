use alloc::vec::Vec;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::ops::GroupOps;

/// Largest rank for which a full multiplication table is built (2187^2 entries).
pub const TABLE_MAX_RANK: usize = 7;

/// Cayley table of a small group, filled from the collector.
/// Elements are represented by their base-3 index.
#[derive(Debug, Clone)]
pub struct MulTable {
    rank: usize,
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl MulTable {
    pub fn new(group: &Group) -> Result<Self> {
        let rank = group.rank();
        if rank > TABLE_MAX_RANK {
            return Err(Error::ScanLimitExceeded { rank, limit: TABLE_MAX_RANK });
        }
        let n = group.order() as usize;
        let elems: Vec<GroupElement> = group.elements().collect();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                mul.push(group.multiply(a, b).index() as u16);
            }
        }
        let inv = elems.iter().map(|a| group.inverse(a).index() as u16).collect();
        Ok(MulTable { rank, n, mul, inv })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl GroupOps for MulTable {
    type Elem = u16;

    fn rank(&self) -> usize {
        self.rank
    }
    fn identity(&self) -> u16 {
        0
    }
    #[inline]
    fn mul(&self, a: &u16, b: &u16) -> u16 {
        self.mul[*a as usize * self.n + *b as usize]
    }
    #[inline]
    fn inv(&self, a: &u16) -> u16 {
        self.inv[*a as usize]
    }
    fn generator(&self, i: usize) -> u16 {
        3u16.pow((self.rank - 1 - i) as u32)
    }
    fn to_element(&self, a: &u16) -> GroupElement {
        GroupElement::from_index(self.rank, *a as u64)
    }
    fn from_element(&self, x: &GroupElement) -> u16 {
        x.index() as u16
    }
    fn key(&self, a: &u16) -> u64 {
        *a as u64
    }
    fn frattini_coords(&self, a: &u16) -> (u8, u8) {
        let top = 3u16.pow((self.rank - 2) as u32);
        let lead = *a / top;
        ((lead / 3) as u8, (lead % 3) as u8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::GroupParams;

    #[test]
    fn table_matches_collector() {
        let g = Group::new(GroupParams::new(5, 1, 0, 2).unwrap()).unwrap();
        let t = MulTable::new(&g).unwrap();
        assert_eq!(t.len(), 243);
        for a in (0..243u16).step_by(5) {
            for b in (0..243u16).step_by(7) {
                let x = t.to_element(&a);
                let y = t.to_element(&b);
                assert_eq!(t.to_element(&t.mul(&a, &b)), g.multiply(&x, &y));
            }
            assert_eq!(t.frattini_coords(&a), g.frattini_coords(&t.to_element(&a)));
        }
        for i in 0..5 {
            assert_eq!(t.to_element(&t.generator(i)), g.gen(i));
        }
    }

    #[test]
    fn refuses_large_rank() {
        let g = Group::new(GroupParams::new(8, 1, 0, 0).unwrap()).unwrap();
        assert!(MulTable::new(&g).is_err());
    }
}
