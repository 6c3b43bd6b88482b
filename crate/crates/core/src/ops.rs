//! Group arithmetic abstracted over the element representation, so the
//! heavy sweeps can run on a multiplication table while everything else
//! uses the collector directly.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::group::Group;

pub trait GroupOps {
    type Elem: Copy + Eq + Ord;

    fn rank(&self) -> usize;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn generator(&self, i: usize) -> Self::Elem;
    fn to_element(&self, a: &Self::Elem) -> GroupElement;
    #[allow(clippy::wrong_self_convention)]
    fn from_element(&self, x: &GroupElement) -> Self::Elem;
    /// Base-3 index of the normal form.
    fn key(&self, a: &Self::Elem) -> u64;

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }

    fn comm(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(&self.inv(&ba), &ab)
    }

    fn pow(&self, a: &Self::Elem, n: u64) -> Self::Elem {
        let mut acc = self.identity();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn cube(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(a, a), a)
    }

    /// The first two exponents, i.e. the image in `S / gamma_2(S)`.
    fn frattini_coords(&self, a: &Self::Elem) -> (u8, u8) {
        let x = self.to_element(a);
        (x.exp(0), x.exp(1))
    }
}

impl GroupOps for Group {
    type Elem = GroupElement;

    fn rank(&self) -> usize {
        Group::rank(self)
    }
    fn identity(&self) -> GroupElement {
        Group::identity(self)
    }
    fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.multiply(a, b)
    }
    fn inv(&self, a: &GroupElement) -> GroupElement {
        self.inverse(a)
    }
    fn generator(&self, i: usize) -> GroupElement {
        self.gen(i)
    }
    fn to_element(&self, a: &GroupElement) -> GroupElement {
        *a
    }
    fn from_element(&self, x: &GroupElement) -> GroupElement {
        *x
    }
    fn key(&self, a: &GroupElement) -> u64 {
        a.index()
    }
    fn comm(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.commutator(a, b)
    }
}

/// Set of group elements keyed by index: a bitmap for small ranks, a
/// B-tree otherwise.
pub enum KeySet {
    Dense(Vec<u64>),
    Sparse(BTreeSet<u64>),
}

/// Ranks up to this use the dense bitmap (3^12 bits = 66 KiB).
const DENSE_RANK: usize = 12;

impl KeySet {
    pub fn for_rank(rank: usize) -> Self {
        if rank <= DENSE_RANK {
            let bits = 3usize.pow(rank as u32);
            KeySet::Dense(vec![0; bits.div_ceil(64)])
        } else {
            KeySet::Sparse(BTreeSet::new())
        }
    }

    /// Returns `true` if the key was not present.
    pub fn insert(&mut self, key: u64) -> bool {
        match self {
            KeySet::Dense(bits) => {
                let (w, b) = ((key / 64) as usize, key % 64);
                let fresh = bits[w] & (1 << b) == 0;
                bits[w] |= 1 << b;
                fresh
            }
            KeySet::Sparse(set) => set.insert(key),
        }
    }

    pub fn contains(&self, key: u64) -> bool {
        match self {
            KeySet::Dense(bits) => bits[(key / 64) as usize] & (1 << (key % 64)) != 0,
            KeySet::Sparse(set) => set.contains(&key),
        }
    }
}

/// Breadth-first closure of `gens` under right multiplication by the
/// generators. In a finite group this is the generated subgroup.
pub fn closure<G: GroupOps>(g: &G, gens: &[G::Elem], cap: usize) -> Result<Vec<G::Elem>> {
    let mut seen = KeySet::for_rank(g.rank());
    let id = g.identity();
    seen.insert(g.key(&id));
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let x = out[head];
        head += 1;
        for h in gens {
            let y = g.mul(&x, h);
            if seen.insert(g.key(&y)) {
                if out.len() >= cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
                out.push(y);
            }
        }
    }
    Ok(out)
}

/// Size of the generated subgroup, stopping early once it exceeds `stop`.
pub fn closure_size<G: GroupOps>(g: &G, gens: &[G::Elem], stop: usize) -> usize {
    match closure(g, gens, stop) {
        Ok(v) => v.len(),
        Err(_) => stop + 1,
    }
}
