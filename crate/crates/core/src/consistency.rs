//! Consistency of the rewrite system and evaluation of the defining
//! relations on arbitrary generator images.

use alloc::vec::Vec;
use core::fmt;

use crate::element::GroupElement;
use crate::error::Result;
use crate::group::Group;
use crate::ops::{closure, GroupOps};
use crate::params::GroupParams;

/// Closure counts are only attempted up to this rank.
pub const CLOSURE_MAX_RANK: usize = 10;

/// One instance of a defining relation, or of the extra relations that
/// complete the presentation. Generators are named by index; `s_r = s_{r+1} = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// `[s_{i-1}, s] = s_i`, `2 <= i <= r-1`.
    Chain(usize),
    /// `[s_1, s_i] = 1`, `3 <= i <= r-1`.
    S1Centralizes(usize),
    /// `s_i^3 s_{i+1}^3 s_{i+2} = 1`, `2 <= i <= r-1`.
    Cube(usize),
    /// `[s_1, s_2] = s_{r-1}^beta`.
    S1S2,
    /// `s_1^3 s_2^3 s_3 = s_{r-1}^gamma`.
    S1Cube,
    /// `s^3 = s_{r-1}^delta`.
    SCube,
    /// `[s_{r-1}, s] = 1` (completion).
    TopCentral,
    /// `[s_i, s_j] = 1`, `2 <= i < j` (completion).
    Gamma2Abelian(usize, usize),
}

impl Relation {
    /// Whether the relation belongs to the original six families rather
    /// than the completion.
    pub fn is_defining(&self) -> bool {
        !matches!(self, Relation::TopCentral | Relation::Gamma2Abelian(..))
    }

    /// All instances for rank `r`, defining relations first.
    pub fn instances(r: usize) -> Vec<Relation> {
        let mut out = Vec::new();
        out.extend((2..r).map(Relation::Chain));
        out.extend((3..r).map(Relation::S1Centralizes));
        out.extend((2..r).map(Relation::Cube));
        out.extend([Relation::S1S2, Relation::S1Cube, Relation::SCube, Relation::TopCentral]);
        for i in 2..r {
            for j in i + 1..r {
                out.push(Relation::Gamma2Abelian(i, j));
            }
        }
        out
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Chain(i) => write!(f, "[s{},s] = s{i}", i - 1),
            Relation::S1Centralizes(i) => write!(f, "[s1,s{i}] = 1"),
            Relation::Cube(i) => write!(f, "s{i}^3 s{}^3 s{} = 1", i + 1, i + 2),
            Relation::S1S2 => f.write_str("[s1,s2] = z^beta"),
            Relation::S1Cube => f.write_str("s1^3 s2^3 s3 = z^gamma"),
            Relation::SCube => f.write_str("s^3 = z^delta"),
            Relation::TopCentral => f.write_str("[z,s] = 1"),
            Relation::Gamma2Abelian(i, j) => write!(f, "[s{i},s{j}] = 1"),
        }
    }
}

/// Evaluates `rel` with `images[i]` substituted for generator `i`.
pub fn relation_holds<G: GroupOps>(
    g: &G,
    params: &GroupParams,
    images: &[G::Elem],
    rel: Relation,
) -> bool {
    let r = params.r;
    let id = g.identity();
    let at = |i: usize| if i < r { images[i] } else { id };
    let z = images[r - 1];
    match rel {
        Relation::Chain(i) => g.comm(&at(i - 1), &at(0)) == at(i),
        Relation::S1Centralizes(i) => g.is_identity(&g.comm(&at(1), &at(i))),
        Relation::Cube(i) => {
            let lhs = g.mul(&g.mul(&g.cube(&at(i)), &g.cube(&at(i + 1))), &at(i + 2));
            g.is_identity(&lhs)
        }
        Relation::S1S2 => g.comm(&at(1), &at(2)) == g.pow(&z, params.beta as u64),
        Relation::S1Cube => {
            let lhs = g.mul(&g.mul(&g.cube(&at(1)), &g.cube(&at(2))), &at(3));
            lhs == g.pow(&z, params.gamma as u64)
        }
        Relation::SCube => g.cube(&at(0)) == g.pow(&z, params.delta as u64),
        Relation::TopCentral => g.is_identity(&g.comm(&z, &at(0))),
        Relation::Gamma2Abelian(i, j) => g.is_identity(&g.comm(&at(i), &at(j))),
    }
}

/// First relation instance that fails on `images`, if any.
pub fn first_failed_relation<G: GroupOps>(
    g: &G,
    params: &GroupParams,
    images: &[G::Elem],
) -> Option<Relation> {
    Relation::instances(params.r)
        .into_iter()
        .find(|&rel| !relation_holds(g, params, images, rel))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativityFailure {
    /// Each factor as `(generator, exponent)`.
    pub triple: [(usize, u8); 3],
    pub left: GroupElement,
    pub right: GroupElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: Relation,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub params: GroupParams,
    pub triples_checked: usize,
    pub associativity_failures: Vec<AssociativityFailure>,
    pub relations: Vec<RelationCheck>,
    /// Size of the closure of `{s, s1}`, when `r <= CLOSURE_MAX_RANK`.
    pub closure_order: Option<u64>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.associativity_failures.is_empty()
            && self.relations.iter().all(|c| c.holds)
            && self.closure_order.is_none_or(|n| n == self.params.order())
    }
}

/// Checks `(ab)c = a(bc)` for every triple drawn from `{s_i, s_i^2}`, which
/// covers the standard overlap tests for a power-conjugate presentation,
/// then evaluates every relation instance and counts the closure of `{s, s1}`.
pub fn check_consistency(params: GroupParams) -> Result<ConsistencyReport> {
    let g = Group::new(params)?;
    let r = g.rank();
    let letters: Vec<((usize, u8), GroupElement)> = (0..r)
        .flat_map(|i| [1u8, 2].map(|e| ((i, e), g.gen_pow(i, e as i64))))
        .collect();

    let mut failures = Vec::new();
    let mut checked = 0;
    for (la, a) in &letters {
        for (lb, b) in &letters {
            let ab = g.multiply(a, b);
            for (lc, c) in &letters {
                checked += 1;
                let left = g.multiply(&ab, c);
                let right = g.multiply(a, &g.multiply(b, c));
                if left != right {
                    failures.push(AssociativityFailure { triple: [*la, *lb, *lc], left, right });
                }
            }
        }
    }

    let gens: Vec<GroupElement> = (0..r).map(|i| g.gen(i)).collect();
    let relations = Relation::instances(r)
        .into_iter()
        .map(|relation| RelationCheck {
            relation,
            holds: relation_holds(&g, &params, &gens, relation),
        })
        .collect();

    let closure_order = (r <= CLOSURE_MAX_RANK).then(|| {
        let cap = g.order() as usize + 1;
        closure(&g, &[g.gen(0), g.gen(1)], cap).map_or(cap as u64, |v| v.len() as u64)
    });

    Ok(ConsistencyReport {
        params,
        triples_checked: checked,
        associativity_failures: failures,
        relations,
        closure_order,
    })
}
