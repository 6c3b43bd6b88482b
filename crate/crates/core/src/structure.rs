//! Subgroups of `S`: the lower central series, centre, centralizers,
//! conjugacy classes, Omega subgroups and the candidate subgroups `V_d`,
//! `E_d`. Everything here is computed by brute force on explicit element
//! sets; the symbolic descriptions are only used for labels and fast
//! membership in `gamma_i(S)`.

use alloc::vec::Vec;
use core::fmt;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::ops::{closure, GroupOps, KeySet};

/// Brute-force scans over all of `S` are refused above this rank.
pub const DEFAULT_SCAN_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubgroupKind {
    /// `gamma_i(S) = <s_i, ..., s_{r-1}>`.
    Gamma(usize),
    /// `V_d = <s s1^d, s_{r-1}>`.
    V(u8),
    /// `E_d = <s s1^d, s_{r-1}, s_{r-2}>`.
    E(u8),
    Center,
    Omega1Gamma1,
    Explicit,
}

/// A subgroup given by its sorted list of normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    kind: SubgroupKind,
    elements: Vec<GroupElement>,
}

impl Subgroup {
    fn new(kind: SubgroupKind, mut elements: Vec<GroupElement>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Subgroup { kind, elements }
    }

    pub fn kind(&self) -> SubgroupKind {
        self.kind
    }

    /// Same elements, relabelled.
    pub fn with_kind(mut self, kind: SubgroupKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        match self.kind {
            SubgroupKind::Gamma(i) => x.in_gamma(i),
            _ => self.elements.binary_search(x).is_ok(),
        }
    }

    /// Set equality of normal forms; labels are ignored.
    pub fn same_elements(&self, other: &Subgroup) -> bool {
        self.elements == other.elements
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let els = self.elements.iter().filter(|x| other.contains(x)).copied().collect();
        Subgroup::new(SubgroupKind::Explicit, els)
    }

    /// Contains the identity and is closed under products and inverses.
    pub fn is_closed(&self, g: &Group) -> bool {
        self.elements.binary_search(&g.identity()).is_ok()
            && self.elements.iter().all(|x| self.contains(&g.inverse(x)))
            && self
                .elements
                .iter()
                .all(|x| self.elements.iter().all(|y| self.contains(&g.multiply(x, y))))
    }

    pub fn is_abelian(&self, g: &Group) -> bool {
        let els = &self.elements;
        els.iter()
            .enumerate()
            .all(|(i, x)| els[i + 1..].iter().all(|y| g.commute(x, y)))
    }

    /// Largest element order.
    pub fn exponent(&self, g: &Group) -> u64 {
        self.elements.iter().map(|x| g.element_order(x)).max().unwrap_or(1)
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SubgroupKind::Gamma(i) => write!(f, "gamma({i})"),
            SubgroupKind::V(d) => write!(f, "V({d})"),
            SubgroupKind::E(d) => write!(f, "E({d})"),
            SubgroupKind::Center => f.write_str("Z"),
            SubgroupKind::Omega1Gamma1 => f.write_str("Omega1(gamma(1))"),
            SubgroupKind::Explicit => {
                f.write_str("{")?;
                for (i, x) in self.elements.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
        }
    }
}

fn check_scan(g: &Group) -> Result<()> {
    if g.rank() > DEFAULT_SCAN_LIMIT {
        return Err(Error::ScanLimitExceeded { rank: g.rank(), limit: DEFAULT_SCAN_LIMIT });
    }
    Ok(())
}

/// The subgroup generated by `gens`, refusing to grow past `cap` elements.
pub fn subgroup_closure(g: &Group, gens: &[GroupElement], cap: usize) -> Result<Subgroup> {
    Ok(Subgroup::new(SubgroupKind::Explicit, closure(g, gens, cap)?))
}

/// `gamma_i(S)` as the closure of `s_i, ..., s_{r-1}`, for `1 <= i <= r-1`.
pub fn gamma(g: &Group, i: usize) -> Result<Subgroup> {
    let r = g.rank();
    if i == 0 || i >= r {
        return Err(Error::GammaIndexOutOfRange { index: i, max: r - 1 });
    }
    let gens: Vec<GroupElement> = (i..r).map(|k| g.gen(k)).collect();
    let els = closure(g, &gens, g.order() as usize)?;
    Ok(Subgroup::new(SubgroupKind::Gamma(i), els))
}

/// The subgroup generated by all `[a, b]` with `a` in `a_set`, `b` in `b_set`.
pub fn commutator_subgroup(g: &Group, a_set: &Subgroup, b_set: &Subgroup) -> Result<Subgroup> {
    let mut seen = KeySet::for_rank(g.rank());
    let mut comms = Vec::new();
    for a in a_set.elements() {
        for b in b_set.elements() {
            let c = g.commutator(a, b);
            if seen.insert(c.index()) {
                comms.push(c);
            }
        }
    }
    subgroup_closure(g, &comms, g.order() as usize)
}

/// `C_S(X)` for a generating set `X`, by scanning all of `S`.
pub fn centralizer_of(g: &Group, xs: &[GroupElement]) -> Result<Subgroup> {
    check_scan(g)?;
    let els = g.elements().filter(|y| xs.iter().all(|x| g.commute(x, y))).collect();
    Ok(Subgroup::new(SubgroupKind::Explicit, els))
}

pub fn centralizer(g: &Group, x: &GroupElement) -> Result<Subgroup> {
    centralizer_of(g, core::slice::from_ref(x))
}

/// `Z(S)`, as the centralizer of `{s, s1}`.
pub fn center(g: &Group) -> Result<Subgroup> {
    Ok(centralizer_of(g, &[g.gen(0), g.gen(1)])?.with_kind(SubgroupKind::Center))
}

/// Centre of a subgroup `h` generated by `gens`.
pub fn center_of(g: &Group, h: &Subgroup, gens: &[GroupElement]) -> Subgroup {
    let els = h
        .elements()
        .iter()
        .filter(|y| gens.iter().all(|x| g.commute(x, y)))
        .copied()
        .collect();
    Subgroup::new(SubgroupKind::Explicit, els)
}

/// The orbit of `x` under conjugation, as a sorted list.
pub fn conjugacy_class(g: &Group, x: &GroupElement) -> Vec<GroupElement> {
    let gens = [g.gen(0), g.gen(1)];
    let mut seen = KeySet::for_rank(g.rank());
    seen.insert(x.index());
    let mut orbit = alloc::vec![*x];
    let mut head = 0;
    while head < orbit.len() {
        let y = orbit[head];
        head += 1;
        for h in &gens {
            let c = g.conjugate(&y, h);
            if seen.insert(c.index()) {
                orbit.push(c);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

/// The coset `x * h` as a sorted list.
pub fn coset(g: &Group, x: &GroupElement, h: &Subgroup) -> Vec<GroupElement> {
    let mut out: Vec<GroupElement> = h.elements().iter().map(|y| g.multiply(x, y)).collect();
    out.sort_unstable();
    out
}

/// `Omega_i(H)`: generated by the elements of `h` of order dividing `3^i`.
pub fn omega(g: &Group, i: u32, h: &Subgroup) -> Result<Subgroup> {
    let bound = 3u64.pow(i);
    let gens: Vec<GroupElement> =
        h.elements().iter().filter(|x| g.element_order(x) <= bound).copied().collect();
    let sub = subgroup_closure(g, &gens, h.order())?;
    let is_gamma1 = matches!(h.kind(), SubgroupKind::Gamma(1));
    Ok(if i == 1 && is_gamma1 { sub.with_kind(SubgroupKind::Omega1Gamma1) } else { sub })
}

/// `x = s s1^d`.
pub fn coset_rep(g: &Group, d: u8) -> GroupElement {
    g.multiply(&g.gen(0), &g.gen_pow(1, d as i64))
}

/// `V_d = <s s1^d, s_{r-1}>`.
pub fn v_sub(g: &Group, d: u8) -> Result<Subgroup> {
    Ok(subgroup_closure(g, &[coset_rep(g, d), g.z()], g.order() as usize)?
        .with_kind(SubgroupKind::V(d)))
}

/// `E_d = <s s1^d, s_{r-1}, s_{r-2}>`.
pub fn e_sub(g: &Group, d: u8) -> Result<Subgroup> {
    let r = g.rank();
    let gens = [coset_rep(g, d), g.z(), g.gen(r - 2)];
    Ok(subgroup_closure(g, &gens, g.order() as usize)?.with_kind(SubgroupKind::E(d)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gamma1Check {
    pub holds: bool,
    /// An element in exactly one of `C_S(gamma_{r-2}(S))` and `gamma_1(S)`.
    pub witness: Option<GroupElement>,
}

/// Verifies `C_S(gamma_{r-2}(S)) = gamma_1(S)`, which makes `gamma_1(S)`
/// characteristic.
pub fn is_characteristic_gamma1(g: &Group) -> Result<Gamma1Check> {
    let r = g.rank();
    let cent = centralizer_of(g, &[g.gen(r - 2), g.gen(r - 1)])?;
    let g1 = gamma(g, 1)?;
    let witness = cent
        .elements()
        .iter()
        .find(|x| !g1.contains(x))
        .or_else(|| g1.elements().iter().find(|x| !cent.contains(x)))
        .copied();
    Ok(Gamma1Check { holds: witness.is_none(), witness })
}

/// Searches `h` for two elements generating it. Works on any
/// [`GroupOps`] so a multiplication table can be used.
pub fn two_generators<G: GroupOps>(g: &G, h: &[G::Elem]) -> Option<(G::Elem, G::Elem)> {
    let n = h.len();
    for (i, x) in h.iter().enumerate() {
        for y in &h[i..] {
            if closure(g, &[*x, *y], n).is_ok_and(|c| c.len() == n) {
                return Some((*x, *y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::GroupParams;

    fn group(r: usize, b: u8, c: u8, d: u8) -> Group {
        Group::new(GroupParams::new(r, b, c, d).unwrap()).unwrap()
    }

    #[test]
    fn gamma_orders_and_bounds() {
        let g = group(5, 1, 0, 0);
        for i in 1..5 {
            assert_eq!(gamma(&g, i).unwrap().order(), 3usize.pow(5 - i as u32));
        }
        assert!(matches!(gamma(&g, 0), Err(Error::GammaIndexOutOfRange { .. })));
        assert!(gamma(&g, 5).is_err());
        let g1 = gamma(&g, 1).unwrap();
        assert!(g1.elements().iter().all(|x| x.exp(0) == 0));
        assert!(gamma(&g, 2).unwrap().is_abelian(&g));
    }

    #[test]
    fn top_gamma_is_center() {
        let g = group(5, 1, 0, 0);
        let z = center(&g).unwrap();
        assert!(z.same_elements(&gamma(&g, 4).unwrap()));
        assert_eq!(z.to_string(), "Z");
    }

    #[test]
    fn centralizers() {
        let g = group(5, 1, 0, 0);
        assert_eq!(centralizer(&g, &g.identity()).unwrap().order(), 243);
        assert_eq!(centralizer(&g, &g.z()).unwrap().order(), 243);
        let c = centralizer(&g, &g.gen(0)).unwrap();
        assert_eq!(c.order(), 9);
        assert!(c.same_elements(&subgroup_closure(&g, &[g.gen(0), g.z()], 243).unwrap()));
    }

    #[test]
    fn classes() {
        let g = group(5, 1, 0, 0);
        assert_eq!(conjugacy_class(&g, &g.identity()), alloc::vec![g.identity()]);
        assert_eq!(conjugacy_class(&g, &g.z()), alloc::vec![g.z()]);
        let g2 = gamma(&g, 2).unwrap();
        assert_eq!(conjugacy_class(&g, &g.gen(0)), coset(&g, &g.gen(0), &g2));
        assert_eq!(conjugacy_class(&g, &g.gen(0)).len(), 27);
    }

    #[test]
    fn omega_subgroups() {
        let g = group(5, 1, 0, 0);
        let o = omega(&g, 1, &gamma(&g, 1).unwrap()).unwrap();
        assert_eq!(o.order(), 9);
        assert!(o.same_elements(&subgroup_closure(&g, &[g.gen(3), g.gen(4)], 243).unwrap()));
        let zs = gamma(&g, 4).unwrap();
        assert!(omega(&g, 1, &zs).unwrap().same_elements(&zs));
        let g6 = group(6, 1, 0, 0);
        assert!(omega(&g6, 2, &gamma(&g6, 1).unwrap()).unwrap().order() <= 81);
    }

    #[test]
    fn gamma1_characteristic() {
        for (r, b, c, d) in [(5, 1, 0, 0), (6, 1, 0, 2), (5, 0, 0, 0)] {
            let chk = is_characteristic_gamma1(&group(r, b, c, d)).unwrap();
            assert!(chk.holds, "{chk:?}");
        }
    }

    #[test]
    fn closure_examples() {
        let g = group(5, 1, 0, 0);
        assert_eq!(subgroup_closure(&g, &[g.identity()], 1).unwrap().order(), 1);
        let v1 = subgroup_closure(&g, &[coset_rep(&g, 1), g.z()], 243).unwrap();
        assert_eq!(v1.order(), 9);
        assert!(v1.is_closed(&g));
        assert!(matches!(
            subgroup_closure(&g, &[g.gen(0), g.gen(1)], 200),
            Err(Error::ClosureCapExceeded { cap: 200 })
        ));
        assert_eq!(subgroup_closure(&g, &[g.gen(0), g.gen(1)], 243).unwrap().order(), 243);
    }

    #[test]
    fn scan_limit() {
        let g = group(11, 1, 0, 0);
        assert!(matches!(
            centralizer(&g, &g.gen(0)),
            Err(Error::ScanLimitExceeded { rank: 11, limit: 10 })
        ));
    }

    #[test]
    fn explicit_display() {
        let g = group(5, 1, 0, 0);
        let z = subgroup_closure(&g, &[g.z()], 3).unwrap();
        assert_eq!(z.to_string(), "{(0,0,0,0,0),(0,0,0,0,1),(0,0,0,0,2)}");
    }
}
