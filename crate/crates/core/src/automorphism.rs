//! The maps `theta(e,d,f; v; w)` determined by
//!
//! ```text
//! s  -> s^e s1^d v
//! s1 -> s1^f w          (e, f in {1,2}, d in {0,1,2}, v, w in gamma_2(S))
//! ```
//!
//! Maps act on the right: `x theta`, and `a.then(b)` is "`a` first, then `b`".
//! Validity is decided two ways: by three congruences mod 3 in
//! `(e, d, f)` alone, and by an oracle that evaluates every relation of the
//! presentation on the generator images and checks that they generate `S`.

use alloc::vec::Vec;
use core::fmt;

use crate::consistency::{first_failed_relation, Relation};
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::ops::{closure_size, GroupOps};
use crate::params::GroupParams;

/// Up to this rank the oracle decides surjectivity by enumerating the
/// subgroup generated by the images; above it, by the images of `s` and
/// `s1` spanning `S / gamma_2(S)`.
pub const CLOSURE_SURJECTIVITY_RANK: usize = 6;

/// All `(e, d, f)` in iteration order: `e` outer, then `d`, then `f`.
pub fn all_triples() -> impl Iterator<Item = (u8, u8, u8)> {
    (1..=2u8).flat_map(|e| (0..3u8).flat_map(move |d| (1..=2u8).map(move |f| (e, d, f))))
}

/// `e^{r-2} f mod 3`, the exponent with which `theta` acts on `s_{r-1}`.
pub fn z_exponent(params: &GroupParams, e: u8, f: u8) -> u8 {
    // e is 1 or 2 = -1 mod 3
    let e_pow = if e == 2 && (params.r - 2) % 2 == 1 { 2 } else { 1 };
    (e_pow * f) % 3
}

/// The three congruences deciding validity, individually.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Congruences {
    /// `e f beta = e^{r-2} beta`.
    pub commutator: bool,
    /// `2 d e beta = gamma (e^{r-2} - 1)`.
    pub s1_cube: bool,
    /// `e (d^2 beta + delta) + d gamma = e^{r-2} f delta`.
    pub s_cube: bool,
}

impl Congruences {
    pub fn evaluate(params: &GroupParams, e: u8, d: u8, f: u8) -> Self {
        let (b, g, dl) = (params.beta as i64, params.gamma as i64, params.delta as i64);
        let (e, d, f) = (e as i64, d as i64, f as i64);
        let er2 = if e == 2 && (params.r - 2) % 2 == 1 { 2 } else { 1 };
        let m3 = |x: i64| x.rem_euclid(3);
        Congruences {
            commutator: m3(e * f * b) == m3(er2 * b),
            s1_cube: m3(2 * d * e * b) == m3(g * (er2 - 1)),
            s_cube: m3(e * (d * d * b + dl) + d * g) == m3(er2 * f * dl),
        }
    }

    pub fn all(&self) -> bool {
        self.commutator && self.s1_cube && self.s_cube
    }
}

/// Parameters of a candidate map. `v` and `w` are checked to lie in
/// `gamma_2(S)` on construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutMap {
    e: u8,
    d: u8,
    f: u8,
    v: GroupElement,
    w: GroupElement,
}

impl AutMap {
    pub fn new(g: &Group, e: u8, d: u8, f: u8, v: GroupElement, w: GroupElement) -> Result<Self> {
        for (name, value, ok) in [
            ("e", e, (1..=2).contains(&e)),
            ("d", d, d <= 2),
            ("f", f, (1..=2).contains(&f)),
        ] {
            if !ok {
                return Err(Error::BadAutParameter { name, value });
            }
        }
        for (name, x) in [("v", v), ("w", w)] {
            if x.rank() != g.rank() {
                return Err(Error::LengthMismatch { expected: g.rank(), got: x.rank() });
            }
            if !x.in_gamma(2) {
                return Err(Error::NotInGamma2 { name, element: x });
            }
        }
        Ok(AutMap { e, d, f, v, w })
    }

    /// `theta(e,d,f; 1; 1)`.
    pub fn simple(g: &Group, e: u8, d: u8, f: u8) -> Result<Self> {
        AutMap::new(g, e, d, f, g.identity(), g.identity())
    }

    pub fn identity(g: &Group) -> Self {
        AutMap { e: 1, d: 0, f: 1, v: g.identity(), w: g.identity() }
    }

    /// Reads the parameters back off the images of `s` and `s1`.
    /// The normal form of `s theta` is literally `s^e s1^d v`.
    pub fn from_images(g: &Group, s_img: &GroupElement, s1_img: &GroupElement) -> Result<Self> {
        if s1_img.exp(0) != 0 {
            return Err(Error::Precondition(alloc::format!(
                "image of s1 {s1_img} is not in gamma_1(S)"
            )));
        }
        let tail = |x: &GroupElement| {
            let mut t = *x;
            t.exps_mut()[0] = 0;
            t.exps_mut()[1] = 0;
            t
        };
        AutMap::new(g, s_img.exp(0), s_img.exp(1), s1_img.exp(1), tail(s_img), tail(s1_img))
    }

    pub fn e(&self) -> u8 {
        self.e
    }
    pub fn d(&self) -> u8 {
        self.d
    }
    pub fn f(&self) -> u8 {
        self.f
    }
    pub fn v(&self) -> &GroupElement {
        &self.v
    }
    pub fn w(&self) -> &GroupElement {
        &self.w
    }
    pub fn triple(&self) -> (u8, u8, u8) {
        (self.e, self.d, self.f)
    }

    /// `(t, t1, ..., t_{r-1})` with `t = s^e s1^d v`, `t1 = s1^f w`,
    /// `t_j = [t_{j-1}, t]`.
    pub fn generator_images<G: GroupOps>(&self, g: &G) -> Vec<G::Elem> {
        let r = g.rank();
        let s = g.generator(0);
        let s1 = g.generator(1);
        let t = g.mul(&g.mul(&g.pow(&s, self.e as u64), &g.pow(&s1, self.d as u64)), &g.from_element(&self.v));
        let t1 = g.mul(&g.pow(&s1, self.f as u64), &g.from_element(&self.w));
        let mut out = Vec::with_capacity(r);
        out.push(t);
        out.push(t1);
        for j in 2..r {
            let next = g.comm(&out[j - 1], &t);
            out.push(next);
        }
        out
    }
}

impl fmt::Display for AutMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta({},{},{}; {}; {})", self.e, self.d, self.f, self.v, self.w)
    }
}

impl fmt::Debug for AutMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn is_automorphism_congruence(params: &GroupParams, theta: &AutMap) -> bool {
    Congruences::evaluate(params, theta.e, theta.d, theta.f).all()
}

/// `(e, d, f)` passing all three congruences, in [`all_triples`] order.
pub fn valid_triples(params: &GroupParams) -> Vec<(u8, u8, u8)> {
    all_triples()
        .filter(|&(e, d, f)| Congruences::evaluate(params, e, d, f).all())
        .collect()
}

/// `|Aut(S)| = (number of valid triples) * |gamma_2(S)|^2`. Canonical
/// parameters only.
pub fn count_automorphisms(params: &GroupParams) -> Result<u128> {
    params.require_canonical()?;
    let gamma2 = 3u128.pow((params.r - 2) as u32);
    Ok(valid_triples(params).len() as u128 * gamma2 * gamma2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleVerdict {
    Automorphism,
    /// The images violate this relation, so the map is not a homomorphism.
    RelationFails(Relation),
    /// A homomorphism whose image is a proper subgroup of the given order
    /// (or, above the closure rank, whose images miss `S / gamma_2(S)`).
    NotSurjective { image_order: Option<u64> },
}

impl OracleVerdict {
    pub fn is_automorphism(&self) -> bool {
        matches!(self, OracleVerdict::Automorphism)
    }
}

/// Decides validity from the group law alone: every relation instance must
/// hold on the images, and the images must generate `S`.
pub fn oracle<G: GroupOps>(g: &G, params: &GroupParams, theta: &AutMap) -> OracleVerdict {
    let images = theta.generator_images(g);
    if let Some(rel) = first_failed_relation(g, params, &images) {
        return OracleVerdict::RelationFails(rel);
    }
    if params.r <= CLOSURE_SURJECTIVITY_RANK {
        let n = params.order() as usize;
        let size = closure_size(g, &images[..2], n);
        if size != n {
            return OracleVerdict::NotSurjective { image_order: Some(size as u64) };
        }
    } else {
        let (a0, a1) = g.frattini_coords(&images[0]);
        let (b0, b1) = g.frattini_coords(&images[1]);
        let det = (a0 as i32 * b1 as i32 - a1 as i32 * b0 as i32).rem_euclid(3);
        if det == 0 {
            return OracleVerdict::NotSurjective { image_order: None };
        }
    }
    OracleVerdict::Automorphism
}

pub fn is_automorphism_oracle(g: &Group, theta: &AutMap) -> OracleVerdict {
    oracle(g, &g.params(), theta)
}

/// Runs both tests and reports a disagreement as [`Error::Inconsistency`].
pub fn checked_validity<G: GroupOps>(g: &G, params: &GroupParams, theta: &AutMap) -> Result<bool> {
    let by_congruence = is_automorphism_congruence(params, theta);
    let verdict = oracle(g, params, theta);
    if by_congruence != verdict.is_automorphism() {
        return Err(Error::Inconsistency(alloc::format!(
            "{params} {theta}: congruences say {by_congruence}, oracle says {verdict:?}"
        )));
    }
    Ok(by_congruence)
}

/// A map that passed the congruence test, with all generator images cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    map: AutMap,
    images: Vec<GroupElement>,
}

impl Automorphism {
    /// Refuses maps failing the congruences.
    pub fn new(g: &Group, map: AutMap) -> Result<Self> {
        if !is_automorphism_congruence(&g.params(), &map) {
            return Err(Error::NotAnAutomorphism { e: map.e, d: map.d, f: map.f });
        }
        let images = map.generator_images(g);
        Ok(Automorphism { map, images })
    }

    pub fn map(&self) -> &AutMap {
        &self.map
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    /// `x theta = t^a0 t1^a1 ... t_{r-1}^a_{r-1}`.
    pub fn apply(&self, g: &Group, x: &GroupElement) -> GroupElement {
        let mut out = g.identity();
        for (i, &a) in x.exponents().iter().enumerate() {
            for _ in 0..a {
                out = g.multiply(&out, &self.images[i]);
            }
        }
        out
    }

    /// `self` first, then `other`.
    pub fn then(&self, g: &Group, other: &Automorphism) -> Result<Automorphism> {
        let s_img = other.apply(g, &self.images[0]);
        let s1_img = other.apply(g, &self.images[1]);
        Automorphism::new(g, AutMap::from_images(g, &s_img, &s1_img)?)
    }

    pub fn is_identity(&self, g: &Group) -> bool {
        self.images[0] == g.gen(0) && self.images[1] == g.gen(1)
    }

    /// Order in `Aut(S)`, by repeated composition.
    pub fn order(&self, g: &Group) -> Result<u64> {
        let mut acc = self.clone();
        let mut n = 1;
        while !acc.is_identity(g) {
            acc = acc.then(g, self)?;
            n += 1;
        }
        Ok(n)
    }

    /// `self^n` for `n >= 1`.
    pub fn pow(&self, g: &Group, n: u64) -> Result<Automorphism> {
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.then(g, self)?;
        }
        Ok(acc)
    }
}

/// Applies `theta` after validating it.
pub fn apply(g: &Group, theta: &AutMap, x: &GroupElement) -> Result<GroupElement> {
    Ok(Automorphism::new(g, *theta)?.apply(g, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(r: usize, b: u8, c: u8, d: u8) -> Group {
        Group::new(GroupParams::new(r, b, c, d).unwrap()).unwrap()
    }

    #[test]
    fn identity_map_images() {
        let g = group(6, 1, 0, 2);
        let id = AutMap::identity(&g);
        let imgs = id.generator_images(&g);
        assert_eq!(imgs, (0..6).map(|i| g.gen(i)).collect::<Vec<_>>());
        assert!(is_automorphism_oracle(&g, &id).is_automorphism());
    }

    #[test]
    fn constructor_checks() {
        let g = group(5, 1, 0, 0);
        assert!(AutMap::simple(&g, 0, 0, 1).is_err());
        assert!(AutMap::simple(&g, 1, 3, 1).is_err());
        assert!(matches!(
            AutMap::new(&g, 1, 0, 1, g.gen(1), g.identity()),
            Err(Error::NotInGamma2 { name: "v", .. })
        ));
    }

    #[test]
    fn t2_for_e2_f1() {
        let g = group(5, 1, 0, 0);
        let imgs = AutMap::simple(&g, 2, 0, 1).unwrap().generator_images(&g);
        // [s1, s^2] = s2^2 s3
        assert_eq!(imgs[2], g.element(&[0, 0, 2, 1, 0]).unwrap());
    }

    #[test]
    fn z_exponent_formula() {
        let p = GroupParams::new(6, 1, 0, 0).unwrap();
        assert_eq!(z_exponent(&p, 2, 2), 2);
        let p = GroupParams::new(5, 1, 0, 0).unwrap();
        assert_eq!(z_exponent(&p, 2, 1), 2);
        assert_eq!(z_exponent(&p, 1, 2), 2);
        assert_eq!(z_exponent(&p, 2, 2), 1);
    }

    #[test]
    fn congruence_examples() {
        let g = group(6, 1, 0, 0);
        let p = g.params();
        assert!(is_automorphism_congruence(&p, &AutMap::simple(&g, 2, 0, 2).unwrap()));
        assert!(!is_automorphism_congruence(&p, &AutMap::simple(&g, 2, 0, 1).unwrap()));
        let g = group(5, 0, 0, 0);
        assert_eq!(valid_triples(&g.params()).len(), 12);
    }

    #[test]
    fn oracle_examples() {
        let g = group(5, 1, 0, 1);
        assert!(is_automorphism_oracle(&g, &AutMap::simple(&g, 2, 0, 1).unwrap()).is_automorphism());
        // both the s1-cube and the s-cube congruences fail here
        let c = Congruences::evaluate(&g.params(), 2, 1, 1);
        assert!(c.commutator && !c.s1_cube && !c.s_cube);
        let bad = is_automorphism_oracle(&g, &AutMap::simple(&g, 2, 1, 1).unwrap());
        assert_eq!(bad, OracleVerdict::RelationFails(Relation::S1Cube));
        let images = AutMap::simple(&g, 2, 1, 1).unwrap().generator_images(&g);
        assert!(!crate::consistency::relation_holds(&g, &g.params(), &images, Relation::SCube));
    }

    #[test]
    fn counts() {
        let p = |r, b, c, d| GroupParams::new(r, b, c, d).unwrap();
        assert_eq!(count_automorphisms(&p(5, 1, 0, 0)).unwrap(), 1458);
        assert_eq!(count_automorphisms(&p(6, 0, 0, 0)).unwrap(), 78732);
        assert_eq!(count_automorphisms(&p(5, 0, 0, 1)).unwrap(), 4374);
        assert!(matches!(count_automorphisms(&p(5, 0, 2, 0)), Err(Error::NonCanonical(_))));
    }

    #[test]
    fn apply_examples() {
        let g = group(6, 1, 0, 0);
        let theta = AutMap::simple(&g, 2, 0, 2).unwrap();
        assert_eq!(apply(&g, &theta, &g.z()).unwrap(), g.gen_pow(5, 2));
        assert!(apply(&g, &theta, &g.identity()).unwrap().is_identity());
        let bad = AutMap::simple(&g, 2, 0, 1).unwrap();
        assert!(matches!(apply(&g, &bad, &g.z()), Err(Error::NotAnAutomorphism { .. })));

        let g = group(6, 1, 0, 2);
        let w = g.multiply(&g.gen(2), &g.gen_pow(5, -1));
        let theta = AutMap::new(&g, 2, 0, 2, g.identity(), w).unwrap();
        let x = g.multiply(&g.gen(0), &g.gen(1));
        assert_eq!(apply(&g, &theta, &x).unwrap(), g.inverse(&x));
    }

    #[test]
    fn composition_reads_back_parameters() {
        let g = group(5, 1, 0, 0);
        let a = Automorphism::new(&g, AutMap::simple(&g, 2, 0, 1).unwrap()).unwrap();
        let sq = a.then(&g, &a).unwrap();
        assert_eq!(sq.map().triple(), (1, 0, 1));
        let n = a.order(&g).unwrap();
        assert_eq!(n % 2, 0);
        assert!(a.pow(&g, n).unwrap().is_identity(&g));
    }
}
