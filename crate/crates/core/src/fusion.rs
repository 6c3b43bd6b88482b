//! Candidate essential subgroups and the classification of fusion systems
//! with essential subgroups, restricted to what the group engine can check:
//! which cosets `s s1^d gamma_2(S)` consist of elements of order 3, which
//! of `V_d`, `E_d`, `gamma_1(S)` can be essential, and which `V_d` admit an
//! automorphism of `S` inverting them.
//!
//! Saturation of the resulting systems is not machine-verified; verdicts
//! carry it as a note.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::automorphism::{valid_triples, z_exponent, AutMap, Automorphism};
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::params::GroupParams;
use crate::structure::{
    center_of, commutator_subgroup, coset_rep, e_sub, gamma, subgroup_closure, v_sub, Subgroup,
    SubgroupKind,
};

/// Cosets are scanned element by element up to this rank.
pub const COSET_SCAN_RANK: usize = 6;

/// One row of the order-3 coset table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order3Row {
    pub params: GroupParams,
    /// `order3[d]`: `s s1^d` has order 3, decided by the engine.
    pub order3: [bool; 3],
    /// Every element of `s s1^d gamma_2(S)` has the same order as `s s1^d`.
    /// `None` when the rank is above [`COSET_SCAN_RANK`].
    pub coset_uniform: Option<bool>,
}

/// `d^2 beta + delta + d gamma = 0 (mod 3)`.
pub fn order3_congruence(params: &GroupParams, d: u8) -> bool {
    let d = d as u32;
    (d * d * params.beta as u32 + params.delta as u32 + d * params.gamma as u32).is_multiple_of(3)
}

/// Decides which cosets consist of elements of order 3, with the engine's
/// `element_order` as the authority. A disagreement with the congruence is
/// an [`Error::Inconsistency`].
pub fn order3_coset_table(g: &Group) -> Result<Order3Row> {
    let params = g.params();
    let mut order3 = [false; 3];
    for d in 0..3u8 {
        let by_engine = g.element_order(&coset_rep(g, d)) == 3;
        if by_engine != order3_congruence(&params, d) {
            return Err(Error::Inconsistency(alloc::format!(
                "{params}: order of s s1^{d} disagrees with the congruence"
            )));
        }
        order3[d as usize] = by_engine;
    }
    let coset_uniform = (g.rank() <= COSET_SCAN_RANK)
        .then(|| -> Result<bool> {
            let g2 = gamma(g, 2)?;
            Ok((0..3u8).all(|d| {
                let x = coset_rep(g, d);
                let ord = g.element_order(&x);
                g2.elements().iter().all(|v| g.element_order(&g.multiply(&x, v)) == ord)
            }))
        })
        .transpose()?;
    Ok(Order3Row { params, order3, coset_uniform })
}

/// Checks that `V_d` is elementary abelian of order 9.
pub fn is_elementary_abelian_9(g: &Group, v: &Subgroup) -> bool {
    v.order() == 9 && v.is_abelian(g) && v.exponent(g) == 3
}

/// Checks that `E_d` is extraspecial of order 27 and exponent 3, with
/// centre and derived subgroup both equal to `<s_{r-1}>`.
pub fn is_extraspecial_27(g: &Group, e: &Subgroup, gens: &[GroupElement]) -> Result<bool> {
    if e.order() != 27 || e.exponent(g) != 3 {
        return Ok(false);
    }
    let zs = subgroup_closure(g, &[g.z()], 3)?;
    let centre = center_of(g, e, gens);
    let derived = commutator_subgroup(g, e, e)?;
    Ok(centre.same_elements(&zs) && derived.same_elements(&zs))
}

/// `gamma_1(S)` can only be essential if it is abelian of square order and
/// some automorphism centralizes `S / gamma_1(S)` while inverting
/// `gamma_1(S) / gamma_2(S)`, i.e. a valid triple `(1, d, 2)` exists.
pub fn gamma1_essential_possible(g: &Group) -> Result<bool> {
    let params = g.params();
    if !(params.r - 1).is_multiple_of(2) {
        return Ok(false);
    }
    if !valid_triples(&params).iter().any(|&(e, _, f)| e == 1 && f == 2) {
        return Ok(false);
    }
    let r = g.rank();
    // gamma_1 abelian iff its generators commute pairwise.
    let gens: Vec<GroupElement> = (1..r).map(|i| g.gen(i)).collect();
    Ok(gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| g.commute(a, b))))
}

/// Candidates for essential subgroups up to `S`-conjugacy: `V_d` and `E_d`
/// whenever `s s1^d` has order 3, verified structurally, plus
/// `gamma_1(S)` when [`gamma1_essential_possible`].
pub fn essential_candidates(g: &Group) -> Result<Vec<Subgroup>> {
    let row = order3_coset_table(g)?;
    let r = g.rank();
    let mut es = Vec::new();
    let mut vs = Vec::new();
    for d in 0..3u8 {
        if !row.order3[d as usize] {
            continue;
        }
        let e = e_sub(g, d)?;
        if !is_extraspecial_27(g, &e, &[coset_rep(g, d), g.z(), g.gen(r - 2)])? {
            return Err(Error::Inconsistency(alloc::format!(
                "{}: E({d}) is not extraspecial of order 27 and exponent 3",
                g.params()
            )));
        }
        let v = v_sub(g, d)?;
        if !is_elementary_abelian_9(g, &v) {
            return Err(Error::Inconsistency(alloc::format!(
                "{}: V({d}) is not elementary abelian of order 9",
                g.params()
            )));
        }
        es.push(e);
        vs.push(v);
    }
    es.extend(vs);
    if gamma1_essential_possible(g)? {
        es.push(gamma(g, 1)?);
    }
    Ok(es)
}

/// An automorphism inverting both generators of `V_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertingWitness {
    pub target: u8,
    /// First solution in search order.
    pub theta: AutMap,
    /// Order of `theta` in `Aut(S)`.
    pub theta_order: u64,
    /// The power of `theta` of order exactly 2; it still inverts `V_d`.
    pub involution: AutMap,
}

/// `y^(1/2)`, which exists uniquely since `|S|` is odd.
fn square_root(g: &Group, y: &GroupElement) -> GroupElement {
    let n = g.element_order(y);
    g.power(y, n.div_ceil(2) as i64)
}

/// Searches for a valid `theta` with `(s s1^d) theta = (s s1^d)^-1` and
/// `s_{r-1} theta = s_{r-1}^-1`.
///
/// The second condition depends only on `(e, f)`. For each surviving
/// valid triple and each `v` in `gamma_2(S)` (in index order) the first
/// condition determines `s1 theta` uniquely, hence `w`; a solution is
/// accepted when that `w` lies in `gamma_2(S)`.
pub fn inverting_automorphism(g: &Group, target: u8) -> Result<Option<InvertingWitness>> {
    if target > 2 {
        return Err(Error::Precondition(alloc::format!("no subgroup V({target})")));
    }
    let params = g.params();
    let x = coset_rep(g, target);
    let x_inv = g.inverse(&x);
    let g2 = gamma(g, 2)?;
    for (e, d, f) in valid_triples(&params) {
        if z_exponent(&params, e, f) != 2 {
            continue;
        }
        let head = g.multiply(&g.gen_pow(0, e as i64), &g.gen_pow(1, d as i64));
        let s1f_inv = g.gen_pow(1, -(f as i64));
        for v in g2.elements() {
            let t = g.multiply(&head, v);
            let w = match target {
                0 => {
                    if t != x_inv {
                        continue;
                    }
                    g.identity()
                }
                _ => {
                    let y = g.multiply(&g.inverse(&t), &x_inv);
                    let t1 = if target == 1 { y } else { square_root(g, &y) };
                    g.multiply(&s1f_inv, &t1)
                }
            };
            if !w.in_gamma(2) {
                continue;
            }
            let theta = AutMap::new(g, e, d, f, *v, w)?;
            let aut = Automorphism::new(g, theta)?;
            if aut.apply(g, &x) != x_inv || aut.apply(g, &g.z()) != g.inverse(&g.z()) {
                return Err(Error::Inconsistency(alloc::format!(
                    "{params}: solved {theta} does not invert V({target})"
                )));
            }
            let (theta_order, involution) = involution_power(g, &aut)?;
            return Ok(Some(InvertingWitness {
                target,
                theta,
                theta_order,
                involution: *involution.map(),
            }));
        }
    }
    Ok(None)
}

/// Order of `a` and its power of order 2, for `a` of order `2 * 3^k`.
fn involution_power(g: &Group, a: &Automorphism) -> Result<(u64, Automorphism)> {
    let mut three_part = 1u64;
    let mut sq = a.then(g, a)?;
    while !sq.is_identity(g) {
        sq = sq.pow(g, 3)?;
        three_part *= 3;
    }
    let inv = a.pow(g, three_part)?;
    let order = if inv.is_identity(g) { three_part } else { 2 * three_part };
    Ok((order, inv))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSwap {
    pub holds: bool,
    pub maps_checked: usize,
    /// A map failing to send `<s s1> gamma_2(S)` to `<s s1^2> gamma_2(S)`.
    pub counterexample: Option<AutMap>,
}

/// For `B(r;1,0,2)` with `r` odd: every valid `theta` with `e = 2` sends
/// `<s s1> gamma_2(S)` onto `<s s1^2> gamma_2(S)`. Both are unions of three
/// `gamma_2`-cosets, and `gamma_2(S)` is characteristic, so the images of
/// the coset representatives decide the question. Every `(v, w)` is tried.
pub fn coset_swap_check(g: &Group) -> Result<CosetSwap> {
    let params = g.params();
    if params.is_even() || params.triple() != (1, 0, 2) {
        return Err(Error::Precondition(alloc::format!(
            "coset swap applies to B(r;1,0,2) with r odd, got {params}"
        )));
    }
    let coords = |x: &GroupElement| (x.exp(0), x.exp(1));
    let cosets_of = |x: &GroupElement| {
        let mut c = [(0, 0), coords(x), coords(&g.multiply(x, x))];
        c.sort_unstable();
        c
    };
    let wanted = cosets_of(&coset_rep(g, 2));
    let g2 = gamma(g, 2)?;
    let mut checked = 0;
    for (e, d, f) in valid_triples(&params).into_iter().filter(|t| t.0 == 2) {
        let head = g.multiply(&g.gen_pow(0, e as i64), &g.gen_pow(1, d as i64));
        let s1f = g.gen_pow(1, f as i64);
        for v in g2.elements() {
            let t = g.multiply(&head, v);
            for w in g2.elements() {
                checked += 1;
                let image = g.multiply(&t, &g.multiply(&s1f, w));
                if cosets_of(&image) != wanted {
                    return Ok(CosetSwap {
                        holds: false,
                        maps_checked: checked,
                        counterexample: Some(AutMap::new(g, e, d, f, *v, *w)?),
                    });
                }
            }
        }
    }
    Ok(CosetSwap { holds: checked > 0, maps_checked: checked, counterexample: None })
}

/// `[S, theta]` contains `S` modulo `gamma_2(S)`: the closure of
/// `x^-1 (x theta)` for `x` in `{s, s1}` together with `gamma_2(S)` is `S`.
pub fn focal_generation(g: &Group, thetas: &[AutMap]) -> Result<bool> {
    let r = g.rank();
    let mut gens: Vec<GroupElement> = (2..r).map(|i| g.gen(i)).collect();
    for theta in thetas {
        let aut = Automorphism::new(g, *theta)?;
        for x in [g.gen(0), g.gen(1)] {
            gens.push(g.multiply(&g.inverse(&x), &aut.apply(g, &x)));
        }
    }
    // Decided in S / gamma_2(S): the closure is all of S iff the images of
    // the generators span the 2-dimensional quotient.
    let cap = g.order() as usize;
    if r <= crate::consistency::CLOSURE_MAX_RANK {
        return Ok(subgroup_closure(g, &gens, cap)?.order() == cap);
    }
    let span = gens.iter().any(|a| {
        gens.iter().any(|b| (a.exp(0) as i32 * b.exp(1) as i32 - a.exp(1) as i32 * b.exp(0) as i32).rem_euclid(3) != 0)
    });
    Ok(span)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FusionCase {
    /// `B(r;1,0,0)`, `r` even: `V_0` essential, reduced.
    V0Reduced,
    /// `B(r;1,0,0)`, `r` odd: `V_0` essential, `[S, theta]` of index 3.
    V0IndexThree,
    /// `B(r;1,0,2)`, `r` even: only `V_1` essential.
    V1Only,
    /// `B(r;1,0,2)`, `r` even: only `V_2` essential.
    V2Only,
    /// `B(r;1,0,2)`, `r` even: `V_1` and `V_2` both essential.
    V1AndV2,
}

impl FusionCase {
    pub fn label(&self) -> &'static str {
        match self {
            FusionCase::V0Reduced => "V0-reduced",
            FusionCase::V0IndexThree => "V0-index-3",
            FusionCase::V1Only => "V1",
            FusionCase::V2Only => "V2",
            FusionCase::V1AndV2 => "V1+V2",
        }
    }
}

impl fmt::Display for FusionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One saturated fusion system with at least one class of essentials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionVerdict {
    pub case: FusionCase,
    pub essential_classes: Vec<Subgroup>,
    pub aut_on_essential: &'static str,
    pub out_s_order: u32,
    pub reduced: bool,
    pub witnesses: Vec<InvertingWitness>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// `beta = 0`: handled by an existing classification elsewhere;
    /// candidate data attached, no systems listed here.
    Deferred,
    /// No fusion system with essential subgroups.
    Resistant,
    /// The listed systems are all of them.
    Classified,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Deferred => "deferred",
            Outcome::Resistant => "resistant",
            Outcome::Classified => "classified",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub params: GroupParams,
    pub order3_profile: [bool; 3],
    pub candidates: Vec<Subgroup>,
    pub gamma1_essential_possible: bool,
    pub valid_triples: Vec<(u8, u8, u8)>,
    /// The 3'-part of `|Out(S)|`, which bounds `|Out_F(S)|`.
    pub out_f_s_order: u32,
    /// Whether some valid `theta` with `e = 2` centralizes `s_{r-1}`; without
    /// one no `E_d` can be essential.
    pub extraspecial_allowed: bool,
    /// Inverting automorphisms found, per `V_d` candidate.
    pub inverting: Vec<(u8, Option<InvertingWitness>)>,
    /// Present for `B(r;1,0,2)` with `r` odd.
    pub coset_swap: Option<CosetSwap>,
    pub outcome: Outcome,
    pub fusion_systems: Vec<FusionVerdict>,
}

const SATURATION_NOTE: &str =
    "saturation from the amalgam construction in the literature; not machine-verified";

/// Recomputes every supporting fact and assembles the verdicts.
pub fn classify(g: &Group) -> Result<ClassificationReport> {
    let params = g.params();
    params.require_canonical()?;
    let row = order3_coset_table(g)?;
    let candidates = essential_candidates(g)?;
    let gamma1_possible = gamma1_essential_possible(g)?;
    let triples = valid_triples(&params);
    let mut out_f_s_order = triples.len() as u32;
    while out_f_s_order.is_multiple_of(3) {
        out_f_s_order /= 3;
    }
    let extraspecial_allowed = triples
        .iter()
        .any(|&(e, _, f)| e == 2 && z_exponent(&params, e, f) == 1);

    let v_targets: Vec<u8> = candidates
        .iter()
        .filter_map(|c| match c.kind() {
            SubgroupKind::V(d) => Some(d),
            _ => None,
        })
        .collect();

    let mut report = ClassificationReport {
        params,
        order3_profile: row.order3,
        candidates,
        gamma1_essential_possible: gamma1_possible,
        valid_triples: triples,
        out_f_s_order,
        extraspecial_allowed,
        inverting: Vec::new(),
        coset_swap: None,
        outcome: Outcome::Deferred,
        fusion_systems: Vec::new(),
    };
    if params.beta == 0 {
        return Ok(report);
    }
    if params.triple() == (1, 0, 2) && !params.is_even() {
        report.coset_swap = Some(coset_swap_check(g)?);
    }
    for &d in &v_targets {
        report.inverting.push((d, inverting_automorphism(g, d)?));
    }
    let survivors: Vec<&InvertingWitness> =
        report.inverting.iter().filter_map(|(_, w)| w.as_ref()).collect();
    if survivors.is_empty() {
        report.outcome = Outcome::Resistant;
        return Ok(report);
    }
    if report.out_f_s_order != 2 {
        return Err(Error::Inconsistency(alloc::format!(
            "{params}: essential candidates survive but |Out(S)|_3' = {}",
            report.out_f_s_order
        )));
    }

    // Every nonempty subset of the surviving V_d gives one system.
    let n = survivors.len();
    for mask in 1u32..(1 << n) {
        let chosen: Vec<&InvertingWitness> =
            (0..n).filter(|i| mask & (1 << i) != 0).map(|i| survivors[i]).collect();
        let targets: Vec<u8> = chosen.iter().map(|w| w.target).collect();
        let case = match (params.triple(), targets.as_slice(), params.is_even()) {
            ((1, 0, 0), [0], true) => FusionCase::V0Reduced,
            ((1, 0, 0), [0], false) => FusionCase::V0IndexThree,
            ((1, 0, 2), [1], _) => FusionCase::V1Only,
            ((1, 0, 2), [2], _) => FusionCase::V2Only,
            ((1, 0, 2), [1, 2], _) => FusionCase::V1AndV2,
            _ => {
                return Err(Error::Inconsistency(alloc::format!(
                    "{params}: unexpected essential set {targets:?}"
                )))
            }
        };
        let thetas: Vec<AutMap> = chosen.iter().map(|w| w.theta).collect();
        let reduced = focal_generation(g, &thetas)?;
        let mut notes = alloc::vec![String::from(SATURATION_NOTE)];
        if !reduced {
            notes.push(String::from(
                "[S,theta] = <s, gamma_2(S)> has index 3; O^3(F) is a subsystem of index 3 \
                 (identified with a PSL_3(q) fusion system in the literature; not machine-checked)",
            ));
        }
        let essential_classes = targets
            .iter()
            .map(|&d| v_sub(g, d))
            .collect::<Result<Vec<_>>>()?;
        report.fusion_systems.push(FusionVerdict {
            case,
            essential_classes,
            aut_on_essential: "SL2(3)",
            out_s_order: 2,
            reduced,
            witnesses: chosen.into_iter().cloned().collect(),
            notes,
        });
    }
    report.outcome = Outcome::Classified;
    Ok(report)
}
