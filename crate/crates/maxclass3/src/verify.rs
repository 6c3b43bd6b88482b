//! Invariant suites. Each claim is checked per group and recorded as pass,
//! fail, or inconsistent (two independent computations disagree).
//!
//! Sampled claims draw from a ChaCha stream keyed by the seed and the
//! claim, so selecting a different set of suites does not change samples.

use std::collections::HashSet;
use std::fmt;

use maxclass3_core::automorphism::{
    all_triples, checked_validity, count_automorphisms, valid_triples, z_exponent,
};
use maxclass3_core::consistency::{check_consistency, CLOSURE_MAX_RANK};
use maxclass3_core::fusion::{
    classify, coset_swap_check, essential_candidates, inverting_automorphism,
    is_elementary_abelian_9, is_extraspecial_27, order3_coset_table, COSET_SCAN_RANK,
};
use maxclass3_core::ops::closure;
use maxclass3_core::structure::{
    center, center_of, centralizer, commutator_subgroup, conjugacy_class, coset, coset_rep, e_sub,
    gamma, is_characteristic_gamma1, omega, subgroup_closure, two_generators, v_sub, SubgroupKind,
    DEFAULT_SCAN_LIMIT,
};
use maxclass3_core::{AutMap, Automorphism, Group, GroupElement, GroupOps, GroupParams, MulTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::published;
use crate::report::{ClaimDoc, Status, VerifyDoc};

pub const DEFAULT_SEED: u64 = 0x3_5eed;
/// Highest rank the suites accept; several claims scan the whole group.
pub const MAX_VERIFY_RANK: usize = DEFAULT_SCAN_LIMIT;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Core,
    Structure,
    Aut,
    Fusion,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Core, Suite::Structure, Suite::Aut, Suite::Fusion];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Structure => "structure",
            Suite::Aut => "aut",
            Suite::Fusion => "fusion",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub suite: Suite,
    pub group: GroupParams,
    pub claim: &'static str,
    pub status: Status,
    pub witness: Option<String>,
}

impl Claim {
    pub fn doc(&self) -> ClaimDoc {
        ClaimDoc {
            suite: self.suite.to_string(),
            group: self.group.to_string(),
            claim: self.claim.to_string(),
            status: self.status,
            witness: self.witness.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub suites: Vec<Suite>,
    pub rmin: usize,
    pub rmax: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { suites: Suite::ALL.to_vec(), rmin: 5, rmax: 6, seed: DEFAULT_SEED }
    }
}

/// Why a claim did not pass.
#[derive(Debug)]
pub enum Failure {
    Fail(String),
    Inconsistent(String),
}

impl From<maxclass3_core::Error> for Failure {
    fn from(e: maxclass3_core::Error) -> Self {
        match e {
            maxclass3_core::Error::Inconsistency(msg) => Failure::Inconsistent(msg),
            other => Failure::Fail(other.to_string()),
        }
    }
}

type Check = Result<(), Failure>;

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(Failure::Fail(witness()))
    }
}

/// Runs the selected suites over every canonical group with
/// `rmin <= r <= rmax`. Results are ordered by suite, rank, parameters,
/// then claim.
pub fn run(opts: &Options) -> Result<Vec<Claim>, maxclass3_core::Error> {
    if opts.rmax > MAX_VERIFY_RANK {
        return Err(maxclass3_core::Error::ScanLimitExceeded {
            rank: opts.rmax,
            limit: MAX_VERIFY_RANK,
        });
    }
    let mut suites = opts.suites.clone();
    suites.sort();
    suites.dedup();
    let mut out = Vec::new();
    for suite in suites {
        for r in opts.rmin.max(5)..=opts.rmax {
            for p in GroupParams::canonical(r)? {
                let g = Group::new(p)?;
                let mut ctx = Ctx { g: &g, p, suite, seed: opts.seed, out: &mut out };
                match suite {
                    Suite::Core => core_suite(&mut ctx),
                    Suite::Structure => structure_suite(&mut ctx),
                    Suite::Aut => aut_suite(&mut ctx),
                    Suite::Fusion => fusion_suite(&mut ctx),
                }
            }
        }
    }
    Ok(out)
}

/// Packs results for JSON output.
pub fn summary(claims: &[Claim]) -> VerifyDoc {
    let results: Vec<ClaimDoc> = claims.iter().map(Claim::doc).collect();
    let failures: Vec<ClaimDoc> =
        results.iter().filter(|c| c.status != Status::Pass).cloned().collect();
    VerifyDoc { passed: failures.is_empty(), claims: results.len(), results, failures }
}

struct Ctx<'a> {
    g: &'a Group,
    p: GroupParams,
    suite: Suite,
    seed: u64,
    out: &'a mut Vec<Claim>,
}

impl Ctx<'_> {
    fn record(&mut self, claim: &'static str, check: Check) {
        let (status, witness) = match check {
            Ok(()) => (Status::Pass, None),
            Err(Failure::Fail(w)) => (Status::Fail, Some(w)),
            Err(Failure::Inconsistent(w)) => (Status::Inconsistent, Some(w)),
        };
        self.out.push(Claim { suite: self.suite, group: self.p, claim, status, witness });
    }

    fn rng(&self, claim: &str) -> ChaCha8Rng {
        let tag = claim
            .bytes()
            .chain(self.p.to_string().bytes())
            .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(tag);
        rng
    }

    fn random_element(&self, rng: &mut ChaCha8Rng) -> GroupElement {
        self.g.element_at(rng.gen_range(0..self.g.order()))
    }

    fn random_gamma2(&self, rng: &mut ChaCha8Rng) -> GroupElement {
        self.g.element_at(rng.gen_range(0..self.g.order() / 9))
    }
}

const SAMPLE: usize = 500;

fn core_suite(cx: &mut Ctx) {
    let g = cx.g;
    let r = g.rank();
    match check_consistency(cx.p) {
        Ok(rep) => {
            cx.record(
                "rewrite system passes every generator-triple associativity check",
                ensure(rep.associativity_failures.is_empty(), || {
                    format!("{:?}", rep.associativity_failures[0])
                }),
            );
            let failed = rep.relations.iter().find(|c| !c.holds);
            cx.record(
                "every defining and completion relation holds on the generators",
                ensure(failed.is_none(), || failed.unwrap().relation.to_string()),
            );
            if r <= CLOSURE_MAX_RANK {
                cx.record(
                    "closure of {s, s1} has exactly 3^r elements",
                    ensure(rep.closure_order == Some(g.order()), || {
                        format!("closure has {:?} elements", rep.closure_order)
                    }),
                );
            }
        }
        Err(e) => cx.record("rewrite system passes every generator-triple associativity check", Err(e.into())),
    }

    if r == 5 {
        cx.record("multiplication is associative on all triples", exhaustive_associativity(g));
        cx.record("inverse is an involution on all elements", inverse_check(g, g.elements()));
        cx.record("x^3 equals the collected cube word on all elements", cube_word_check(g, g.elements()));
    } else {
        let mut rng = cx.rng("assoc");
        let triples: Vec<_> = (0..SAMPLE)
            .map(|_| (cx.random_element(&mut rng), cx.random_element(&mut rng), cx.random_element(&mut rng)))
            .collect();
        let bad = triples.iter().find(|(a, b, c)| {
            g.multiply(&g.multiply(a, b), c) != g.multiply(a, &g.multiply(b, c))
        });
        cx.record(
            "multiplication is associative on sampled triples",
            ensure(bad.is_none(), || format!("{:?}", bad.unwrap())),
        );
        let mut rng = cx.rng("inverse");
        let sample: Vec<_> = (0..SAMPLE).map(|_| cx.random_element(&mut rng)).collect();
        cx.record("inverse is an involution on sampled elements", inverse_check(g, sample.iter().copied()));
        cx.record(
            "x^3 equals the collected cube word on sampled elements",
            cube_word_check(g, sample.into_iter()),
        );
    }

    let mut rng = cx.rng("power");
    let bad = (0..200).find_map(|_| {
        let x = cx.random_element(&mut rng);
        let (m, n) = (rng.gen_range(-30..30), rng.gen_range(-30..30));
        (g.multiply(&g.power(&x, m), &g.power(&x, n)) != g.power(&x, m + n)).then_some((x, m, n))
    });
    cx.record(
        "x^m x^n = x^(m+n) on sampled elements",
        ensure(bad.is_none(), || format!("{:?}", bad.unwrap())),
    );
}

fn exhaustive_associativity(g: &Group) -> Check {
    let t = MulTable::new(g)?;
    let n = t.len() as u16;
    for a in 0..n {
        for b in 0..n {
            let ab = t.mul(&a, &b);
            for c in 0..n {
                if t.mul(&ab, &c) != t.mul(&a, &t.mul(&b, &c)) {
                    return Err(Failure::Fail(format!(
                        "{} {} {}",
                        t.to_element(&a),
                        t.to_element(&b),
                        t.to_element(&c)
                    )));
                }
            }
        }
    }
    Ok(())
}

fn inverse_check(g: &Group, xs: impl Iterator<Item = GroupElement>) -> Check {
    for x in xs {
        let y = g.inverse(&x);
        ensure(g.multiply(&x, &y).is_identity() && g.inverse(&y) == x, || x.to_string())?;
    }
    Ok(())
}

fn cube_word_check(g: &Group, xs: impl Iterator<Item = GroupElement>) -> Check {
    for x in xs {
        let letters: Vec<(usize, u8)> = x.exponents().iter().copied().enumerate().collect();
        let word: Vec<(usize, u8)> = letters.iter().chain(&letters).chain(&letters).copied().collect();
        ensure(g.power(&x, 3) == g.collect_word(&word), || x.to_string())?;
    }
    Ok(())
}

fn structure_suite(cx: &mut Ctx) {
    let g = cx.g;
    let r = g.rank();
    cx.record("gamma series descends with index 3 at every step", gamma_chain(g));
    if r <= 6 {
        cx.record("gamma(i) equals the brute-force commutator [gamma(i-1), S]", gamma_commutators(g));
    }
    cx.record("Z(S) = gamma(r-1) and has order 3", (|| {
        let z = center(g)?;
        ensure(z.order() == 3 && z.same_elements(&gamma(g, r - 1)?), || z.to_string())
    })());
    if r <= 6 {
        let (cent, class) = outer_elements(g);
        cx.record("every x outside gamma(1) has C_S(x) = <x, s_{r-1}> of order 9", cent);
        cx.record("every x outside gamma(1) has conjugacy class x gamma(2)", class);
    }
    if r <= 7 {
        cx.record("Omega_1(gamma(1)) = <s_{r-2}, s_{r-1}>", (|| {
            let o = omega(g, 1, &gamma(g, 1)?)?;
            let expected = subgroup_closure(g, &[g.gen(r - 2), g.gen(r - 1)], 9)?;
            ensure(o.same_elements(&expected), || format!("order {}", o.order()))
        })());
        cx.record("Omega_2(gamma(1)) has order at most 3^4", (|| {
            let o = omega(g, 2, &gamma(g, 1)?)?;
            ensure(o.order() <= 81, || format!("order {}", o.order()))
        })());
    }
    if r <= 6 {
        cx.record(
            "gamma(1) is abelian if beta = 0, else Z(gamma(1)) = gamma(3) and gamma(1)' = gamma(r-1)",
            gamma1_structure(g),
        );
    }
    cx.record("C_S(gamma(r-2)) = gamma(1)", (|| {
        let c = is_characteristic_gamma1(g)?;
        ensure(c.holds, || format!("{:?}", c.witness))
    })());
    if r == 5 {
        let mut rng = cx.rng("two-gen");
        cx.record("3-generated subgroups of gamma(1) are 2-generated (200 samples)", (|| {
            let t = MulTable::new(g)?;
            let n1 = (g.order() / 3) as u16;
            for _ in 0..200 {
                let xs: Vec<u16> = (0..3).map(|_| rng.gen_range(0..n1)).collect();
                let h = closure(&t, &xs, n1 as usize)?;
                ensure(two_generators(&t, &h).is_some(), || {
                    xs.iter().map(|x| t.to_element(x).to_string()).collect::<Vec<_>>().join(" ")
                })?;
            }
            Ok(())
        })());
    }
}

fn gamma_chain(g: &Group) -> Check {
    let r = g.rank();
    let mut prev = gamma(g, 1)?;
    ensure(prev.order() as u64 * 3 == g.order(), || "gamma(1)".into())?;
    for i in 2..r {
        let next = gamma(g, i)?;
        ensure(next.is_subset_of(&prev) && next.order() * 3 == prev.order(), || {
            format!("gamma({i}) has order {}", next.order())
        })?;
        prev = next;
    }
    Ok(())
}

fn gamma_commutators(g: &Group) -> Check {
    let whole = subgroup_closure(g, &[g.gen(0), g.gen(1)], g.order() as usize)?;
    for i in 2..g.rank() {
        let brute = commutator_subgroup(g, &gamma(g, i - 1)?, &whole)?;
        ensure(brute.same_elements(&gamma(g, i)?), || format!("i = {i}"))?;
    }
    Ok(())
}

fn outer_elements(g: &Group) -> (Check, Check) {
    let inner = || -> Result<(Check, Check), Failure> {
        let g2 = gamma(g, 2)?;
        let mut cent = Ok(());
        let mut class = Ok(());
        for x in g.elements().filter(|x| x.exp(0) != 0) {
            if cent.is_ok() {
                let c = centralizer(g, &x)?;
                let hull = subgroup_closure(g, &[x, g.z()], g.order() as usize)?;
                cent = ensure(c.order() == 9 && c.same_elements(&hull), || x.to_string());
            }
            if class.is_ok() {
                class = ensure(conjugacy_class(g, &x) == coset(g, &x, &g2), || x.to_string());
            }
        }
        Ok((cent, class))
    };
    match inner() {
        Ok(pair) => pair,
        Err(Failure::Fail(w)) => (Err(Failure::Fail(w.clone())), Err(Failure::Fail(w))),
        Err(Failure::Inconsistent(w)) => {
            (Err(Failure::Inconsistent(w.clone())), Err(Failure::Inconsistent(w)))
        }
    }
}

fn gamma1_structure(g: &Group) -> Check {
    let r = g.rank();
    let g1 = gamma(g, 1)?;
    if g.params().beta == 0 {
        return ensure(g1.is_abelian(g), || "gamma(1) is not abelian".into());
    }
    let gens: Vec<GroupElement> = (1..r).map(|i| g.gen(i)).collect();
    let z = center_of(g, &g1, &gens);
    ensure(z.same_elements(&gamma(g, 3)?), || format!("Z(gamma(1)) has order {}", z.order()))?;
    let derived = commutator_subgroup(g, &g1, &g1)?;
    ensure(derived.same_elements(&gamma(g, r - 1)?), || {
        format!("gamma(1)' has order {}", derived.order())
    })
}

fn aut_suite(cx: &mut Ctx) {
    let g = cx.g;
    let p = cx.p;
    let r = g.rank();
    let (expected, order) = published::automorphism_triples(r, p.triple());
    let mut got = valid_triples(&p);
    got.sort();
    cx.record(
        "valid (e,d,f) triples match the published automorphism group",
        ensure(got == expected, || format!("got {got:?}, published {expected:?}")),
    );
    cx.record("|Aut(S)| matches the published order", (|| {
        let n = count_automorphisms(&p)?;
        ensure(n == order, || format!("got {n}, published {order}"))
    })());

    let (agree_claim, pairs) = match r {
        5 => ("congruences agree with the relation oracle on every (e,d,f,v,w)", None),
        6 => ("congruences agree with the relation oracle on 50 sampled (v,w) per triple", Some(50)),
        _ => ("congruences agree with the relation oracle on 10 sampled (v,w) per triple", Some(10)),
    };
    let mut rng = cx.rng("equivalence");
    let sweep = if r <= 6 {
        MulTable::new(g).map_err(Failure::from).and_then(|t| oracle_sweep(cx, &t, pairs, &mut rng))
    } else {
        oracle_sweep(cx, g, pairs, &mut rng)
    };
    let (agree, action) = match sweep {
        Ok(pair) => pair,
        Err(f) => (Err(f), Ok(())),
    };
    cx.record(agree_claim, agree);
    cx.record("valid maps send s_{r-1} to s_{r-1}^(e^(r-2) f)", action);

    if r <= 6 {
        let mut rng = cx.rng("homomorphism");
        cx.record("sampled valid maps are bijective homomorphisms", homomorphism_check(cx, &mut rng));
        let mut rng = cx.rng("composition");
        cx.record("composites of valid maps are again valid maps", composition_check(cx, &mut rng));
        let mut rng = cx.rng("faithful");
        cx.record("(e,d,f,v,w) is recovered from the images of s and s1", faithful_check(cx, &mut rng));
        identities(cx);
    }
}

fn lift_gamma2<G: GroupOps>(g: &G, x: &GroupElement) -> G::Elem {
    g.from_element(x)
}

/// Compares the two validity tests over all triples and the requested
/// `(v, w)`; returns the agreement check and the action-on-`s_{r-1}` check
/// for every valid map seen.
fn oracle_sweep<G: GroupOps>(
    cx: &Ctx,
    ops: &G,
    pairs: Option<usize>,
    rng: &mut ChaCha8Rng,
) -> Result<(Check, Check), Failure> {
    let g = cx.g;
    let p = cx.p;
    let r = g.rank();
    let gamma2: Vec<GroupElement> = g.elements().take((g.order() / 9) as usize).collect();
    let vw: Vec<(GroupElement, GroupElement)> = match pairs {
        None => gamma2.iter().flat_map(|v| gamma2.iter().map(move |w| (*v, *w))).collect(),
        Some(n) => (0..n).map(|_| (cx.random_gamma2(rng), cx.random_gamma2(rng))).collect(),
    };
    let mut action = Ok(());
    for (e, d, f) in all_triples() {
        for (v, w) in &vw {
            let theta = AutMap::new(g, e, d, f, *v, *w)?;
            match checked_validity(ops, &p, &theta) {
                Ok(true) if action.is_ok() => {
                    let img = theta.generator_images(ops)[r - 1];
                    let want = ops.pow(&lift_gamma2(ops, &g.z()), z_exponent(&p, e, f) as u64);
                    action = ensure(img == want, || theta.to_string());
                }
                Ok(_) => {}
                Err(e) => return Ok((Err(e.into()), action)),
            }
        }
    }
    Ok((Ok(()), action))
}

fn random_valid(cx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Automorphism, Failure> {
    let triples = valid_triples(&cx.p);
    let (e, d, f) = triples[rng.gen_range(0..triples.len())];
    let map = AutMap::new(cx.g, e, d, f, cx.random_gamma2(rng), cx.random_gamma2(rng))?;
    Ok(Automorphism::new(cx.g, map)?)
}

fn homomorphism_check(cx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let g = cx.g;
    for _ in 0..10 {
        let a = random_valid(cx, rng)?;
        for _ in 0..30 {
            let (x, y) = (cx.random_element(rng), cx.random_element(rng));
            ensure(a.apply(g, &g.multiply(&x, &y)) == g.multiply(&a.apply(g, &x), &a.apply(g, &y)), || {
                format!("{} on {x}, {y}", a.map())
            })?;
        }
        let images: HashSet<GroupElement> = g.elements().map(|x| a.apply(g, &x)).collect();
        ensure(images.len() as u64 == g.order(), || format!("{} is not injective", a.map()))?;
    }
    Ok(())
}

fn composition_check(cx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let g = cx.g;
    for _ in 0..20 {
        let a = random_valid(cx, rng)?;
        let b = random_valid(cx, rng)?;
        let c = a.then(g, &b)?;
        for _ in 0..10 {
            let x = cx.random_element(rng);
            ensure(c.apply(g, &x) == b.apply(g, &a.apply(g, &x)), || {
                format!("{} then {} at {x}", a.map(), b.map())
            })?;
        }
    }
    Ok(())
}

fn faithful_check(cx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let g = cx.g;
    for _ in 0..50 {
        let a = random_valid(cx, rng)?;
        let back = AutMap::from_images(g, &a.images()[0], &a.images()[1])?;
        ensure(&back == a.map(), || format!("{} read back as {back}", a.map()))?;
    }
    Ok(())
}

/// `[x, y, z] = [[x, y], z]`.
fn comm3(g: &Group, x: &GroupElement, y: &GroupElement, z: &GroupElement) -> GroupElement {
    g.commutator(&g.commutator(x, y), z)
}

fn identities(cx: &mut Ctx) {
    let g = cx.g;
    let p = cx.p;
    let top = |k: i64| g.gen_pow(p.r - 1, k.rem_euclid(3));
    let (b, c, dl) = (p.beta as i64, p.gamma as i64, p.delta as i64);

    cx.record("w^3 [w,t]^3 [w,t,t] = 1 for all w in gamma(2), t in {s, s^2}", (|| {
        let s = g.gen(0);
        let s2 = g.power(&s, 2);
        for w in g.elements().filter(|x| x.in_gamma(2)) {
            for t in [&s, &s2] {
                let lhs = g.multiply(&g.multiply(&g.cube(&w), &g.cube(&g.commutator(&w, t))), &comm3(g, &w, t, t));
                ensure(lhs.is_identity(), || format!("w = {w}"))?;
            }
        }
        Ok(())
    })());

    cx.record("[[s1^f, s^e], s1^d] = s_{r-1}^(2 d e f beta)", (|| {
        for (e, d, f) in all_triples() {
            let (e, d, f) = (e as i64, d as i64, f as i64);
            let lhs = comm3(g, &g.gen_pow(1, f), &g.gen_pow(0, e), &g.gen_pow(1, d));
            ensure(lhs == top(2 * d * e * f * b), || format!("e={e} d={d} f={f}"))?;
        }
        Ok(())
    })());

    cx.record("(s1^f)^3 [s1^f, s^e]^3 [s1^f, s^e, s^e] = s_{r-1}^(f gamma)", (|| {
        for e in 1..=2 {
            for f in 1..=2 {
                let (x, y) = (g.gen_pow(1, f), g.gen_pow(0, e));
                let lhs = g.multiply(&g.multiply(&g.cube(&x), &g.cube(&g.commutator(&x, &y))), &comm3(g, &x, &y, &y));
                ensure(lhs == top(f * c), || format!("e={e} f={f}"))?;
            }
        }
        Ok(())
    })());

    cx.record("(s^e s1^d)^3 = s_{r-1}^(e(d^2 beta + delta) + d gamma)", (|| {
        for e in 1..=2 {
            for d in 0..3 {
                let x = g.multiply(&g.gen_pow(0, e), &g.gen_pow(1, d));
                ensure(g.cube(&x) == top(e * (d * d * b + dl) + d * c), || format!("e={e} d={d}"))?;
            }
        }
        Ok(())
    })());
}

fn fusion_suite(cx: &mut Ctx) {
    let g = cx.g;
    let p = cx.p;
    let r = g.rank();
    let published_row = published::order3_row(p.is_even(), p.triple());
    let row = order3_coset_table(g);
    cx.record("order-3 cosets s s1^d gamma(2) match the published table", match &row {
        Ok(row) => ensure(row.order3 == published_row, || {
            format!("engine {:?}, published {published_row:?}", row.order3)
        }),
        Err(e) => Err(e.clone().into()),
    });
    if r <= COSET_SCAN_RANK {
        cx.record("every element of s s1^d gamma(2) has the order of s s1^d", match &row {
            Ok(row) => ensure(row.coset_uniform == Some(true), || format!("{:?}", row.coset_uniform)),
            Err(e) => Err(e.clone().into()),
        });
        cx.record("V_d and E_d have exponent 3 exactly when s s1^d has order 3", candidate_shapes(g));
        cx.record("V_d meets gamma(1) in gamma(r-1) and E_d meets it in gamma(r-2)", intersections(g));
    }

    let cands = essential_candidates(g);
    cx.record("gamma(1) is a candidate only for r odd and (beta,gamma,delta) in {(0,0,0),(0,1,0)}", match &cands {
        Ok(c) => {
            let has = c.iter().any(|h| h.kind() == SubgroupKind::Gamma(1));
            let want = r % 2 == 1 && matches!(p.triple(), (0, 0, 0) | (0, 1, 0));
            ensure(has == want, || format!("listed: {has}"))
        }
        Err(e) => Err(e.clone().into()),
    });
    if p.beta == 1 {
        let want = published::candidate_row(p.triple());
        cx.record("essential candidates match the published table", match &cands {
            Ok(c) => {
                let mut got = [false; 6];
                let mut extra = None;
                for h in c {
                    match h.kind() {
                        SubgroupKind::E(d) => got[d as usize] = true,
                        SubgroupKind::V(d) => got[3 + d as usize] = true,
                        _ => extra = Some(h.to_string()),
                    }
                }
                ensure(got == want && extra.is_none(), || format!("engine {got:?} {extra:?}"))
            }
            Err(e) => Err(e.clone().into()),
        });
        cx.record("exactly two valid triples, so |Out_F(S)| <= 2", {
            let n = valid_triples(&p).len();
            ensure(n == 2, || format!("{n} valid triples"))
        });
        if p.triple() != (1, 0, 1) {
            cx.record("an inverting automorphism of V_d exists exactly as published", inverting(g));
        }
        if p.triple() == (1, 0, 2) && r % 2 == 1 {
            cx.record("every valid map with e = 2 swaps <s s1> gamma(2) and <s s1^2> gamma(2)", (|| {
                let swap = coset_swap_check(g)?;
                ensure(swap.holds, || format!("{:?}", swap.counterexample))
            })());
        }
    }
    cx.record("classification matches the published list of fusion systems", classification(g));
}

fn candidate_shapes(g: &Group) -> Check {
    let r = g.rank();
    for d in 0..3u8 {
        let x = coset_rep(g, d);
        let order3 = g.element_order(&x) == 3;
        let v = v_sub(g, d)?;
        let e = e_sub(g, d)?;
        ensure(v.order() == 9 && e.order() == 27, || format!("d = {d}"))?;
        ensure(is_elementary_abelian_9(g, &v) == order3, || format!("V({d})"))?;
        let extraspecial = is_extraspecial_27(g, &e, &[x, g.z(), g.gen(r - 2)])?;
        ensure(extraspecial == order3, || format!("E({d})"))?;
    }
    Ok(())
}

fn intersections(g: &Group) -> Check {
    let r = g.rank();
    let g1 = gamma(g, 1)?;
    for d in 0..3u8 {
        let v = v_sub(g, d)?.intersection(&g1);
        let e = e_sub(g, d)?.intersection(&g1);
        ensure(v.same_elements(&gamma(g, r - 1)?), || format!("V({d}) meets gamma(1) in {v}"))?;
        ensure(e.same_elements(&gamma(g, r - 2)?), || format!("E({d}) meets gamma(1) in {e}"))?;
    }
    Ok(())
}

fn inverting(g: &Group) -> Check {
    let p = g.params();
    let targets: &[u8] = if p.delta == 0 { &[0] } else { &[1, 2] };
    let expect = p.delta == 0 || p.is_even();
    for &d in targets {
        let found = inverting_automorphism(g, d)?;
        ensure(found.is_some() == expect, || format!("V({d}): found {}", found.is_some()))?;
        if let Some(w) = found {
            let theta = Automorphism::new(g, w.theta)?;
            let inv = Automorphism::new(g, w.involution)?;
            for x in [coset_rep(g, d), g.z()] {
                ensure(theta.apply(g, &x) == g.inverse(&x), || format!("{} on {x}", w.theta))?;
                ensure(inv.apply(g, &x) == g.inverse(&x), || format!("{} on {x}", w.involution))?;
            }
            let n = inv.order(g)?;
            ensure(n == 2, || format!("{} has order {n}", w.involution))?;
        }
    }
    Ok(())
}

fn classification(g: &Group) -> Check {
    let p = g.params();
    let rep = classify(g)?;
    let (outcome, systems) = published::classification(p.r, p.triple());
    ensure(rep.outcome == outcome, || format!("outcome {}", rep.outcome))?;
    let got: Vec<_> = rep.fusion_systems.iter().map(|v| (v.case, v.reduced)).collect();
    ensure(got == systems, || format!("systems {got:?}"))?;
    for v in &rep.fusion_systems {
        ensure(v.out_s_order == 2 && v.aut_on_essential == "SL2(3)", || v.case.to_string())?;
        for w in &v.witnesses {
            let x = coset_rep(g, w.target);
            let img = Automorphism::new(g, w.involution)?.apply(g, &x);
            ensure(img == g.inverse(&x), || w.involution.to_string())?;
        }
    }
    Ok(())
}
