use maxclass3_core::automorphism::{apply, valid_triples};
use maxclass3_core::fusion::{
    classify, coset_swap_check, essential_candidates, inverting_automorphism, is_elementary_abelian_9,
    is_extraspecial_27, order3_coset_table, FusionCase, Outcome,
};
use maxclass3_core::structure::{coset_rep, e_sub, gamma, v_sub, SubgroupKind};
use maxclass3_core::{Automorphism, Group, GroupParams};

/// Which of `s, s s1, s s1^2` have order 3, as printed in the published
/// coset table (one column per parity).
fn coset_table(even: bool, t: (u8, u8, u8)) -> [bool; 3] {
    const Y: bool = true;
    const N: bool = false;
    match (t, even) {
        ((0, 0, 0), _) => [Y, Y, Y],
        ((0, 1, 0), _) => [Y, N, N],
        ((0, 2, 0), true) => [Y, N, N],
        ((0, 0, 1), _) => [N, N, N],
        ((1, 0, 0), _) => [Y, N, N],
        ((1, 0, 1), _) => [N, N, N],
        ((1, 0, 2), _) => [N, Y, Y],
        _ => unreachable!(),
    }
}

/// Candidate essentials for beta = 1 as printed: `(E0,E1,E2,V0,V1,V2)`.
fn candidate_table(t: (u8, u8, u8)) -> [bool; 6] {
    match t {
        (1, 0, 0) => [true, false, false, true, false, false],
        (1, 0, 1) => [false; 6],
        (1, 0, 2) => [false, true, true, false, true, true],
        _ => unreachable!(),
    }
}

#[test]
fn order3_table_all_rows() {
    for r in 5..=8 {
        for p in GroupParams::canonical(r).unwrap() {
            let g = Group::new(p).unwrap();
            let row = order3_coset_table(&g).unwrap();
            assert_eq!(row.order3, coset_table(p.is_even(), p.triple()), "{p}");
            if r <= 6 {
                assert_eq!(row.coset_uniform, Some(true));
            }
        }
    }
}

#[test]
fn candidate_table_beta_one() {
    for r in 5..=8 {
        for p in GroupParams::canonical(r).unwrap().filter(|p| p.beta == 1) {
            let g = Group::new(p).unwrap();
            let cands = essential_candidates(&g).unwrap();
            let mut got = [false; 6];
            for c in &cands {
                match c.kind() {
                    SubgroupKind::E(d) => got[d as usize] = true,
                    SubgroupKind::V(d) => got[3 + d as usize] = true,
                    k => panic!("{p}: unexpected candidate {k:?}"),
                }
            }
            assert_eq!(got, candidate_table(p.triple()), "{p}");
        }
    }
}

#[test]
fn candidate_shapes_and_intersections() {
    for r in [5, 6] {
        for p in GroupParams::canonical(r).unwrap() {
            let g = Group::new(p).unwrap();
            let g1 = gamma(&g, 1).unwrap();
            for d in 0..3u8 {
                let v = v_sub(&g, d).unwrap();
                let e = e_sub(&g, d).unwrap();
                assert_eq!((v.order(), e.order()), (9, 27));
                assert!(v.intersection(&g1).same_elements(&gamma(&g, r - 1).unwrap()));
                assert!(e.intersection(&g1).same_elements(&gamma(&g, r - 2).unwrap()));
                let order3 = g.element_order(&coset_rep(&g, d)) == 3;
                assert_eq!(is_elementary_abelian_9(&g, &v), order3);
                let gens = [coset_rep(&g, d), g.z(), g.gen(r - 2)];
                assert_eq!(is_extraspecial_27(&g, &e, &gens).unwrap(), order3);
            }
        }
    }
}

#[test]
fn gamma1_candidate_only_for_odd_rank_and_two_rows() {
    for r in 5..=8 {
        for p in GroupParams::canonical(r).unwrap() {
            let g = Group::new(p).unwrap();
            let has = essential_candidates(&g)
                .unwrap()
                .iter()
                .any(|c| c.kind() == SubgroupKind::Gamma(1));
            let expected = r % 2 == 1 && matches!(p.triple(), (0, 0, 0) | (0, 1, 0));
            assert_eq!(has, expected, "{p}");
        }
    }
}

#[test]
fn inverting_witnesses_invert_their_targets() {
    for r in 5..=8 {
        for t in [(1, 0, 0), (1, 0, 2)] {
            let p = GroupParams::new(r, t.0, t.1, t.2).unwrap();
            let g = Group::new(p).unwrap();
            let targets: &[u8] = if t.2 == 0 { &[0] } else { &[1, 2] };
            for &d in targets {
                let found = inverting_automorphism(&g, d).unwrap();
                let expect = t.2 == 0 || r % 2 == 0;
                assert_eq!(found.is_some(), expect, "{p} V{d}");
                if let Some(w) = found {
                    for x in [coset_rep(&g, d), g.z()] {
                        assert_eq!(apply(&g, &w.theta, &x).unwrap(), g.inverse(&x));
                        assert_eq!(apply(&g, &w.involution, &x).unwrap(), g.inverse(&x));
                    }
                    let inv = Automorphism::new(&g, w.involution).unwrap();
                    assert_eq!(inv.order(&g).unwrap(), 2);
                }
            }
        }
    }
}

#[test]
fn coset_swap_for_odd_rank() {
    for r in [5, 7] {
        let g = Group::new(GroupParams::new(r, 1, 0, 2).unwrap()).unwrap();
        assert!(coset_swap_check(&g).unwrap().holds);
    }
    let g = Group::new(GroupParams::new(6, 1, 0, 2).unwrap()).unwrap();
    assert!(coset_swap_check(&g).is_err());
}

#[test]
fn classification_matches_published_cases() {
    for r in 5..=8 {
        for p in GroupParams::canonical(r).unwrap() {
            let g = Group::new(p).unwrap();
            let rep = classify(&g).unwrap();
            let even = r % 2 == 0;
            let cases: Vec<FusionCase> = rep.fusion_systems.iter().map(|v| v.case).collect();
            match p.triple() {
                (0, _, _) => assert_eq!(rep.outcome, Outcome::Deferred),
                (1, 0, 1) => assert_eq!(rep.outcome, Outcome::Resistant),
                (1, 0, 2) if !even => assert_eq!(rep.outcome, Outcome::Resistant),
                (1, 0, 2) => {
                    assert_eq!(cases, [FusionCase::V1Only, FusionCase::V2Only, FusionCase::V1AndV2]);
                    assert!(rep.fusion_systems.iter().all(|v| v.reduced));
                }
                (1, 0, 0) => {
                    let v = &rep.fusion_systems[..];
                    assert_eq!(v.len(), 1);
                    assert_eq!(v[0].reduced, even);
                    assert_eq!(v[0].essential_classes.len(), 1);
                    assert_eq!(v[0].essential_classes[0].kind(), SubgroupKind::V(0));
                }
                _ => unreachable!(),
            }
            for v in &rep.fusion_systems {
                assert_eq!(v.out_s_order, 2);
                assert_eq!(v.aut_on_essential, "SL2(3)");
            }
            if p.beta == 1 {
                assert_eq!(valid_triples(&p).len(), 2);
            }
        }
    }
}

#[test]
fn non_canonical_refused() {
    let g = Group::new(GroupParams::new(5, 2, 0, 0).unwrap()).unwrap();
    assert!(classify(&g).is_err());
}
