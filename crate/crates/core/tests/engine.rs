use maxclass3_core::consistency::{check_consistency, relation_holds, Relation};
use maxclass3_core::ops::closure;
use maxclass3_core::{Group, GroupElement, GroupParams};
use proptest::prelude::*;

fn group(r: usize, b: u8, c: u8, d: u8) -> Group {
    Group::new(GroupParams::new(r, b, c, d).unwrap()).unwrap()
}

/// Expands a normal form into its letters, for re-collecting from scratch.
fn letters(x: &GroupElement) -> Vec<(usize, u8)> {
    x.exponents().iter().enumerate().map(|(i, &a)| (i, a)).collect()
}

#[test]
fn consistency_all_canonical_up_to_rank_8() {
    for r in 5..=8 {
        for p in GroupParams::canonical(r).unwrap() {
            let rep = check_consistency(p).unwrap();
            assert!(rep.passed(), "{p}: {:?}", rep.associativity_failures.first());
            assert!(rep.relations.iter().all(|c| c.holds));
            assert_eq!(rep.closure_order, Some(p.order()));
        }
    }
}

#[test]
fn non_canonical_triples_are_still_groups() {
    for (b, c, d) in [(2, 0, 0), (1, 1, 1), (0, 2, 2), (2, 2, 2)] {
        let p = GroupParams::new(5, b, c, d).unwrap();
        assert!(!p.is_canonical());
        assert!(check_consistency(p).unwrap().passed(), "{p}");
    }
}

#[test]
fn every_relation_instance_holds_verbatim() {
    for r in 5..=8 {
        for p in GroupParams::canonical(r).unwrap() {
            let g = Group::new(p).unwrap();
            let gens: Vec<_> = (0..r).map(|i| g.gen(i)).collect();
            for rel in Relation::instances(r) {
                assert!(relation_holds(&g, &p, &gens, rel), "{p}: {rel}");
            }
        }
    }
}

#[test]
fn closure_from_s_and_s1() {
    for r in [5, 6] {
        for p in GroupParams::canonical(r).unwrap() {
            let g = Group::new(p).unwrap();
            let all = closure(&g, &[g.gen(0), g.gen(1)], g.order() as usize).unwrap();
            assert_eq!(all.len() as u64, 3u64.pow(r as u32));
        }
    }
}

#[test]
fn associativity_on_generator_triples() {
    let g = group(5, 1, 0, 2);
    let gens: Vec<_> = (0..5).map(|i| g.gen(i)).collect();
    for a in &gens {
        for b in &gens {
            for c in &gens {
                assert_eq!(
                    g.multiply(&g.multiply(a, b), c),
                    g.multiply(a, &g.multiply(b, c))
                );
            }
        }
    }
}

#[test]
fn inverse_is_an_involution_exhaustive() {
    for p in GroupParams::canonical(5).unwrap() {
        let g = Group::new(p).unwrap();
        for x in g.elements() {
            let xi = g.inverse(&x);
            assert!(g.multiply(&x, &xi).is_identity());
            assert!(g.multiply(&xi, &x).is_identity());
            assert_eq!(g.inverse(&xi), x);
        }
    }
}

#[test]
fn cube_by_multiplication_matches_collected_cube_word() {
    for p in GroupParams::canonical(5).unwrap() {
        let g = Group::new(p).unwrap();
        for x in g.elements() {
            let mut word = letters(&x);
            word.extend(letters(&x));
            word.extend(letters(&x));
            assert_eq!(g.power(&x, 3), g.collect_word(&word), "{p} {x}");
            assert_eq!(g.cube(&x), g.power(&x, 3));
        }
    }
}

#[test]
fn element_orders_are_powers_of_three() {
    let g = group(6, 1, 0, 2);
    for x in g.elements().step_by(11) {
        let n = g.element_order(&x);
        assert!(is_power_of_three(n));
        assert!(g.power(&x, n as i64).is_identity());
        if n > 1 {
            assert!(!g.power(&x, (n / 3) as i64).is_identity());
        }
    }
}

fn is_power_of_three(mut n: u64) -> bool {
    while n.is_multiple_of(3) && n > 1 {
        n /= 3;
    }
    n == 1
}

#[test]
fn spec_products() {
    let g = group(5, 1, 0, 0);
    let v = |e: &[u8]| g.element(e).unwrap();
    assert_eq!(g.multiply(&g.gen(1), &g.gen(0)), v(&[1, 1, 1, 0, 0]));
    assert_eq!(g.multiply(&g.gen(2), &g.gen(1)), v(&[0, 1, 1, 0, 2]));
    // the same products assembled from their claimed normal forms
    let rhs = g.collect_word(&[(1, 1), (2, 1), (4, 2)]);
    assert_eq!(rhs, v(&[0, 1, 1, 0, 2]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn associativity_random_rank5(a in 0u64..243, b in 0u64..243, c in 0u64..243, k in 0usize..6) {
        let p = GroupParams::canonical(5).unwrap().nth(k).unwrap();
        let g = Group::new(p).unwrap();
        let (x, y, z) = (g.element_at(a), g.element_at(b), g.element_at(c));
        prop_assert_eq!(g.multiply(&g.multiply(&x, &y), &z), g.multiply(&x, &g.multiply(&y, &z)));
    }

    #[test]
    fn power_laws_rank7(a in 0u64..2187, m in -20i64..20, n in -20i64..20) {
        let g = group(7, 1, 0, 2);
        let x = g.element_at(a);
        prop_assert_eq!(g.multiply(&g.power(&x, m), &g.power(&x, n)), g.power(&x, m + n));
    }

    #[test]
    fn commutator_definition(a in 0u64..729, b in 0u64..729) {
        let g = group(6, 1, 0, 0);
        let (x, y) = (g.element_at(a), g.element_at(b));
        let c = g.commutator(&x, &y);
        // x y = y x [x, y]
        prop_assert_eq!(g.multiply(&x, &y), g.multiply(&g.multiply(&y, &x), &c));
    }
}
