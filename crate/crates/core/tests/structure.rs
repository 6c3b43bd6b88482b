use maxclass3_core::ops::closure;
use maxclass3_core::structure::{
    center, center_of, centralizer, commutator_subgroup, conjugacy_class, coset, gamma,
    is_characteristic_gamma1, omega, subgroup_closure, two_generators,
};
use maxclass3_core::{Group, GroupElement, GroupOps, GroupParams, MulTable};
use proptest::prelude::*;

fn groups(r: usize) -> Vec<Group> {
    GroupParams::canonical(r).unwrap().map(|p| Group::new(p).unwrap()).collect()
}

#[test]
fn gamma_chain_descends_by_index_three() {
    for r in 5..=8 {
        for g in groups(r) {
            let mut prev = gamma(&g, 1).unwrap();
            assert_eq!(prev.order() as u64, g.order() / 3);
            for i in 2..r {
                let next = gamma(&g, i).unwrap();
                assert!(next.is_subset_of(&prev));
                assert_eq!(next.order() * 3, prev.order(), "{} i={i}", g.params());
                prev = next;
            }
        }
    }
}

#[test]
fn gamma_is_the_lower_central_series() {
    for r in [5, 6] {
        for g in groups(r) {
            let whole = subgroup_closure(&g, &[g.gen(0), g.gen(1)], g.order() as usize).unwrap();
            for i in 2..r {
                let prev = gamma(&g, i - 1).unwrap();
                let brute = commutator_subgroup(&g, &prev, &whole).unwrap();
                assert!(brute.same_elements(&gamma(&g, i).unwrap()), "{} i={i}", g.params());
            }
        }
    }
}

#[test]
fn center_is_last_term() {
    for r in 5..=8 {
        for g in groups(r) {
            let z = center(&g).unwrap();
            assert_eq!(z.order(), 3);
            assert!(z.same_elements(&gamma(&g, r - 1).unwrap()));
        }
    }
}

#[test]
fn elements_outside_gamma1_rank5() {
    for g in groups(5) {
        let g2 = gamma(&g, 2).unwrap();
        let mut outside = 0;
        for x in g.elements().filter(|x| x.exp(0) != 0) {
            outside += 1;
            let c = centralizer(&g, &x).unwrap();
            assert_eq!(c.order(), 9);
            let hull = subgroup_closure(&g, &[x, g.z()], 243).unwrap();
            assert!(c.same_elements(&hull));
            assert_eq!(conjugacy_class(&g, &x), coset(&g, &x, &g2));
        }
        assert_eq!(outside, 162);
    }
}

#[test]
fn omega1_of_gamma1() {
    for r in 5..=7 {
        for g in groups(r) {
            let o = omega(&g, 1, &gamma(&g, 1).unwrap()).unwrap();
            let expected = subgroup_closure(&g, &[g.gen(r - 2), g.gen(r - 1)], 9).unwrap();
            assert!(o.same_elements(&expected), "{}", g.params());
        }
    }
}

#[test]
fn omega2_bound_rank6() {
    for g in groups(6) {
        assert!(omega(&g, 2, &gamma(&g, 1).unwrap()).unwrap().order() <= 81);
    }
}

#[test]
fn gamma1_structure() {
    for r in [5, 6] {
        for g in groups(r) {
            let g1 = gamma(&g, 1).unwrap();
            let gens: Vec<GroupElement> = (1..r).map(|i| g.gen(i)).collect();
            if g.params().beta == 0 {
                assert!(g1.is_abelian(&g));
            } else {
                assert!(!g1.is_abelian(&g));
                let z = center_of(&g, &g1, &gens);
                assert!(z.same_elements(&gamma(&g, 3).unwrap()));
                let derived = commutator_subgroup(&g, &g1, &g1).unwrap();
                assert!(derived.same_elements(&gamma(&g, r - 1).unwrap()));
            }
            assert!(is_characteristic_gamma1(&g).unwrap().holds);
        }
    }
}

#[test]
fn small_examples() {
    let g = Group::new(GroupParams::new(5, 1, 0, 0).unwrap()).unwrap();
    assert_eq!(subgroup_closure(&g, &[g.identity()], 1).unwrap().order(), 1);
    let v1 = subgroup_closure(&g, &[g.multiply(&g.gen(0), &g.gen(1)), g.gen(4)], 243).unwrap();
    assert_eq!(v1.order(), 9);
    assert!(subgroup_closure(&g, &[g.gen(0), g.gen(1)], 100).is_err());
    assert_eq!(centralizer(&g, &g.identity()).unwrap().order(), 243);
    assert_eq!(centralizer(&g, &g.z()).unwrap().order(), 243);
    assert_eq!(conjugacy_class(&g, &g.identity()), vec![g.identity()]);
    assert_eq!(conjugacy_class(&g, &g.z()), vec![g.z()]);
    let z = subgroup_closure(&g, &[g.z()], 3).unwrap();
    assert!(omega(&g, 1, &z).unwrap().same_elements(&z));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Every subgroup of gamma_1 generated by three elements needs only two.
    #[test]
    fn three_generated_subgroups_of_gamma1_are_two_generated(
        k in 0usize..6,
        xs in proptest::collection::vec(0u16..81, 3),
    ) {
        let g = Group::new(GroupParams::canonical(5).unwrap().nth(k).unwrap()).unwrap();
        let t = MulTable::new(&g).unwrap();
        // indices below 81 are exactly the elements with a0 = 0
        let h = closure(&t, &xs, 81).unwrap();
        prop_assert!(h.iter().all(|x| t.to_element(x).exp(0) == 0));
        prop_assert!(two_generators(&t, &h).is_some());
    }
}
