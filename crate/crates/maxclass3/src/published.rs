//! Reference values as printed in the literature, kept separate from the
//! engine so the verify suites compare against data rather than against
//! the code that produced it.

use maxclass3_core::fusion::{FusionCase, Outcome};

/// The `(e, d, f)` admitted by each automorphism group, sorted, and
/// `|Aut(S)|`.
pub fn automorphism_triples(r: usize, triple: (u8, u8, u8)) -> (Vec<(u8, u8, u8)>, u128) {
    let even = r.is_multiple_of(2);
    let big = |k: u32| 3u128.pow(2 * r as u32 - k);
    let mut out = Vec::new();
    let order = match (triple, even) {
        ((0, 0, 0), _) => {
            for e in 1..=2 {
                for d in 0..3 {
                    for f in 1..=2 {
                        out.push((e, d, f));
                    }
                }
            }
            4 * big(3)
        }
        ((0, 1, 0) | (0, 2, 0), true) => {
            for e in 1..=2 {
                for f in 1..=2 {
                    out.push((e, 0, f));
                }
            }
            4 * big(4)
        }
        ((0, 1, 0), false) => {
            out.extend([(1, 0, 1), (1, 0, 2)]);
            2 * big(4)
        }
        ((0, 0, 1), _) => {
            for e in 1..=2 {
                for d in 0..3 {
                    out.push((e, d, if even { e } else { 1 }));
                }
            }
            2 * big(3)
        }
        ((1, 0, _), true) => {
            out.extend([(1, 0, 1), (2, 0, 2)]);
            2 * big(4)
        }
        ((1, 0, _), false) => {
            out.extend([(1, 0, 1), (2, 0, 1)]);
            2 * big(4)
        }
        _ => panic!("no published entry for {triple:?} at rank {r}"),
    };
    out.sort();
    (out, order)
}

/// Whether `s`, `s s1`, `s s1^2` have order 3.
pub fn order3_row(even: bool, triple: (u8, u8, u8)) -> [bool; 3] {
    match (triple, even) {
        ((0, 0, 0), _) => [true, true, true],
        ((0, 1, 0), _) | ((0, 2, 0), true) | ((1, 0, 0), _) => [true, false, false],
        ((0, 0, 1), _) | ((1, 0, 1), _) => [false, false, false],
        ((1, 0, 2), _) => [false, true, true],
        _ => panic!("no published row for {triple:?}"),
    }
}

/// Essential candidates for `beta = 1`, in the order `E0 E1 E2 V0 V1 V2`.
pub fn candidate_row(triple: (u8, u8, u8)) -> [bool; 6] {
    match triple {
        (1, 0, 0) => [true, false, false, true, false, false],
        (1, 0, 1) => [false; 6],
        (1, 0, 2) => [false, true, true, false, true, true],
        _ => panic!("no published candidate row for {triple:?}"),
    }
}

/// Expected outcome, the fusion systems listed, and whether each is reduced.
pub fn classification(r: usize, triple: (u8, u8, u8)) -> (Outcome, Vec<(FusionCase, bool)>) {
    let even = r.is_multiple_of(2);
    match triple {
        (0, _, _) => (Outcome::Deferred, vec![]),
        (1, 0, 1) => (Outcome::Resistant, vec![]),
        (1, 0, 0) if even => (Outcome::Classified, vec![(FusionCase::V0Reduced, true)]),
        (1, 0, 0) => (Outcome::Classified, vec![(FusionCase::V0IndexThree, false)]),
        (1, 0, 2) if even => (
            Outcome::Classified,
            vec![
                (FusionCase::V1Only, true),
                (FusionCase::V2Only, true),
                (FusionCase::V1AndV2, true),
            ],
        ),
        (1, 0, 2) => (Outcome::Resistant, vec![]),
        _ => panic!("no published classification for {triple:?}"),
    }
}
