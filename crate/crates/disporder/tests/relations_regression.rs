//! Regressions for the jump-interval relations against hand-derived sets,
//! plus randomized cross-checks between the two independent ways of
//! computing them (merge scan vs nearest-neighbour reconstruction).

mod common;

use common::pmf;
use disporder::dist::DiscreteDist;
use disporder::experiments::random::{self, GenConfig};
use disporder::relations::{
    nn_set, rel_and, rel_and_via_nn, rel_join, rel_join_naive, rel_or, rel_or_via_nn,
};
use disporder::scalar::Tol;

fn u(n: i64) -> DiscreteDist {
    let values: Vec<i64> = (1..=n).collect();
    let nums = vec![1i64; n as usize];
    pmf(&format!("U[{n}]"), &values, &nums, n)
}

/// U{1,2} vs U{1..5}: every jump interval of the coarse law overlaps three
/// of the fine law's, derived by intersecting (0,1/2) and (1/2,1) with the
/// fifths.
#[test]
fn base_relation_two_point_vs_five_point_uniform() {
    let rel = rel_join(&u(2), &u(5), Tol::default());
    assert_eq!(
        rel.pairs,
        vec![(1, 1), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5)]
    );
}

/// Quarter jumps {1/4, 3/4} against eighth jumps {1/8, 1/4, 5/8}: the
/// heights 5/8 > 1/4 meet only off the relation, keeping the comparison
/// feasible.
#[test]
fn base_relation_quarters_vs_eighths() {
    let f = pmf("quarter-jumps", &[1, 2], &[1, 3], 4);
    let g = pmf("eighth-jumps", &[1, 2, 3], &[1, 2, 5], 8);
    let rel = rel_join(&f, &g, Tol::default());
    assert_eq!(rel.pairs, vec![(1, 1), (1, 2), (2, 2), (2, 3)]);
    // The tall third jump of G relates to nothing in F's first jump.
    assert!(!rel.contains(1, 3));
}

/// Equal thirds against the 8-atom law with sixteenth-step jumps: the meet
/// and join relations derived level-by-level.
#[test]
fn meet_and_join_relations_thirds_vs_sixteenths() {
    let f = pmf("equal-thirds", &[1, 2, 3], &[1, 1, 1], 3);
    let g = pmf(
        "sixteenth-jumps",
        &[1, 2, 3, 4, 5, 6, 7, 8],
        &[4, 1, 1, 2, 2, 1, 1, 4],
        16,
    );
    let tol = Tol::default();
    assert_eq!(
        rel_and(&f, &g, tol).pairs,
        vec![(2, 3), (2, 4), (3, 6), (3, 7)]
    );
    assert_eq!(
        rel_or(&f, &g, tol).pairs,
        vec![
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
            (3, 6),
            (3, 7),
            (3, 8)
        ]
    );
}

/// The nearest-neighbour sets for the same pair: each lower level of the
/// thirds law is bracketed by two interior sixteenth levels.
#[test]
fn neighbour_sets_thirds_vs_sixteenths() {
    let f = pmf("equal-thirds", &[1, 2, 3], &[1, 1, 1], 3);
    let g = pmf(
        "sixteenth-jumps",
        &[1, 2, 3, 4, 5, 6, 7, 8],
        &[4, 1, 1, 2, 2, 1, 1, 4],
        16,
    );
    let tol = Tol::default();
    let nn2 = nn_set(&f, &g, 2, tol).unwrap();
    let nn3 = nn_set(&f, &g, 3, tol).unwrap();
    let as_strings = |levels: &[disporder::scalar::Scalar]| -> Vec<String> {
        levels.iter().map(|l| l.to_string()).collect()
    };
    assert_eq!(as_strings(&nn2.levels), ["5/16", "3/8"]);
    assert_eq!(as_strings(&nn3.levels), ["5/8", "11/16"]);
}

/// A shared level produces a one-element neighbour set (the level itself,
/// counted once).
#[test]
fn neighbour_set_collapses_on_shared_level() {
    let f = pmf("half", &[0, 1], &[1, 1], 2);
    let g = pmf("halves-split", &[0, 2, 5], &[2, 1, 1], 4);
    let nn = nn_set(&f, &g, 2, Tol::default()).unwrap();
    assert_eq!(nn.levels.len(), 1);
    assert_eq!(nn.levels[0].to_string(), "1/2");
}

/// The merge-scan join relation agrees with the quadratic reference
/// implementation on a few hundred generated pairs.
#[test]
fn merge_scan_matches_naive_reference() {
    let tol = Tol::default();
    let cfg = GenConfig::default();
    let mut rng = random::rng(2024);
    for i in 0..400 {
        let (f, g) = common::mixed_pair(i, &cfg, &mut rng);
        let fast = rel_join(&f, &g, tol);
        let naive = rel_join_naive(&f, &g, tol);
        assert_eq!(fast.pairs, naive.pairs, "pair #{i}: {:?} {:?}", f, g);
    }
}

/// The base relation is symmetric up to transposition; the derived
/// relations transpose into each other's orientation.
#[test]
fn relations_transpose_symmetry() {
    let tol = Tol::default();
    let cfg = GenConfig::default();
    let mut rng = random::rng(77);
    for i in 0..200 {
        let (f, g) = common::mixed_pair(i, &cfg, &mut rng);
        assert_eq!(
            rel_join(&f, &g, tol).transpose().pairs,
            rel_join(&g, &f, tol).pairs
        );
        assert_eq!(
            rel_and(&f, &g, tol).transpose().pairs,
            rel_and(&g, &f, tol).pairs
        );
        assert_eq!(
            rel_or(&f, &g, tol).transpose().pairs,
            rel_or(&g, &f, tol).pairs
        );
    }
}

/// When the jump-height condition holds, the nearest-neighbour
/// reconstruction reproduces both derived relations exactly.
#[test]
fn neighbour_reconstruction_matches_merge_scan() {
    let tol = Tol::default();
    let pool = common::meet_pool(31, 300, tol);
    for (f, g) in &pool {
        let via_nn = rel_and_via_nn(f, g, tol).expect("jump condition holds on this pool");
        assert_eq!(via_nn.pairs, rel_and(f, g, tol).pairs);
        let via_nn = rel_or_via_nn(f, g, tol).expect("jump condition holds on this pool");
        assert_eq!(via_nn.pairs, rel_or(f, g, tol).pairs);
    }
}
