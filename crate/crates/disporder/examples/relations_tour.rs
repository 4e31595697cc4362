//! Tour of the jump-interval relations that drive the discrete orders.
//!
//! Two distributions relate at the index pair `(a, b)` when the open
//! intervals between consecutive cdf levels — `(F(x_{a-1}), F(x_a))` and
//! `(G(y_{b-1}), G(y_b))` — overlap. Intervals that merely touch do not
//! relate. Two derived relations strengthen or weaken this:
//!
//!   * the meet relation keeps `(a, b)` only when `(a-1, b-1)` also relates,
//!   * the join relation keeps `(a, b)` when it or `(a-1, b-1)` relates.
//!
//! This example prints all three relations for a pair where they genuinely
//! differ (a three-point uniform against an eight-atom law on sixteenths),
//! demonstrates the nearest-neighbour shortcut used to compute them in one
//! merge pass, and shows how the relations shrink to the diagonal when the
//! two laws share all their levels.
//!
//! Run with:
//!
//! ```bash
//! cargo run --example relations_tour
//! ```

use disporder::dist::DiscreteDist;
use disporder::relations::{nn_set, rel_all, RelationSet};
use disporder::scalar::{Scalar, Tol};

fn pmf(label: &str, values: &[i64], weights: &[i64], denom: i64) -> DiscreteDist {
    let points = values
        .iter()
        .zip(weights)
        .map(|(&v, &w)| (Scalar::int(v), Scalar::ratio(w, denom)))
        .collect();
    DiscreteDist::from_pmf_with(label, points, Tol::default()).expect("hand-written pmf is valid")
}

fn show(rel: &RelationSet, name: &str) {
    let pairs: Vec<String> = rel
        .pairs
        .iter()
        .map(|(a, b)| format!("({a},{b})"))
        .collect();
    println!("  {:<6} {{{}}}", name, pairs.join(", "));
}

fn tour(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) {
    println!("F = {}, G = {}", f.label(), g.label());
    println!(
        "  F levels: {}",
        f.cum()
            .iter()
            .map(Scalar::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!(
        "  G levels: {}",
        g.cum()
            .iter()
            .map(Scalar::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    );
    let (join, and, or) = rel_all(f, g, tol);
    show(&join, "base");
    show(&and, "meet");
    show(&or, "join");
    println!();
}

fn main() {
    let tol = Tol::default();

    // A pair rich enough that base, meet and join relations all differ.
    let thirds = pmf("equal-thirds", &[1, 2, 3], &[1, 1, 1], 3);
    let sixteenths = pmf(
        "sixteenth-jumps",
        &[1, 2, 3, 4, 5, 6, 7, 8],
        &[4, 1, 1, 2, 2, 1, 1, 4],
        16,
    );
    tour(&thirds, &sixteenths, tol);

    // The relations are computable without scanning all n*m pairs: for each
    // lower level F(x_{a-1}) only its nearest neighbours among the other
    // law's interior levels matter.
    println!("nearest interior G-levels around each lower F-level:");
    for a in 2..=thirds.n() {
        let nn = nn_set(&thirds, &sixteenths, a, tol).expect("index in range");
        let levels: Vec<String> = nn.levels.iter().map(Scalar::to_string).collect();
        println!(
            "  a = {a}: F(x_{}) = {} -> {{{}}}",
            a - 1,
            thirds.level(a - 1),
            levels.join(", ")
        );
    }
    println!();

    // When G refines nothing and shares every level with F, all three
    // relations collapse to the diagonal.
    let base = pmf("base", &[0, 1], &[1, 3], 4);
    let shifted = base
        .affine(&Scalar::int(2), &Scalar::int(5))
        .expect("affine image")
        .relabel("stretched-and-shifted");
    tour(&base, &shifted, tol);
    println!("Sharing all levels collapses every relation to the diagonal,");
    println!("which is why affine images are always comparable.");
}
