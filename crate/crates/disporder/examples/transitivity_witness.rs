//! Hunt for a failure of transitivity in the meet order.
//!
//! The meet order is reflexive and antisymmetric but, surprisingly, not
//! transitive in general: there are triples with `F ⪯ G` and `G ⪯ H` yet
//! `F ⋠ H`. This example runs the randomized search, prints the witness
//! triple it finds, and re-verifies all three decisions from scratch.
//!
//! Two contrasting searches follow: the join order (which is strictly
//! stronger) and the meet order restricted to lattice distributions both
//! come up empty under the same budget — consistent with the fact that the
//! join order is transitive outright, and the meet order becomes transitive
//! on a common lattice.
//!
//! Run with:
//!
//! ```bash
//! cargo run --release --example transitivity_witness
//! ```

use disporder::dist::DiscreteDist;
use disporder::experiments::transitivity_search;
use disporder::orders::OrderKind;
use disporder::scalar::Tol;

fn atoms(d: &DiscreteDist) -> String {
    d.atoms()
        .iter()
        .map(|(x, p)| format!("{x}:{p}"))
        .collect::<Vec<_>>()
        .join("  ")
}

fn main() {
    let tol = Tol::default();

    println!("searching for F \u{2aaf} G \u{2aaf} H with F \u{22e0} H in the meet order...");
    let report = transitivity_search(OrderKind::And, 100_000, 1, false, tol)
        .expect("search parameters are valid");
    println!("  chains examined: {}", report.triples_examined);
    match &report.witness {
        Some([f, g, h]) => {
            println!("  witness found:");
            for (tag, d) in [("F", f), ("G", g), ("H", h)] {
                println!("    {tag}: {}", atoms(d));
            }
            // Re-verify the three decisions independently of the search.
            let fg = OrderKind::And.decide(f, g, tol).holds;
            let gh = OrderKind::And.decide(g, h, tol).holds;
            let fh = OrderKind::And.decide(f, h, tol).holds;
            println!("  re-check: F\u{2aaf}G = {fg}, G\u{2aaf}H = {gh}, F\u{2aaf}H = {fh}");
            assert!(fg && gh && !fh, "witness must re-verify");
        }
        None => println!("  no witness in budget (unexpected for this seed)"),
    }

    println!("\nsame budget, join order (transitive, so the search should fail):");
    let join = transitivity_search(OrderKind::Or, 100_000, 1, false, tol).expect("valid");
    println!(
        "  chains examined: {}, witness: {}",
        join.triples_examined,
        join.witness.is_some()
    );

    println!("\nsame budget, meet order on a common half-integer lattice:");
    let lattice = transitivity_search(OrderKind::And, 100_000, 1, true, tol).expect("valid");
    println!(
        "  chains examined: {}, witness: {}",
        lattice.triples_examined,
        lattice.witness.is_some()
    );

    println!("\nIntransitivity needs jump levels that interleave across three");
    println!("different grids; forcing one lattice (or strengthening to the");
    println!("join order) restores transitivity.");
}
