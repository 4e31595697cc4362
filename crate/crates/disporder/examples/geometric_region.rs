//! Map the region where one geometric law is meet-order smaller than another.
//!
//! For success probabilities `0 < π_G < π_F < 1` there is a closed-form
//! *sufficient* condition for `geom(π_F) ⪯ geom(π_G)` in the meet order:
//! with `λ = 1 − π_G` and `ϱ = ln(1 − π_F) / ln λ`, membership requires
//! `λ > 1/2` and `ϱ ≥ ln(2λ − 1)/ln λ − 1`. This example
//!
//!   1. evaluates the closed form on a few hand-picked parameter pairs,
//!   2. sweeps a full grid of pairs, deciding the meet order numerically on
//!      truncated tails (exact rational arithmetic, tail mass `1e-9`), and
//!   3. writes the grid as CSV plus a two-panel SVG heat map, then confirms
//!      that no grid point inside the theoretical region fails numerically —
//!      while several points *outside* it still satisfy the order, showing
//!      the condition is sufficient but not necessary.
//!
//! Run with (release strongly recommended, the sweep is rational-heavy):
//!
//! ```bash
//! cargo run --release --example geometric_region
//! ```

use std::fs::File;
use std::io::BufWriter;

use disporder::experiments::{geom_region_theoretical, geom_sweep, CellVerdict};
use disporder::scalar::{Scalar, Tol};

fn main() {
    // Closed-form membership on a few pairs.
    println!("closed-form sufficient region, pairs (pi_F, pi_G):");
    for (pf, pg) in [(0.15, 0.12), (0.5, 0.25), (0.9, 0.72), (0.75, 0.5)] {
        let inside = geom_region_theoretical(&Scalar::approx(pf), &Scalar::approx(pg))
            .expect("valid parameters");
        println!(
            "  ({pf:>4}, {pg:>4})  ->  {}",
            if inside { "inside" } else { "outside" }
        );
    }
    println!();

    // Full sweep on a 1/20 grid. Tails are truncated at mass 1e-9 and the
    // truncation defect widens the comparison slack, so every verdict is
    // flagged approximate even though the arithmetic is exact.
    let step = Scalar::ratio(1, 20);
    let tail_eps = Scalar::approx(1e-9);
    let grid = geom_sweep(&step, &tail_eps, false, Tol::default()).expect("sweep runs");

    let (computed, holds, fails, skipped) = grid.counts();
    println!("sweep with step 1/20: {computed} ordered pairs computed ({holds} hold, {fails} fail), {skipped} skipped");
    let violations = grid.violations();
    println!(
        "cells inside the region that fail numerically: {}",
        violations.len()
    );

    // Points outside the region where the order nevertheless holds.
    let extra: Vec<&disporder::experiments::SweepCell> = grid
        .cells
        .iter()
        .filter(|c| c.theory == Some(false) && c.verdict == CellVerdict::Holds)
        .collect();
    println!(
        "cells outside the region where the order still holds: {}",
        extra.len()
    );
    if let Some(c) = extra.first() {
        println!(
            "  e.g. pi_F = {}, pi_G = {}: outside the region, yet the meet order holds",
            c.pi_f, c.pi_g
        );
    }

    // Persist both artifacts.
    let dir = std::env::temp_dir();
    let csv_path = dir.join("geom_region.csv");
    let svg_path = dir.join("geom_region.svg");
    grid.write_csv(&mut BufWriter::new(
        File::create(&csv_path).expect("create csv"),
    ))
    .expect("write csv");
    grid.write_svg(&mut BufWriter::new(
        File::create(&svg_path).expect("create svg"),
    ))
    .expect("write svg");
    println!("\nwrote {}", csv_path.display());
    println!("wrote {}", svg_path.display());
}
