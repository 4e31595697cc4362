//! Release acceptance gate: ten checks covering dataset reproduction, order
//! verdicts, relation regressions, the interquantile-range counterexample,
//! the geometric sufficient region, the randomized property suites, the
//! non-transitivity witness, and the family curve shapes.
//!
//! The harness emits one pass/fail line per criterion; each test also prints
//! an explicit `ACCEPTANCE <k> PASS` line (visible with `--nocapture`).

mod common;

use std::time::Instant;

use disporder::dist::DiscreteDist;
use disporder::experiments::random::{self, GenConfig};
use disporder::experiments::{
    by_name, curves, preservation_audit, sweep, transitivity_search, Family,
};
use disporder::measures::{self, MeasureOpts, MeasureSpec, QuantileVariant};
use disporder::orders::OrderKind;
use disporder::relations::{rel_and, rel_and_via_nn, rel_join, rel_or, rel_or_via_nn};
use disporder::scalar::{Scalar, Tol};

fn pass(k: u32, what: &str) {
    println!("ACCEPTANCE {k:02} PASS — {what}");
}

fn spec(token: &str) -> MeasureSpec {
    MeasureSpec::parse(token).expect("valid measure token")
}

fn close(value: &Scalar, target: f64, tol: f64) -> bool {
    (value.to_f64() - target).abs() <= tol
}

/// Sample-corrected measure table of one dataset pair against its rounded
/// published values: `(sd, gmd, mad, iqnr)` per sample, absolute tolerances
/// per entry.
fn check_dataset(pair: (DiscreteDist, DiscreteDist), expected: [[f64; 4]; 2], tols: [[f64; 4]; 2]) {
    let opts = MeasureOpts {
        variant: QuantileVariant::Left,
        tol: Tol::default(),
        sample_corrected: true,
    };
    let specs = [spec("sd"), spec("gmd"), spec("mad"), spec("iqnr:1/4:3/4")];
    for (d, (exp, tl)) in [pair.0, pair.1].iter().zip(expected.iter().zip(&tols)) {
        for ((s, &target), &tol) in specs.iter().zip(exp).zip(tl) {
            let v = measures::evaluate(d, s, &opts).expect("dataset measures evaluate");
            assert!(
                close(&v, target, tol),
                "{} on {} = {} but expected {target} ± {tol}",
                s.name(),
                d.label(),
                v.to_f64()
            );
        }
        // interquantile ranges of the integer-valued datasets are exact integers
        let iq = measures::evaluate(d, &specs[3], &opts).unwrap();
        assert_eq!(iq, Scalar::int(iq.to_f64() as i64));
    }
}

/// Criterion 1 — first dataset pair: sample-corrected sd/gmd/mad and the
/// quartile range match the published 2-d.p. values, in under a second.
#[test]
fn acceptance_01_first_dataset_measures() {
    let t0 = Instant::now();
    check_dataset(
        disporder::experiments::datasets::dataset_a(),
        [[1.29, 1.33, 1.03, 2.0], [7.8, 5.98, 4.45, 5.0]],
        [[0.005, 0.005, 0.005, 0.0], [0.05, 0.005, 0.005, 0.0]],
    );
    let elapsed = t0.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "dataset measures took {elapsed:?}, budget is 1 s"
    );
    pass(
        1,
        "first dataset reproduces sd/gmd/mad/iqnr in under a second",
    );
}

/// Criterion 2 — second dataset pair, same tolerances.
#[test]
fn acceptance_02_second_dataset_measures() {
    check_dataset(
        disporder::experiments::datasets::dataset_b(),
        [[0.76, 0.61, 0.55, 1.0], [2.73, 2.18, 1.76, 1.0]],
        [[0.005, 0.005, 0.005, 0.0], [0.005, 0.005, 0.005, 0.0]],
    );
    pass(2, "second dataset reproduces sd/gmd/mad/iqnr");
}

/// Criterion 3 — on both dataset pairs the classical dispersive order fails
/// in both directions while the meet and join orders hold, all decided in
/// exact arithmetic.
#[test]
fn acceptance_03_dataset_order_verdicts() {
    let tol = Tol::default();
    for (f, g) in [
        disporder::experiments::datasets::dataset_a(),
        disporder::experiments::datasets::dataset_b(),
    ] {
        for (a, b) in [(&f, &g), (&g, &f)] {
            let v = OrderKind::Disp.decide(a, b, tol);
            assert!(
                !v.holds,
                "dispersive order must fail {} vs {}",
                a.label(),
                b.label()
            );
            assert!(!v.approximate);
        }
        for kind in [OrderKind::And, OrderKind::Or] {
            let v = kind.decide(&f, &g, tol);
            assert!(
                v.holds,
                "{} must hold {} vs {}",
                kind.name(),
                f.label(),
                g.label()
            );
            assert!(!v.approximate);
        }
    }
    pass(
        3,
        "datasets: dispersive fails both ways, meet and join hold, exact",
    );
}

/// Criterion 4 — two-point uniform against the five-point uniform separates
/// the dispersive order from the meet order; against the four-point uniform
/// the dispersive order holds (divisible refinement).
#[test]
fn acceptance_04_uniform_separating_pairs() {
    let tol = Tol::default();
    let u2 = DiscreteDist::uniform_range(2).unwrap();
    let u4 = DiscreteDist::uniform_range(4).unwrap();
    let u5 = DiscreteDist::uniform_range(5).unwrap();
    let disp25 = OrderKind::Disp.decide(&u2, &u5, tol);
    let and25 = OrderKind::And.decide(&u2, &u5, tol);
    let disp24 = OrderKind::Disp.decide(&u2, &u4, tol);
    assert!(!disp25.holds && !disp25.approximate);
    assert!(and25.holds && !and25.approximate);
    assert!(disp24.holds && !disp24.approximate);
    pass(
        4,
        "uniform pairs: U2 vs U5 meet-only, U2 vs U4 dispersive, exact",
    );
}

/// Criterion 5 — the three frozen relation sets.
#[test]
fn acceptance_05_relation_regressions() {
    let tol = Tol::default();
    let u2 = DiscreteDist::uniform_range(2).unwrap();
    let u5 = DiscreteDist::uniform_range(5).unwrap();
    assert_eq!(
        rel_join(&u2, &u5, tol).pairs,
        vec![(1, 1), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5)]
    );

    let quarters = common::pmf("quarter-jumps", &[1, 2], &[1, 3], 4);
    let eighths = common::pmf("eighth-jumps", &[1, 2, 3], &[1, 2, 5], 8);
    assert_eq!(
        rel_join(&quarters, &eighths, tol).pairs,
        vec![(1, 1), (1, 2), (2, 2), (2, 3)]
    );

    let thirds = common::pmf("equal-thirds", &[1, 2, 3], &[1, 1, 1], 3);
    let sixteenths = common::pmf(
        "sixteenth-jumps",
        &[1, 2, 3, 4, 5, 6, 7, 8],
        &[4, 1, 1, 2, 2, 1, 1, 4],
        16,
    );
    assert_eq!(
        rel_and(&thirds, &sixteenths, tol).pairs,
        vec![(2, 3), (2, 4), (3, 6), (3, 7)]
    );
    assert_eq!(
        rel_or(&thirds, &sixteenths, tol).pairs,
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
    pass(5, "all three frozen relation sets match");
}

/// Criterion 6 — the catalog pair where the quartile range moves against the
/// meet order, plus preservation audits that rediscover a violation within a
/// 10^4-pair budget under both quantile variants.
#[test]
fn acceptance_06_interquantile_range_failure() {
    let tol = Tol::default();
    let case = by_name("iqr-reversal").expect("catalog carries the reversal pair");
    assert!(OrderKind::And.decide(&case.f, &case.g, tol).holds);
    let iq = spec("iqnr:1/4:3/4");
    for variant in [QuantileVariant::Left, QuantileVariant::Mid] {
        let opts = MeasureOpts {
            variant,
            tol,
            sample_corrected: false,
        };
        assert_eq!(
            measures::evaluate(&case.f, &iq, &opts).unwrap(),
            Scalar::int(3)
        );
        assert_eq!(
            measures::evaluate(&case.g, &iq, &opts).unwrap(),
            Scalar::int(2)
        );
        let report = preservation_audit(&iq, variant, 10_000, 11, tol).unwrap();
        assert!(report.conclusive());
        assert!(
            !report.violations.is_empty(),
            "audit must find a quartile-range violation under {variant:?}"
        );
    }
    pass(
        6,
        "quartile range reverses on a meet-ordered pair; audits rediscover it",
    );
}

/// Criterion 7 — geometric sufficient region: the criterion cell (0.15, 0.12)
/// is confirmed numerically, (0.9, 0.72) fails numerically, and the exact
/// step-1/20 sweep has no cell where the criterion asserts an order that the
/// decision refutes; the sweep finishes well inside five minutes.
#[test]
fn acceptance_07_geometric_region() {
    let tol = Tol::default();
    let tail = Scalar::approx(1e-9);

    assert!(sweep::geom_region_theoretical(&Scalar::ratio(3, 20), &Scalar::ratio(3, 25)).unwrap());
    let f = DiscreteDist::geometric(Scalar::ratio(3, 20), tail.clone()).unwrap();
    let g = DiscreteDist::geometric(Scalar::ratio(3, 25), tail.clone()).unwrap();
    let v = OrderKind::And.decide(&f, &g, tol);
    assert!(v.holds, "criterion cell (0.15, 0.12) must hold numerically");
    assert!(
        v.approximate,
        "truncated tails must flag the verdict approximate"
    );

    let f = DiscreteDist::geometric(Scalar::ratio(9, 10), tail.clone()).unwrap();
    let g = DiscreteDist::geometric(Scalar::ratio(18, 25), tail.clone()).unwrap();
    assert!(
        !OrderKind::And.decide(&f, &g, tol).holds,
        "cell (0.9, 0.72) must fail numerically"
    );

    let t0 = Instant::now();
    let grid = sweep::geom_sweep(&Scalar::ratio(1, 20), &tail, false, tol).unwrap();
    let elapsed = t0.elapsed();
    assert!(grid.violations().is_empty(), "criterion must be sufficient");
    assert_eq!(grid.counts(), (171, 113, 58, 190));
    assert!(
        elapsed.as_secs_f64() < 300.0,
        "sweep took {elapsed:?}, budget is 300 s"
    );
    pass(
        7,
        "geometric region: spot checks, sufficiency on the 1/20 grid, in time",
    );
}

/// Height condition over the base relation: every related jump of the right
/// law is no taller than its partner on the left.
fn height_condition(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> bool {
    rel_join(f, g, tol)
        .pairs
        .iter()
        .all(|&(a, b)| g.prob(b) <= f.prob(a))
}

/// Pointwise density comparison `g(G⁻¹(p)) ≤ f(F⁻¹(p))` sampled at every
/// interior level of either law and at every midpoint between consecutive
/// sampled levels (the comparison is piecewise constant between levels, so
/// this grid decides it for all `p ∈ (0, 1)`).
fn density_condition(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> bool {
    let mut levels: Vec<Scalar> = Vec::new();
    for d in [f, g] {
        for a in 1..d.n() {
            levels.push(d.level(a));
        }
    }
    levels.sort_by(|x, y| x.partial_cmp(y).expect("exact levels"));
    levels.dedup();
    let half = Scalar::ratio(1, 2);
    let mut ps = levels.clone();
    ps.push(&levels[0] * &half);
    ps.push(&(levels.last().unwrap() + &Scalar::one()) * &half);
    for w in levels.windows(2) {
        ps.push(&(&w[0] + &w[1]) * &half);
    }
    ps.iter().all(|p| {
        let fi = f.quantile_index_with(p, tol).expect("p in (0,1)");
        let gi = g.quantile_index_with(p, tol).expect("p in (0,1)");
        g.probs()[gi] <= f.probs()[fi]
    })
}

/// Criterion 8 — eleven randomized property suites, each with at least 10^3
/// accepted instances and zero violations.
#[test]
fn acceptance_08_property_suites() {
    let tol = Tol::default();
    let cfg = GenConfig::default();
    const NEED: usize = 1000;

    // 1. reflexivity of both discrete orders
    let mut rng = random::rng(231);
    for _ in 0..NEED {
        let d = random::random_dist(&cfg, &mut rng);
        assert!(OrderKind::And.decide(&d, &d, tol).holds);
        assert!(OrderKind::Or.decide(&d, &d, tol).holds);
    }

    // 2.–4. and 9. share one pool of verified meet-ordered pairs:
    // meet ⟹ weak dispersive, meet ⟹ dilation, five measures monotone,
    // and the nearest-neighbour reconstruction agrees with the merge scan
    // (its premise, the height condition, is part of the meet order).
    let pool = common::meet_pool(232, NEED, tol);
    for (f, g) in &pool {
        assert!(
            OrderKind::Weak.decide(f, g, tol).holds,
            "meet ⟹ weak fails on {f:?} vs {g:?}"
        );
        assert!(
            OrderKind::Dil.decide(f, g, tol).holds,
            "meet ⟹ dilation fails on {f:?} vs {g:?}"
        );
        assert_eq!(rel_and_via_nn(f, g, tol).unwrap(), rel_and(f, g, tol));
        assert_eq!(rel_or_via_nn(f, g, tol).unwrap(), rel_or(f, g, tol));

        assert!(
            f.variance() <= g.variance(),
            "sd not monotone on {f:?} vs {g:?}"
        );
        assert!(measures::gmd(f) <= measures::gmd(g));
        assert!(measures::mad(f) <= measures::mad(g));
        let quarter = Scalar::ratio(1, 4);
        let three_quarters = Scalar::ratio(3, 4);
        assert!(
            measures::mdmad(f, QuantileVariant::Left, tol).unwrap()
                <= measures::mdmad(g, QuantileVariant::Left, tol).unwrap()
        );
        assert!(
            measures::ienr(f, &quarter, &three_quarters, tol).unwrap()
                <= measures::ienr(g, &quarter, &three_quarters, tol).unwrap()
        );
    }

    // 5. level-nested pairs (left law merges adjacent jumps of the right):
    // the meet order and the classical dispersive order coincide.
    let mut rng = random::rng(233);
    for _ in 0..NEED {
        let (f, g) = random::merged_jump_pair(&cfg, &mut rng);
        assert_eq!(
            OrderKind::And.decide(&f, &g, tol).holds,
            OrderKind::Disp.decide(&f, &g, tol).holds,
            "nested-level equivalence fails on {f:?} vs {g:?}"
        );
    }

    // 6. join-order transitivity on chained refinement triples
    let mut rng = random::rng(234);
    let mut chains = 0usize;
    while chains < NEED {
        let f = random::random_dist(&cfg, &mut rng);
        let g = random::refine_stretch_of(&f, &cfg, &mut rng);
        let h = random::refine_stretch_of(&g, &cfg, &mut rng);
        if !OrderKind::Or.decide(&f, &g, tol).holds || !OrderKind::Or.decide(&g, &h, tol).holds {
            continue;
        }
        chains += 1;
        assert!(
            OrderKind::Or.decide(&f, &h, tol).holds,
            "join order must close the chain {f:?} → {g:?} → {h:?}"
        );
    }

    // 7. equally spaced supports: the two discrete orders coincide
    let mut rng = random::rng(235);
    for _ in 0..NEED {
        let (f, g) = random::random_lattice_pair(&cfg, &mut rng);
        assert_eq!(
            OrderKind::And.decide(&f, &g, tol).holds,
            OrderKind::Or.decide(&f, &g, tol).holds,
            "lattice equivalence fails on {f:?} vs {g:?}"
        );
    }

    // 8. translates ⟺ mutual meet order (half the draws are true shifts)
    let mut rng = random::rng(236);
    for i in 0..NEED {
        let (f, g) = if i % 2 == 0 {
            random::shift_pair(&cfg, &mut rng)
        } else {
            (
                random::random_dist(&cfg, &mut rng),
                random::random_dist(&cfg, &mut rng),
            )
        };
        let mutual =
            OrderKind::And.decide(&f, &g, tol).holds && OrderKind::And.decide(&g, &f, tol).holds;
        assert_eq!(mutual, f.shift_of(&g, tol).is_some(), "on {f:?} vs {g:?}");
    }

    // 10. density cross-check: the height condition over the base relation
    // is the pointwise pmf-at-quantile comparison.
    let mut rng = random::rng(237);
    for i in 0..NEED {
        let (f, g) = common::mixed_pair(i, &cfg, &mut rng);
        assert_eq!(
            height_condition(&f, &g, tol),
            density_condition(&f, &g, tol),
            "density characterization fails on {f:?} vs {g:?}"
        );
    }

    // 11. meet order with aligned support minima implies stochastic dominance
    let mut rng = random::rng(238);
    let mut aligned = 0usize;
    let mut draws = 0usize;
    while aligned < NEED {
        let (f, g) = common::mixed_pair(draws, &cfg, &mut rng);
        draws += 1;
        assert!(draws < NEED * 200, "generator mix must yield aligned pairs");
        if !OrderKind::And.decide(&f, &g, tol).holds || f.min_support() > g.min_support() {
            continue;
        }
        aligned += 1;
        assert!(
            OrderKind::St.decide(&f, &g, tol).holds,
            "meet + aligned minima must imply dominance on {f:?} vs {g:?}"
        );
    }

    pass(
        8,
        "eleven property suites, ≥1000 accepted instances each, no violations",
    );
}

/// Criterion 9 — the meet order is not transitive: the seeded search finds a
/// witness within a 10^5-triple budget on the half-integer generator, and the
/// witness re-verifies from scratch.
#[test]
fn acceptance_09_non_transitivity_witness() {
    let tol = Tol::default();
    let report = transitivity_search(OrderKind::And, 100_000, 1, false, tol).unwrap();
    let [f, g, h] = report
        .witness
        .expect("search must find a witness in budget");
    assert!(OrderKind::And.decide(&f, &g, tol).holds);
    assert!(OrderKind::And.decide(&g, &h, tol).holds);
    assert!(!OrderKind::And.decide(&f, &h, tol).holds);
    pass(
        9,
        "meet-order non-transitivity witness found and re-verified",
    );
}

/// Criterion 10 — curve shapes. Uniform family: the two absolute deviations
/// agree exactly and the quartile range is an integer for every n up to 100.
/// Geometric family on the percent grid: five measures strictly decrease in
/// the success probability while the quartile range is not monotone.
#[test]
fn acceptance_10_family_curve_shapes() {
    let tol = Tol::default();
    for n in 2..=100u64 {
        let d = DiscreteDist::uniform_range(n).unwrap();
        let mad = measures::mad(&d);
        for variant in [QuantileVariant::Left, QuantileVariant::Mid] {
            assert_eq!(mad, measures::mdmad(&d, variant, tol).unwrap(), "n = {n}");
        }
        let iq = measures::iqnr(
            &d,
            &Scalar::ratio(1, 4),
            &Scalar::ratio(3, 4),
            QuantileVariant::Left,
            tol,
        )
        .unwrap();
        assert_eq!(
            iq,
            Scalar::int(iq.to_f64() as i64),
            "iqnr must be integer at n = {n}"
        );
    }

    let table = curves::measure_curves(
        &Family::Geometric {
            step: Scalar::ratio(1, 100),
            tail_eps: Scalar::approx(1e-9),
        },
        &measures::default_specs(),
        &MeasureOpts::default(),
    )
    .unwrap();
    assert_eq!(table.rows.len(), 99);
    let series = |name: &str| -> Vec<f64> {
        let col = table.column(name).expect("curve column present");
        table.rows.iter().map(|(_, v)| v[col].to_f64()).collect()
    };
    for name in ["sd", "gmd", "mad", "mdmad", "ienr:1/4:3/4"] {
        let vals = series(name);
        assert!(
            vals.windows(2).all(|w| w[1] < w[0]),
            "{name} must strictly decrease in the success probability"
        );
    }
    let iq = series("iqnr:1/4:3/4");
    let increases = iq.windows(2).any(|w| w[1] > w[0]);
    let decreases = iq.windows(2).any(|w| w[1] < w[0]);
    assert!(
        increases && decreases,
        "the quartile range must be non-monotone on the percent grid"
    );
    pass(10, "uniform and geometric curve shapes verified");
}
