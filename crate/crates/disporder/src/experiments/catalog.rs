//! A verified catalog of worked example and counterexample pairs.
//!
//! Each case bundles two distributions with the list of order verdicts,
//! measure comparisons and structural facts expected of them. The catalog is
//! the regression anchor for the whole crate: `verify_case` recomputes every
//! expectation from scratch, and the library's own tests (as well as the CLI
//! `catalog --verify` command) fail if any case drifts.

use crate::dist::DiscreteDist;
use crate::measures::{self, MeasureOpts, MeasureSpec, QuantileVariant};
use crate::orders::{self, OrderKind};
use crate::scalar::{Scalar, Tol};
use crate::Result;

use super::datasets;

/// One expected fact about a case's pair `(F, G)`.
#[derive(Debug, Clone)]
pub enum Expectation {
    /// The order between F and G (or G and F when `reversed`) has the stated
    /// outcome.
    Order {
        kind: OrderKind,
        reversed: bool,
        holds: bool,
    },
    /// `τ(F) > τ(G)` strictly, under both quantile variants — the measure
    /// *disagrees* with the meet order on this pair.
    MeasureReversal(MeasureSpec),
    /// `τ(F) ≤ τ(G)` under both quantile variants.
    MeasureMonotone(MeasureSpec),
    /// Whether every interior cdf level of F also occurs in G.
    RangesNested(bool),
    /// G is exactly F shifted by the given constant.
    ShiftBy(Scalar),
    /// The stochastic comparison of `|X − med(X)|` against `|Y − med(Y)|`
    /// fails for the given median variant, even though the median-anchored
    /// mean absolute deviations themselves are ordered.
    CenteredAbsNotSt(QuantileVariant),
}

/// A named distribution pair with self-verifiable expectations.
#[derive(Debug, Clone)]
pub struct CounterexampleCase {
    pub name: &'static str,
    pub note: &'static str,
    pub f: DiscreteDist,
    pub g: DiscreteDist,
    pub expectations: Vec<Expectation>,
}

fn pmf(label: &str, vals: &[(i64, i64)], nums: &[i64], den: i64) -> DiscreteDist {
    DiscreteDist::from_pmf(
        vals.iter()
            .zip(nums)
            .map(|(&(vn, vd), &p)| (Scalar::ratio(vn, vd), Scalar::ratio(p, den)))
            .collect(),
    )
    .expect("catalog data is canonical")
    .relabel(label)
}

fn ints(label: &str, vals: &[i64], nums: &[i64], den: i64) -> DiscreteDist {
    let pairs: Vec<(i64, i64)> = vals.iter().map(|&v| (v, 1)).collect();
    pmf(label, &pairs, nums, den)
}

fn order(kind: OrderKind, holds: bool) -> Expectation {
    Expectation::Order {
        kind,
        reversed: false,
        holds,
    }
}

fn order_rev(kind: OrderKind, holds: bool) -> Expectation {
    Expectation::Order {
        kind,
        reversed: true,
        holds,
    }
}

/// All bundled cases.
// Uniform push style throughout: the later entries depend on locals computed
// between pushes, so a single `vec![…]` literal cannot hold the whole list.
#[allow(clippy::vec_init_then_push)]
pub fn catalog() -> Vec<CounterexampleCase> {
    use OrderKind::*;
    let iqnr_spec =
        MeasureSpec::iqnr(Scalar::ratio(1, 4), Scalar::ratio(3, 4)).expect("valid quantile levels");
    let ienr_spec = MeasureSpec::ienr(Scalar::ratio(1, 4), Scalar::ratio(3, 4))
        .expect("valid expectile levels");

    let mut cases = Vec::new();

    cases.push(CounterexampleCase {
        name: "uniform-2-vs-5",
        note: "two-point vs five-point uniform: the classical dispersive order \
               fails on level-mismatch grounds while every weaker comparison, \
               including both discrete dispersive orders, holds",
        f: DiscreteDist::uniform_set(vec![Scalar::int(1), Scalar::int(2)]).unwrap(),
        g: DiscreteDist::uniform_range(5).unwrap(),
        expectations: vec![
            order(Disp, false),
            order(And, true),
            order(Or, true),
            order(St, true),
            order(Dil, true),
            order(Weak, true),
            Expectation::RangesNested(false),
        ],
    });

    cases.push(CounterexampleCase {
        name: "uniform-2-vs-4",
        note: "two-point vs four-point uniform: interior levels nest, so the \
               classical dispersive order holds alongside the discrete ones",
        f: DiscreteDist::uniform_set(vec![Scalar::int(1), Scalar::int(2)]).unwrap(),
        g: DiscreteDist::uniform_range(4).unwrap(),
        expectations: vec![
            order(Disp, true),
            order(And, true),
            order(Or, true),
            Expectation::RangesNested(true),
        ],
    });

    cases.push(CounterexampleCase {
        name: "quarters-vs-eighths",
        note: "a two-atom quarter-step law against a three-atom eighth-step \
               law: jump intervals overlap off the diagonal yet both discrete \
               dispersive orders hold",
        f: ints("quarter-jumps", &[1, 2], &[1, 3], 4),
        g: ints("eighth-jumps", &[1, 2, 3], &[1, 2, 5], 8),
        expectations: vec![
            order(And, true),
            order(Or, true),
            order(Disp, false),
            order(St, true),
            order(Dil, true),
            order(Weak, true),
        ],
    });

    cases.push(CounterexampleCase {
        name: "thirds-vs-sixteenths",
        note: "the richest worked relation example: three equal thirds against \
               eight sixteenth-step jumps; both discrete orders hold although \
               no interior level matches",
        f: ints("equal-thirds", &[1, 2, 3], &[1, 1, 1], 3),
        g: ints(
            "sixteenth-jumps",
            &[1, 2, 3, 4, 5, 6, 7, 8],
            &[4, 1, 1, 2, 2, 1, 1, 4],
            16,
        ),
        expectations: vec![
            order(And, true),
            order(Or, true),
            order(Disp, false),
            order(St, true),
            Expectation::RangesNested(false),
        ],
    });

    cases.push(CounterexampleCase {
        name: "meet-not-join",
        note: "a fair coin against a law with a half-step third atom: the meet \
               order holds but the join order fails on an interval-length pair \
               that only the join relation sees",
        f: DiscreteDist::uniform_set(vec![Scalar::int(0), Scalar::int(1)]).unwrap(),
        g: pmf("half-step-tail", &[(0, 1), (1, 1), (3, 2)], &[2, 1, 1], 4),
        expectations: vec![
            order(And, true),
            order(Or, false),
            order(Disp, true),
            Expectation::RangesNested(true),
        ],
    });

    cases.push(CounterexampleCase {
        name: "iqr-reversal",
        note: "a symmetric four-atom law against the five-point uniform: the \
               meet order holds yet the interquartile range strictly drops, \
               while the other five measures stay monotone",
        f: ints("symmetric-tenths", &[1, 2, 3, 4], &[3, 2, 2, 3], 10),
        g: DiscreteDist::uniform_range(5).unwrap(),
        expectations: vec![
            order(And, true),
            order(Or, true),
            order(Disp, false),
            Expectation::MeasureReversal(iqnr_spec.clone()),
            Expectation::MeasureMonotone(MeasureSpec::plain(measures::MeasureKind::Sd)),
            Expectation::MeasureMonotone(MeasureSpec::plain(measures::MeasureKind::Gmd)),
            Expectation::MeasureMonotone(MeasureSpec::plain(measures::MeasureKind::Mad)),
            Expectation::MeasureMonotone(MeasureSpec::plain(measures::MeasureKind::Mdmad)),
            Expectation::MeasureMonotone(ienr_spec.clone()),
        ],
    });

    cases.push(CounterexampleCase {
        name: "median-anchor",
        note: "the median-anchored mean absolute deviation is monotone on this \
               pair, but the pointwise stochastic comparison of the absolute \
               deviations from the medians fails — monotonicity of the measure \
               does not come from a pointwise comparison",
        f: ints("front-loaded", &[0, 1, 2], &[2, 1, 1], 4),
        g: ints("spread-tail", &[0, 1, 2, 3], &[3, 2, 2, 1], 8),
        expectations: vec![
            order(And, true),
            Expectation::MeasureMonotone(MeasureSpec::plain(measures::MeasureKind::Mdmad)),
            Expectation::CenteredAbsNotSt(QuantileVariant::Left),
        ],
    });

    let (a1, a2) = datasets::dataset_a();
    cases.push(CounterexampleCase {
        name: "counts-a",
        note: "first bundled two-sample count table: both discrete dispersive \
               orders hold, the classical dispersive order fails in both \
               directions",
        f: a1,
        g: a2,
        expectations: vec![
            order(And, true),
            order(Or, true),
            order(Disp, false),
            order_rev(Disp, false),
        ],
    });

    let (b1, b2) = datasets::dataset_b();
    cases.push(CounterexampleCase {
        name: "counts-b",
        note: "second bundled two-sample count table: same verdict pattern as \
               the first",
        f: b1,
        g: b2,
        expectations: vec![
            order(And, true),
            order(Or, true),
            order(Disp, false),
            order_rev(Disp, false),
        ],
    });

    cases.push(CounterexampleCase {
        name: "pure-shift",
        note: "a law against its own translate: both discrete dispersive \
               orders hold in both directions and the shift is recovered \
               exactly",
        f: ints("base", &[0, 1], &[1, 3], 4),
        g: ints("base", &[0, 1], &[1, 3], 4)
            .affine(&Scalar::one(), &Scalar::ratio(7, 3))
            .expect("unit scale"),
        expectations: vec![
            order(And, true),
            order_rev(And, true),
            order(Or, true),
            order_rev(Or, true),
            Expectation::ShiftBy(Scalar::ratio(7, 3)),
        ],
    });

    cases
}

/// Evaluate `τ` for both quantile variants.
fn both_variants(d: &DiscreteDist, spec: &MeasureSpec, tol: Tol) -> Result<(Scalar, Scalar)> {
    let left = measures::evaluate(
        d,
        spec,
        &MeasureOpts {
            variant: QuantileVariant::Left,
            tol,
            sample_corrected: false,
        },
    )?;
    let mid = measures::evaluate(
        d,
        spec,
        &MeasureOpts {
            variant: QuantileVariant::Mid,
            tol,
            sample_corrected: false,
        },
    )?;
    Ok((left, mid))
}

/// Absolute deviation of `d` from its own median under the given variant.
fn abs_about_median(d: &DiscreteDist, variant: QuantileVariant, tol: Tol) -> Result<DiscreteDist> {
    let half = Scalar::ratio(1, 2);
    let anchor = match variant {
        QuantileVariant::Left => d.quantile_with(&half, tol)?,
        QuantileVariant::Mid => d.quantile_mid_with(&half, tol)?,
    };
    let points = d
        .atoms()
        .into_iter()
        .map(|(x, p)| ((&x - &anchor).abs(), p))
        .collect();
    DiscreteDist::from_pmf(points)
}

/// Recompute every expectation of a case; returns human-readable mismatch
/// descriptions (empty means the case verifies).
pub fn verify_case(case: &CounterexampleCase, tol: Tol) -> Vec<String> {
    let mut problems = Vec::new();
    for exp in &case.expectations {
        match exp {
            Expectation::Order {
                kind,
                reversed,
                holds,
            } => {
                let (f, g) = if *reversed {
                    (&case.g, &case.f)
                } else {
                    (&case.f, &case.g)
                };
                let v = kind.decide(f, g, tol);
                if v.holds != *holds {
                    problems.push(format!(
                        "{}: expected {}{} to {}, got {}",
                        case.name,
                        kind.name(),
                        if *reversed { " (reversed)" } else { "" },
                        if *holds { "hold" } else { "fail" },
                        if v.holds { "holds" } else { "fails" },
                    ));
                }
            }
            Expectation::MeasureReversal(spec) => match (
                both_variants(&case.f, spec, tol),
                both_variants(&case.g, spec, tol),
            ) {
                (Ok((fl, fm)), Ok((gl, gm))) => {
                    if !(fl > gl && fm > gm) {
                        problems.push(format!(
                            "{}: expected {} reversal, got F=({fl}, {fm}) vs G=({gl}, {gm})",
                            case.name,
                            spec.name(),
                        ));
                    }
                }
                _ => problems.push(format!("{}: {} failed to evaluate", case.name, spec.name())),
            },
            Expectation::MeasureMonotone(spec) => match (
                both_variants(&case.f, spec, tol),
                both_variants(&case.g, spec, tol),
            ) {
                (Ok((fl, fm)), Ok((gl, gm))) => {
                    if !(fl <= gl && fm <= gm) {
                        problems.push(format!(
                            "{}: expected {} monotone, got F=({fl}, {fm}) vs G=({gl}, {gm})",
                            case.name,
                            spec.name(),
                        ));
                    }
                }
                _ => problems.push(format!("{}: {} failed to evaluate", case.name, spec.name())),
            },
            Expectation::RangesNested(want) => {
                let got = orders::ranges_nested(&case.f, &case.g, tol);
                if got != *want {
                    problems.push(format!(
                        "{}: expected ranges_nested = {want}, got {got}",
                        case.name
                    ));
                }
            }
            Expectation::ShiftBy(delta) => match orders::shift_equivalence(&case.f, &case.g, tol) {
                Some(got) if got == *delta => {}
                got => problems.push(format!(
                    "{}: expected shift {delta}, got {got:?}",
                    case.name
                )),
            },
            Expectation::CenteredAbsNotSt(variant) => {
                let check = || -> Result<bool> {
                    let af = abs_about_median(&case.f, *variant, tol)?;
                    let ag = abs_about_median(&case.g, *variant, tol)?;
                    Ok(orders::leq_st(&af, &ag, tol).holds)
                };
                match check() {
                    Ok(false) => {}
                    Ok(true) => problems.push(format!(
                        "{}: absolute deviations from the medians unexpectedly \
                         stochastically ordered",
                        case.name
                    )),
                    Err(e) => problems.push(format!("{}: {e}", case.name)),
                }
            }
        }
    }
    problems
}

/// Verify the whole catalog; returns `(case name, mismatches)` for every
/// failing case.
pub fn verify_catalog(tol: Tol) -> Vec<(String, Vec<String>)> {
    catalog()
        .iter()
        .map(|c| (c.name.to_string(), verify_case(c, tol)))
        .filter(|(_, p)| !p.is_empty())
        .collect()
}

/// Look up a case by name.
pub fn by_name(name: &str) -> Option<CounterexampleCase> {
    catalog().into_iter().find(|c| c.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_case_verifies() {
        let failures = verify_catalog(Tol::default());
        assert!(failures.is_empty(), "catalog drift: {failures:?}");
    }

    #[test]
    fn catalog_contains_the_advertised_cases() {
        let names: Vec<_> = catalog().iter().map(|c| c.name).collect();
        for expected in [
            "uniform-2-vs-5",
            "uniform-2-vs-4",
            "quarters-vs-eighths",
            "thirds-vs-sixteenths",
            "meet-not-join",
            "iqr-reversal",
            "median-anchor",
            "counts-a",
            "counts-b",
            "pure-shift",
        ] {
            assert!(names.contains(&expected), "missing case {expected}");
        }
        assert!(by_name("iqr-reversal").is_some());
    }

    #[test]
    fn tampered_case_is_caught() {
        let mut case = by_name("uniform-2-vs-4").unwrap();
        case.expectations.push(Expectation::Order {
            kind: OrderKind::Disp,
            reversed: true,
            holds: true,
        });
        assert!(!verify_case(&case, Tol::default()).is_empty());
    }
}
