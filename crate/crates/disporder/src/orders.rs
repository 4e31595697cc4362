//! Decision procedures for the dispersion orders.
//!
//! For distributions `F` (atoms `x_1 < … < x_n`, jumps `p_a`) and `G`
//! (atoms `y_1 < … < y_m`, jumps `q_b`), the two discrete dispersive orders
//! share condition (i) and differ in which index pairs have their support
//! gaps compared:
//!
//! * **(i)** `q_b ≤ p_a` for every pair `(a, b)` in the base overlap
//!   relation, and
//! * **(ii)** `x_a − x_{a−1} ≤ y_b − y_{b−1}` for every `(a, b)` in the
//!   meet relation (meet order `⪯∧`) or in the join relation (join order
//!   `⪯∨`).
//!
//! Also provided: the classical dispersive order `≤disp` (via its discrete
//! characterization), the usual stochastic order `≤st`, the dilation order
//! `≤dil` (centered stop-loss comparison), and the weak dispersive order
//! (`≤st` between the laws of `|X − X′|`).
//!
//! Every decision returns an [`OrderVerdict`]: the boolean outcome, a
//! re-checkable [`Witness`] for failures, and an `approximate` flag that is
//! set when floats or truncated tails were involved. In that case
//! comparisons carry a slack of `max(tol.eps, defect_F + defect_G)`, so a
//! borderline violation within tolerance counts as satisfied.

use std::fmt;

use serde::Serialize;

use crate::dist::DiscreteDist;
use crate::relations::{rel_all, RelationSet};
use crate::scalar::{Scalar, Tol};
use crate::{Error, Result};

/// Outcome of one order decision.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub approximate: bool,
}

impl OrderVerdict {
    fn ok(approximate: bool) -> Self {
        OrderVerdict {
            holds: true,
            witness: None,
            approximate,
        }
    }

    fn fail(witness: Witness, approximate: bool) -> Self {
        OrderVerdict {
            holds: false,
            witness: Some(witness),
            approximate,
        }
    }
}

/// The first violation found, in ascending breakpoint order; carries the
/// data needed to re-check it against the two distributions.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Condition (i) fails: the related jump of `G` is higher.
    JumpHeight {
        a: usize,
        b: usize,
        p_a: Scalar,
        q_b: Scalar,
    },
    /// Condition (ii) fails: `F`'s support gap is longer.
    IntervalLength {
        a: usize,
        b: usize,
        f_gap: Scalar,
        g_gap: Scalar,
    },
    /// `≤disp` fails structurally: an interior level of `F` is not a level of `G`.
    LevelMissing { a: usize, level: Scalar },
    /// `≤st` fails: the cdfs cross at `t`.
    Cdf { t: Scalar, f_t: Scalar, g_t: Scalar },
    /// `≤dil` fails: the centered stop-loss functions cross at `t`.
    StopLoss {
        t: Scalar,
        f_sl: Scalar,
        g_sl: Scalar,
    },
    /// Lattice comparison fails: `F`'s lattice span exceeds `G`'s.
    GapMismatch { c_f: Scalar, c_g: Scalar },
}

impl fmt::Display for Witness {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::JumpHeight { a, b, p_a, q_b } => write!(
                fm,
                "jump height q_{b} = {q_b} exceeds p_{a} = {p_a} on related pair ({a}, {b})"
            ),
            Witness::IntervalLength { a, b, f_gap, g_gap } => write!(
                fm,
                "support gap x_{a} - x_{} = {f_gap} exceeds y_{b} - y_{} = {g_gap} on related pair ({a}, {b})",
                a - 1,
                b - 1
            ),
            Witness::LevelMissing { a, level } => write!(
                fm,
                "cdf level F(x_{a}) = {level} is not a level of the other distribution"
            ),
            Witness::Cdf { t, f_t, g_t } => write!(
                fm,
                "cdfs cross at t = {t}: F(t) = {f_t} < G(t) = {g_t}"
            ),
            Witness::StopLoss { t, f_sl, g_sl } => write!(
                fm,
                "centered stop-loss crosses at t = {t}: {f_sl} > {g_sl}"
            ),
            Witness::GapMismatch { c_f, c_g } => write!(
                fm,
                "lattice span {c_f} exceeds lattice span {c_g}"
            ),
        }
    }
}

/// Comparison slack and approximate flag for a pair of distributions: zero
/// slack (exact decision) unless floats or truncation defects are present,
/// in which case the slack is the larger of `tol.eps` and the summed
/// defects (a truncated tail can displace that much mass).
pub fn slack_for(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> (Scalar, bool) {
    let defect = f.tail_defect() + g.tail_defect();
    let approximate = f.is_approx() || g.is_approx() || defect.is_positive();
    if !approximate {
        (Scalar::zero(), false)
    } else {
        (Scalar::max(defect, Scalar::approx(tol.eps)), true)
    }
}

fn eps_only(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> Scalar {
    if f.is_approx() || g.is_approx() {
        Scalar::approx(tol.eps)
    } else {
        Scalar::zero()
    }
}

fn check_jump_heights(
    f: &DiscreteDist,
    g: &DiscreteDist,
    join: &RelationSet,
    slack: &Scalar,
) -> Option<Witness> {
    for &(a, b) in &join.pairs {
        if !g.prob(b).le_within(f.prob(a), slack) {
            return Some(Witness::JumpHeight {
                a,
                b,
                p_a: f.prob(a).clone(),
                q_b: g.prob(b).clone(),
            });
        }
    }
    None
}

fn check_gaps(
    f: &DiscreteDist,
    g: &DiscreteDist,
    rel: &RelationSet,
    slack: &Scalar,
) -> Option<Witness> {
    for &(a, b) in &rel.pairs {
        let f_gap = f.gap(a);
        let g_gap = g.gap(b);
        if !f_gap.le_within(&g_gap, slack) {
            return Some(Witness::IntervalLength { a, b, f_gap, g_gap });
        }
    }
    None
}

fn leq_disc(f: &DiscreteDist, g: &DiscreteDist, tol: Tol, use_or: bool) -> OrderVerdict {
    let (slack, approximate) = slack_for(f, g, tol);
    let (join, and, or) = rel_all(f, g, tol);
    if let Some(w) = check_jump_heights(f, g, &join, &slack) {
        return OrderVerdict::fail(w, approximate);
    }
    let rel = if use_or { &or } else { &and };
    match check_gaps(f, g, rel, &slack) {
        Some(w) => OrderVerdict::fail(w, approximate),
        None => OrderVerdict::ok(approximate),
    }
}

/// The meet order `⪯∧`: condition (i) on the base relation and condition
/// (ii) on the meet relation.
pub fn leq_disc_and(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> OrderVerdict {
    leq_disc(f, g, tol, false)
}

/// The join order `⪯∨`: condition (i) on the base relation and condition
/// (ii) on the join relation. Implies the meet order.
pub fn leq_disc_or(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> OrderVerdict {
    leq_disc(f, g, tol, true)
}

/// Do all interior cdf levels of `F` occur among `G`'s levels? (The regime
/// in which the meet order coincides with `≤disp`.)
pub fn ranges_nested(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> bool {
    let eps = eps_only(f, g, tol);
    (1..f.n()).all(|a| level_index(g, &f.level(a), &eps).is_some())
}

fn level_index(d: &DiscreteDist, level: &Scalar, eps: &Scalar) -> Option<usize> {
    let cum = d.cum();
    let idx = cum.partition_point(|c| c < &(level - eps));
    (idx < cum.len() && cum[idx].eq_within(level, eps)).then_some(idx)
}

/// The classical dispersive order `≤disp` via its discrete
/// characterization: every interior level of `F` is a level of `G`, and at
/// each shared level the constant interval of `F` is no longer than that
/// of `G`.
pub fn leq_disp(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> OrderVerdict {
    let (slack, approximate) = slack_for(f, g, tol);
    let eps = eps_only(f, g, tol);
    for a in 1..f.n() {
        let level = f.level(a);
        match level_index(g, &level, &eps) {
            None => return OrderVerdict::fail(Witness::LevelMissing { a, level }, approximate),
            Some(j) => {
                // G(y_{j+1}) = level with j+1 <= m-1, so gap index j+2 is valid
                let f_gap = f.gap(a + 1);
                let g_gap = g.gap(j + 2);
                if !f_gap.le_within(&g_gap, &slack) {
                    return OrderVerdict::fail(
                        Witness::IntervalLength {
                            a: a + 1,
                            b: j + 2,
                            f_gap,
                            g_gap,
                        },
                        approximate,
                    );
                }
            }
        }
    }
    OrderVerdict::ok(approximate)
}

/// The usual stochastic order `F ≤st G`, i.e. `F(t) ≥ G(t)` for all `t`;
/// checked at every support point of either distribution, ascending.
pub fn leq_st(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> OrderVerdict {
    let (slack, approximate) = slack_for(f, g, tol);
    let mut ts: Vec<&Scalar> = f.support().iter().chain(g.support()).collect();
    ts.sort();
    ts.dedup();
    for t in ts {
        let f_t = f.cdf(t);
        let g_t = g.cdf(t);
        if !g_t.le_within(&f_t, &slack) {
            return OrderVerdict::fail(
                Witness::Cdf {
                    t: t.clone(),
                    f_t,
                    g_t,
                },
                approximate,
            );
        }
    }
    OrderVerdict::ok(approximate)
}

/// The dilation order `F ≤dil G`: `E[(X − EX − t)₊] ≤ E[(Y − EY − t)₊]`
/// for all `t`. Both sides are piecewise-linear convex with kinks at the
/// centered support points, so checking the union of kinks decides the
/// order; `t` in the witness refers to the centered coordinate.
pub fn leq_dil(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> OrderVerdict {
    let (slack, approximate) = slack_for(f, g, tol);
    let mu_f = f.mean();
    let mu_g = g.mean();
    let mut kinks: Vec<Scalar> = f
        .support()
        .iter()
        .map(|x| x - &mu_f)
        .chain(g.support().iter().map(|y| y - &mu_g))
        .collect();
    kinks.sort();
    kinks.dedup();
    for t in kinks {
        let f_sl = f.stop_loss(&(&t + &mu_f));
        let g_sl = g.stop_loss(&(&t + &mu_g));
        if !f_sl.le_within(&g_sl, &slack) {
            return OrderVerdict::fail(Witness::StopLoss { t, f_sl, g_sl }, approximate);
        }
    }
    OrderVerdict::ok(approximate)
}

/// The weak dispersive order: `|X − X′| ≤st |Y − Y′|` for independent
/// copies within each distribution.
pub fn leq_weak_disp(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> OrderVerdict {
    leq_st(&f.abs_diff_dist(), &g.abs_diff_dist(), tol)
}

/// If the two distributions are shifts of one another, the shift `λ` with
/// `G = F + λ`. Mutual meet-order comparability is equivalent to this.
pub fn shift_equivalence(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> Option<Scalar> {
    f.shift_of(g, tol)
}

/// Order decision specialized to lattice distributions, where the meet and
/// join orders coincide and reduce to condition (i) plus a comparison of
/// the two lattice spans. Errors if either input is not a lattice
/// distribution.
pub fn leq_disc_lattice(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> Result<OrderVerdict> {
    let c_f = f
        .is_lattice(tol)
        .ok_or_else(|| Error::NotLattice(f.label().to_string()))?;
    let c_g = g
        .is_lattice(tol)
        .ok_or_else(|| Error::NotLattice(g.label().to_string()))?;
    let (slack, approximate) = slack_for(f, g, tol);
    let (join, _, _) = rel_all(f, g, tol);
    if let Some(w) = check_jump_heights(f, g, &join, &slack) {
        return Ok(OrderVerdict::fail(w, approximate));
    }
    if !c_f.le_within(&c_g, &slack) {
        return Ok(OrderVerdict::fail(
            Witness::GapMismatch { c_f, c_g },
            approximate,
        ));
    }
    Ok(OrderVerdict::ok(approximate))
}

/// Check condition (i) through the quantile-density characterization:
/// `g(G⁻¹(p)) ≤ f(F⁻¹(p))` for all `p ∈ (0, 1)`. Both sides are constant
/// between consecutive levels of the merged level set, so the midpoints of
/// those segments decide the condition.
pub fn condition_i_via_density(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> bool {
    let (slack, _) = slack_for(f, g, tol);
    let eps = eps_only(f, g, tol);
    let mut levels: Vec<Scalar> = vec![f.level(0)];
    levels.extend(f.cum().iter().cloned());
    levels.extend(g.cum().iter().cloned());
    levels.sort();
    let mut ok = true;
    for w in levels.windows(2) {
        if w[1].le_within(&w[0], &eps) {
            continue; // coinciding levels: empty segment
        }
        let p = (&w[0] + &w[1]) * Scalar::ratio(1, 2);
        let fd = f
            .quantile_index_with(&p, tol)
            .map(|i| f.probs()[i].clone())
            .expect("midpoint lies in (0,1)");
        let gd = g
            .quantile_index_with(&p, tol)
            .map(|i| g.probs()[i].clone())
            .expect("midpoint lies in (0,1)");
        if !gd.le_within(&fd, &slack) {
            ok = false;
            break;
        }
    }
    ok
}

/// The orders this crate can decide between two distributions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    /// Classical dispersive order `≤disp`.
    Disp,
    /// Meet order `⪯∧`.
    And,
    /// Join order `⪯∨`.
    Or,
    /// Usual stochastic order `≤st`.
    St,
    /// Dilation order `≤dil`.
    Dil,
    /// Weak dispersive order.
    Weak,
}

impl OrderKind {
    pub const ALL: [OrderKind; 6] = [
        OrderKind::Disp,
        OrderKind::And,
        OrderKind::Or,
        OrderKind::St,
        OrderKind::Dil,
        OrderKind::Weak,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::Disp => "disp",
            OrderKind::And => "and",
            OrderKind::Or => "or",
            OrderKind::St => "st",
            OrderKind::Dil => "dil",
            OrderKind::Weak => "weak",
        }
    }

    pub fn parse(token: &str) -> Result<OrderKind> {
        match token.trim() {
            "disp" => Ok(OrderKind::Disp),
            "and" => Ok(OrderKind::And),
            "or" => Ok(OrderKind::Or),
            "st" => Ok(OrderKind::St),
            "dil" => Ok(OrderKind::Dil),
            "weak" => Ok(OrderKind::Weak),
            other => Err(Error::ParseError(format!(
                "unknown order `{other}` (expected disp, and, or, st, dil, weak)"
            ))),
        }
    }

    /// Parse a comma-separated token list such as `"disp,and,or"`.
    pub fn parse_list(tokens: &str) -> Result<Vec<OrderKind>> {
        tokens.split(',').map(OrderKind::parse).collect()
    }

    pub fn decide(&self, f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> OrderVerdict {
        match self {
            OrderKind::Disp => leq_disp(f, g, tol),
            OrderKind::And => leq_disc_and(f, g, tol),
            OrderKind::Or => leq_disc_or(f, g, tol),
            OrderKind::St => leq_st(f, g, tol),
            OrderKind::Dil => leq_dil(f, g, tol),
            OrderKind::Weak => leq_weak_disp(f, g, tol),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: u64) -> DiscreteDist {
        DiscreteDist::uniform_range(n).unwrap()
    }

    fn u12() -> DiscreteDist {
        DiscreteDist::uniform_set(vec![Scalar::int(1), Scalar::int(2)]).unwrap()
    }

    /// Two-point uniform on {0,1} against mass 1/2, 1/4, 1/4 on 0, 1, 3/2:
    /// the meet order holds but the join order fails.
    fn split_pair() -> (DiscreteDist, DiscreteDist) {
        let f = DiscreteDist::uniform_set(vec![Scalar::int(0), Scalar::int(1)]).unwrap();
        let g = DiscreteDist::from_pmf(vec![
            (Scalar::int(0), Scalar::ratio(1, 2)),
            (Scalar::int(1), Scalar::ratio(1, 4)),
            (Scalar::ratio(3, 2), Scalar::ratio(1, 4)),
        ])
        .unwrap();
        (f, g)
    }

    #[test]
    fn two_point_vs_five_point_uniform() {
        let tol = Tol::default();
        let disp = leq_disp(&u12(), &u(5), tol);
        assert!(!disp.holds);
        assert_eq!(
            disp.witness,
            Some(Witness::LevelMissing {
                a: 1,
                level: Scalar::ratio(1, 2)
            })
        );
        assert!(!disp.approximate);
        for kind in OrderKind::ALL {
            if kind != OrderKind::Disp {
                let v = kind.decide(&u12(), &u(5), tol);
                assert!(v.holds, "{} should hold", kind.name());
                assert!(!v.approximate);
            }
        }
    }

    #[test]
    fn two_point_vs_four_point_uniform_is_disp_ordered() {
        let v = leq_disp(&u12(), &u(4), Tol::default());
        assert!(v.holds);
        assert!(!v.approximate);
    }

    #[test]
    fn meet_without_join() {
        let (f, g) = split_pair();
        let tol = Tol::default();
        assert!(leq_disc_and(&f, &g, tol).holds);
        let or = leq_disc_or(&f, &g, tol);
        assert!(!or.holds);
        assert_eq!(
            or.witness,
            Some(Witness::IntervalLength {
                a: 2,
                b: 3,
                f_gap: Scalar::int(1),
                g_gap: Scalar::ratio(1, 2),
            })
        );
        // the classical order also holds here (levels nest)
        assert!(leq_disp(&f, &g, tol).holds);
        assert!(ranges_nested(&f, &g, tol));
    }

    #[test]
    fn join_implies_meet_on_samples() {
        let tol = Tol::default();
        let pairs = [
            (u12(), u(5)),
            (u12(), u(4)),
            (u(3), u(7)),
            (split_pair().0, split_pair().1),
        ];
        for (f, g) in pairs {
            if leq_disc_or(&f, &g, tol).holds {
                assert!(leq_disc_and(&f, &g, tol).holds);
            }
        }
    }

    #[test]
    fn jump_height_witness_comes_first() {
        let v = leq_disc_and(&u(5), &u12(), Tol::default());
        assert!(!v.holds);
        assert_eq!(
            v.witness,
            Some(Witness::JumpHeight {
                a: 1,
                b: 1,
                p_a: Scalar::ratio(1, 5),
                q_b: Scalar::ratio(1, 2),
            })
        );
    }

    #[test]
    fn stochastic_order_and_first_crossing() {
        let tol = Tol::default();
        assert!(leq_st(&u12(), &u(5), tol).holds);
        let v = leq_st(&u(4), &u12(), tol);
        assert!(!v.holds);
        assert_eq!(
            v.witness,
            Some(Witness::Cdf {
                t: Scalar::int(1),
                f_t: Scalar::ratio(1, 4),
                g_t: Scalar::ratio(1, 2),
            })
        );
    }

    #[test]
    fn reflexivity() {
        let tol = Tol::default();
        for d in [u12(), u(5), split_pair().1] {
            for kind in OrderKind::ALL {
                assert!(kind.decide(&d, &d, tol).holds, "{} reflexive", kind.name());
            }
        }
    }

    #[test]
    fn dilation_order_and_witness() {
        let tol = Tol::default();
        assert!(leq_dil(&u12(), &u(5), tol).holds);
        let v = leq_dil(&u(5), &u12(), tol);
        assert!(!v.holds);
        assert!(matches!(v.witness, Some(Witness::StopLoss { .. })));
    }

    #[test]
    fn weak_dispersive_order() {
        let tol = Tol::default();
        assert!(leq_weak_disp(&u12(), &u(5), tol).holds);
        assert!(!leq_weak_disp(&u(5), &u12(), tol).holds);
    }

    #[test]
    fn shift_equivalence_and_mutual_meet_order() {
        let tol = Tol::default();
        let f = split_pair().1;
        let g = f.affine(&Scalar::one(), &Scalar::ratio(7, 3)).unwrap();
        assert_eq!(shift_equivalence(&f, &g, tol), Some(Scalar::ratio(7, 3)));
        assert!(leq_disc_and(&f, &g, tol).holds);
        assert!(leq_disc_and(&g, &f, tol).holds);
        assert_eq!(shift_equivalence(&f, &u(3), tol), None);
    }

    #[test]
    fn lattice_comparison() {
        let tol = Tol::default();
        let v = leq_disc_lattice(&u12(), &u(5), tol).unwrap();
        assert!(v.holds);
        // wider lattice span cannot precede a narrower one
        let wide = DiscreteDist::uniform_set(vec![Scalar::int(0), Scalar::int(4)]).unwrap();
        let v = leq_disc_lattice(&wide, &u(5), tol).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.witness,
            Some(Witness::GapMismatch {
                c_f: Scalar::int(4),
                c_g: Scalar::int(1),
            })
        );
        let (_, non_lattice) = split_pair();
        assert!(matches!(
            leq_disc_lattice(&u12(), &non_lattice, tol),
            Err(Error::NotLattice(_))
        ));
        // on lattice pairs all three coincide
        for (f, g) in [(u12(), u(5)), (u(5), u12()), (u(3), u(4))] {
            let l = leq_disc_lattice(&f, &g, tol).unwrap().holds;
            assert_eq!(l, leq_disc_and(&f, &g, tol).holds);
            assert_eq!(l, leq_disc_or(&f, &g, tol).holds);
        }
    }

    #[test]
    fn density_characterization_matches_condition_i() {
        let tol = Tol::default();
        let thirds = DiscreteDist::from_pmf(
            [1, 2, 3]
                .iter()
                .map(|&v| (Scalar::int(v), Scalar::ratio(1, 3)))
                .collect(),
        )
        .unwrap();
        let sixteenths = DiscreteDist::from_pmf(
            [
                (1, 4),
                (2, 1),
                (3, 1),
                (4, 2),
                (5, 2),
                (6, 1),
                (7, 1),
                (8, 4),
            ]
            .iter()
            .map(|&(v, p)| (Scalar::int(v), Scalar::ratio(p, 16)))
            .collect(),
        )
        .unwrap();
        assert!(condition_i_via_density(&u12(), &u(5), tol));
        assert!(!condition_i_via_density(&u(5), &u12(), tol));
        assert!(condition_i_via_density(&thirds, &sixteenths, tol));
        let (f, g) = (split_pair().0, split_pair().1);
        assert!(condition_i_via_density(&f, &g, tol));
    }

    #[test]
    fn nested_ranges_probe() {
        let tol = Tol::default();
        assert!(ranges_nested(&u12(), &u(4), tol));
        assert!(!ranges_nested(&u12(), &u(5), tol));
        assert!(ranges_nested(&u12(), &u12(), tol));
    }

    #[test]
    fn truncated_comparison_is_approximate_but_holds() {
        let tol = Tol::default();
        let f = DiscreteDist::geometric(Scalar::ratio(1, 2), Scalar::approx(1e-3)).unwrap();
        let g = DiscreteDist::geometric(Scalar::ratio(1, 4), Scalar::approx(1e-3)).unwrap();
        let v = leq_disc_and(&f, &g, tol);
        assert!(v.holds, "witness: {:?}", v.witness);
        assert!(v.approximate);
        let (slack, approximate) = slack_for(&f, &g, tol);
        assert!(approximate);
        assert_eq!(slack, f.tail_defect() + g.tail_defect());
    }

    #[test]
    fn order_token_parsing() {
        assert_eq!(
            OrderKind::parse_list("disp,and,or,st,dil,weak").unwrap(),
            OrderKind::ALL.to_vec()
        );
        assert!(OrderKind::parse_list("disp,bogus").is_err());
    }
}
