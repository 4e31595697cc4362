//! Index relations between two discrete distributions.
//!
//! Write `F` with atoms `x_1 < … < x_n` and `G` with atoms `y_1 < … < y_m`.
//! Index `a` of `F` relates to index `b` of `G` (written `a ⋈ b`) when the
//! open cdf jump intervals `(F(x_{a−1}), F(x_a))` and `(G(y_{b−1}), G(y_b))`
//! intersect; intervals that merely touch at a shared level do not relate.
//! Two derived relations restrict to indices `a, b ≥ 2`:
//!
//! * the meet relation: `a ⋈∧ b ⟺ a ⋈ b and a−1 ⋈ b−1`,
//! * the join relation: `a ⋈∨ b ⟺ a ⋈ b or a−1 ⋈ b−1`.
//!
//! In approx mode, levels within `tol.eps` of each other are treated as
//! equal (so within-tolerance overlap counts as touching).

use std::collections::HashSet;

use serde::Serialize;

use crate::dist::DiscreteDist;
use crate::scalar::{Scalar, Tol};
use crate::{Error, Result};

/// Which of the three relations a [`RelationSet`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelKind {
    /// The base overlap relation `⋈`.
    Join,
    /// The meet restriction `⋈∧` (both the pair and its predecessor relate).
    And,
    /// The join restriction `⋈∨` (the pair or its predecessor relates).
    Or,
}

/// A finite relation as a sorted list of 1-based index pairs `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationSet {
    pub kind: RelKind,
    pub pairs: Vec<(usize, usize)>,
}

impl RelationSet {
    fn new(kind: RelKind, mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        RelationSet { kind, pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.binary_search(&(a, b)).is_ok()
    }

    /// The same relation with the two distributions swapped.
    pub fn transpose(&self) -> RelationSet {
        RelationSet::new(self.kind, self.pairs.iter().map(|&(a, b)| (b, a)).collect())
    }
}

/// Nearest neighbours of one lower jump level inside the other
/// distribution's interior cdf range.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NeighbourSet {
    /// The 1-based index `a ≥ 2` whose lower level was looked up.
    pub owner: usize,
    /// One or two interior levels of the other distribution, sorted.
    pub levels: Vec<Scalar>,
}

fn eps_slack(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> Scalar {
    if f.is_approx() || g.is_approx() {
        Scalar::approx(tol.eps)
    } else {
        Scalar::zero()
    }
}

/// The base relation `⋈` computed by a single merge over the two level
/// sequences, `O(n + m)`.
pub fn rel_join(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> RelationSet {
    let eps = eps_slack(f, g, tol);
    let (n, m) = (f.n(), g.n());
    let mut pairs = Vec::new();
    let (mut a, mut b) = (1usize, 1usize);
    while a <= n && b <= m {
        let lo = Scalar::max(f.level(a - 1), g.level(b - 1));
        let hi = Scalar::min(f.level(a), g.level(b));
        if !hi.le_within(&lo, &eps) {
            pairs.push((a, b));
        }
        let (fa, gb) = (f.level(a), g.level(b));
        if fa.eq_within(&gb, &eps) {
            a += 1;
            b += 1;
        } else if fa < gb {
            a += 1;
        } else {
            b += 1;
        }
    }
    RelationSet::new(RelKind::Join, pairs)
}

/// Quadratic reference implementation of [`rel_join`] (every index pair is
/// tested directly against the definition). Retained for cross-checking.
pub fn rel_join_naive(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> RelationSet {
    let eps = eps_slack(f, g, tol);
    let mut pairs = Vec::new();
    for a in 1..=f.n() {
        for b in 1..=g.n() {
            let lo = Scalar::max(f.level(a - 1), g.level(b - 1));
            let hi = Scalar::min(f.level(a), g.level(b));
            if !hi.le_within(&lo, &eps) {
                pairs.push((a, b));
            }
        }
    }
    RelationSet::new(RelKind::Join, pairs)
}

fn derive_and(join: &RelationSet, _n: usize, _m: usize) -> RelationSet {
    let set: HashSet<(usize, usize)> = join.pairs.iter().copied().collect();
    let pairs = join
        .pairs
        .iter()
        .filter(|&&(a, b)| set.contains(&(a + 1, b + 1)))
        .map(|&(a, b)| (a + 1, b + 1))
        .collect();
    RelationSet::new(RelKind::And, pairs)
}

fn derive_or(join: &RelationSet, n: usize, m: usize) -> RelationSet {
    let mut pairs = Vec::new();
    for &(a, b) in &join.pairs {
        if a >= 2 && b >= 2 {
            pairs.push((a, b));
        }
        if a < n && b < m {
            pairs.push((a + 1, b + 1));
        }
    }
    RelationSet::new(RelKind::Or, pairs)
}

/// The meet relation `⋈∧` on indices `a, b ≥ 2`.
pub fn rel_and(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> RelationSet {
    derive_and(&rel_join(f, g, tol), f.n(), g.n())
}

/// The join relation `⋈∨` on indices `a, b ≥ 2`.
pub fn rel_or(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> RelationSet {
    derive_or(&rel_join(f, g, tol), f.n(), g.n())
}

/// All three relations from one merge pass.
pub fn rel_all(
    f: &DiscreteDist,
    g: &DiscreteDist,
    tol: Tol,
) -> (RelationSet, RelationSet, RelationSet) {
    let join = rel_join(f, g, tol);
    let and = derive_and(&join, f.n(), g.n());
    let or = derive_or(&join, f.n(), g.n());
    (join, and, or)
}

/// Nearest neighbours of `F`'s lower level `L = F(x_{a−1})` (for `a ≥ 2`)
/// among `G`'s interior levels `{G(y_1), …, G(y_{m−1})}`: the largest
/// interior level `≤ L` and the smallest interior level `≥ L`, whichever
/// exist (at least one always does).
pub fn nn_set(f: &DiscreteDist, g: &DiscreteDist, a: usize, tol: Tol) -> Result<NeighbourSet> {
    if a < 2 || a > f.n() {
        return Err(Error::IndexOutOfRange {
            index: a,
            min: 2,
            max: f.n(),
        });
    }
    let eps = eps_slack(f, g, tol);
    let level = f.level(a - 1);
    let interior = &g.cum()[..g.n() - 1];
    let mut levels = Vec::new();
    // largest interior level <= L (within eps)
    let below = interior.partition_point(|c| c.le_within(&level, &eps));
    if below > 0 {
        levels.push(interior[below - 1].clone());
    }
    // smallest interior level >= L (within eps)
    let above = interior.partition_point(|c| !level.le_within(c, &eps));
    if above < interior.len() {
        let cand = interior[above].clone();
        if levels
            .last()
            .map(|l| !l.eq_within(&cand, &eps))
            .unwrap_or(true)
        {
            levels.push(cand);
        }
    }
    debug_assert!(!levels.is_empty());
    Ok(NeighbourSet { owner: a, levels })
}

fn level_index(d: &DiscreteDist, level: &Scalar, eps: &Scalar) -> Option<usize> {
    let cum = d.cum();
    let idx = cum.partition_point(|c| c < &(level - eps));
    (idx < cum.len() && cum[idx].eq_within(level, eps)).then_some(idx)
}

fn check_condition_one(
    f: &DiscreteDist,
    g: &DiscreteDist,
    join: &RelationSet,
    eps: &Scalar,
) -> Result<()> {
    for &(a, b) in &join.pairs {
        if !g.prob(b).le_within(f.prob(a), eps) {
            return Err(Error::ConditionOneViolated {
                a,
                b,
                p_a: f.prob(a).to_string(),
                q_b: g.prob(b).to_string(),
            });
        }
    }
    Ok(())
}

/// Reconstruct the meet relation `⋈∧` from nearest-neighbour sets. Valid
/// only when `G`'s jump heights do not exceed `F`'s over the base relation;
/// the first violating pair is reported otherwise. For each `a ≥ 2` the
/// meet partners are exactly the indices `b` whose lower level `G(y_{b−1})`
/// lies in the neighbour set of `a`.
pub fn rel_and_via_nn(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> Result<RelationSet> {
    let eps = eps_slack(f, g, tol);
    check_condition_one(f, g, &rel_join(f, g, tol), &eps)?;
    let mut pairs = Vec::new();
    for a in 2..=f.n() {
        for level in nn_set(f, g, a, tol)?.levels {
            if let Some(j) = level_index(g, &level, &eps) {
                pairs.push((a, j + 2));
            }
        }
    }
    Ok(RelationSet::new(RelKind::And, pairs))
}

/// Reconstruct the join relation `⋈∨` from nearest-neighbour sets with the
/// roles reversed: for each `b ≥ 2`, the partners are the indices `α` whose
/// lower level `F(x_{α−1})` lies in the neighbour set of `b` computed
/// against `F`. Valid under the same jump-height condition as
/// [`rel_and_via_nn`].
pub fn rel_or_via_nn(f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> Result<RelationSet> {
    let eps = eps_slack(f, g, tol);
    check_condition_one(f, g, &rel_join(f, g, tol), &eps)?;
    let mut pairs = Vec::new();
    for b in 2..=g.n() {
        for level in nn_set(g, f, b, tol)?.levels {
            if let Some(i) = level_index(f, &level, &eps) {
                pairs.push((i + 2, b));
            }
        }
    }
    Ok(RelationSet::new(RelKind::Or, pairs))
}
