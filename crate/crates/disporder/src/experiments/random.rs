//! Seeded random generators for distributions and order-related pairs.
//!
//! All generators are deterministic functions of the supplied RNG state and
//! produce exact-mode distributions with rational probabilities, so that
//! randomized audits are reproducible and all comparisons stay exact.
//!
//! Besides fully random draws there are structured pair builders whose
//! construction *guarantees* a property by design (a pure shift, an affine
//! stretch, a jump refinement, a jump merge); audits still re-verify the
//! guaranteed property rather than trusting the construction.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dist::DiscreteDist;
use crate::scalar::Scalar;

/// Bounds for the random-distribution generator.
///
/// Support points live on the grid `{value_min, …, value_max} / grid_denom`;
/// probabilities are integer weights `1..=max_weight` normalized by their
/// sum. With `lattice_only` the support is equally spaced on the grid.
#[derive(Debug, Clone)]
pub struct GenConfig {
    pub max_atoms: usize,
    pub max_weight: u64,
    pub grid_denom: i64,
    pub value_min: i64,
    pub value_max: i64,
    pub lattice_only: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_atoms: 5,
            max_weight: 8,
            grid_denom: 2,
            value_min: 0,
            value_max: 12,
            lattice_only: false,
        }
    }
}

impl GenConfig {
    /// Same grid, but equally spaced supports only.
    pub fn lattice(mut self) -> Self {
        self.lattice_only = true;
        self
    }
}

/// A deterministically seeded RNG for all experiment drivers.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draw one exact-mode distribution within the configured bounds.
pub fn random_dist(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> DiscreteDist {
    let span = (cfg.value_max - cfg.value_min) as usize + 1;
    let k = rng.random_range(2..=cfg.max_atoms.max(2).min(span));
    let numerators: Vec<i64> = if cfg.lattice_only {
        let mut gap = rng.random_range(1..=3i64);
        while cfg.value_min + (k as i64 - 1) * gap > cfg.value_max {
            gap -= 1; // always reachable: gap 1 fits because k <= span
        }
        let start = rng.random_range(cfg.value_min..=cfg.value_max - (k as i64 - 1) * gap);
        (0..k as i64).map(|i| start + i * gap).collect()
    } else {
        let mut seen = std::collections::BTreeSet::new();
        while seen.len() < k {
            seen.insert(rng.random_range(cfg.value_min..=cfg.value_max));
        }
        seen.into_iter().collect()
    };
    let weights: Vec<u64> = (0..k)
        .map(|_| rng.random_range(1..=cfg.max_weight))
        .collect();
    let total: u64 = weights.iter().sum();
    let points = numerators
        .iter()
        .zip(&weights)
        .map(|(&num, &w)| {
            (
                Scalar::ratio(num, cfg.grid_denom),
                Scalar::ratio(w as i64, total as i64),
            )
        })
        .collect();
    DiscreteDist::from_pmf(points)
        .expect("generator respects canonical invariants")
        .relabel("random")
}

/// `(F, F + δ)` for a random grid shift δ: the two laws are mutually
/// comparable in both discrete dispersive orders.
pub fn shift_pair(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> (DiscreteDist, DiscreteDist) {
    let f = random_dist(cfg, rng);
    let delta = Scalar::ratio(rng.random_range(-6..=6), cfg.grid_denom);
    let g = f.affine(&Scalar::one(), &delta).expect("unit scale");
    (f, g)
}

/// `(F, aF + b)` with integer `a ≥ 1`: G has the same jump levels as F and
/// every constant-interval length multiplied by `a`, so `F ⪯∧ G` and
/// `F ⪯∨ G` hold by construction.
pub fn scale_pair(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> (DiscreteDist, DiscreteDist) {
    let f = random_dist(cfg, rng);
    let a = Scalar::int(rng.random_range(1..=3));
    let b = Scalar::ratio(rng.random_range(-4..=4), cfg.grid_denom);
    let g = f.affine(&a, &b).expect("nonzero scale");
    (f, g)
}

/// Split every jump of `f` into one or two parts and lay the refined jumps
/// over a support whose gaps all dominate the largest gap of `f`.
///
/// The interior levels of `f` are then a subset of those of the result, each
/// jump of the result fits inside a jump of `f`, and every constant-interval
/// length dominates every one of `f`'s — hence `f ⪯∨ result` (and a fortiori
/// `f ⪯∧ result`) holds by construction.
pub fn refine_stretch_of(f: &DiscreteDist, cfg: &GenConfig, rng: &mut ChaCha8Rng) -> DiscreteDist {
    let mut probs: Vec<Scalar> = Vec::new();
    for a in 1..=f.n() {
        let p = f.prob(a).clone();
        if rng.random_bool(0.5) {
            // split p in two positive rational parts
            let m = rng.random_range(2..=4i64);
            let j = rng.random_range(1..m);
            let part = &p * &Scalar::ratio(j, m);
            probs.push(part.clone());
            probs.push(&p - &part);
        } else {
            probs.push(p);
        }
    }
    // gaps in grid units: strictly dominate the widest gap of f
    let max_gap = (2..=f.n()).map(|a| f.gap(a)).max().expect("n >= 2");
    let mut value = Scalar::ratio(
        rng.random_range(cfg.value_min..=cfg.value_max),
        cfg.grid_denom,
    );
    let mut points = Vec::new();
    for p in probs {
        points.push((value.clone(), p));
        let extra = Scalar::ratio(rng.random_range(0..=4), cfg.grid_denom);
        value = &(&value + &max_gap) + &extra;
    }
    DiscreteDist::from_pmf(points)
        .expect("refinement preserves canonical invariants")
        .relabel("refined")
}

/// Merge a random set of adjacent jumps of `g`: the result has interior
/// levels forming a subset of `g`'s interior levels (the premise under which
/// the two discrete dispersive orders are equivalent).
pub fn merge_jumps_of(g: &DiscreteDist, rng: &mut ChaCha8Rng) -> DiscreteDist {
    let n = g.n();
    // keep a random subset of the n-1 interior boundaries, dropping at least
    // one but leaving at least one (so 2 <= result atoms < n)
    let mut kept: Vec<usize> = (1..n).filter(|_| rng.random_bool(0.6)).collect();
    if kept.len() == n - 1 {
        let drop = rng.random_range(0..kept.len());
        kept.remove(drop);
    }
    if kept.is_empty() {
        kept.push(rng.random_range(1..n));
    }
    kept.push(n); // sentinel: last block always ends at the final atom
    let mut points = Vec::new();
    let mut start = 1usize;
    for &end in &kept {
        let mut mass = Scalar::zero();
        for a in start..=end {
            mass = &mass + g.prob(a);
        }
        points.push((g.point(end).clone(), mass));
        start = end + 1;
    }
    DiscreteDist::from_pmf(points)
        .expect("merging preserves canonical invariants")
        .relabel("merged")
}

/// Pair `(F, G)` where F is obtained from G by merging adjacent jumps.
pub fn merged_jump_pair(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> (DiscreteDist, DiscreteDist) {
    // need at least 3 atoms for a non-trivial merge
    let mut g = random_dist(cfg, rng);
    while g.n() < 3 {
        g = random_dist(cfg, rng);
    }
    let f = merge_jumps_of(&g, rng);
    (f, g)
}

/// Two independent equally-spaced (lattice) distributions.
pub fn random_lattice_pair(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> (DiscreteDist, DiscreteDist) {
    let lattice = cfg.clone().lattice();
    (random_dist(&lattice, rng), random_dist(&lattice, rng))
}
