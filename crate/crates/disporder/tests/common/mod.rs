//! Helpers shared by the integration suites.
#![allow(dead_code)]

use disporder::dist::DiscreteDist;
use disporder::experiments::random::{self, GenConfig};
use disporder::orders::OrderKind;
use disporder::scalar::{Scalar, Tol};
use rand_chacha::ChaCha8Rng;

/// Exact pmf on integer points with one common denominator.
pub fn pmf(label: &str, values: &[i64], nums: &[i64], den: i64) -> DiscreteDist {
    assert_eq!(values.len(), nums.len());
    let points = values
        .iter()
        .zip(nums)
        .map(|(&v, &w)| (Scalar::int(v), Scalar::ratio(w, den)))
        .collect();
    DiscreteDist::from_pmf_with(label, points, Tol::default()).expect("valid pmf")
}

/// One pair from the five-way generator mix: translate, integer affine
/// image, merged jumps, refine-and-stretch, independent draws.
pub fn mixed_pair(i: usize, cfg: &GenConfig, rng: &mut ChaCha8Rng) -> (DiscreteDist, DiscreteDist) {
    match i % 5 {
        0 => random::shift_pair(cfg, rng),
        1 => random::scale_pair(cfg, rng),
        2 => random::merged_jump_pair(cfg, rng),
        3 => {
            let f = random::random_dist(cfg, rng);
            let g = random::refine_stretch_of(&f, cfg, rng);
            (f, g)
        }
        _ => (random::random_dist(cfg, rng), random::random_dist(cfg, rng)),
    }
}

/// Collect `target` generated pairs on which the meet order holds.
pub fn meet_pool(seed: u64, target: usize, tol: Tol) -> Vec<(DiscreteDist, DiscreteDist)> {
    let cfg = GenConfig::default();
    let mut rng = random::rng(seed);
    let mut out = Vec::with_capacity(target);
    let mut i = 0usize;
    while out.len() < target {
        let (f, g) = mixed_pair(i, &cfg, &mut rng);
        i += 1;
        if OrderKind::And.decide(&f, &g, tol).holds {
            out.push((f, g));
        }
        assert!(
            i < target * 100,
            "generator mix failed to produce enough ordered pairs"
        );
    }
    out
}
