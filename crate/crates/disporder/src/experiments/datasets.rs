//! Bundled empirical count tables.
//!
//! Two two-sample frequency tables of small non-negative integer counts are
//! shipped with the crate so that the order comparisons and measure
//! evaluations on real data are reproducible offline. Each table lists, per
//! value, the absolute frequencies observed in two samples; zero rows are
//! kept verbatim in the raw tables and dropped during ingestion.

use crate::dist::DiscreteDist;
use crate::scalar::Scalar;

/// First table: `(value, count in sample 1, count in sample 2)`.
/// Sample sizes 28 and 50.
pub const TABLE_A: [(i64, u64, u64); 15] = [
    (0, 15, 17),
    (1, 5, 7),
    (2, 4, 7),
    (3, 2, 3),
    (4, 2, 3),
    (5, 0, 1),
    (6, 0, 4),
    (7, 0, 1),
    (9, 0, 1),
    (10, 0, 1),
    (11, 0, 1),
    (12, 0, 1),
    (19, 0, 1),
    (20, 0, 1),
    (48, 0, 1),
];

/// Second table: `(value, count in sample 1, count in sample 2)`.
/// Sample sizes 43 and 100.
pub const TABLE_B: [(i64, u64, u64); 12] = [
    (0, 32, 61),
    (1, 8, 16),
    (2, 1, 10),
    (3, 2, 1),
    (4, 0, 2),
    (5, 0, 1),
    (6, 0, 1),
    (7, 0, 1),
    (8, 0, 2),
    (10, 0, 2),
    (11, 0, 2),
    (12, 0, 1),
];

fn load(label: &str, rows: &[(i64, u64, u64)], which: usize) -> DiscreteDist {
    let counts: Vec<(Scalar, u64)> = rows
        .iter()
        .map(|&(v, c1, c2)| (Scalar::int(v), if which == 1 { c1 } else { c2 }))
        .collect();
    // The bundled tables are static and valid by construction.
    DiscreteDist::from_samples(counts)
        .expect("bundled count table is valid")
        .relabel(label)
}

/// Both samples of the first table as empirical distributions
/// (`counts-a-1`, `counts-a-2`), with exact rational probabilities and the
/// sample size recorded for bias-corrected measures.
pub fn dataset_a() -> (DiscreteDist, DiscreteDist) {
    (
        load("counts-a-1", &TABLE_A, 1),
        load("counts-a-2", &TABLE_A, 2),
    )
}

/// Both samples of the second table (`counts-b-1`, `counts-b-2`).
pub fn dataset_b() -> (DiscreteDist, DiscreteDist) {
    (
        load("counts-b-1", &TABLE_B, 1),
        load("counts-b-2", &TABLE_B, 2),
    )
}

/// All four bundled distributions, keyed by label.
pub fn all() -> Vec<DiscreteDist> {
    let (a1, a2) = dataset_a();
    let (b1, b2) = dataset_b();
    vec![a1, a2, b1, b2]
}

/// Look up a bundled distribution by its label.
pub fn by_label(label: &str) -> Option<DiscreteDist> {
    all().into_iter().find(|d| d.label() == label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_load_with_expected_shape() {
        let (a1, a2) = dataset_a();
        assert_eq!(a1.n(), 5); // zero rows dropped
        assert_eq!(a1.sample_size(), Some(28));
        assert_eq!(*a1.prob(1), Scalar::ratio(15, 28));
        assert_eq!(a2.n(), 15);
        assert_eq!(a2.sample_size(), Some(50));
        assert_eq!(*a2.max_support(), Scalar::int(48));

        let (b1, b2) = dataset_b();
        assert_eq!(b1.n(), 4);
        assert_eq!(b1.sample_size(), Some(43));
        assert_eq!(b2.n(), 12);
        assert_eq!(b2.sample_size(), Some(100));
        assert_eq!(*b2.prob(1), Scalar::ratio(61, 100));
    }

    #[test]
    fn lookup_by_label() {
        assert!(by_label("counts-b-2").is_some());
        assert!(by_label("nope").is_none());
        assert!(all().iter().all(|d| !d.is_approx()));
    }
}
