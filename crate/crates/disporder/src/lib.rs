//! Dispersion orders and dispersion measures for univariate discrete distributions.
//!
//! This crate works with finite discrete distributions given by their
//! identifying sequence (sorted support points with positive jump heights) and
//! provides:
//!
//! * the discrete dispersive orders `⪯∧` and `⪯∨`, built from the
//!   dispersion-relevant index relations `⋈`, `⋈∧`, `⋈∨` between the open
//!   cdf-jump intervals of two distributions ([`relations`], [`orders`]);
//! * the classical dispersive order `≤disp`, the usual stochastic order
//!   `≤st`, the dilation order `≤dil` (via stop-loss transforms of the
//!   centered distributions), and the weak dispersive order (stochastic
//!   comparison of `|X − X′|` for independent copies);
//! * six dispersion measures — standard deviation, Gini mean difference,
//!   mean absolute deviation about the mean and about the median,
//!   interquantile and interexpectile ranges ([`measures`]);
//! * family constructors (discrete uniform, binomial, truncated geometric and
//!   Poisson), empirical ingestion from sample counts, and elementary
//!   transforms ([`dist`]);
//! * reproducible experiments: a verified counterexample catalog, randomized
//!   preservation audits, a transitivity search, measure curves over
//!   parametric families, and a geometric-parameter region sweep with CSV and
//!   SVG output ([`experiments`]).
//!
//! Arithmetic is dual-mode: exact big rationals whenever the inputs are
//! rational, IEEE floats with an absolute comparison tolerance otherwise
//! ([`scalar::Scalar`]). Order verdicts carry a re-checkable witness on
//! failure and an `approximate` flag whenever floats or truncated tails are
//! involved.
//!
//! # Example
//!
//! ```
//! use disporder::{DiscreteDist, OrderKind, Scalar, Tol};
//!
//! // U{1,2} against U{1,…,5}: the two-point law is less dispersed in the
//! // meet order, but the classical dispersive order cannot compare them.
//! let coarse = DiscreteDist::uniform_range(2)?;
//! let fine = DiscreteDist::uniform_range(5)?;
//! let tol = Tol::default();
//! assert!(OrderKind::And.decide(&coarse, &fine, tol).holds);
//! assert!(!OrderKind::Disp.decide(&coarse, &fine, tol).holds);
//!
//! // Measures evaluate exactly on rational inputs.
//! assert_eq!(disporder::measures::gmd(&fine), Scalar::ratio(8, 5));
//! # Ok::<(), disporder::Error>(())
//! ```

pub mod cli;
pub mod dist;
pub mod experiments;
pub mod io;
pub mod measures;
pub mod orders;
pub mod relations;
pub mod scalar;

pub use dist::DiscreteDist;
pub use orders::{OrderKind, OrderVerdict, Witness};
pub use relations::{NeighbourSet, RelKind, RelationSet};
pub use scalar::{Scalar, Tol};

/// Errors produced by validation, parsing and order/measure preconditions.
///
/// Order verdicts are *data* (a failing order is not an error); errors are
/// reserved for malformed inputs and violated preconditions.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Probabilities do not sum to one (exactly in exact mode, within the
    /// comparison tolerance in approx mode).
    #[error("probabilities sum to {got}, expected 1")]
    SumNotOne { got: String },

    /// A distribution needs at least two distinct support points.
    #[error("distribution needs at least two atoms, got {got}")]
    FewerThanTwoAtoms { got: usize },

    /// An atom with zero or negative probability was supplied.
    #[error("atom at value {value} has non-positive probability {prob}")]
    NonPositiveProb { value: String, prob: String },

    /// A constructor or transform parameter is outside its admissible range.
    #[error("bad parameter: {0}")]
    BadParam(String),

    /// A set constructor received a repeated value.
    #[error("duplicate support value {0}")]
    DuplicateValue(String),

    /// A probability level must lie strictly between 0 and 1 (or inside the
    /// stricter range documented by the operation).
    #[error("probability level {0} outside the admissible open range")]
    BadProbability(String),

    /// An index-based lookup used an index outside `{min, …, max}`.
    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },

    /// A nearest-neighbour reconstruction was requested although jump-height
    /// condition (i) fails, so the reconstruction is not guaranteed valid.
    #[error("jump-height condition (i) fails at pair ({a}, {b}): q_b = {q_b} exceeds p_a = {p_a}")]
    ConditionOneViolated {
        a: usize,
        b: usize,
        p_a: String,
        q_b: String,
    },

    /// A lattice-only operation received a non-lattice distribution.
    #[error("distribution '{0}' is not a lattice distribution")]
    NotLattice(String),

    /// Malformed textual input (JSON, CSV, numeric literals, flag values).
    #[error("parse error: {0}")]
    ParseError(String),

    /// File-system failure while reading inputs or writing artifacts.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
