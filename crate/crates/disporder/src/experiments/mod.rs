//! Reproducible experiment drivers.
//!
//! * [`datasets`] — bundled two-sample count tables;
//! * [`catalog`] — self-verifying example and counterexample pairs;
//! * [`random`] — seeded generators for distributions and structured pairs;
//! * [`audit`] — randomized measure-preservation audits over the meet order;
//! * [`transitivity`] — search for (non-)transitivity witnesses;
//! * [`curves`] — measure curves over parametric families and the uniform
//!   order scan;
//! * [`sweep`] — the geometric-parameter region sweep with CSV/SVG output.

pub mod audit;
pub mod catalog;
pub mod curves;
pub mod datasets;
pub mod random;
pub mod sweep;
pub mod transitivity;

pub use audit::{preservation_audit, AuditReport, Violation};
pub use catalog::{by_name, catalog, verify_catalog, CounterexampleCase, Expectation};
pub use curves::{measure_curves, uniform_order_scan, CurveTable, Family, ScanRow};
pub use datasets::{dataset_a, dataset_b};
pub use random::{random_dist, GenConfig};
pub use sweep::{geom_region_theoretical, geom_sweep, CellVerdict, SweepCell, SweepGrid};
pub use transitivity::{transitivity_search, SearchReport};
