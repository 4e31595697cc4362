//! Randomized preservation audits: does a dispersion measure respect the
//! meet order?
//!
//! The audit draws distribution pairs from a mix of generators (the bundled
//! catalog first, then structured and fully random draws), keeps those where
//! `F ⪯∧ G` actually holds — the order is always re-verified, never trusted
//! from the construction — and checks `τ(F) ≤ τ(G)`. Strict reversals are
//! returned as violations. A run that accepted no ordered pair at all is
//! inconclusive rather than passing.

use rand_chacha::ChaCha8Rng;

use crate::dist::DiscreteDist;
use crate::measures::{self, MeasureKind, MeasureOpts, MeasureSpec, QuantileVariant};
use crate::orders;
use crate::scalar::{Scalar, Tol};
use crate::Result;

use super::catalog;
use super::random::{self, GenConfig};

/// A strict measure reversal on a verified `F ⪯∧ G` pair.
#[derive(Debug, Clone)]
pub struct Violation {
    pub f: DiscreteDist,
    pub g: DiscreteDist,
    pub tau_f: Scalar,
    pub tau_g: Scalar,
}

/// Outcome of one audit run.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub spec: MeasureSpec,
    pub variant: QuantileVariant,
    pub examined: u64,
    pub accepted: u64,
    pub violations: Vec<Violation>,
}

impl AuditReport {
    /// An audit with zero accepted pairs proves nothing.
    pub fn conclusive(&self) -> bool {
        self.accepted > 0
    }
}

/// For the standard deviation the verdict is decided on the exact variances
/// (the square root is evaluated in floating point only for display);
/// everything else is compared as evaluated.
fn comparison_values(
    d: &DiscreteDist,
    spec: &MeasureSpec,
    opts: &MeasureOpts,
) -> Result<(Scalar, Scalar)> {
    let shown = measures::evaluate(d, spec, opts)?;
    let compared = if spec.kind == MeasureKind::Sd {
        measures::variance(d)
    } else {
        shown.clone()
    };
    Ok((compared, shown))
}

/// Run a preservation audit of `spec` under the given quantile variant.
///
/// `budget` bounds the number of pairs examined (catalog pairs included);
/// identical `(spec, variant, budget, seed)` runs produce identical reports.
pub fn preservation_audit(
    spec: &MeasureSpec,
    variant: QuantileVariant,
    budget: u64,
    seed: u64,
    tol: Tol,
) -> Result<AuditReport> {
    let opts = MeasureOpts {
        variant,
        tol,
        sample_corrected: false,
    };
    let mut report = AuditReport {
        spec: spec.clone(),
        variant,
        examined: 0,
        accepted: 0,
        violations: Vec::new(),
    };
    let mut rng = random::rng(seed);
    let cfg = GenConfig::default();

    let catalog_pairs = catalog::catalog()
        .into_iter()
        .map(|c| (c.f, c.g))
        .collect::<Vec<_>>();
    let next_random = |rng: &mut ChaCha8Rng, i: u64| -> (DiscreteDist, DiscreteDist) {
        match i % 5 {
            0 => random::shift_pair(&cfg, rng),
            1 => random::scale_pair(&cfg, rng),
            2 => random::merged_jump_pair(&cfg, rng),
            3 => {
                let f = random::random_dist(&cfg, rng);
                let g = random::refine_stretch_of(&f, &cfg, rng);
                (f, g)
            }
            _ => (
                random::random_dist(&cfg, rng),
                random::random_dist(&cfg, rng),
            ),
        }
    };

    let mut i = 0u64;
    while report.examined < budget {
        let (f, g) = if (report.examined as usize) < catalog_pairs.len() {
            catalog_pairs[report.examined as usize].clone()
        } else {
            let pair = next_random(&mut rng, i);
            i += 1;
            pair
        };
        report.examined += 1;
        if !orders::leq_disc_and(&f, &g, tol).holds {
            continue;
        }
        report.accepted += 1;
        let (tau_f_cmp, tau_f) = comparison_values(&f, spec, &opts)?;
        let (tau_g_cmp, tau_g) = comparison_values(&g, spec, &opts)?;
        if tau_f_cmp > tau_g_cmp {
            report.violations.push(Violation { f, g, tau_f, tau_g });
        }
    }
    Ok(report)
}
