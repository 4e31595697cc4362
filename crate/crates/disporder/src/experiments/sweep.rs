//! Parameter-region sweep for truncated geometric distributions.
//!
//! For success probabilities `π_F > π_G` there is a known sufficient
//! criterion for the meet order between the two geometric laws: writing
//! `λ = 1 − π_G` and `ϱ = log(1 − π_F) / log λ`, the order holds whenever
//! `λ > 1/2` and `ϱ ≥ log(2λ − 1)/log λ − 1`. The sweep evaluates this
//! criterion next to the actual order decision on truncated geometrics over
//! a square grid and renders both as CSV and a two-panel SVG heatmap, so the
//! implication *criterion ⟹ verdict holds* can be checked cell by cell.

use std::io::Write;

use crate::dist::DiscreteDist;
use crate::orders;
use crate::scalar::{Scalar, Tol};
use crate::{Error, Result};

/// Outcome of one grid cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellVerdict {
    Holds,
    Fails,
    /// `π_F ≤ π_G`: outside the comparison's precondition.
    Skipped,
}

impl CellVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            CellVerdict::Holds => "holds",
            CellVerdict::Fails => "fails",
            CellVerdict::Skipped => "skipped",
        }
    }
}

/// One cell of the sweep: the theoretical region membership (only defined
/// for `π_G < π_F`) and the numeric meet-order verdict on the truncated
/// laws.
#[derive(Debug, Clone)]
pub struct SweepCell {
    pub pi_f: Scalar,
    pub pi_g: Scalar,
    pub theory: Option<bool>,
    pub verdict: CellVerdict,
    pub approximate: bool,
}

/// A completed sweep over the square grid `{step, 2·step, …} ⊂ (0, 1)²`,
/// stored row-major with `π_F` as the outer coordinate.
#[derive(Debug, Clone)]
pub struct SweepGrid {
    pub step: Scalar,
    pub tail_eps: Scalar,
    pub approx_mode: bool,
    pub axis: Vec<Scalar>,
    pub cells: Vec<SweepCell>,
}

/// Sufficient-region membership for `geom(π_F) ⪯∧ geom(π_G)`.
///
/// Requires `0 < π_G < π_F < 1`. The boundary comparison carries a `1e-12`
/// slack so that grid points landing numerically on the region boundary are
/// classified as members (the criterion's inequality is non-strict).
pub fn geom_region_theoretical(pi_f: &Scalar, pi_g: &Scalar) -> Result<bool> {
    let (pf, pg) = (pi_f.to_f64(), pi_g.to_f64());
    if !(0.0 < pg && pg < pf && pf < 1.0) {
        return Err(Error::BadParam(format!(
            "region criterion needs 0 < pi_g < pi_f < 1, got pi_f = {pi_f}, pi_g = {pi_g}"
        )));
    }
    let lam = 1.0 - pg;
    if lam <= 0.5 {
        return Ok(false);
    }
    let rho = (1.0 - pf).ln() / lam.ln();
    let bound = (2.0 * lam - 1.0).ln() / lam.ln() - 1.0;
    Ok(rho >= bound - 1e-12)
}

/// Run the sweep.
///
/// `step` must be an exact rational in `(0, 1/2]`; the grid is
/// `{k·step : k ≥ 1, k·step < 1}` on both axes. Cells with `π_F ≤ π_G`
/// (including the diagonal) are skipped. With `approx_mode` the geometric
/// laws are built and compared in floating point; otherwise every
/// probability is an exact rational and the verdicts are exact up to the
/// recorded truncation defect.
pub fn geom_sweep(
    step: &Scalar,
    tail_eps: &Scalar,
    approx_mode: bool,
    tol: Tol,
) -> Result<SweepGrid> {
    if !step.is_exact() {
        return Err(Error::BadParam(format!(
            "sweep step must be an exact rational, got {step}"
        )));
    }
    if !(step > &Scalar::zero() && step <= &Scalar::ratio(1, 2)) {
        return Err(Error::BadParam(format!(
            "sweep step must lie in (0, 1/2], got {step}"
        )));
    }
    let mut axis = Vec::new();
    let mut pi = step.clone();
    while pi < Scalar::one() {
        axis.push(pi.clone());
        pi = &pi + step;
    }
    let dists: Vec<DiscreteDist> = axis
        .iter()
        .map(|p| {
            let p = if approx_mode {
                p.to_approx()
            } else {
                p.clone()
            };
            DiscreteDist::geometric(p, tail_eps.clone())
        })
        .collect::<Result<_>>()?;

    let mut cells = Vec::with_capacity(axis.len() * axis.len());
    for (i, pi_f) in axis.iter().enumerate() {
        for (j, pi_g) in axis.iter().enumerate() {
            if pi_f <= pi_g {
                cells.push(SweepCell {
                    pi_f: pi_f.clone(),
                    pi_g: pi_g.clone(),
                    theory: None,
                    verdict: CellVerdict::Skipped,
                    approximate: false,
                });
                continue;
            }
            let theory = geom_region_theoretical(pi_f, pi_g)?;
            let v = orders::leq_disc_and(&dists[i], &dists[j], tol);
            cells.push(SweepCell {
                pi_f: pi_f.clone(),
                pi_g: pi_g.clone(),
                theory: Some(theory),
                verdict: if v.holds {
                    CellVerdict::Holds
                } else {
                    CellVerdict::Fails
                },
                approximate: v.approximate,
            });
        }
    }
    Ok(SweepGrid {
        step: step.clone(),
        tail_eps: tail_eps.clone(),
        approx_mode,
        axis,
        cells,
    })
}

impl SweepGrid {
    /// Cell at axis indices `(i, j)` for `(π_F, π_G)`.
    pub fn cell(&self, i: usize, j: usize) -> &SweepCell {
        &self.cells[i * self.axis.len() + j]
    }

    /// Cells where the sufficient criterion asserts the order but the
    /// numeric verdict fails — must be empty for a sound implementation.
    pub fn violations(&self) -> Vec<&SweepCell> {
        self.cells
            .iter()
            .filter(|c| c.theory == Some(true) && c.verdict == CellVerdict::Fails)
            .collect()
    }

    /// `(computed, holds, fails, skipped)` cell counts.
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        let holds = self
            .cells
            .iter()
            .filter(|c| c.verdict == CellVerdict::Holds)
            .count();
        let fails = self
            .cells
            .iter()
            .filter(|c| c.verdict == CellVerdict::Fails)
            .count();
        let skipped = self.cells.len() - holds - fails;
        (holds + fails, holds, fails, skipped)
    }

    /// Off-diagonal cells as CSV: `pi_f,pi_g,theory,verdict,approximate`.
    /// Skipped rows leave `theory` and `approximate` empty; diagonal cells
    /// are omitted (they appear only in the SVG rendering).
    pub fn write_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "pi_f,pi_g,theory,verdict,approximate")?;
        for c in &self.cells {
            if c.pi_f == c.pi_g {
                continue;
            }
            let theory = match c.theory {
                Some(t) => t.to_string(),
                None => String::new(),
            };
            let approx = match c.verdict {
                CellVerdict::Skipped => String::new(),
                _ => c.approximate.to_string(),
            };
            writeln!(
                out,
                "{},{},{},{},{}",
                c.pi_f.to_f64(),
                c.pi_g.to_f64(),
                theory,
                c.verdict.name(),
                approx
            )?;
        }
        Ok(())
    }

    /// Two-panel SVG heatmap: the sufficient region on the left, the numeric
    /// verdict on the right. Green = member/holds, red = non-member/fails,
    /// grey = skipped. `π_F` increases rightward, `π_G` upward.
    pub fn write_svg(&self, out: &mut dyn Write) -> std::io::Result<()> {
        const GREEN: &str = "#2e8b57";
        const RED: &str = "#c0392b";
        const GREY: &str = "#d0d0d0";
        let n = self.axis.len();
        let cs: usize = (360 / n.max(1)).clamp(6, 40);
        let panel = n * cs;
        let margin = 46;
        let gap = 40;
        let width = 2 * panel + 2 * margin + gap;
        let height = panel + margin + 30;
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        )?;
        writeln!(
            out,
            r#"<rect width="{width}" height="{height}" fill="white"/>"#
        )?;
        let titles = ["sufficient region", "meet-order verdict"];
        for (panel_idx, title) in titles.iter().enumerate() {
            let x0 = margin + panel_idx * (panel + gap);
            writeln!(
                out,
                r#"<text x="{}" y="20" font-family="sans-serif" font-size="14">{title}</text>"#,
                x0
            )?;
            for (i, _) in self.axis.iter().enumerate() {
                for (j, _) in self.axis.iter().enumerate() {
                    let c = self.cell(i, j);
                    let fill = if panel_idx == 0 {
                        match c.theory {
                            Some(true) => GREEN,
                            Some(false) => RED,
                            None => GREY,
                        }
                    } else {
                        match c.verdict {
                            CellVerdict::Holds => GREEN,
                            CellVerdict::Fails => RED,
                            CellVerdict::Skipped => GREY,
                        }
                    };
                    let x = x0 + i * cs;
                    let y = 30 + (n - 1 - j) * cs;
                    writeln!(
                        out,
                        r#"<rect x="{x}" y="{y}" width="{cs}" height="{cs}" fill="{fill}" stroke="white" stroke-width="0.5"/>"#
                    )?;
                }
            }
            let label_y = 30 + panel + 16;
            writeln!(
                out,
                r#"<text x="{}" y="{label_y}" font-family="sans-serif" font-size="12">pi_f: {} .. {}</text>"#,
                x0,
                self.axis[0].to_f64(),
                self.axis[n - 1].to_f64()
            )?;
        }
        writeln!(
            out,
            r#"<text x="6" y="{}" font-family="sans-serif" font-size="12" transform="rotate(-90 12 {})">pi_g</text>"#,
            30 + panel / 2,
            30 + panel / 2
        )?;
        writeln!(out, "</svg>")?;
        Ok(())
    }
}
