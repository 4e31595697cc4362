//! Measure curves over parametric families and the uniform order scan.

use std::io::Write;

use crate::dist::DiscreteDist;
use crate::measures::{self, MeasureOpts, MeasureSpec};
use crate::orders;
use crate::scalar::{Scalar, Tol};
use crate::{Error, Result};

/// A one-parameter family of distributions to trace measures over.
#[derive(Debug, Clone)]
pub enum Family {
    /// Discrete uniforms `U[n]` for `n = 2..=n_max`, exact mode.
    UniformRange { n_max: u64 },
    /// Truncated geometrics for `π ∈ {step, 2·step, …} ∩ (0, 1)`, evaluated
    /// in floating point (tails of thousands of atoms make exact rational
    /// moment accumulation impractical, and the curve shapes are far coarser
    /// than float precision).
    Geometric { step: Scalar, tail_eps: Scalar },
}

/// Evaluated measure curves: one row per parameter value, one column per
/// measure spec.
#[derive(Debug, Clone)]
pub struct CurveTable {
    pub family: String,
    pub param_name: &'static str,
    pub specs: Vec<MeasureSpec>,
    pub rows: Vec<(Scalar, Vec<Scalar>)>,
}

/// Trace the given measures over a family.
pub fn measure_curves(
    family: &Family,
    specs: &[MeasureSpec],
    opts: &MeasureOpts,
) -> Result<CurveTable> {
    let mut rows = Vec::new();
    let (name, param_name) = match family {
        Family::UniformRange { n_max } => {
            if *n_max < 2 {
                return Err(Error::BadParam(format!(
                    "uniform family needs n_max >= 2, got {n_max}"
                )));
            }
            for n in 2..=*n_max {
                let d = DiscreteDist::uniform_range(n)?;
                let values = specs
                    .iter()
                    .map(|s| measures::evaluate(&d, s, opts))
                    .collect::<Result<Vec<_>>>()?;
                rows.push((Scalar::int(n as i64), values));
            }
            ("uniform".to_string(), "n")
        }
        Family::Geometric { step, tail_eps } => {
            if !step.is_exact() || !(step > &Scalar::zero() && step < &Scalar::one()) {
                return Err(Error::BadParam(format!(
                    "geometric family needs an exact step in (0, 1), got {step}"
                )));
            }
            let mut pi = step.clone();
            while pi < Scalar::one() {
                let d = DiscreteDist::geometric(pi.to_approx(), tail_eps.to_approx())?;
                let values = specs
                    .iter()
                    .map(|s| measures::evaluate(&d, s, opts))
                    .collect::<Result<Vec<_>>>()?;
                rows.push((pi.clone(), values));
                pi = &pi + step;
            }
            ("geometric".to_string(), "pi")
        }
    };
    Ok(CurveTable {
        family: name,
        param_name,
        specs: specs.to_vec(),
        rows,
    })
}

impl CurveTable {
    /// Column index of a spec by display name.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.specs.iter().position(|s| s.name() == name)
    }

    /// CSV with the parameter first and one decimal column per measure.
    pub fn write_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let header: Vec<String> = std::iter::once(self.param_name.to_string())
            .chain(self.specs.iter().map(|s| s.name()))
            .collect();
        writeln!(out, "{}", header.join(","))?;
        for (param, values) in &self.rows {
            let mut fields = vec![param.to_f64().to_string()];
            fields.extend(values.iter().map(|v| v.to_f64().to_string()));
            writeln!(out, "{}", fields.join(","))?;
        }
        Ok(())
    }
}

/// One row of the uniform order scan: verdicts for `U[n]` against `U[m]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanRow {
    pub n: u64,
    pub m: u64,
    pub and_holds: bool,
    pub disp_holds: bool,
    /// Whether the interior cdf levels of `U[n]` all occur among those of
    /// `U[m]` (exactly when `n` divides `m`).
    pub nested: bool,
}

/// Compare `U[n] ⪯∧ U[m]` and `U[n] ≤disp U[m]` for all `2 ≤ n < m ≤ n_max`.
pub fn uniform_order_scan(n_max: u64) -> Result<Vec<ScanRow>> {
    if n_max < 3 {
        return Err(Error::BadParam(format!(
            "order scan needs n_max >= 3, got {n_max}"
        )));
    }
    let tol = Tol::default();
    let dists: Vec<DiscreteDist> = (2..=n_max)
        .map(DiscreteDist::uniform_range)
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for n in 2..=n_max {
        for m in (n + 1)..=n_max {
            let f = &dists[(n - 2) as usize];
            let g = &dists[(m - 2) as usize];
            rows.push(ScanRow {
                n,
                m,
                and_holds: orders::leq_disc_and(f, g, tol).holds,
                disp_holds: orders::leq_disp(f, g, tol).holds,
                nested: orders::ranges_nested(f, g, tol),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::QuantileVariant;

    fn opts() -> MeasureOpts {
        MeasureOpts {
            variant: QuantileVariant::Left,
            tol: Tol::default(),
            sample_corrected: false,
        }
    }

    #[test]
    fn uniform_curves_are_exact_with_matching_mad_columns() {
        let table = measure_curves(
            &Family::UniformRange { n_max: 12 },
            &measures::default_specs(),
            &opts(),
        )
        .unwrap();
        assert_eq!(table.rows.len(), 11);
        let mad = table.column("mad").unwrap();
        let mdmad = table.column("mdmad").unwrap();
        let iqnr = table.column("iqnr:1/4:3/4").unwrap();
        for (_, values) in &table.rows {
            assert!(values[mad].is_exact());
            assert_eq!(values[mad], values[mdmad]);
            assert!(values[iqnr].is_integer());
        }
    }

    #[test]
    fn geometric_curves_have_decreasing_sd() {
        let table = measure_curves(
            &Family::Geometric {
                step: Scalar::ratio(1, 4),
                tail_eps: Scalar::approx(1e-9),
            },
            &[MeasureSpec::plain(measures::MeasureKind::Sd)],
            &opts(),
        )
        .unwrap();
        assert_eq!(table.rows.len(), 3);
        let sds: Vec<f64> = table.rows.iter().map(|(_, v)| v[0].to_f64()).collect();
        assert!(sds[0] > sds[1] && sds[1] > sds[2]);
    }

    #[test]
    fn csv_layout() {
        let table = measure_curves(
            &Family::UniformRange { n_max: 3 },
            &measures::default_specs(),
            &opts(),
        )
        .unwrap();
        let mut buf = Vec::new();
        table.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "n,sd,gmd,mad,mdmad,iqnr:1/4:3/4,ienr:1/4:3/4"
        );
        assert_eq!(lines.count(), 2);
    }

    #[test]
    fn uniform_scan_matches_divisibility() {
        let rows = uniform_order_scan(12).unwrap();
        assert_eq!(rows.len(), (2..=12).map(|n| 12 - n).sum::<u64>() as usize);
        for row in &rows {
            assert!(
                row.and_holds,
                "meet order must hold for U[{}] vs U[{}]",
                row.n, row.m
            );
            assert_eq!(row.nested, row.m % row.n == 0);
            assert_eq!(
                row.disp_holds, row.nested,
                "dispersive order for uniforms is exactly level nesting"
            );
        }
        assert!(rows.contains(&ScanRow {
            n: 2,
            m: 4,
            and_holds: true,
            disp_holds: true,
            nested: true
        }));
        assert!(rows.contains(&ScanRow {
            n: 2,
            m: 5,
            and_holds: true,
            disp_holds: false,
            nested: false
        }));
    }

    #[test]
    fn parameters_are_validated() {
        assert!(measure_curves(&Family::UniformRange { n_max: 1 }, &[], &opts()).is_err());
        assert!(measure_curves(
            &Family::Geometric {
                step: Scalar::approx(0.1),
                tail_eps: Scalar::approx(1e-9)
            },
            &[],
            &opts()
        )
        .is_err());
        assert!(uniform_order_scan(2).is_err());
    }
}
