//! Dispersion measures and their evaluation options.
//!
//! Six measures are provided: standard deviation, Gini mean difference
//! `E|X − X′|`, mean absolute deviation from the mean, mean absolute
//! deviation from the median, the `(α, β)`-interquantile range
//! `F⁻¹(β) − F⁻¹(α)`, and the `(α, β)`-interexpectile range. All of them
//! except the interquantile range are monotone with respect to the meet
//! order `⪯∧` (and hence the join order).
//!
//! Quantile-based measures honour a [`QuantileVariant`]: the left-continuous
//! generalized inverse (primary) or the midpoint variant. Empirical
//! distributions carry their sample size, enabling the usual sample
//! corrections for the standard deviation (`σ̂² = s²·n/(n−1)`) and the Gini
//! mean difference (`·n/(n−1)`); the other measures have no standard
//! correction and are returned as-is.

use serde::Serialize;

use crate::dist::DiscreteDist;
use crate::scalar::{Scalar, Tol};
use crate::{Error, Result};

/// Which generalized inverse quantile-based measures use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QuantileVariant {
    /// `inf{t : F(t) ≥ p}` (left-continuous inverse).
    Left,
    /// `½(inf{t : F(t) ≥ p} + sup{t : F(t) ≤ p})`.
    Mid,
}

/// Evaluation options shared by all measures.
#[derive(Clone, Copy, Debug)]
pub struct MeasureOpts {
    pub variant: QuantileVariant,
    pub tol: Tol,
    pub sample_corrected: bool,
}

impl Default for MeasureOpts {
    fn default() -> Self {
        MeasureOpts {
            variant: QuantileVariant::Left,
            tol: Tol::default(),
            sample_corrected: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeasureKind {
    Sd,
    Gmd,
    Mad,
    Mdmad,
    Iqnr,
    Ienr,
}

/// A measure together with its parameters (only the two range measures
/// take any).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeasureSpec {
    pub kind: MeasureKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<Scalar>,
}

impl MeasureSpec {
    pub fn plain(kind: MeasureKind) -> Self {
        MeasureSpec {
            kind,
            alpha: None,
            beta: None,
        }
    }

    /// Interquantile range with validated `0 < α < β < 1`.
    pub fn iqnr(alpha: Scalar, beta: Scalar) -> Result<Self> {
        check_iqnr_params(&alpha, &beta)?;
        Ok(MeasureSpec {
            kind: MeasureKind::Iqnr,
            alpha: Some(alpha),
            beta: Some(beta),
        })
    }

    /// Interexpectile range with validated `0 < α < 1/2 < β < 1`.
    pub fn ienr(alpha: Scalar, beta: Scalar) -> Result<Self> {
        check_ienr_params(&alpha, &beta)?;
        Ok(MeasureSpec {
            kind: MeasureKind::Ienr,
            alpha: Some(alpha),
            beta: Some(beta),
        })
    }

    /// Parse one token: `sd`, `gmd`, `mad`, `mdmad`, `iqnr:<α>:<β>` or
    /// `ienr:<α>:<β>` (bare `iqnr`/`ienr` default to `α = 1/4, β = 3/4`).
    pub fn parse(token: &str) -> Result<Self> {
        let parts: Vec<&str> = token.trim().split(':').collect();
        let plain = |kind| {
            if parts.len() == 1 {
                Ok(MeasureSpec::plain(kind))
            } else {
                Err(Error::ParseError(format!(
                    "measure `{}` takes no parameters",
                    parts[0]
                )))
            }
        };
        let params = || -> Result<(Scalar, Scalar)> {
            match parts.len() {
                1 => Ok((Scalar::ratio(1, 4), Scalar::ratio(3, 4))),
                3 => {
                    let a = Scalar::parse_exact(parts[1]).map_err(|_| {
                        Error::ParseError(format!("bad probability `{}`", parts[1]))
                    })?;
                    let b = Scalar::parse_exact(parts[2]).map_err(|_| {
                        Error::ParseError(format!("bad probability `{}`", parts[2]))
                    })?;
                    Ok((a, b))
                }
                _ => Err(Error::ParseError(format!(
                    "expected `{0}` or `{0}:<alpha>:<beta>`, got `{token}`",
                    parts[0]
                ))),
            }
        };
        match parts[0] {
            "sd" => plain(MeasureKind::Sd),
            "gmd" => plain(MeasureKind::Gmd),
            "mad" => plain(MeasureKind::Mad),
            "mdmad" => plain(MeasureKind::Mdmad),
            "iqnr" => {
                let (a, b) = params()?;
                MeasureSpec::iqnr(a, b)
            }
            "ienr" => {
                let (a, b) = params()?;
                MeasureSpec::ienr(a, b)
            }
            other => Err(Error::ParseError(format!(
                "unknown measure `{other}` (expected sd, gmd, mad, mdmad, iqnr:<a>:<b>, ienr:<a>:<b>)"
            ))),
        }
    }

    /// Parse a comma-separated list such as
    /// `"sd,gmd,mad,mdmad,iqnr:0.25:0.75,ienr:0.25:0.75"`.
    pub fn parse_list(tokens: &str) -> Result<Vec<Self>> {
        tokens.split(',').map(MeasureSpec::parse).collect()
    }

    pub fn name(&self) -> String {
        match (self.kind, &self.alpha, &self.beta) {
            (MeasureKind::Sd, ..) => "sd".into(),
            (MeasureKind::Gmd, ..) => "gmd".into(),
            (MeasureKind::Mad, ..) => "mad".into(),
            (MeasureKind::Mdmad, ..) => "mdmad".into(),
            (MeasureKind::Iqnr, Some(a), Some(b)) => format!("iqnr:{a}:{b}"),
            (MeasureKind::Ienr, Some(a), Some(b)) => format!("ienr:{a}:{b}"),
            _ => unreachable!("range measures always carry parameters"),
        }
    }
}

/// The six measures with their customary defaults (`α = 1/4, β = 3/4`).
pub fn default_specs() -> Vec<MeasureSpec> {
    vec![
        MeasureSpec::plain(MeasureKind::Sd),
        MeasureSpec::plain(MeasureKind::Gmd),
        MeasureSpec::plain(MeasureKind::Mad),
        MeasureSpec::plain(MeasureKind::Mdmad),
        MeasureSpec::iqnr(Scalar::ratio(1, 4), Scalar::ratio(3, 4)).expect("valid"),
        MeasureSpec::ienr(Scalar::ratio(1, 4), Scalar::ratio(3, 4)).expect("valid"),
    ]
}

fn check_iqnr_params(alpha: &Scalar, beta: &Scalar) -> Result<()> {
    if !(alpha > &Scalar::zero() && alpha < beta && beta < &Scalar::one()) {
        return Err(Error::BadProbability(format!(
            "interquantile range needs 0 < alpha < beta < 1, got alpha={alpha}, beta={beta}"
        )));
    }
    Ok(())
}

fn check_ienr_params(alpha: &Scalar, beta: &Scalar) -> Result<()> {
    let half = Scalar::ratio(1, 2);
    if !(alpha > &Scalar::zero() && alpha < &half && beta > &half && beta < &Scalar::one()) {
        return Err(Error::BadProbability(format!(
            "interexpectile range needs 0 < alpha < 1/2 < beta < 1, got alpha={alpha}, beta={beta}"
        )));
    }
    Ok(())
}

/// Population variance (exact in exact mode).
pub fn variance(d: &DiscreteDist) -> Scalar {
    d.variance()
}

/// Standard deviation; the square root always yields a float.
pub fn sd(d: &DiscreteDist) -> Scalar {
    d.variance().approx_sqrt()
}

/// Gini mean difference `E|X − X′|`, computed in one pass via prefix sums:
/// `Σ_i Σ_j p_i p_j |x_i − x_j| = 2 Σ_i p_i (x_i C_{i−1} − S_{i−1})`.
pub fn gmd(d: &DiscreteDist) -> Scalar {
    let mut acc = Scalar::zero();
    let mut c_prev = Scalar::zero();
    let mut s_prev = Scalar::zero();
    for (x, p) in d.support().iter().zip(d.probs()) {
        acc = &acc + &(p * &(&(x * &c_prev) - &s_prev));
        c_prev = &c_prev + p;
        s_prev = &s_prev + &(p * x);
    }
    acc * Scalar::int(2)
}

fn abs_dev(d: &DiscreteDist, anchor: &Scalar) -> Scalar {
    d.support()
        .iter()
        .zip(d.probs())
        .fold(Scalar::zero(), |acc, (x, p)| acc + &(x - anchor).abs() * p)
}

/// Mean absolute deviation from the mean.
pub fn mad(d: &DiscreteDist) -> Scalar {
    abs_dev(d, &d.mean())
}

/// Mean absolute deviation from the median (median per `variant`).
pub fn mdmad(d: &DiscreteDist, variant: QuantileVariant, tol: Tol) -> Result<Scalar> {
    let half = Scalar::ratio(1, 2);
    let anchor = match variant {
        QuantileVariant::Left => d.quantile_with(&half, tol)?,
        QuantileVariant::Mid => d.quantile_mid_with(&half, tol)?,
    };
    Ok(abs_dev(d, &anchor))
}

/// `(α, β)`-interquantile range `F⁻¹(β) − F⁻¹(α)`.
pub fn iqnr(
    d: &DiscreteDist,
    alpha: &Scalar,
    beta: &Scalar,
    variant: QuantileVariant,
    tol: Tol,
) -> Result<Scalar> {
    check_iqnr_params(alpha, beta)?;
    let q = |p: &Scalar| match variant {
        QuantileVariant::Left => d.quantile_with(p, tol),
        QuantileVariant::Mid => d.quantile_mid_with(p, tol),
    };
    Ok(&q(beta)? - &q(alpha)?)
}

/// `(α, β)`-interexpectile range `e_X(β) − e_X(α)`.
pub fn ienr(d: &DiscreteDist, alpha: &Scalar, beta: &Scalar, _tol: Tol) -> Result<Scalar> {
    check_ienr_params(alpha, beta)?;
    Ok(&d.expectile(beta)? - &d.expectile(alpha)?)
}

/// Evaluate one measure under the given options. With
/// `opts.sample_corrected` the distribution must carry a sample size `n ≥ 2`
/// (the corrections only alter the standard deviation and the Gini mean
/// difference).
pub fn evaluate(d: &DiscreteDist, spec: &MeasureSpec, opts: &MeasureOpts) -> Result<Scalar> {
    let correction = if opts.sample_corrected {
        let n = d.sample_size().ok_or_else(|| {
            Error::BadParam(
                "sample correction requested but the distribution has no sample size".into(),
            )
        })?;
        if n < 2 {
            return Err(Error::BadParam(format!(
                "sample correction needs n >= 2, got n = {n}"
            )));
        }
        Some(Scalar::ratio(n as i64, n as i64 - 1))
    } else {
        None
    };
    Ok(match spec.kind {
        MeasureKind::Sd => {
            let mut var = d.variance();
            if let Some(c) = &correction {
                var = &var * c;
            }
            var.approx_sqrt()
        }
        MeasureKind::Gmd => {
            let mut g = gmd(d);
            if let Some(c) = &correction {
                g = &g * c;
            }
            g
        }
        MeasureKind::Mad => mad(d),
        MeasureKind::Mdmad => mdmad(d, opts.variant, opts.tol)?,
        MeasureKind::Iqnr => iqnr(
            d,
            spec.alpha.as_ref().expect("validated"),
            spec.beta.as_ref().expect("validated"),
            opts.variant,
            opts.tol,
        )?,
        MeasureKind::Ienr => ienr(
            d,
            spec.alpha.as_ref().expect("validated"),
            spec.beta.as_ref().expect("validated"),
            opts.tol,
        )?,
    })
}
