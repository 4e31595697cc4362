//! Canonical representation of purposive discrete distributions.
//!
//! A [`DiscreteDist`] is the identifying sequence of a discrete distribution
//! whose support is order-isomorphic to a subset of the integers and has at
//! least two points: strictly increasing support values, positive jump
//! heights summing to one, and cached cdf values. Index-based accessors are
//! 1-based (`a ∈ {1..n}`) to match the usual notation for the dispersion
//! relations; the convention `F(x_0) = 0` is provided by [`DiscreteDist::level`].

use std::collections::BTreeMap;

use num::{BigInt, BigRational};

use crate::scalar::{Scalar, Tol};
use crate::{Error, Result};

/// A finite discrete distribution in canonical form. Immutable after
/// construction; cheap to clone and safe to share across threads.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteDist {
    label: String,
    support: Vec<Scalar>,
    probs: Vec<Scalar>,
    cum: Vec<Scalar>,
    tail_defect: Scalar,
    sample_size: Option<u64>,
    approx: bool,
}

impl DiscreteDist {
    /// Canonicalize a pmf: merge duplicate values by summation, sort, and
    /// validate. If any coordinate is a float, the whole distribution is
    /// converted to approx mode and the probabilities are renormalized
    /// (their sum must already be within `tol.eps` of one).
    pub fn from_pmf(points: Vec<(Scalar, Scalar)>) -> Result<Self> {
        Self::from_pmf_with("pmf", points, Tol::default())
    }

    /// [`DiscreteDist::from_pmf`] with an explicit label and tolerance.
    pub fn from_pmf_with(label: &str, points: Vec<(Scalar, Scalar)>, tol: Tol) -> Result<Self> {
        Self::build(label.to_string(), points, tol, None)
    }

    fn build(
        label: String,
        mut pts: Vec<(Scalar, Scalar)>,
        tol: Tol,
        sample_size: Option<u64>,
    ) -> Result<Self> {
        let approx = pts.iter().any(|(v, p)| !v.is_exact() || !p.is_exact());
        if approx {
            for (v, p) in &mut pts {
                *v = v.to_approx();
                *p = p.to_approx();
            }
        }
        for (v, p) in &pts {
            if !v.to_f64().is_finite() || !p.to_f64().is_finite() {
                return Err(Error::BadParam(format!("non-finite atom ({v}, {p})")));
            }
            if !p.is_positive() {
                return Err(Error::NonPositiveProb {
                    value: v.to_string(),
                    prob: p.to_string(),
                });
            }
        }
        pts.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Scalar, Scalar)> = Vec::with_capacity(pts.len());
        for (v, p) in pts {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 = &last.1 + &p,
                _ => merged.push((v, p)),
            }
        }
        if merged.len() < 2 {
            return Err(Error::FewerThanTwoAtoms { got: merged.len() });
        }
        let total = merged.iter().fold(Scalar::zero(), |acc, (_, p)| acc + p);
        if approx {
            let t = total.to_f64();
            if (t - 1.0).abs() > tol.eps {
                return Err(Error::SumNotOne {
                    got: total.to_string(),
                });
            }
            for (_, p) in &mut merged {
                *p = Scalar::approx(p.to_f64() / t);
            }
        } else if total != Scalar::one() {
            return Err(Error::SumNotOne {
                got: total.to_string(),
            });
        }
        let mut cum = Vec::with_capacity(merged.len());
        let mut run = if approx {
            Scalar::approx(0.0)
        } else {
            Scalar::zero()
        };
        for (_, p) in &merged {
            run = &run + p;
            cum.push(run.clone());
        }
        if approx {
            *cum.last_mut().expect("nonempty") = Scalar::approx(1.0);
        }
        debug_assert!(!approx || cum.last().unwrap().to_f64() == 1.0);
        debug_assert!(approx || *cum.last().unwrap() == Scalar::one());
        for i in 1..cum.len() {
            if cum[i] <= cum[i - 1] {
                // float underflow: the jump vanished in the running sum
                return Err(Error::NonPositiveProb {
                    value: merged[i].0.to_string(),
                    prob: merged[i].1.to_string(),
                });
            }
        }
        let (support, probs): (Vec<_>, Vec<_>) = merged.into_iter().unzip();
        Ok(DiscreteDist {
            label,
            support,
            probs,
            cum,
            tail_defect: if approx {
                Scalar::approx(0.0)
            } else {
                Scalar::zero()
            },
            sample_size,
            approx,
        })
    }

    /// Empirical distribution from `(value, count)` pairs. Zero counts are
    /// dropped, duplicate values merge by summing counts, probabilities are
    /// exact rationals `count/total`, and the total count is recorded so
    /// sample-corrected measure variants can be requested later.
    pub fn from_samples(counts: Vec<(Scalar, u64)>) -> Result<Self> {
        Self::from_samples_with("samples", counts, Tol::default())
    }

    /// [`DiscreteDist::from_samples`] with an explicit label and tolerance.
    pub fn from_samples_with(label: &str, counts: Vec<(Scalar, u64)>, tol: Tol) -> Result<Self> {
        let mut merged: BTreeMap<Scalar, u64> = BTreeMap::new();
        for (v, c) in counts {
            if c == 0 {
                continue;
            }
            *merged.entry(v).or_insert(0) += c;
        }
        let total: u64 = merged.values().sum();
        if merged.len() < 2 {
            return Err(Error::FewerThanTwoAtoms { got: merged.len() });
        }
        let pts = merged
            .into_iter()
            .map(|(v, c)| (v, Scalar::ratio(c as i64, total as i64)))
            .collect();
        Self::build(label.to_string(), pts, tol, Some(total))
    }

    /// Discrete uniform on `{1, …, n}`, exact mode.
    pub fn uniform_range(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadParam(format!(
                "uniform_range needs n >= 2, got {n}"
            )));
        }
        let pts = (1..=n as i64)
            .map(|k| (Scalar::int(k), Scalar::ratio(1, n as i64)))
            .collect();
        Self::build(format!("U[{n}]"), pts, Tol::default(), None)
    }

    /// Discrete uniform on an explicit value set; repeated values are
    /// rejected (a set is required).
    pub fn uniform_set(values: Vec<Scalar>) -> Result<Self> {
        let mut sorted = values.clone();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateValue(w[0].to_string()));
            }
        }
        if values.len() < 2 {
            return Err(Error::FewerThanTwoAtoms { got: values.len() });
        }
        let k = values.len() as i64;
        let label = format!(
            "U{{{}}}",
            sorted
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let pts = values
            .into_iter()
            .map(|v| (v, Scalar::ratio(1, k)))
            .collect();
        Self::build(label, pts, Tol::default(), None)
    }

    /// Geometric distribution `P(X = k) = π(1−π)^{k−1}` on `{1, 2, …}`,
    /// truncated at the smallest `m ≥ 2` with `(1−π)^m ≤ tail_ε`. The
    /// residual tail mass is lumped onto atom `m` (so the probabilities sum
    /// to one exactly) and recorded in `tail_defect`. Exact mode whenever
    /// `π` is exact.
    pub fn geometric(pi: Scalar, tail_eps: Scalar) -> Result<Self> {
        if !(pi > Scalar::zero() && pi < Scalar::one()) {
            return Err(Error::BadParam(format!(
                "geometric needs 0 < pi < 1, got {pi}"
            )));
        }
        if !(tail_eps > Scalar::zero() && tail_eps < Scalar::one()) {
            return Err(Error::BadParam(format!(
                "geometric needs 0 < tail_eps < 1, got {tail_eps}"
            )));
        }
        let label = format!("geometric({pi})");
        if let Scalar::Exact(rate) = &pi {
            return Self::geometric_exact(rate, &tail_eps, label);
        }
        let lam = &Scalar::one() - &pi;
        let mut prev = Scalar::approx(1.0);
        let mut pow = lam.clone(); // (1−π)^m for the current candidate m
        let mut m: i64 = 1;
        let mut pts: Vec<(Scalar, Scalar)> = Vec::new();
        while pow > tail_eps || m < 2 {
            pts.push((Scalar::int(m), &pi * &prev));
            prev = pow.clone();
            pow = &pow * &lam;
            m += 1;
            if m > 50_000_000 {
                return Err(Error::BadParam(
                    "geometric truncation exceeds 5e7 atoms; raise tail_eps".into(),
                ));
            }
        }
        pts.push((Scalar::int(m), prev));
        Self::build(label, pts, Tol::default(), None)?.with_tail_defect(pow)
    }

    /// Exact geometric sequences without per-atom gcd reduction: with
    /// `π = a/b` in lowest terms and `c = b − a`, every ratio
    /// `a·c^{k−1}/b^k`, `(b^k − c^k)/b^k` and `c^m/b^m` is already reduced
    /// because `gcd(a, b) = gcd(c, b) = 1`.
    fn geometric_exact(rate: &BigRational, tail_eps: &Scalar, label: String) -> Result<Self> {
        let a = rate.numer().clone();
        let b = rate.denom().clone();
        let c = &b - &a;
        let below_eps = |ck: &BigInt, bk: &BigInt| -> bool {
            let pow = Scalar::Exact(BigRational::new_raw(ck.clone(), bk.clone()));
            !(&pow > tail_eps)
        };
        // smallest m >= 2 with (c/b)^m <= tail_eps
        let mut m = 1usize;
        let mut ck = c.clone();
        let mut bk = b.clone();
        while !(m >= 2 && below_eps(&ck, &bk)) {
            m += 1;
            ck *= &c;
            bk *= &b;
            if m > 10_000 {
                return Err(Error::BadParam(
                    "exact geometric truncation exceeds 1e4 atoms; raise tail_eps \
                     or use an approx rate"
                        .into(),
                ));
            }
        }
        let mut support = Vec::with_capacity(m);
        let mut probs = Vec::with_capacity(m);
        let mut cum = Vec::with_capacity(m);
        let mut cp = BigInt::from(1); // c^{k−1}
        let mut bp = BigInt::from(1); // b^{k−1}
        let mut defect = Scalar::zero();
        for k in 1..=m {
            let ck = &cp * &c;
            let bk = &bp * &b;
            support.push(Scalar::int(k as i64));
            if k < m {
                probs.push(Scalar::Exact(BigRational::new_raw(&a * &cp, bk.clone())));
                cum.push(Scalar::Exact(BigRational::new_raw(&bk - &ck, bk.clone())));
            } else {
                probs.push(Scalar::Exact(BigRational::new_raw(cp.clone(), bp.clone())));
                cum.push(Scalar::one());
                defect = Scalar::Exact(BigRational::new_raw(ck.clone(), bk.clone()));
            }
            cp = ck;
            bp = bk;
        }
        Ok(DiscreteDist {
            label,
            support,
            probs,
            cum,
            tail_defect: defect,
            sample_size: None,
            approx: false,
        })
    }

    /// Binomial distribution on `{0, …, n}`; exact mode for rational `π`.
    pub fn binomial(n: u64, pi: Scalar) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParam("binomial needs n >= 1".into()));
        }
        if !(pi > Scalar::zero() && pi < Scalar::one()) {
            return Err(Error::BadParam(format!(
                "binomial needs 0 < pi < 1, got {pi}"
            )));
        }
        let lam = &Scalar::one() - &pi;
        let mut p = if pi.is_exact() {
            Scalar::one()
        } else {
            Scalar::approx(1.0)
        };
        for _ in 0..n {
            p = &p * &lam; // (1−π)^n
        }
        let odds = &pi / &lam;
        let mut pts = vec![(Scalar::int(0), p.clone())];
        for k in 0..n {
            p = &(&p * &Scalar::ratio((n - k) as i64, (k + 1) as i64)) * &odds;
            pts.push((Scalar::int((k + 1) as i64), p.clone()));
        }
        Self::build(format!("binomial({n},{pi})"), pts, Tol::default(), None)
    }

    /// Poisson distribution truncated and lumped like [`DiscreteDist::geometric`]:
    /// support `{0, …, m}` with the smallest `m ≥ 1` such that
    /// `P(X > m) ≤ tail_ε`; `P(X ≥ m)` is lumped onto atom `m`. Always
    /// approx mode (`e^{−λ}` is irrational).
    pub fn poisson(lambda: Scalar, tail_eps: Scalar) -> Result<Self> {
        let l = lambda.to_f64();
        if !l.is_finite() || l <= 0.0 {
            return Err(Error::BadParam(format!(
                "poisson needs lambda > 0, got {lambda}"
            )));
        }
        let eps = tail_eps.to_f64();
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::BadParam(format!(
                "poisson needs 0 < tail_eps < 1, got {tail_eps}"
            )));
        }
        let mut term = (-l).exp();
        if term == 0.0 {
            return Err(Error::BadParam(
                "poisson rate too large for float evaluation".into(),
            ));
        }
        let mut pts = vec![(Scalar::int(0), Scalar::approx(term))];
        let mut cum = term;
        let mut m: usize = 0;
        while 1.0 - cum > eps || m < 1 {
            m += 1;
            term *= l / m as f64;
            pts.push((Scalar::int(m as i64), Scalar::approx(term)));
            cum += term;
            if m > 50_000_000 {
                return Err(Error::BadParam(
                    "poisson truncation exceeds 5e7 atoms; raise tail_eps".into(),
                ));
            }
        }
        let defect = (1.0 - cum).max(0.0);
        let last = pts.last_mut().expect("nonempty");
        last.1 = Scalar::approx(last.1.to_f64() + defect);
        Self::build(format!("poisson({lambda})"), pts, Tol::default(), None)?
            .with_tail_defect(Scalar::approx(defect))
    }

    /// Replace the label (builder style).
    pub fn relabel(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    /// Record a truncation defect (mass relocated when an infinite family
    /// was cut off). Must lie in `[0, 1)`.
    pub fn with_tail_defect(mut self, defect: Scalar) -> Result<Self> {
        if defect < Scalar::zero() || defect >= Scalar::one() {
            return Err(Error::BadParam(format!(
                "tail_defect must lie in [0,1), got {defect}"
            )));
        }
        self.tail_defect = defect;
        Ok(self)
    }

    /// Record the total sample count behind an empirical distribution.
    pub fn with_sample_size(mut self, n: Option<u64>) -> Self {
        self.sample_size = n;
        self
    }

    // ---- accessors ------------------------------------------------------

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Number of atoms `n ≥ 2`.
    pub fn n(&self) -> usize {
        self.support.len()
    }

    pub fn support(&self) -> &[Scalar] {
        &self.support
    }

    pub fn probs(&self) -> &[Scalar] {
        &self.probs
    }

    pub fn cum(&self) -> &[Scalar] {
        &self.cum
    }

    pub fn tail_defect(&self) -> &Scalar {
        &self.tail_defect
    }

    pub fn sample_size(&self) -> Option<u64> {
        self.sample_size
    }

    pub fn is_approx(&self) -> bool {
        self.approx
    }

    pub fn atoms(&self) -> Vec<(Scalar, Scalar)> {
        self.support
            .iter()
            .cloned()
            .zip(self.probs.iter().cloned())
            .collect()
    }

    /// Support point `x_a`, 1-based.
    pub fn point(&self, a: usize) -> &Scalar {
        &self.support[a - 1]
    }

    /// Jump height `p_a`, 1-based.
    pub fn prob(&self, a: usize) -> &Scalar {
        &self.probs[a - 1]
    }

    /// Cdf level `F(x_a)`, 1-based, with the convention `F(x_0) = 0`.
    pub fn level(&self, a: usize) -> Scalar {
        if a == 0 {
            if self.approx {
                Scalar::approx(0.0)
            } else {
                Scalar::zero()
            }
        } else {
            self.cum[a - 1].clone()
        }
    }

    /// Support gap `x_a − x_{a−1}` for `a ≥ 2`, 1-based.
    pub fn gap(&self, a: usize) -> Scalar {
        &self.support[a - 1] - &self.support[a - 2]
    }

    pub fn min_support(&self) -> &Scalar {
        &self.support[0]
    }

    pub fn max_support(&self) -> &Scalar {
        self.support.last().expect("n >= 2")
    }

    /// Support span `x_n − x_1`.
    pub fn span(&self) -> Scalar {
        self.max_support() - self.min_support()
    }

    // ---- evaluation ------------------------------------------------------

    /// `F(t)`: right-continuous step function.
    pub fn cdf(&self, t: &Scalar) -> Scalar {
        let k = self.support.partition_point(|x| x <= t);
        if k == 0 {
            self.level(0)
        } else {
            self.cum[k - 1].clone()
        }
    }

    /// Left-continuous generalized inverse `inf{t : F(t) ≥ p}` for
    /// `p ∈ (0, 1)` (the primary quantile definition).
    pub fn quantile(&self, p: &Scalar) -> Result<Scalar> {
        self.quantile_with(p, Tol::default())
    }

    pub fn quantile_with(&self, p: &Scalar, tol: Tol) -> Result<Scalar> {
        Ok(self.support[self.quantile_index_with(p, tol)?].clone())
    }

    /// 0-based index of the atom the quantile lands on; also the atom whose
    /// jump height is the density value `f(F⁻¹(p))`.
    pub fn quantile_index_with(&self, p: &Scalar, tol: Tol) -> Result<usize> {
        self.check_prob_level(p)?;
        let slack = self.level_slack(p, tol);
        let limit = p - &slack;
        Ok(self.cum.partition_point(|c| *c < limit))
    }

    /// Midpoint quantile `½(inf{t : F(t) ≥ p} + sup{t : F(t) ≤ p})`.
    pub fn quantile_mid(&self, p: &Scalar) -> Result<Scalar> {
        self.quantile_mid_with(p, Tol::default())
    }

    pub fn quantile_mid_with(&self, p: &Scalar, tol: Tol) -> Result<Scalar> {
        let inf = self.quantile_with(p, tol)?;
        let slack = self.level_slack(p, tol);
        let limit = p + &slack;
        let j = self.cum.partition_point(|c| *c <= limit);
        let sup = self.support[j.min(self.n() - 1)].clone();
        Ok((inf + sup) * Scalar::ratio(1, 2))
    }

    fn check_prob_level(&self, p: &Scalar) -> Result<()> {
        if !(p > &Scalar::zero() && p < &Scalar::one()) {
            return Err(Error::BadProbability(p.to_string()));
        }
        Ok(())
    }

    fn level_slack(&self, p: &Scalar, tol: Tol) -> Scalar {
        if self.approx || !p.is_exact() {
            Scalar::approx(tol.eps)
        } else {
            Scalar::zero()
        }
    }

    pub fn mean(&self) -> Scalar {
        self.support
            .iter()
            .zip(&self.probs)
            .fold(Scalar::zero(), |acc, (x, p)| acc + x * p)
    }

    /// Second central moment `E[(X − EX)²]` (exact in exact mode).
    pub fn variance(&self) -> Scalar {
        let mu = self.mean();
        self.support
            .iter()
            .zip(&self.probs)
            .fold(Scalar::zero(), |acc, (x, p)| {
                let d = x - &mu;
                acc + &(&d * &d) * p
            })
    }

    /// Stop-loss transform `π(t) = E[(X − t)₊]`.
    pub fn stop_loss(&self, t: &Scalar) -> Scalar {
        let start = self.support.partition_point(|x| x <= t);
        self.support[start..]
            .iter()
            .zip(&self.probs[start..])
            .fold(Scalar::zero(), |acc, (x, p)| acc + &(x - t) * p)
    }

    /// The distribution shifted to mean zero.
    pub fn centered(&self) -> Self {
        let mu = self.mean();
        self.affine(&Scalar::one(), &-&mu)
            .expect("a = 1 is valid")
            .relabel(&format!("centered({})", self.label))
    }

    /// `aX + b` with `a ≠ 0`; a negative `a` reverses and re-sorts the
    /// support. Preserves the tail defect and the recorded sample size.
    pub fn affine(&self, a: &Scalar, b: &Scalar) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::BadParam("affine needs a != 0".into()));
        }
        let pts = self
            .support
            .iter()
            .zip(&self.probs)
            .map(|(x, p)| (&(a * x) + b, p.clone()))
            .collect();
        let d = Self::build(
            format!("affine({a},{b};{})", self.label),
            pts,
            Tol::default(),
            self.sample_size,
        )?;
        d.with_tail_defect(self.tail_defect.clone())
    }

    /// Distribution of `|X − X′|` for independent copies `X, X′ ∼ F`.
    /// Includes the atom at zero with mass `Σ p_j²`. The tail defect is
    /// doubled (two copies may each carry relocated mass).
    pub fn abs_diff_dist(&self) -> Self {
        let mut acc: BTreeMap<Scalar, Scalar> = BTreeMap::new();
        let n = self.n();
        for i in 0..n {
            for j in i..n {
                let (key, mass) = if i == j {
                    (Scalar::zero(), &self.probs[i] * &self.probs[j])
                } else {
                    (
                        (&self.support[j] - &self.support[i]).abs(),
                        &(&self.probs[i] * &self.probs[j]) * &Scalar::int(2),
                    )
                };
                match acc.get_mut(&key) {
                    Some(m) => *m = &*m + &mass,
                    None => {
                        acc.insert(key, mass);
                    }
                }
            }
        }
        let defect = Scalar::min(Scalar::one(), &self.tail_defect * &Scalar::int(2));
        Self::build(
            format!("absdiff({})", self.label),
            acc.into_iter().collect(),
            Tol::default(),
            None,
        )
        .expect("abs-diff of a canonical distribution is canonical")
        .with_tail_defect(defect)
        .expect("defect clamped below one")
    }

    /// The `τ`-expectile: unique root of
    /// `ψ(e) = τ·E[(X−e)₊] − (1−τ)·E[(e−X)₊]`, solved exactly on the
    /// piecewise-linear segments between support points in exact mode, by
    /// monotone bisection to `1e-12` otherwise. `expectile(·, 1/2)` is the
    /// mean.
    pub fn expectile(&self, tau: &Scalar) -> Result<Scalar> {
        self.check_prob_level(tau)?;
        if self.approx || !tau.is_exact() {
            return Ok(self.expectile_bisect(tau.to_f64()));
        }
        // Using E[(e−X)₊] = e − μ + E[(X−e)₊]:
        //   ψ(e) = (2τ−1)·π(e) − (1−τ)(e − μ),
        // strictly decreasing with ψ(x_1) = τ(μ−x_1) > 0 > ψ(x_n).
        // On [x_j, x_{j+1}]: π(e) = S_j − e·T_j with the upper-tail sums
        // below, so the root on that segment is
        //   e = ((2τ−1)S_j + (1−τ)μ) / ((2τ−1)T_j + (1−τ)).
        let mu = self.mean();
        let two_tau_m1 = &(tau * &Scalar::int(2)) - &Scalar::one();
        let one_m_tau = &Scalar::one() - tau;
        let psi = |j: usize, s: &Scalar, t: &Scalar| -> Scalar {
            let e = &self.support[j];
            let pi_e = s - &(e * t);
            &(&two_tau_m1 * &pi_e) - &(&one_m_tau * &(e - &mu))
        };
        // suffix sums over atoms strictly above support[j]
        let mut suffix_sx = vec![Scalar::zero(); self.n()];
        let mut suffix_p = vec![Scalar::zero(); self.n()];
        for j in (0..self.n() - 1).rev() {
            suffix_sx[j] = &suffix_sx[j + 1] + &(&self.support[j + 1] * &self.probs[j + 1]);
            suffix_p[j] = &suffix_p[j + 1] + &self.probs[j + 1];
        }
        let mut seg = 0;
        for j in 0..self.n() {
            let v = psi(j, &suffix_sx[j], &suffix_p[j]);
            if v.is_zero() {
                return Ok(self.support[j].clone());
            }
            if v.is_positive() {
                seg = j;
            } else {
                break;
            }
        }
        let num = &(&two_tau_m1 * &suffix_sx[seg]) + &(&one_m_tau * &mu);
        let den = &(&two_tau_m1 * &suffix_p[seg]) + &one_m_tau;
        Ok(num / den)
    }

    fn expectile_bisect(&self, tau: f64) -> Scalar {
        let xs: Vec<f64> = self.support.iter().map(Scalar::to_f64).collect();
        let ps: Vec<f64> = self.probs.iter().map(Scalar::to_f64).collect();
        let psi = |e: f64| -> f64 {
            let mut up = 0.0;
            let mut down = 0.0;
            for (x, p) in xs.iter().zip(&ps) {
                if *x > e {
                    up += p * (x - e);
                } else {
                    down += p * (e - x);
                }
            }
            tau * up - (1.0 - tau) * down
        };
        let (mut lo, mut hi) = (xs[0], *xs.last().expect("n >= 2"));
        for _ in 0..200 {
            if hi - lo <= 1e-12 {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if psi(mid) >= 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Scalar::approx(0.5 * (lo + hi))
    }

    // ---- structure probes -------------------------------------------------

    /// If `other` is `self` shifted by a constant `λ` (same jump heights,
    /// constant support difference), return `λ`.
    pub fn shift_of(&self, other: &Self, tol: Tol) -> Option<Scalar> {
        if self.n() != other.n() {
            return None;
        }
        let slack = if self.approx || other.approx {
            Scalar::approx(tol.eps)
        } else {
            Scalar::zero()
        };
        for (p, q) in self.probs.iter().zip(&other.probs) {
            if !p.eq_within(q, &slack) {
                return None;
            }
        }
        let lambda = &other.support[0] - &self.support[0];
        for (x, y) in self.support.iter().zip(&other.support) {
            if !(y - x).eq_within(&lambda, &slack) {
                return None;
            }
        }
        Some(lambda)
    }

    /// If all consecutive support gaps share a common value `c`, return it
    /// (lattice distribution). Two-atom distributions are always lattice.
    pub fn is_lattice(&self, tol: Tol) -> Option<Scalar> {
        let slack = if self.approx {
            Scalar::approx(tol.eps)
        } else {
            Scalar::zero()
        };
        let c = self.gap(2);
        for a in 3..=self.n() {
            if !self.gap(a).eq_within(&c, &slack) {
                return None;
            }
        }
        Some(c)
    }

    /// The same distribution with every scalar converted to a float.
    pub fn to_approx(&self) -> Self {
        let mut cum: Vec<Scalar> = self.cum.iter().map(Scalar::to_approx).collect();
        *cum.last_mut().expect("n >= 2") = Scalar::approx(1.0);
        DiscreteDist {
            label: self.label.clone(),
            support: self.support.iter().map(Scalar::to_approx).collect(),
            probs: self.probs.iter().map(Scalar::to_approx).collect(),
            cum,
            tail_defect: self.tail_defect.to_approx(),
            sample_size: self.sample_size,
            approx: true,
        }
    }

    /// Structural equality of the laws (atoms and defect within `tol` for
    /// approx inputs, exact otherwise); ignores labels and sample counts.
    pub fn same_law(&self, other: &Self, tol: Tol) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let slack = if self.approx || other.approx {
            Scalar::approx(tol.eps)
        } else {
            Scalar::zero()
        };
        self.support
            .iter()
            .zip(&other.support)
            .all(|(a, b)| a.eq_within(b, &slack))
            && self
                .probs
                .iter()
                .zip(&other.probs)
                .all(|(a, b)| a.eq_within(b, &slack))
            && self.tail_defect.eq_within(&other.tail_defect, &slack)
    }
}
