//! Independent numerical oracles: transform quadrature, empirical transforms,
//! Kolmogorov-Smirnov tests, and the executable limit-theorem experiments.
//!
//! Everything here deliberately avoids the series evaluators' internals so a
//! disagreement between an oracle and a closed form is meaningful.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ml_core::{ml_laplace, MLParams};
use crate::quad;
use crate::sampling::{ml_sample, SampleBatch};
use crate::series::SeriesPolicy;
use crate::stable_levy::levy_cdf;

/// Absolute error target of the quadrature oracles.
pub const ORACLE_ABS_TOL: f64 = 1e-10;

/// Transform kind for probes and oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransformKind {
    Laplace,
    Mellin,
}

/// A set of transform arguments to evaluate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformProbe {
    pub s_values: Vec<f64>,
    pub kind: TransformKind,
}

impl TransformProbe {
    pub fn new(s_values: Vec<f64>, kind: TransformKind) -> Result<Self> {
        if s_values.is_empty() {
            return Err(Error::domain("probe needs at least one s value".to_string()));
        }
        for &s in &s_values {
            if !s.is_finite() || s < 0.0 {
                return Err(Error::domain(format!(
                    "probe s values must be finite and >= 0, got {s}"
                )));
            }
        }
        Ok(TransformProbe { s_values, kind })
    }

    pub fn laplace(s_values: &[f64]) -> Result<Self> {
        Self::new(s_values.to_vec(), TransformKind::Laplace)
    }

    pub fn mellin(s_values: &[f64]) -> Result<Self> {
        Self::new(s_values.to_vec(), TransformKind::Mellin)
    }
}

/// Integration domain of a density, with the origin behavior the quadrature
/// needs for integrable endpoint singularities: density ~ C x^p as x -> 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegrationDomain {
    pub lower: f64,
    /// may be f64::INFINITY
    pub upper: f64,
    /// p such that density ~ C x^p at the origin (0 for a bounded density)
    pub origin_exponent: f64,
}

impl IntegrationDomain {
    /// (0, inf) with a bounded density at the origin.
    pub fn positive_half_line() -> Self {
        IntegrationDomain { lower: 0.0, upper: f64::INFINITY, origin_exponent: 0.0 }
    }

    /// (0, inf) for a density behaving like x^p at the origin.
    pub fn half_line_with_origin_exponent(p: f64) -> Self {
        IntegrationDomain { lower: 0.0, upper: f64::INFINITY, origin_exponent: p }
    }
}

/// Adaptive-quadrature transform values of a density:
/// int e^{-s x} rho(x) dx or int x^{s-1} rho(x) dx per probe point.
///
/// The density closure should return NaN to signal an internal failure; that
/// turns into a quadrature error naming the failing s.
pub fn transform_oracle<F: Fn(f64) -> f64>(
    density: F,
    probe: &TransformProbe,
    domain: &IntegrationDomain,
) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(probe.s_values.len());
    for &s in &probe.s_values {
        let integrand = |x: f64| -> f64 {
            let d = density(x);
            match probe.kind {
                TransformKind::Laplace => (-s * x).exp() * d,
                TransformKind::Mellin => {
                    if x == 0.0 {
                        0.0
                    } else {
                        ((s - 1.0) * x.ln()).exp() * d
                    }
                }
            }
        };
        let p_eff = match probe.kind {
            TransformKind::Laplace => domain.origin_exponent,
            TransformKind::Mellin => domain.origin_exponent + (s - 1.0),
        };
        let value = if domain.lower == 0.0 {
            quad::integrate_density(&integrand, p_eff, domain.upper, ORACLE_ABS_TOL)
        } else if domain.upper.is_finite() {
            quad::adaptive(&integrand, domain.lower, domain.upper, ORACLE_ABS_TOL)
        } else {
            let lo = domain.lower;
            let shifted = |t: f64| integrand(lo + t);
            quad::integrate_density(&shifted, 0.0, f64::INFINITY, ORACLE_ABS_TOL)
        };
        match value {
            Ok((v, _)) => out.push(v),
            Err(e) => {
                return Err(Error::Quadrature(format!("transform oracle failed at s = {s}: {e}")))
            }
        }
    }
    Ok(out)
}

/// Per probe point: sample mean and standard error of e^{-s X} over a batch.
pub fn empirical_laplace(batch: &SampleBatch, probe: &TransformProbe) -> Result<Vec<(f64, f64)>> {
    if probe.kind != TransformKind::Laplace {
        return Err(Error::domain(
            "empirical transform supports the laplace kind only (x^{s-1} is unbounded)".to_string(),
        ));
    }
    batch.validate()?;
    let n = batch.values.len() as f64;
    let mut out = Vec::with_capacity(probe.s_values.len());
    for &s in &probe.s_values {
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for &x in &batch.values {
            let e = (-s * x).exp();
            sum += e;
            sumsq += e * e;
        }
        let mean = sum / n;
        let var = (sumsq / n - mean * mean).max(0.0);
        let stderr = if batch.values.len() > 1 {
            (var / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        out.push((mean, stderr));
    }
    Ok(out)
}

/// Slack for evaluator noise when checking CDF monotonicity on samples.
const CDF_MONOTONE_SLACK: f64 = 1e-9;

/// Two-sided one-sample Kolmogorov-Smirnov statistic
/// D_n = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
pub fn ks_statistic<F>(batch: &SampleBatch, mut cdf: F) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    batch.validate()?;
    let mut xs = batch.values.clone();
    xs.sort_unstable_by(|a, b| a.total_cmp(b));
    let n = xs.len() as f64;
    let mut d: f64 = 0.0;
    let mut prev_f = f64::NEG_INFINITY;
    for (i, &x) in xs.iter().enumerate() {
        let f = cdf(x)?;
        if f < prev_f - CDF_MONOTONE_SLACK {
            return Err(Error::NonMonotoneCdf { at: x, drop: prev_f - f });
        }
        prev_f = f;
        let hi = (i + 1) as f64 / n - f;
        let lo = f - i as f64 / n;
        d = d.max(hi).max(lo);
    }
    Ok(d)
}

/// Two-sample Kolmogorov-Smirnov statistic between two batches.
pub fn ks_two_sample(a: &SampleBatch, b: &SampleBatch) -> Result<f64> {
    a.validate()?;
    b.validate()?;
    let mut xs = a.values.clone();
    let mut ys = b.values.clone();
    xs.sort_unstable_by(|u, v| u.total_cmp(v));
    ys.sort_unstable_by(|u, v| u.total_cmp(v));
    let (n, m) = (xs.len() as f64, ys.len() as f64);
    let mut i = 0usize;
    let mut j = 0usize;
    let mut d: f64 = 0.0;
    while i < xs.len() && j < ys.len() {
        let t = xs[i].min(ys[j]);
        while i < xs.len() && xs[i] <= t {
            i += 1;
        }
        while j < ys.len() && ys[j] <= t {
            j += 1;
        }
        d = d.max((i as f64 / n - j as f64 / m).abs());
    }
    Ok(d)
}

/// Asymptotic 1% critical value for the one-sample KS test.
pub fn ks_critical_1pct(n: usize) -> f64 {
    1.63 / (n as f64).sqrt()
}

/// Asymptotic 1% critical value for the two-sample KS test.
pub fn ks_two_sample_critical_1pct(n: usize, m: usize) -> f64 {
    let (n, m) = (n as f64, m as f64);
    1.63 * ((n + m) / (n * m)).sqrt()
}

/// Analytic and Monte Carlo columns of a limit experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    /// the sequence parameter: sample size n or shape beta
    pub steps: Vec<f64>,
    pub s_values: Vec<f64>,
    /// `analytic[i][j]`: value at step i, probe point j
    pub analytic: Vec<Vec<f64>>,
    /// `limit[j]`: limiting value at probe point j
    pub limit: Vec<f64>,
    /// `empirical[i][j]`: (mean, stderr) when Monte Carlo columns were requested
    pub empirical: Option<Vec<Vec<(f64, f64)>>>,
    /// one KS statistic per step when distributional tests were requested
    pub empirical_ks: Option<Vec<f64>>,
    /// whether max-over-s |analytic - limit| is nonincreasing along the steps
    pub monotone_gap: bool,
}

impl ConvergenceReport {
    fn compute_monotone(analytic: &[Vec<f64>], limit: &[f64]) -> bool {
        let gaps: Vec<f64> = analytic
            .iter()
            .map(|row| {
                row.iter()
                    .zip(limit)
                    .map(|(a, l)| (a - l).abs())
                    .fold(0.0f64, f64::max)
            })
            .collect();
        gaps.windows(2).all(|w| w[1] <= w[0] + 1e-15)
    }

    /// max-over-s gap |analytic - limit| at each step
    pub fn gaps(&self) -> Vec<f64> {
        self.analytic
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.limit)
                    .map(|(a, l)| (a - l).abs())
                    .fold(0.0f64, f64::max)
            })
            .collect()
    }

    /// Flat CSV: `step,s,analytic,limit,gap,empirical,stderr,ks`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("step,s,analytic,limit,gap,empirical,stderr,ks\n");
        for (i, &step) in self.steps.iter().enumerate() {
            for (j, &s) in self.s_values.iter().enumerate() {
                let a = self.analytic[i][j];
                let l = self.limit[j];
                let (emp, se) = match &self.empirical {
                    Some(e) => {
                        let (m, se) = e[i][j];
                        (m.to_string(), se.to_string())
                    }
                    None => (String::new(), String::new()),
                };
                let ks = match &self.empirical_ks {
                    Some(k) => k[i].to_string(),
                    None => String::new(),
                };
                out.push_str(&format!(
                    "{step},{s},{a},{l},{gap},{emp},{se},{ks}\n",
                    gap = (a - l).abs()
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

fn check_increasing(steps: &[f64], what: &str) -> Result<()> {
    if steps.is_empty() {
        return Err(Error::domain(format!("{what} must be nonempty")));
    }
    if steps.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain(format!("{what} must be strictly increasing")));
    }
    Ok(())
}

/// Central-limit experiment for w = (x_1 + ... + x_n)/n^{1/a}:
/// analytic L_w(s) = [1 + (d/n) s^a]^{-n b} against the limit e^{-d b s^a},
/// with optional Monte Carlo columns from `mc_size` draws of w per step.
pub fn clt_convergence_report<R: Rng + ?Sized>(
    p: &MLParams,
    n_list: &[u32],
    probe: &TransformProbe,
    mc_size: usize,
    rng: &mut R,
) -> Result<ConvergenceReport> {
    let steps_f: Vec<f64> = n_list.iter().map(|&n| n as f64).collect();
    check_increasing(&steps_f, "n_list")?;
    if probe.kind != TransformKind::Laplace {
        return Err(Error::domain("clt report uses the laplace kind".to_string()));
    }
    if n_list[0] < 1 {
        return Err(Error::domain("n values must be >= 1".to_string()));
    }
    let mut analytic = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let scaled = MLParams::new(p.alpha, p.beta, p.delta / n as f64)?;
        let row: Vec<f64> = probe
            .s_values
            .iter()
            .map(|&s| ml_laplace(s, &scaled).map(|v| v.powi(n as i32)))
            .collect::<Result<_>>()?;
        analytic.push(row);
    }
    let limit: Vec<f64> = probe
        .s_values
        .iter()
        .map(|&s| (-p.delta * p.beta * s.powf(p.alpha)).exp())
        .collect();

    let empirical = if mc_size > 0 {
        let mut per_step = Vec::with_capacity(n_list.len());
        for &n in n_list {
            let scale = (n as f64).powf(1.0 / p.alpha);
            let mut values = Vec::with_capacity(mc_size);
            for _ in 0..mc_size {
                let mut acc = 0.0;
                for _ in 0..n {
                    acc += ml_sample(rng, p);
                }
                values.push(acc / scale);
            }
            let batch = SampleBatch {
                seed: 0,
                stream_id: 0,
                dist_tag: crate::sampling::DistTag::Ml,
                params_echo: format!("clt w-draws n={n}"),
                values,
            };
            per_step.push(empirical_laplace(&batch, probe)?);
        }
        Some(per_step)
    } else {
        None
    };

    let monotone_gap = ConvergenceReport::compute_monotone(&analytic, &limit);
    Ok(ConvergenceReport {
        steps: steps_f,
        s_values: probe.s_values.clone(),
        analytic,
        limit,
        empirical,
        empirical_ks: None,
        monotone_gap,
    })
}

/// Scale-limit experiment for beta -> infinity with delta replaced by
/// delta/beta: analytic [1 + (d/b) s^a]^{-b} against the limit e^{-d s^a},
/// with optional per-step KS statistics of ML(a, b, d/b) batches against the
/// law of d^{1/a} times a positive Levy variate.
pub fn levy_limit_report<R: Rng + ?Sized>(
    p: &MLParams,
    beta_list: &[f64],
    probe: &TransformProbe,
    mc_size: usize,
    rng: &mut R,
) -> Result<ConvergenceReport> {
    check_increasing(beta_list, "beta_list")?;
    if probe.kind != TransformKind::Laplace {
        return Err(Error::domain("levy limit report uses the laplace kind".to_string()));
    }
    if beta_list[0] <= 0.0 {
        return Err(Error::domain("beta values must be > 0".to_string()));
    }
    if mc_size > 0 && p.alpha == 1.0 {
        return Err(Error::domain(
            "distributional columns need alpha < 1 (alpha = 1 is the degenerate limit)".to_string(),
        ));
    }
    let mut analytic = Vec::with_capacity(beta_list.len());
    for &b in beta_list {
        let scaled = MLParams::new(p.alpha, b, p.delta / b)?;
        let row: Vec<f64> = probe
            .s_values
            .iter()
            .map(|&s| ml_laplace(s, &scaled))
            .collect::<Result<_>>()?;
        analytic.push(row);
    }
    let limit: Vec<f64> = probe
        .s_values
        .iter()
        .map(|&s| (-p.delta * s.powf(p.alpha)).exp())
        .collect();

    let empirical_ks = if mc_size > 0 {
        let sp = crate::stable_levy::StableParams { alpha: p.alpha };
        let pol = SeriesPolicy::default();
        let scale = p.delta.powf(1.0 / p.alpha);
        let mut ks = Vec::with_capacity(beta_list.len());
        for &b in beta_list {
            let scaled = MLParams::new(p.alpha, b, p.delta / b)?;
            let mut values = Vec::with_capacity(mc_size);
            for _ in 0..mc_size {
                values.push(ml_sample(rng, &scaled));
            }
            let batch = SampleBatch {
                seed: 0,
                stream_id: 0,
                dist_tag: crate::sampling::DistTag::Ml,
                params_echo: format!("levy-limit draws beta={b}"),
                values,
            };
            let d = ks_statistic(&batch, |x| Ok(levy_cdf(x / scale, &sp, &pol)?.value))?;
            ks.push(d);
        }
        Some(ks)
    } else {
        None
    };

    let monotone_gap = ConvergenceReport::compute_monotone(&analytic, &limit);
    Ok(ConvergenceReport {
        steps: beta_list.to_vec(),
        s_values: probe.s_values.clone(),
        analytic,
        limit,
        empirical: None,
        empirical_ks,
        monotone_gap,
    })
}
