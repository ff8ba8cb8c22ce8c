//! The Mittag-Leffler law: density, CDF, and its exact Laplace and Mellin
//! transforms.
//!
//! The density is
//!
//!   f(x) = x^{ab-1}/d^b  sum_{k>=0} (b)_k/k! (-1)^k (x^a)^k / (d^k Gamma(ab + ak))
//!
//! for stable index `a` in (0,1], shape `b > 0`, scale `d > 0`. Its Laplace
//! transform is (1 + d s^a)^{-b}; at a = 1 the law collapses to the gamma
//! distribution and both pdf and cdf are evaluated in closed form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{EvalResult, Method, PrabhakarSeries, SeriesPolicy};
use crate::special::{gamma_lr, ln_gamma};

pub use crate::special::{pochhammer, recip_gamma};

/// Parameters (alpha, beta, delta) of the Mittag-Leffler law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MLParams {
    /// stable index, 0 < alpha <= 1
    pub alpha: f64,
    /// shape, beta > 0
    pub beta: f64,
    /// scale, delta > 0
    pub delta: f64,
}

impl MLParams {
    pub fn new(alpha: f64, beta: f64, delta: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::domain(format!(
                "alpha must satisfy 0 < alpha <= 1, got {alpha}"
            )));
        }
        if !(beta > 0.0) {
            return Err(Error::domain(format!("beta must satisfy beta > 0, got {beta}")));
        }
        if !(delta > 0.0) {
            return Err(Error::domain(format!("delta must satisfy delta > 0, got {delta}")));
        }
        Ok(MLParams { alpha, beta, delta })
    }

    /// lower edge of the Mellin strip, 1 - alpha*beta
    pub fn mellin_lo(&self) -> f64 {
        1.0 - self.alpha * self.beta
    }

    /// upper edge of the Mellin strip, 1 + alpha
    pub fn mellin_hi(&self) -> f64 {
        1.0 + self.alpha
    }
}

fn check_x(x: f64) -> Result<()> {
    if !(x >= 0.0) {
        return Err(Error::domain(format!("x must satisfy x >= 0, got {x}")));
    }
    Ok(())
}

/// Density of the Mittag-Leffler law at `x >= 0`.
///
/// At x = 0 the boundary value of the density is returned with the
/// `singular` flag set when it is infinite (alpha*beta < 1). At alpha = 1
/// the gamma closed form is used, which is the exact sum of the series.
pub fn ml_pdf(x: f64, p: &MLParams, pol: &SeriesPolicy) -> Result<EvalResult> {
    check_x(x)?;
    pol.validate()?;
    let ab = p.alpha * p.beta;
    if x == 0.0 {
        // limit of x^{ab-1}/(d^b Gamma(ab)) as x -> 0
        let (value, singular) = if ab > 1.0 {
            (0.0, false)
        } else if ab == 1.0 {
            ((-p.beta * p.delta.ln() - ln_gamma(ab)).exp(), false)
        } else {
            (f64::INFINITY, true)
        };
        return Ok(EvalResult {
            value,
            abs_err_est: if value.is_finite() { 4.0 * f64::EPSILON * value } else { 0.0 },
            terms_used: 0,
            method: Method::Series,
            singular,
        });
    }
    if p.alpha == 1.0 {
        // gamma density x^{b-1} e^{-x/d} / (d^b Gamma(b))
        let ln_f = (p.beta - 1.0) * x.ln() - x / p.delta - p.beta * p.delta.ln() - ln_gamma(p.beta);
        let value = if ln_f < -745.0 { 0.0 } else { ln_f.exp() };
        return Ok(EvalResult::exact(value));
    }
    let z = x.powf(p.alpha) / p.delta;
    let series = PrabhakarSeries { g: p.beta, a: p.alpha, b: ab };
    let s = series.eval(z, pol)?;
    let scale = ((ab - 1.0) * x.ln() - p.beta * p.delta.ln()).exp();
    Ok(EvalResult {
        value: scale * s.value,
        abs_err_est: scale * s.abs_err_est,
        ..s
    })
}

/// CDF of the Mittag-Leffler law at `x >= 0`:
/// F(x) = sum_k (b)_k/k! (-1)^k x^{a(b+k)} / (d^{b+k} Gamma(ab + ak + 1)).
pub fn ml_cdf(x: f64, p: &MLParams, pol: &SeriesPolicy) -> Result<EvalResult> {
    check_x(x)?;
    pol.validate()?;
    if x == 0.0 {
        return Ok(EvalResult {
            value: 0.0,
            abs_err_est: 0.0,
            terms_used: 0,
            method: Method::Series,
            singular: false,
        });
    }
    if p.alpha == 1.0 {
        // regularized lower incomplete gamma P(beta, x/delta)
        let value = gamma_lr(p.beta, x / p.delta);
        return Ok(EvalResult::exact(value));
    }
    let ab = p.alpha * p.beta;
    let z = x.powf(p.alpha) / p.delta;
    let series = PrabhakarSeries { g: p.beta, a: p.alpha, b: ab + 1.0 };
    let s = series.eval(z, pol)?;
    let scale = (ab * x.ln() - p.beta * p.delta.ln()).exp();
    let value = (scale * s.value).clamp(0.0, 1.0);
    Ok(EvalResult {
        value,
        abs_err_est: scale * s.abs_err_est,
        ..s
    })
}

/// Laplace transform (1 + d s^a)^{-b} of the Mittag-Leffler density, s >= 0.
pub fn ml_laplace(s: f64, p: &MLParams) -> Result<f64> {
    if !(s >= 0.0) {
        return Err(Error::domain(format!("s must satisfy s >= 0, got {s}")));
    }
    Ok((1.0 + p.delta * s.powf(p.alpha)).powf(-p.beta))
}

/// Mellin transform E(x^{s-1}) on the strip 1 - alpha*beta < s < 1 + alpha:
///
///   Gamma(b - 1/a + s/a) Gamma(1 + 1/a - s/a) d^{(s-1)/a} / (Gamma(b) Gamma(2-s)).
pub fn ml_mellin(s: f64, p: &MLParams) -> Result<f64> {
    let lo = p.mellin_lo();
    let hi = p.mellin_hi();
    if !(s > lo) {
        return Err(Error::domain(format!(
            "mellin argument must satisfy s > 1 - alpha*beta = {lo}, got {s}"
        )));
    }
    if !(s < hi) {
        return Err(Error::domain(format!(
            "mellin argument must satisfy s < 1 + alpha = {hi}, got {s}"
        )));
    }
    let t = (s - 1.0) / p.alpha;
    let ln_v = ln_gamma(p.beta + t) + ln_gamma(1.0 - t) + t * p.delta.ln()
        - ln_gamma(p.beta)
        - ln_gamma(2.0 - s);
    Ok(ln_v.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pol() -> SeriesPolicy {
        SeriesPolicy::default()
    }

    #[test]
    fn params_validation_names_bounds() {
        let e = MLParams::new(1.5, 1.0, 1.0).unwrap_err();
        assert!(e.to_string().contains("0 < alpha <= 1"), "{e}");
        assert!(MLParams::new(0.5, 0.0, 1.0).is_err());
        assert!(MLParams::new(0.5, 1.0, -1.0).is_err());
        assert!(MLParams::new(f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn pdf_exponential_case() {
        let p = MLParams::new(1.0, 1.0, 1.0).unwrap();
        let r = ml_pdf(0.5, &p, &pol()).unwrap();
        assert_relative_eq!(r.value, 0.606530659712633424, max_relative = 1e-13);
    }

    #[test]
    fn pdf_gamma_case() {
        // alpha=1, beta=2: x e^{-x}
        let p = MLParams::new(1.0, 2.0, 1.0).unwrap();
        let r = ml_pdf(1.0, &p, &pol()).unwrap();
        assert_relative_eq!(r.value, 0.367879441171442322, max_relative = 1e-13);
    }

    #[test]
    fn pdf_half_closed_form() {
        // alpha=1/2, beta=1, delta=1 at x=1: 1/sqrt(pi) - e erfc(1)
        let p = MLParams::new(0.5, 1.0, 1.0).unwrap();
        let r = ml_pdf(1.0, &p, &pol()).unwrap();
        assert_relative_eq!(r.value, 0.136606007391949283, max_relative = 1e-12);
        assert!(r.abs_err_est <= 1e-12 * r.value);
    }

    #[test]
    fn cdf_examples() {
        let p = MLParams::new(1.0, 1.0, 1.0).unwrap();
        let r = ml_cdf(std::f64::consts::LN_2, &p, &pol()).unwrap();
        assert_relative_eq!(r.value, 0.5, max_relative = 1e-13);

        let p = MLParams::new(1.0, 2.0, 1.0).unwrap();
        let r = ml_cdf(1.0, &p, &pol()).unwrap();
        assert_relative_eq!(r.value, 0.264241117657115357, max_relative = 1e-12);

        let p = MLParams::new(0.5, 1.0, 1.0).unwrap();
        let r = ml_cdf(1.0, &p, &pol()).unwrap();
        assert_relative_eq!(r.value, 0.572416423844192996, max_relative = 1e-12);
    }

    #[test]
    fn pdf_boundary_at_zero() {
        // ab < 1: singular
        let p = MLParams::new(0.5, 1.0, 1.0).unwrap();
        let r = ml_pdf(0.0, &p, &pol()).unwrap();
        assert!(r.value.is_infinite() && r.singular);
        // ab = 1: k=0 coefficient 1/(d^b Gamma(1))
        let p = MLParams::new(0.5, 2.0, 2.0).unwrap();
        let r = ml_pdf(0.0, &p, &pol()).unwrap();
        assert_relative_eq!(r.value, 0.25, max_relative = 1e-13);
        assert!(!r.singular);
        // ab > 1: zero
        let p = MLParams::new(1.0, 2.0, 1.0).unwrap();
        assert_eq!(ml_pdf(0.0, &p, &pol()).unwrap().value, 0.0);
    }

    #[test]
    fn laplace_examples() {
        let p = MLParams::new(0.7, 3.0, 2.0).unwrap();
        assert_eq!(ml_laplace(0.0, &p).unwrap(), 1.0);
        let p = MLParams::new(0.5, 2.0, 1.0).unwrap();
        assert_relative_eq!(ml_laplace(1.0, &p).unwrap(), 0.25, max_relative = 1e-14);
        let p = MLParams::new(1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(ml_laplace(1.0, &p).unwrap(), 0.5, max_relative = 1e-14);
        assert!(ml_laplace(-0.1, &p).is_err());
    }

    #[test]
    fn laplace_strictly_decreasing() {
        let p = MLParams::new(0.5, 1.5, 0.7).unwrap();
        let mut last = 1.0;
        for i in 1..50 {
            let v = ml_laplace(i as f64 * 0.1, &p).unwrap();
            assert!(v < last);
            last = v;
        }
    }

    #[test]
    fn mellin_examples() {
        for p in [
            MLParams::new(0.5, 1.0, 1.0).unwrap(),
            MLParams::new(0.3, 2.0, 0.5).unwrap(),
            MLParams::new(1.0, 0.5, 2.0).unwrap(),
        ] {
            assert_relative_eq!(ml_mellin(1.0, &p).unwrap(), 1.0, max_relative = 1e-13);
        }
        // frozen from the factorization oracle Gamma(0.5) Gamma(1.5) / Gamma(0.75)
        let p = MLParams::new(0.5, 1.0, 1.0).unwrap();
        assert_relative_eq!(
            ml_mellin(1.25, &p).unwrap(),
            1.28184667602042379,
            max_relative = 1e-13
        );
        // E(sqrt x) for the unit exponential is Gamma(1.5)
        let p = MLParams::new(1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(
            ml_mellin(1.5, &p).unwrap(),
            0.886226925452758014,
            max_relative = 1e-13
        );
    }

    #[test]
    fn mellin_strip_bounds_are_named() {
        let p = MLParams::new(0.5, 1.0, 1.0).unwrap();
        let e = ml_mellin(1.6, &p).unwrap_err();
        assert!(e.to_string().contains("1 + alpha"), "{e}");
        let e = ml_mellin(0.4, &p).unwrap_err();
        assert!(e.to_string().contains("1 - alpha*beta"), "{e}");
    }

    #[test]
    fn pdf_rejects_negative_x() {
        let p = MLParams::new(0.5, 1.0, 1.0).unwrap();
        assert!(ml_pdf(-1.0, &p, &pol()).is_err());
        assert!(ml_cdf(-1.0, &p, &pol()).is_err());
    }
}
