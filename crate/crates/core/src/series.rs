//! Shared evaluation engine for Prabhakar-type power series
//!
//!   S(z) = sum_{k>=0} (g)_k / k! * (-z)^k / Gamma(b + a k),   z >= 0
//!
//! which underlies the Mittag-Leffler density/CDF and the pathway f* family.
//!
//! Three routes cover the whole half-line:
//!   * direct: compensated summation of the defining series, with a running
//!     cancellation ratio checked against the policy guard;
//!   * tail: the large-z expansion from the right-half-plane residues,
//!     sum_j (g)_j/j! (-1)^j z^{-g-j} / Gamma(b - a(g+j)), summed to its
//!     optimal truncation (it is asymptotic, not convergent);
//!   * quadrature: fixed-Talbot inversion of s^{ag-b} (s^a + z)^{-g} at t = 1,
//!     which bridges the crossover zone where both series lose digits.
//!
//! The result with the smallest estimated relative error wins. At a = 1 the
//! Kummer transform turns the series into an all-positive sum and none of
//! this is needed.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{ln_gamma, ln_recip_gamma};

const EPS: f64 = f64::EPSILON;
/// guards exp() overflow in term construction
const LN_TERM_CAP: f64 = 700.0;

/// Truncation and cancellation policy for all series evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesPolicy {
    /// stop once two consecutive terms fall below `rel_tol * |partial sum|`
    pub rel_tol: f64,
    /// hard budget on the term index
    pub max_terms: usize,
    /// maximum allowed (largest |term|) / (|result|) before the direct sum
    /// is considered cancelled-out
    pub cancel_guard: f64,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        SeriesPolicy {
            rel_tol: 1e-12,
            max_terms: 10_000,
            cancel_guard: 1e8,
        }
    }
}

impl SeriesPolicy {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::domain(format!(
                "SeriesPolicy.rel_tol must be > 0, got {}",
                self.rel_tol
            )));
        }
        if self.max_terms < 1 {
            return Err(Error::domain("SeriesPolicy.max_terms must be >= 1".to_string()));
        }
        if !(self.cancel_guard > 1.0) {
            return Err(Error::domain(format!(
                "SeriesPolicy.cancel_guard must be > 1, got {}",
                self.cancel_guard
            )));
        }
        Ok(())
    }
}

/// Which evaluation route produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Series,
    TailSeries,
    Quadrature,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Series => write!(f, "series"),
            Method::TailSeries => write!(f, "tail_series"),
            Method::Quadrature => write!(f, "quadrature"),
        }
    }
}

/// A numerical value with an a-posteriori absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub abs_err_est: f64,
    pub terms_used: usize,
    pub method: Method,
    /// set when the requested point is a boundary where the true value is a
    /// limit (possibly infinite) rather than a series sum
    pub singular: bool,
}

impl EvalResult {
    pub(crate) fn exact(value: f64) -> Self {
        EvalResult {
            value,
            abs_err_est: 4.0 * EPS * value.abs(),
            terms_used: 0,
            method: Method::Series,
            singular: false,
        }
    }
}

/// The series family S(z) = sum (g)_k/k! (-z)^k / Gamma(b + a k).
#[derive(Debug, Clone, Copy)]
pub(crate) struct PrabhakarSeries {
    /// the Pochhammer parameter g (gamma in the three-parameter notation)
    pub g: f64,
    /// the exponent step a (> 0)
    pub a: f64,
    /// the gamma-argument offset b (> 0)
    pub b: f64,
}

struct BranchValue {
    value: f64,
    est: f64,
    terms: usize,
    method: Method,
}

impl PrabhakarSeries {
    /// Evaluate S(z) for z >= 0 choosing the best available route.
    pub fn eval(&self, z: f64, pol: &SeriesPolicy) -> Result<EvalResult> {
        pol.validate()?;
        debug_assert!(self.g > 0.0 && self.a > 0.0 && self.b > 0.0);
        if z == 0.0 {
            let (lnr, sign) = ln_recip_gamma(self.b);
            return Ok(EvalResult {
                value: sign * lnr.exp(),
                abs_err_est: 2.0 * EPS * lnr.exp(),
                terms_used: 1,
                method: Method::Series,
                singular: false,
            });
        }
        if self.a == 1.0 {
            let b = self.kummer(z, pol)?;
            return Ok(EvalResult {
                value: b.value,
                abs_err_est: b.est,
                terms_used: b.terms,
                method: b.method,
                singular: false,
            });
        }

        let mut best: Option<BranchValue> = None;
        let mut cancelled: Option<Error> = None;

        // direct series: skip when the predicted peak term index z^(1/a) is
        // beyond the point where the cancellation guard would reject the sum
        let peak_k = z.powf(1.0 / self.a);
        if peak_k < (pol.max_terms as f64 / 2.0).min(600.0) {
            match self.direct(z, pol) {
                Ok(b) => best = Some(b),
                // guard trips hand over to the other branches
                Err(e @ Error::Cancellation { .. }) => cancelled = Some(e),
                // an exhausted term budget is a hard policy failure
                Err(e) => return Err(e),
            }
        }

        let good_enough =
            |b: &BranchValue, pol: &SeriesPolicy| b.est <= pol.rel_tol * b.value.abs();

        if self.a < 1.0 {
            if !best.as_ref().is_some_and(|b| good_enough(b, pol)) && z > 1.0 {
                if let Some(t) = self.tail(z, pol) {
                    best = Some(pick(best, t));
                }
            }
            if !best.as_ref().is_some_and(|b| good_enough(b, pol)) {
                let q = self.talbot(z);
                best = Some(pick(best, q));
            }
        }

        match best {
            Some(b) => Ok(EvalResult {
                value: b.value,
                abs_err_est: b.est,
                terms_used: b.terms,
                method: b.method,
                singular: false,
            }),
            None => Err(cancelled.unwrap_or(Error::NonConvergence {
                max_terms: pol.max_terms,
                last_term: f64::NAN,
            })),
        }
    }

    /// Direct defining series with Kahan summation and a cancellation guard.
    fn direct(&self, z: f64, pol: &SeriesPolicy) -> std::result::Result<BranchValue, Error> {
        let ln_z = z.ln();
        // ln of (g)_k z^k / k!, advanced incrementally
        let mut ln_coef = 0.0f64;
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        let mut max_abs = 0.0f64;
        let mut round_scale = 0.0f64;
        let mut small_run = 0usize;
        let mut last_abs = f64::NAN;
        for k in 0..pol.max_terms {
            let (ln_rg, sign_rg) = ln_recip_gamma(self.b + self.a * k as f64);
            let ln_t = ln_coef + ln_rg;
            if ln_t > LN_TERM_CAP {
                return Err(Error::Cancellation {
                    ratio: f64::INFINITY,
                    guard: pol.cancel_guard,
                });
            }
            let mut t = sign_rg * ln_t.exp();
            if k % 2 == 1 {
                t = -t;
            }
            let at = t.abs();
            let y = t - comp;
            let ns = sum + y;
            comp = (ns - sum) - y;
            sum = ns;
            max_abs = max_abs.max(at);
            // per-term exponent error: log-gamma absolute error scales with
            // the magnitude of the log pieces, plus recurrence drift in k
            round_scale += at * (10.0 + 0.5 * k as f64 + 2.0 * ln_coef.abs() + 10.0 * ln_rg.abs());
            last_abs = at;
            if at <= pol.rel_tol * sum.abs() {
                small_run += 1;
                if small_run >= 2 && k >= 2 {
                    let ratio = if sum != 0.0 { max_abs / sum.abs() } else { f64::INFINITY };
                    if ratio > pol.cancel_guard {
                        return Err(Error::Cancellation {
                            ratio,
                            guard: pol.cancel_guard,
                        });
                    }
                    let est = at.max(round_scale * EPS).max(max_abs * 2.0 * EPS);
                    return Ok(BranchValue {
                        value: sum,
                        est,
                        terms: k + 1,
                        method: Method::Series,
                    });
                }
            } else {
                small_run = 0;
            }
            ln_coef += (self.g + k as f64).ln() - ((k + 1) as f64).ln() + ln_z;
        }
        Err(Error::NonConvergence {
            max_terms: pol.max_terms,
            last_term: last_abs,
        })
    }

    /// Asymptotic residue expansion for large z, truncated at the smallest
    /// term. Returns None when no usable partial sum exists.
    fn tail(&self, z: f64, pol: &SeriesPolicy) -> Option<BranchValue> {
        let ln_z = z.ln();
        let ln_g0 = ln_gamma(self.g);
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        let mut round_scale = 0.0f64;
        let mut prev_nonzero = f64::INFINITY;
        let mut small_run = 0usize;
        let mut terms = 0usize;
        for j in 0..pol.max_terms.min(1000) {
            let jf = j as f64;
            let (ln_rg, sign_rg) = ln_recip_gamma(self.b - self.a * (self.g + jf));
            let t = if sign_rg == 0.0 {
                0.0
            } else {
                let ln_t =
                    ln_gamma(self.g + jf) - ln_g0 - ln_gamma(jf + 1.0) - (self.g + jf) * ln_z + ln_rg;
                if ln_t > LN_TERM_CAP {
                    return None;
                }
                let mut t = sign_rg * ln_t.exp();
                if j % 2 == 1 {
                    t = -t;
                }
                t
            };
            let at = t.abs();
            if at != 0.0 && at > prev_nonzero && j >= 2 {
                // divergence onset: stop at the optimal truncation
                if terms == 0 {
                    return None;
                }
                return Some(BranchValue {
                    value: sum,
                    est: at.max(round_scale * EPS),
                    terms,
                    method: Method::TailSeries,
                });
            }
            let y = t - comp;
            let ns = sum + y;
            comp = (ns - sum) - y;
            sum = ns;
            round_scale += at * (6.0 + 0.5 * jf);
            if at != 0.0 {
                prev_nonzero = at;
                terms = j + 1;
            }
            if at <= pol.rel_tol * sum.abs() {
                small_run += 1;
                if small_run >= 2 && j >= 2 && sum != 0.0 {
                    return Some(BranchValue {
                        value: sum,
                        est: at.max(round_scale * EPS),
                        terms,
                        method: Method::TailSeries,
                    });
                }
            } else {
                small_run = 0;
            }
        }
        if sum != 0.0 {
            return Some(BranchValue {
                value: sum,
                est: prev_nonzero.max(round_scale * EPS),
                terms,
                method: Method::TailSeries,
            });
        }
        None
    }

    /// Fixed-Talbot inversion of F(s) = s^{ag-b} (s^a + z)^{-g} at t = 1.
    ///
    /// Valid for a < 1: the principal branch of s^a keeps F analytic off the
    /// negative real axis, which the Talbot contour never crosses. The error
    /// estimate is the difference between the M=32 and M=24 rules plus a
    /// rounding floor proportional to the summed term magnitudes.
    fn talbot(&self, z: f64) -> BranchValue {
        let (v32, mag) = self.talbot_sum(z, 32);
        let (v24, _) = self.talbot_sum(z, 24);
        BranchValue {
            value: v32,
            est: (v32 - v24).abs() + 16.0 * EPS * mag,
            terms: 32,
            method: Method::Quadrature,
        }
    }

    fn talbot_sum(&self, z: f64, m: usize) -> (f64, f64) {
        let fs = |s: Complex64| -> Complex64 {
            s.powf(self.a * self.g - self.b) * (s.powf(self.a) + z).powf(-self.g)
        };
        let r = 0.4 * m as f64;
        let first = 0.5 * fs(Complex64::new(r, 0.0)).re * r.exp();
        let mut total = first;
        let mut mag = first.abs();
        for k in 1..m {
            let th = k as f64 * std::f64::consts::PI / m as f64;
            let cot = th.cos() / th.sin();
            let s = Complex64::new(r * th * cot, r * th);
            let w = Complex64::new(1.0, th + cot * (th * cot - 1.0));
            let term = (s.exp() * fs(s) * w).re;
            total += term;
            mag += (s.exp() * fs(s) * w).norm();
        }
        ((r / m as f64) * total, (r / m as f64) * mag)
    }

    /// a = 1: Kummer-transformed confluent series
    /// S(z) = e^{-z}/Gamma(b) * sum_k (b-g)_k z^k / ((b)_k k!),
    /// an eventually-positive sum with no cancellation blow-up.
    fn kummer(&self, z: f64, pol: &SeriesPolicy) -> Result<BranchValue> {
        let mut term = 1.0f64;
        let mut sum = 1.0f64;
        let mut sum_abs = 1.0f64;
        let mut ln_offset = 0.0f64;
        let mut converged = false;
        let mut used = 1;
        for k in 0..pol.max_terms {
            let kf = k as f64;
            let num = self.b - self.g + kf;
            if num == 0.0 {
                converged = true;
                used = k + 1;
                break;
            }
            term *= z * num / ((self.b + kf) * (kf + 1.0));
            sum += term;
            sum_abs += term.abs();
            if sum.abs() > 1e280 {
                sum *= 1e-280;
                sum_abs *= 1e-280;
                term *= 1e-280;
                ln_offset += 280.0 * std::f64::consts::LN_10;
            }
            if term.abs() <= pol.rel_tol * sum.abs() && k >= 1 {
                converged = true;
                used = k + 2;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence {
                max_terms: pol.max_terms,
                last_term: term.abs(),
            });
        }
        if sum <= 0.0 {
            // (b-g) < 0 can produce leading negative terms; fall back to a
            // plain signed combination without the log rescaling
            let value = (-z + ln_offset - ln_gamma(self.b)).exp() * sum;
            return Ok(BranchValue {
                value,
                est: (-z + ln_offset - ln_gamma(self.b)).exp() * sum_abs * 8.0 * EPS
                    + 4.0 * EPS * value.abs(),
                terms: used,
                method: Method::Series,
            });
        }
        let ln_value = -z + ln_offset + sum.ln() - ln_gamma(self.b);
        if ln_value > LN_TERM_CAP {
            return Err(Error::Overflow("kummer series value exceeds f64".to_string()));
        }
        let value = ln_value.exp();
        let rel_round = (sum_abs / sum) * 8.0 * EPS + (z.abs() + 2.0) * EPS;
        Ok(BranchValue {
            value,
            est: value * rel_round,
            terms: used,
            method: Method::Series,
        })
    }
}

fn pick(best: Option<BranchValue>, cand: BranchValue) -> BranchValue {
    match best {
        None => cand,
        Some(b) => {
            let rb = b.est / b.value.abs().max(f64::MIN_POSITIVE);
            let rc = cand.est / cand.value.abs().max(f64::MIN_POSITIVE);
            if rc < rb {
                cand
            } else {
                b
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn eval(g: f64, a: f64, b: f64, z: f64) -> EvalResult {
        PrabhakarSeries { g, a, b }.eval(z, &SeriesPolicy::default()).unwrap()
    }

    #[test]
    fn collapses_to_exponential() {
        // g = b = a = 1: S(z) = e^{-z} exactly (Kummer route, one term)
        for z in [0.1, 1.0, 10.0, 300.0] {
            let r = eval(1.0, 1.0, 1.0, z);
            assert_relative_eq!(r.value, (-z).exp(), max_relative = 1e-13);
        }
    }

    #[test]
    fn z_zero_is_recip_gamma() {
        let r = eval(2.0, 0.5, 1.5, 0.0);
        assert_relative_eq!(r.value, crate::special::recip_gamma(1.5), max_relative = 1e-14);
    }

    #[test]
    fn small_z_direct_route() {
        let r = eval(1.0, 0.5, 0.5, 1.0);
        assert_eq!(r.method, Method::Series);
        // x = 1, alpha = 0.5, beta = 1: f(1) = S(1) = 0.13660600739194928
        assert_relative_eq!(r.value, 0.136606007391949283, max_relative = 1e-12);
    }

    #[test]
    fn large_z_tail_route() {
        // alpha=0.5, beta=1 at x = 2500 (z = 50): f = x^{-1/2} S => S = 50 * f
        let r = eval(1.0, 0.5, 0.5, 50.0);
        assert_eq!(r.method, Method::TailSeries);
        assert_relative_eq!(r.value, 50.0 * 2.25540563135323878e-6, max_relative = 1e-11);
    }

    #[test]
    fn crossover_zone_uses_best_route() {
        // z = 4, alpha = 0.5, beta = 1: x = 16, f = 0.00404793826187768185
        let r = eval(1.0, 0.5, 0.5, 4.0);
        assert_relative_eq!(r.value, 4.0 * 0.00404793826187768185, max_relative = 1e-8);
        assert!(r.abs_err_est < 1e-7 * r.value.abs());
    }

    #[test]
    fn cancellation_guard_is_reported() {
        // a > 1 has no tail/quadrature escape hatch; S(z) = E_{2,1}(-z) =
        // cos(sqrt z) cancels catastrophically at large z
        let err = PrabhakarSeries { g: 1.0, a: 2.0, b: 1.0 }
            .eval(1.0e4, &SeriesPolicy::default())
            .unwrap_err();
        assert!(matches!(err, Error::Cancellation { .. }), "got {err:?}");
    }

    #[test]
    fn oscillatory_a2_small_z_works() {
        // E_{2,1}(-z) = cos(sqrt z) converges cleanly for moderate z
        let r = eval(1.0, 2.0, 1.0, 4.0);
        assert_relative_eq!(r.value, 2.0f64.cos(), max_relative = 1e-12);
    }

    #[test]
    fn kummer_handles_g_above_b() {
        // g > b makes the transformed sum signed; frozen from hyp1f1 oracles
        let r = eval(2.0, 1.0, 1.0, 2.0);
        assert_relative_eq!(r.value, -0.135335283236612692, max_relative = 1e-12);
        let r = eval(3.0, 1.0, 1.5, 8.0);
        assert_relative_eq!(r.value, 0.00263040055832860346, max_relative = 1e-10);
    }

    #[test]
    fn non_convergence_is_reported() {
        let pol = SeriesPolicy {
            rel_tol: 1e-12,
            max_terms: 3,
            cancel_guard: 1e8,
        };
        let err = PrabhakarSeries { g: 1.0, a: 0.5, b: 0.5 }
            .eval(0.9, &pol)
            .unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }), "got {err:?}");
    }

    #[test]
    fn policy_validation() {
        let bad = SeriesPolicy { rel_tol: 0.0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = SeriesPolicy { cancel_guard: 0.5, ..Default::default() };
        assert!(bad.validate().is_err());
    }
}
