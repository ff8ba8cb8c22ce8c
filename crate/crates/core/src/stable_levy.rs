//! The positive Levy (one-sided stable) law with Laplace transform e^{-s^a}.
//!
//! Three faces of one object, all built on the same Zolotarev kernel
//!
//!   A(phi) = sin(a phi)^{a/(1-a)} sin((1-a) phi) / sin(phi)^{1/(1-a)}
//!
//! on (0, pi): the density/CDF integrals, the convergent residue series for
//! u above `SERIES_THRESHOLD`, and the Kanter sampler
//! u = (A(pi V)/W)^{(1-a)/a} with V uniform and W unit exponential.
//!
//! The residue series carries a corrective factor `a` relative to the form
//! in which it is sometimes quoted; see NOTES.md at the repository root.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad;
use crate::series::{EvalResult, Method, SeriesPolicy};
use crate::special::ln_recip_gamma;

/// u at and above which the residue series is used for density/CDF values.
pub const SERIES_THRESHOLD: f64 = 1.2;

/// Stable index of the positive Levy law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StableParams {
    /// 0 < alpha <= 1; alpha = 1 is the degenerate point mass at 1
    pub alpha: f64,
}

impl StableParams {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::domain(format!(
                "alpha must satisfy 0 < alpha <= 1, got {alpha}"
            )));
        }
        Ok(StableParams { alpha })
    }

    fn require_strictly_stable(&self) -> Result<()> {
        if self.alpha == 1.0 {
            return Err(Error::domain(
                "alpha = 1 is the degenerate point mass at 1; its density is not a function"
                    .to_string(),
            ));
        }
        Ok(())
    }
}

/// ln A(phi) for phi in (0, pi). Evaluated in log space so the blow-up at
/// phi -> pi overflows gracefully and the phi -> 0 limit cancels exactly.
pub fn ln_zolotarev_a(phi: f64, alpha: f64) -> f64 {
    debug_assert!(phi > 0.0 && phi < std::f64::consts::PI);
    debug_assert!(alpha > 0.0 && alpha < 1.0);
    let om = 1.0 - alpha;
    (alpha / om) * (alpha * phi).sin().ln() + (om * phi).sin().ln() - phi.sin().ln() / om
}

/// A(0+) = alpha^{alpha/(1-alpha)} (1-alpha), the infimum of the kernel.
fn zolotarev_a0(alpha: f64) -> f64 {
    let om = 1.0 - alpha;
    alpha.powf(alpha / om) * om
}

/// Laplace transform e^{-s^a}, s >= 0.
pub fn levy_laplace(s: f64, sp: &StableParams) -> Result<f64> {
    if !(s >= 0.0) {
        return Err(Error::domain(format!("s must satisfy s >= 0, got {s}")));
    }
    Ok((-s.powf(sp.alpha)).exp())
}

/// Mellin transform E(u^{s-1}) = Gamma(1 + (1-s)/a) / Gamma(2 - s), s < 1 + a.
pub fn levy_mellin(s: f64, sp: &StableParams) -> Result<f64> {
    if !(s < 1.0 + sp.alpha) {
        return Err(Error::domain(format!(
            "mellin argument must satisfy s < 1 + alpha = {}, got {s} (the moment diverges)",
            1.0 + sp.alpha
        )));
    }
    let (ln_num, sign_num) = ln_recip_gamma(2.0 - s);
    debug_assert!(sign_num > 0.0);
    let ln_v = crate::special::ln_gamma(1.0 + (1.0 - s) / sp.alpha) + ln_num;
    Ok(sign_num * ln_v.exp())
}

/// Density of the positive Levy law, residue-series branch (valid and
/// accurate for u >= `SERIES_THRESHOLD`):
///
///   g(u) = a u^{-(1+a)} sum_v (-1)^v / v!  u^{-a v} / Gamma(1 - a - a v).
pub fn levy_pdf_series(u: f64, sp: &StableParams, pol: &SeriesPolicy) -> Result<EvalResult> {
    sp.require_strictly_stable()?;
    pol.validate()?;
    if !(u > 0.0) {
        return Err(Error::domain(format!("u must satisfy u > 0, got {u}")));
    }
    let a = sp.alpha;
    let ln_u = u.ln();
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut sum_abs = 0.0f64;
    let mut max_abs = 0.0f64;
    let mut ln_fact = 0.0f64;
    let mut small_run = 0usize;
    let mut last = f64::NAN;
    for v in 0..pol.max_terms {
        let vf = v as f64;
        let (ln_rg, sign_rg) = ln_recip_gamma(1.0 - a - a * vf);
        let t = if sign_rg == 0.0 {
            0.0
        } else {
            let ln_t = -ln_fact - a * vf * ln_u + ln_rg;
            let mut t = sign_rg * ln_t.exp();
            if v % 2 == 1 {
                t = -t;
            }
            t
        };
        let at = t.abs();
        let y = t - comp;
        let ns = sum + y;
        comp = (ns - sum) - y;
        sum = ns;
        sum_abs += at;
        max_abs = max_abs.max(at);
        last = at;
        if at <= pol.rel_tol * sum.abs() {
            small_run += 1;
            if small_run >= 2 && v >= 2 {
                let ratio = if sum != 0.0 { max_abs / sum.abs() } else { f64::INFINITY };
                if ratio > pol.cancel_guard {
                    return Err(Error::Cancellation { ratio, guard: pol.cancel_guard });
                }
                let pref = (a.ln() - (1.0 + a) * ln_u).exp();
                return Ok(EvalResult {
                    value: pref * sum,
                    abs_err_est: pref * at.max(sum_abs * 8.0 * f64::EPSILON),
                    terms_used: v + 1,
                    method: Method::TailSeries,
                    singular: false,
                });
            }
        } else {
            small_run = 0;
        }
        ln_fact += ((v + 1) as f64).ln();
    }
    Err(Error::NonConvergence { max_terms: pol.max_terms, last_term: last })
}

/// Density of the positive Levy law, Zolotarev-integral branch:
///
///   g(u) = a/((1-a) pi) u^{-1/(1-a)} int_0^pi A(phi) e^{-A(phi) B} dphi,
///   B = u^{-a/(1-a)},
///
/// with the constant mode e^{-A(0) B} factored out so small u stays accurate.
pub fn levy_pdf_quadrature(u: f64, sp: &StableParams, pol: &SeriesPolicy) -> Result<EvalResult> {
    sp.require_strictly_stable()?;
    pol.validate()?;
    if !(u > 0.0) {
        return Err(Error::domain(format!("u must satisfy u > 0, got {u}")));
    }
    let a = sp.alpha;
    let om = 1.0 - a;
    let big_b = u.powf(-a / om);
    let a0 = zolotarev_a0(a);
    if !(a0 * big_b).is_finite() || a0 * big_b > 745.0 {
        // e^{-A(0) B} underflows: the density is zero to f64
        return Ok(EvalResult {
            value: 0.0,
            abs_err_est: 0.0,
            terms_used: 0,
            method: Method::Quadrature,
            singular: false,
        });
    }
    let integrand = move |phi: f64| -> f64 {
        if phi <= 0.0 || phi >= std::f64::consts::PI {
            return 0.0;
        }
        let ln_a = ln_zolotarev_a(phi, a);
        let av = ln_a.exp();
        let e = ln_a - big_b * (av - a0);
        if e < -745.0 || e.is_nan() {
            0.0
        } else {
            e.exp()
        }
    };
    let rel = pol.rel_tol.max(1e-13);
    let (coarse, _) = quad::adaptive(&integrand, 0.0, std::f64::consts::PI, f64::INFINITY)?;
    let abs_tol = (rel * coarse.abs()).max(1e-280);
    let (integral, qerr) = quad::adaptive(&integrand, 0.0, std::f64::consts::PI, abs_tol)?;
    let ln_pref = (a / om).ln() - std::f64::consts::PI.ln() - u.ln() / om - a0 * big_b;
    let pref = ln_pref.exp();
    Ok(EvalResult {
        value: pref * integral,
        abs_err_est: pref * (qerr + 8.0 * f64::EPSILON * integral.abs()),
        terms_used: 0,
        method: Method::Quadrature,
        singular: false,
    })
}

/// Density of the positive Levy law for 0 < alpha < 1, u > 0.
///
/// Dispatches to the residue series for u >= `SERIES_THRESHOLD` and the
/// Zolotarev integral below it; the two branches agree inside their overlap.
pub fn levy_pdf(u: f64, sp: &StableParams, pol: &SeriesPolicy) -> Result<EvalResult> {
    if u >= SERIES_THRESHOLD {
        levy_pdf_series(u, sp, pol)
    } else {
        levy_pdf_quadrature(u, sp, pol)
    }
}

/// CDF of the positive Levy law for 0 < alpha < 1.
///
/// For u >= `SERIES_THRESHOLD` this is the term-by-term integral of the
/// residue series,
///   G(u) = 1 - sum_v (-1)^v / (v! (v+1)) u^{-a(v+1)} / Gamma(1 - a - a v);
/// below the threshold it is the exact kernel integral
///   G(u) = (1/pi) int_0^pi e^{-A(phi) B} dphi.
pub fn levy_cdf(u: f64, sp: &StableParams, pol: &SeriesPolicy) -> Result<EvalResult> {
    sp.require_strictly_stable()?;
    pol.validate()?;
    if !(u >= 0.0) {
        return Err(Error::domain(format!("u must satisfy u >= 0, got {u}")));
    }
    if u == 0.0 {
        return Ok(EvalResult {
            value: 0.0,
            abs_err_est: 0.0,
            terms_used: 0,
            method: Method::Quadrature,
            singular: false,
        });
    }
    let a = sp.alpha;
    if u >= SERIES_THRESHOLD {
        let ln_u = u.ln();
        let mut tail = 0.0f64;
        let mut comp = 0.0f64;
        let mut sum_abs = 0.0f64;
        let mut ln_fact = 0.0f64;
        let mut small_run = 0usize;
        let mut last = f64::NAN;
        for v in 0..pol.max_terms {
            let vf = v as f64;
            let (ln_rg, sign_rg) = ln_recip_gamma(1.0 - a - a * vf);
            let t = if sign_rg == 0.0 {
                0.0
            } else {
                let ln_t = -ln_fact - (vf + 1.0).ln() - a * (vf + 1.0) * ln_u + ln_rg;
                let mut t = sign_rg * ln_t.exp();
                if v % 2 == 1 {
                    t = -t;
                }
                t
            };
            let at = t.abs();
            let y = t - comp;
            let ns = tail + y;
            comp = (ns - tail) - y;
            tail = ns;
            sum_abs += at;
            last = at;
            if at <= pol.rel_tol * tail.abs().max(f64::MIN_POSITIVE) {
                small_run += 1;
                if small_run >= 2 && v >= 2 {
                    return Ok(EvalResult {
                        value: (1.0 - tail).clamp(0.0, 1.0),
                        abs_err_est: at.max(sum_abs * 8.0 * f64::EPSILON),
                        terms_used: v + 1,
                        method: Method::TailSeries,
                        singular: false,
                    });
                }
            } else {
                small_run = 0;
            }
            ln_fact += ((v + 1) as f64).ln();
        }
        return Err(Error::NonConvergence { max_terms: pol.max_terms, last_term: last });
    }
    let big_b = u.powf(-a / (1.0 - a));
    if !(zolotarev_a0(a) * big_b).is_finite() || zolotarev_a0(a) * big_b > 745.0 {
        return Ok(EvalResult {
            value: 0.0,
            abs_err_est: 0.0,
            terms_used: 0,
            method: Method::Quadrature,
            singular: false,
        });
    }
    let integrand = move |phi: f64| -> f64 {
        if phi <= 0.0 || phi >= std::f64::consts::PI {
            return 0.0;
        }
        let e = -big_b * ln_zolotarev_a(phi, a).exp();
        if e < -745.0 || e.is_nan() {
            0.0
        } else {
            e.exp()
        }
    };
    let rel = pol.rel_tol.max(1e-13);
    let (coarse, _) = quad::adaptive(&integrand, 0.0, std::f64::consts::PI, f64::INFINITY)?;
    let abs_tol = (rel * coarse.abs()).max(1e-280);
    let (integral, qerr) = quad::adaptive(&integrand, 0.0, std::f64::consts::PI, abs_tol)?;
    Ok(EvalResult {
        value: (integral / std::f64::consts::PI).clamp(0.0, 1.0),
        abs_err_est: (qerr + 8.0 * f64::EPSILON * integral) / std::f64::consts::PI,
        terms_used: 0,
        method: Method::Quadrature,
        singular: false,
    })
}

/// One draw of the positive Levy law by the Kanter construction,
/// u = (A(pi V)/W)^{(1-a)/a}, sharing `ln_zolotarev_a` with the density.
/// At alpha = 1 the law is the point mass at 1 and no randomness is consumed.
pub fn levy_sample<R: Rng + ?Sized>(rng: &mut R, sp: &StableParams) -> f64 {
    let a = sp.alpha;
    if a == 1.0 {
        return 1.0;
    }
    let v: f64 = loop {
        let r: f64 = rng.random();
        if r > 0.0 {
            break r;
        }
    };
    let w: f64 = loop {
        let r: f64 = rng.random();
        if r > 0.0 {
            break -r.ln();
        }
    };
    let phi = std::f64::consts::PI * v;
    (((1.0 - a) / a) * (ln_zolotarev_a(phi, a) - w.ln())).exp()
}
