//! The pathway family and its Mittag-Leffler-type origin.
//!
//! The generalized series
//!
//!   f*(x) = c x^eta sum_k (g)_k/k! (x^a)^k (-d)^k / Gamma(b + a k)
//!
//! scales, as b -> infinity, onto the pathway kernel c x^eta (1 + d x^a)^{-g}.
//! Substituting d = a(q-1), g = 1/(q-1) produces the three pathway regimes:
//! type-2 beta (q > 1), type-1 beta (q < 1, finite support), and the
//! generalized gamma limit (q -> 1). The normalizing constants come from the
//! type-1/type-2 beta and generalized gamma integrals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{EvalResult, Method, PrabhakarSeries, SeriesPolicy};
use crate::special::{ln_beta, ln_gamma, recip_gamma};

/// |q - 1| below which the q -> 1 (generalized gamma) branch is used; the
/// q != 1 formulas lose precision in [1 +- (1-q) x]^{1/(1-q)} beyond it.
pub const Q_ONE_TOL: f64 = 1e-8;

/// Parameters (eta, a, alpha, q) of the pathway density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathwayParams {
    /// power exponent, eta > -1
    pub eta: f64,
    /// scale, a > 0
    pub a: f64,
    /// power, alpha > 0
    pub alpha: f64,
    /// pathway parameter
    pub q: f64,
}

/// Which functional family a parameter point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathwayFamily {
    /// q < 1: finite support [0, (a(1-q))^{-1/alpha}]
    Type1,
    /// q > 1: power-law tail on [0, inf)
    Type2,
    /// |q - 1| < Q_ONE_TOL: generalized gamma
    GammaLimit,
}

/// Regime classification plus the special-case flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegimeReport {
    pub family: PathwayFamily,
    /// eta = 0, a = 1, alpha = 1 (any q): the nonextensive-statistics kernel
    pub tsallis: bool,
    /// a = 1 and q >= 1: gamma-mixture (superstatistics) regime
    pub superstatistics: bool,
}

impl PathwayParams {
    pub fn new(eta: f64, a: f64, alpha: f64, q: f64) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::domain(format!("a must satisfy a > 0, got {a}")));
        }
        if !(alpha > 0.0) {
            return Err(Error::domain(format!("alpha must satisfy alpha > 0, got {alpha}")));
        }
        if !(eta > -1.0) {
            return Err(Error::domain(format!("eta must satisfy eta > -1, got {eta}")));
        }
        if !q.is_finite() {
            return Err(Error::domain(format!("q must be finite, got {q}")));
        }
        let p = PathwayParams { eta, a, alpha, q };
        if p.family() == PathwayFamily::Type2 {
            let m = 1.0 / (q - 1.0);
            if !(m - (eta + 1.0) / alpha > 0.0) {
                return Err(Error::domain(format!(
                    "type-2 normalizability requires 1/(q-1) - (eta+1)/alpha > 0, got {}",
                    m - (eta + 1.0) / alpha
                )));
            }
        }
        Ok(p)
    }

    pub fn family(&self) -> PathwayFamily {
        if (self.q - 1.0).abs() < Q_ONE_TOL {
            PathwayFamily::GammaLimit
        } else if self.q < 1.0 {
            PathwayFamily::Type1
        } else {
            PathwayFamily::Type2
        }
    }

    /// Upper support endpoint: (a(1-q))^{-1/alpha} for type 1, infinity else.
    pub fn support_upper(&self) -> f64 {
        match self.family() {
            PathwayFamily::Type1 => (self.a * (1.0 - self.q)).powf(-1.0 / self.alpha),
            _ => f64::INFINITY,
        }
    }
}

/// Normalizing constant that makes the pathway kernel integrate to 1.
///
/// type 1: alpha (a(1-q))^{(eta+1)/alpha} / B((eta+1)/alpha, 1 + 1/(1-q))
/// type 2: alpha (a(q-1))^{(eta+1)/alpha} / B((eta+1)/alpha, 1/(q-1) - (eta+1)/alpha)
/// q -> 1: alpha a^{(eta+1)/alpha} / Gamma((eta+1)/alpha)
pub fn pathway_norm_const(pw: &PathwayParams) -> Result<f64> {
    let r = (pw.eta + 1.0) / pw.alpha;
    let ln_c = match pw.family() {
        PathwayFamily::GammaLimit => pw.alpha.ln() + r * pw.a.ln() - ln_gamma(r),
        PathwayFamily::Type1 => {
            let b = pw.a * (1.0 - pw.q);
            pw.alpha.ln() + r * b.ln() - ln_beta(r, 1.0 + 1.0 / (1.0 - pw.q))
        }
        PathwayFamily::Type2 => {
            let b = pw.a * (pw.q - 1.0);
            let m = 1.0 / (pw.q - 1.0);
            pw.alpha.ln() + r * b.ln() - ln_beta(r, m - r)
        }
    };
    Ok(ln_c.exp())
}

/// Normalized pathway density at x >= 0. Outside the type-1 support the
/// density is zero, not an error.
pub fn pathway_pdf(x: f64, pw: &PathwayParams) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::domain(format!("x must satisfy x >= 0, got {x}")));
    }
    let c = pathway_norm_const(pw)?;
    let kernel = match pw.family() {
        PathwayFamily::GammaLimit => (-pw.a * x.powf(pw.alpha)).exp(),
        PathwayFamily::Type1 => {
            let base = 1.0 - pw.a * (1.0 - pw.q) * x.powf(pw.alpha);
            if base <= 0.0 {
                return Ok(0.0);
            }
            (base.ln() / (1.0 - pw.q)).exp()
        }
        PathwayFamily::Type2 => {
            let base = 1.0 + pw.a * (pw.q - 1.0) * x.powf(pw.alpha);
            (-base.ln() / (pw.q - 1.0)).exp()
        }
    };
    Ok(c * x.powf(pw.eta) * kernel)
}

/// Classify a parameter point and set the Tsallis / superstatistics flags.
pub fn pathway_regime(pw: &PathwayParams) -> RegimeReport {
    RegimeReport {
        family: pw.family(),
        tsallis: pw.eta == 0.0 && pw.a == 1.0 && pw.alpha == 1.0,
        superstatistics: pw.a == 1.0 && (pw.q > 1.0 || (pw.q - 1.0).abs() < Q_ONE_TOL),
    }
}

/// Residual of the power-function property d/dx k_q + k_q^q = 0 for the
/// unnormalized Tsallis kernel k_q(x) = [1 - (1-q) x]^{1/(1-q)}.
///
/// The identity is exact only for the unit-constant kernel: with a
/// normalizing constant c != 1, d/dx (c k) = -c^{1-q} (c k)^q instead.
/// Within `Q_ONE_TOL` of q = 1 the kernel snaps to e^{-x} and the residual
/// is computed with q = 1 exactly.
pub fn tsallis_ode_residual(x: f64, q: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::domain(format!("x must satisfy x >= 0, got {x}")));
    }
    if (q - 1.0).abs() < Q_ONE_TOL {
        // q snaps to 1: the kernel is e^{-x}, whose derivative and first
        // power coincide term for term, so the residual is identically zero
        return Ok(0.0);
    }
    let omq = 1.0 - q;
    let base = 1.0 - omq * x;
    if q < 1.0 && base <= 0.0 {
        return Err(Error::domain(format!(
            "x = {x} is outside the support [0, {}] for q = {q}",
            1.0 / omq
        )));
    }
    // ln k via ln_1p keeps the q -> 1 neighborhood at full precision
    let ln_k = (-omq * x).ln_1p() / omq;
    // derivative route: d/dx k = -k / (1 - (1-q) x)
    let deriv = -(ln_k.exp()) / base;
    // power route: k^q
    let pow = (q * ln_k).exp();
    Ok(deriv + pow)
}

/// Parameters of the generalized series f*.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrabhakarParams {
    /// power exponent of the front factor x^eta
    pub eta: f64,
    /// Pochhammer (series) parameter, > 0
    pub gamma_p: f64,
    /// exponent step, > 0
    pub alpha: f64,
    /// gamma-argument offset, > 0
    pub beta: f64,
    /// series scale, > 0
    pub delta: f64,
    /// front constant, > 0 (default 1)
    pub c: f64,
}

impl PrabhakarParams {
    pub fn new(eta: f64, gamma_p: f64, alpha: f64, beta: f64, delta: f64, c: f64) -> Result<Self> {
        for (name, v) in [("gamma_p", gamma_p), ("alpha", alpha), ("beta", beta), ("delta", delta), ("c", c)] {
            if !(v > 0.0) {
                return Err(Error::domain(format!("{name} must satisfy {name} > 0, got {v}")));
            }
        }
        if !eta.is_finite() {
            return Err(Error::domain(format!("eta must be finite, got {eta}")));
        }
        Ok(PrabhakarParams { eta, gamma_p, alpha, beta, delta, c })
    }

    pub fn with_beta(&self, beta: f64) -> Result<Self> {
        Self::new(self.eta, self.gamma_p, self.alpha, beta, self.delta, self.c)
    }
}

/// f*(x) = c x^eta sum_k (g)_k/k! (x^alpha)^k (-delta)^k / Gamma(beta + alpha k).
pub fn prabhakar_fstar(x: f64, pp: &PrabhakarParams, pol: &SeriesPolicy) -> Result<EvalResult> {
    if !(x >= 0.0) {
        return Err(Error::domain(format!("x must satisfy x >= 0, got {x}")));
    }
    if x == 0.0 {
        // leading term c x^eta / Gamma(beta)
        let lead = recip_gamma(pp.beta) * pp.c;
        let (value, singular) = if pp.eta > 0.0 {
            (0.0, false)
        } else if pp.eta == 0.0 {
            (lead, false)
        } else {
            (f64::INFINITY, true)
        };
        return Ok(EvalResult {
            value,
            abs_err_est: if value.is_finite() { 4.0 * f64::EPSILON * value.abs() } else { 0.0 },
            terms_used: 0,
            method: Method::Series,
            singular,
        });
    }
    let z = pp.delta * x.powf(pp.alpha);
    let series = PrabhakarSeries { g: pp.gamma_p, a: pp.alpha, b: pp.beta };
    let s = series.eval(z, pol)?;
    let scale = pp.c * (pp.eta * x.ln()).exp();
    Ok(EvalResult {
        value: scale * s.value,
        abs_err_est: scale * s.abs_err_est,
        ..s
    })
}

/// Gamma(beta) beta^t / Gamma(beta + t), evaluated through log-gamma.
pub fn stirling_ratio(beta: f64, t: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::domain(format!("beta must satisfy beta > 0, got {beta}")));
    }
    if !(beta + t > 0.0) {
        return Err(Error::domain(format!(
            "beta + t must satisfy beta + t > 0, got {}",
            beta + t
        )));
    }
    Ok((ln_gamma(beta) + t * beta.ln() - ln_gamma(beta + t)).exp())
}

/// Convergence gap of the scaling limit at finite beta:
///
///   sup over the grid of | Gamma(beta) f*(beta x) / beta^eta
///                          - c x^eta (1 + delta x^alpha)^{-gamma_p} |.
pub fn pathway_limit_gap(
    beta: f64,
    pp: &PrabhakarParams,
    grid: &[f64],
    pol: &SeriesPolicy,
) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::domain(format!("beta must satisfy beta > 0, got {beta}")));
    }
    if grid.is_empty() {
        return Err(Error::domain("grid must be nonempty".to_string()));
    }
    let pp_b = pp.with_beta(beta)?;
    let ln_scale = ln_gamma(beta) - pp.eta * beta.ln();
    let mut gap = 0.0f64;
    for &x in grid {
        if !(x >= 0.0) {
            return Err(Error::domain(format!("grid points must be >= 0, got {x}")));
        }
        let f = prabhakar_fstar(beta * x, &pp_b, pol)?;
        let lhs = ln_scale.exp() * f.value;
        let target = pp.c
            * (pp.eta * x.max(f64::MIN_POSITIVE).ln()).exp()
            * (1.0 + pp.delta * x.powf(pp.alpha)).powf(-pp.gamma_p);
        let target = if x == 0.0 && pp.eta > 0.0 { 0.0 } else { target };
        gap = gap.max((lhs - target).abs());
    }
    Ok(gap)
}
