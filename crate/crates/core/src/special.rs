//! Gamma-family special functions.
//!
//! Everything here is plumbing for the series evaluators: log-gamma (backed
//! by `statrs`), a total reciprocal gamma that is exactly zero at the poles,
//! rising factorials, and a carefully reduced `sin(pi x)`.

use crate::error::{Error, Result};

/// Natural log of the gamma function for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "ln_gamma requires a positive argument");
    statrs::function::gamma::ln_gamma(x)
}

/// Complementary error function.
pub fn erfc(x: f64) -> f64 {
    statrs::function::erf::erfc(x)
}

/// Regularized lower incomplete gamma P(a, x).
pub fn gamma_lr(a: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    statrs::function::gamma::gamma_lr(a, x)
}

/// sin(pi x) with argument reduction, exact zeros at integer x.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let n = x.floor();
    let r = x - n;
    // sin(pi r) on [0,1); evaluate via the smaller of r and 1-r
    let v = if r == 0.0 {
        0.0
    } else if r <= 0.5 {
        (std::f64::consts::PI * r).sin()
    } else {
        (std::f64::consts::PI * (1.0 - r)).sin()
    };
    if (n as i64) % 2 == 0 {
        v
    } else {
        -v
    }
}

/// ln|1/Gamma(z)| and its sign, as `(ln_mag, sign)`.
///
/// At the poles z = 0, -1, -2, ... the magnitude is `-inf` and the sign 0,
/// so `sign * ln_mag.exp()` is exactly zero there.
pub fn ln_recip_gamma(z: f64) -> (f64, f64) {
    if z > 0.5 {
        return (-ln_gamma(z), 1.0);
    }
    if z <= 0.0 && z == z.floor() {
        return (f64::NEG_INFINITY, 0.0);
    }
    // reflection: 1/Gamma(z) = sin(pi z) * Gamma(1 - z) / pi
    let s = sin_pi(z);
    let ln_mag = s.abs().ln() + ln_gamma(1.0 - z) - std::f64::consts::PI.ln();
    (ln_mag, s.signum())
}

/// 1/Gamma(z) as a total function: exactly 0 at the poles of Gamma.
pub fn recip_gamma(z: f64) -> f64 {
    let (ln_mag, sign) = ln_recip_gamma(z);
    if sign == 0.0 {
        return 0.0;
    }
    sign * ln_mag.exp()
}

/// Rising factorial (Pochhammer symbol) `(beta)_k = beta (beta+1) ... (beta+k-1)`.
///
/// Small k is an exact product; large k goes through log-gamma. Overflow of
/// the result is reported rather than returned as infinity.
pub fn pochhammer(beta: f64, k: u32) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::domain(format!(
            "pochhammer requires beta > 0, got {beta}"
        )));
    }
    if k == 0 {
        return Ok(1.0);
    }
    if k <= 25 {
        let mut p = 1.0f64;
        for i in 0..k {
            p *= beta + i as f64;
        }
        if !p.is_finite() {
            return Err(Error::Overflow(format!("({beta})_{k} exceeds f64 range")));
        }
        return Ok(p);
    }
    let ln_p = ln_gamma(beta + k as f64) - ln_gamma(beta);
    if ln_p > 709.0 {
        return Err(Error::Overflow(format!(
            "({beta})_{k} exceeds f64 range (ln = {ln_p:.1})"
        )));
    }
    Ok(ln_p.exp())
}

/// ln B(a, b) for positive a, b.
pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}
