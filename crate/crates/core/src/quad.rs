//! Adaptive Gauss-Kronrod quadrature with the endpoint handling the
//! verification oracles need: algebraic singularities at the origin are
//! lifted by a power substitution and semi-infinite ranges are cut where the
//! integrand has decayed below 1e-16 of its peak.

use crate::error::{Error, Result};

// 15-point Kronrod / 7-point Gauss rule on [-1, 1]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One GK15 panel: returns (kronrod value, error estimate, integral of |f|).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_g = WG[3] * fc;
    let mut res_k = WGK[7] * fc;
    let mut res_abs = WGK[7] * fc.abs();
    let mut fv = [0.0f64; 15];
    fv[7] = fc;
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv[j] = f1;
        fv[14 - j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = res_k * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    res_asc *= half.abs();
    res_abs *= half.abs();
    let raw_err = ((res_k - res_g) * half).abs();
    // QUADPACK error rescaling
    let mut err = raw_err;
    if res_asc != 0.0 && raw_err != 0.0 {
        err = res_asc * 1.0f64.min((200.0 * raw_err / res_asc).powf(1.5));
    }
    let min_err = 50.0 * f64::EPSILON * res_abs;
    if min_err > err {
        err = min_err;
    }
    (res_k * half, err, res_abs)
}

/// Adaptive quadrature over a finite interval to an absolute error target.
pub fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, abs_tol: f64) -> Result<(f64, f64)> {
    adaptive_segments(f, &[a, b], abs_tol)
}

/// Adaptive quadrature seeded with a list of breakpoints, refined globally:
/// the error budget flows to whichever segment needs it.
pub fn adaptive_segments<F: Fn(f64) -> f64>(
    f: &F,
    breaks: &[f64],
    abs_tol: f64,
) -> Result<(f64, f64)> {
    const MAX_PANELS: usize = 6000;
    if breaks.len() < 2 {
        return Ok((0.0, 0.0));
    }
    let mut panels = Vec::with_capacity(breaks.len() - 1);
    let mut total_err: f64 = 0.0;
    let mut total: f64 = 0.0;
    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        if a == b {
            continue;
        }
        let (v, e, _) = gk15(f, a, b);
        if v.is_nan() {
            return Err(Error::Quadrature(format!("integrand returned NaN on [{a}, {b}]")));
        }
        panels.push((e, a, b, v));
        total += v;
        total_err += e;
    }
    while total_err > abs_tol && total_err > 1e-3 * f64::EPSILON * total.abs() {
        if panels.len() >= MAX_PANELS {
            return Err(Error::Quadrature(format!(
                "panel budget exhausted: err {total_err:e} > target {abs_tol:e}"
            )));
        }
        // split the worst panel
        let (imax, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .0.total_cmp(&y.1 .0))
            .expect("nonempty");
        let (pe, pa, pb, pv) = panels.swap_remove(imax);
        let mid = 0.5 * (pa + pb);
        if mid <= pa || mid >= pb {
            // interval no longer splittable in f64; accept its estimate
            panels.push((0.0, pa, pb, pv));
            total_err -= pe;
            continue;
        }
        let (v1, e1, _) = gk15(f, pa, mid);
        let (v2, e2, _) = gk15(f, mid, pb);
        if v1.is_nan() || v2.is_nan() {
            return Err(Error::Quadrature(format!(
                "integrand returned NaN inside [{pa}, {pb}]"
            )));
        }
        total += v1 + v2 - pv;
        total_err += e1 + e2 - pe;
        panels.push((e1, pa, mid, v1));
        panels.push((e2, mid, pb, v2));
    }
    Ok((total, total_err))
}

/// Adaptive integral of `f` over (0, upper) where `f ~ C x^p` as x -> 0 with
/// p > -1, and `upper` may be infinite. The origin singularity is removed by
/// the substitution x = t^m with m chosen so the transformed integrand is at
/// least C^1; an infinite upper limit is replaced by a cutoff where the
/// integrand falls below 1e-16 of its peak.
pub fn integrate_density<F: Fn(f64) -> f64>(
    f: &F,
    origin_exponent: f64,
    upper: f64,
    abs_tol: f64,
) -> Result<(f64, f64)> {
    if !(origin_exponent > -1.0) {
        return Err(Error::domain(format!(
            "origin exponent must be > -1 for an integrable singularity, got {origin_exponent}"
        )));
    }
    let cut = if upper.is_finite() {
        upper
    } else {
        upper_cutoff(f)?
    };
    let split = 1.0f64.min(cut * 0.5);

    // (0, split] with x = t^m
    let mut total = 0.0;
    let mut err = 0.0;
    if split > 0.0 {
        let m = if origin_exponent >= 1.0 {
            1.0
        } else {
            (2.0 / (1.0 + origin_exponent)).ceil()
        };
        if m == 1.0 {
            let (v, e) = adaptive(f, 0.0, split, 0.5 * abs_tol)?;
            total += v;
            err += e;
        } else {
            let t_hi = split.powf(1.0 / m);
            let g = |t: f64| {
                if t <= 0.0 {
                    0.0
                } else {
                    f(t.powf(m)) * m * t.powf(m - 1.0)
                }
            };
            let (v, e) = adaptive(&g, 0.0, t_hi, 0.5 * abs_tol)?;
            total += v;
            err += e;
        }
    }
    if cut > split {
        // geometric breakpoints so heavy tails converge panel by panel,
        // refined globally against the remaining error budget
        let mut breaks = vec![split];
        let mut lo = split;
        while lo < cut {
            lo = (lo * 4.0).min(cut);
            breaks.push(lo);
        }
        let (v, e) = adaptive_segments(f, &breaks, 0.5 * abs_tol)?;
        total += v;
        err += e;
    }
    Ok((total, err))
}

/// Scan a doubling grid for a cutoff beyond which the remaining tail mass of
/// `f` is negligible. The integrand must fall below 1e-16 of its running
/// peak AND the locally fitted tail mass, f(x) x / |p+1| with p the local
/// log-log slope, must be below `TAIL_MASS_TOL`. The second condition is what
/// makes power-law tails (where the pointwise criterion alone leaves real
/// mass behind) come out right.
const TAIL_MASS_TOL: f64 = 1e-12;

fn upper_cutoff<F: Fn(f64) -> f64>(f: &F) -> Result<f64> {
    let mut peak = 0.0f64;
    let mut x = 1e-6;
    while x < 1e299 {
        let v = f(x).abs();
        if v > peak {
            peak = v;
        } else if peak > 0.0 && v <= 1e-16 * peak && x > 1.0 {
            let v2 = f(x * 2.0).abs();
            if v2 <= 1e-16 * peak {
                if v2 == 0.0 {
                    return Ok(x * 2.0);
                }
                // local power fit f ~ C x^p; the tail integral from 2x is
                // about f(2x) 2x / (-(p+1)) when p < -1
                let p = (v2 / v).ln() / std::f64::consts::LN_2;
                let decay = -(p + 1.0);
                if decay > 0.01 {
                    let tail = v2 * (2.0 * x) / decay;
                    if tail < TAIL_MASS_TOL {
                        return Ok(x * 2.0);
                    }
                } // p >= -1: keep scanning; the transform factor decays later
            }
        }
        x *= 2.0;
    }
    if peak == 0.0 {
        return Err(Error::Quadrature("integrand is identically zero on the scan grid".into()));
    }
    Err(Error::Quadrature(
        "tail mass still significant at x = 1e299; integral may diverge or converge too slowly"
            .into(),
    ))
}
