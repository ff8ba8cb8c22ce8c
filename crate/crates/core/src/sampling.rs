//! Gamma sampling and the structural Mittag-Leffler samplers.
//!
//! A Mittag-Leffler variate is x = u v^{1/a} with u positive Levy and v
//! gamma(beta, delta), drawn independently. Within one stream the order is
//! fixed (u first, then v) so reproducibility is exact. The variant
//! `ml_sample_via_stable_mean` replaces u by the normalized stable mean
//! (u_1 + ... + u_n)/n^{1/a}, which has the same law for every n.

use rand::Rng;
use rand_distr::Distribution;
use serde::{Deserialize, Serialize};
use std::io::Write;

use crate::error::{Error, Result};
use crate::ml_core::MLParams;
use crate::rng::stream_rng;
use crate::special::ln_gamma;
use crate::stable_levy::{levy_sample, StableParams};

/// One gamma(shape `beta`, scale `delta`) draw; valid for every beta > 0.
pub fn gamma_sample<R: Rng + ?Sized>(rng: &mut R, beta: f64, delta: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::domain(format!("beta must satisfy beta > 0, got {beta}")));
    }
    if !(delta > 0.0) {
        return Err(Error::domain(format!("delta must satisfy delta > 0, got {delta}")));
    }
    let dist = rand_distr::Gamma::new(beta, delta)
        .map_err(|e| Error::domain(format!("gamma sampler setup: {e}")))?;
    Ok(dist.sample(rng))
}

/// Mellin transform of v^{1/a} for v gamma(beta, delta):
/// E[(v^{1/a})^{s-1}] = delta^{(s-1)/a} Gamma(beta + (s-1)/a) / Gamma(beta).
pub fn gamma_power_mellin(s: f64, beta: f64, delta: f64, alpha: f64) -> Result<f64> {
    if !(beta > 0.0) || !(delta > 0.0) || !(alpha > 0.0) {
        return Err(Error::domain(format!(
            "gamma_power_mellin requires beta, delta, alpha > 0, got ({beta}, {delta}, {alpha})"
        )));
    }
    if !(s > 1.0 - alpha * beta) {
        return Err(Error::domain(format!(
            "mellin argument must satisfy s > 1 - alpha*beta = {}, got {s}",
            1.0 - alpha * beta
        )));
    }
    let t = (s - 1.0) / alpha;
    Ok((t * delta.ln() + ln_gamma(beta + t) - ln_gamma(beta)).exp())
}

/// One Mittag-Leffler draw via the structural representation x = u v^{1/a}.
/// At alpha = 1 the Levy factor is the constant 1 and the draw is exactly
/// gamma(beta, delta).
pub fn ml_sample<R: Rng + ?Sized>(rng: &mut R, p: &MLParams) -> f64 {
    let sp = StableParams { alpha: p.alpha };
    let u = levy_sample(rng, &sp);
    let v = gamma_sample(rng, p.beta, p.delta).expect("MLParams guarantees valid gamma parameters");
    u * v.powf(1.0 / p.alpha)
}

/// One Mittag-Leffler draw via x = t v^{1/a} with t = (u_1+...+u_n)/n^{1/a};
/// distributed identically to `ml_sample` for every n >= 1.
pub fn ml_sample_via_stable_mean<R: Rng + ?Sized>(rng: &mut R, p: &MLParams, n: u32) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("n must satisfy n >= 1".to_string()));
    }
    let sp = StableParams { alpha: p.alpha };
    let mut acc = 0.0;
    for _ in 0..n {
        acc += levy_sample(rng, &sp);
    }
    let t = acc / (n as f64).powf(1.0 / p.alpha);
    let v = gamma_sample(rng, p.beta, p.delta)?;
    Ok(t * v.powf(1.0 / p.alpha))
}

/// Which law a batch was drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistTag {
    Ml,
    Levy,
    Gamma,
    Pathway,
}

impl std::fmt::Display for DistTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DistTag::Ml => write!(f, "ml"),
            DistTag::Levy => write!(f, "levy"),
            DistTag::Gamma => write!(f, "gamma"),
            DistTag::Pathway => write!(f, "pathway"),
        }
    }
}

/// Generator specification for `SampleBatch::generate`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BatchDist {
    Ml(MLParams),
    /// the stable-mean structural variant with inner sample size n
    MlStableMean { params: MLParams, n: u32 },
    Levy(StableParams),
    Gamma { beta: f64, delta: f64 },
}

impl BatchDist {
    fn tag(&self) -> DistTag {
        match self {
            BatchDist::Ml(_) | BatchDist::MlStableMean { .. } => DistTag::Ml,
            BatchDist::Levy(_) => DistTag::Levy,
            BatchDist::Gamma { .. } => DistTag::Gamma,
        }
    }

    fn echo(&self) -> String {
        match self {
            BatchDist::Ml(p) => format!("alpha={} beta={} delta={}", p.alpha, p.beta, p.delta),
            BatchDist::MlStableMean { params: p, n } => format!(
                "alpha={} beta={} delta={} stable_mean_n={}",
                p.alpha, p.beta, p.delta, n
            ),
            BatchDist::Levy(sp) => format!("alpha={}", sp.alpha),
            BatchDist::Gamma { beta, delta } => format!("beta={beta} delta={delta}"),
        }
    }
}

/// A seeded, provenance-tagged batch of nonnegative variates.
///
/// `(seed, stream_id, dist_tag, params_echo)` fully determine `values`;
/// regenerating with the same key is bit-identical.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleBatch {
    pub seed: u64,
    pub stream_id: u64,
    pub dist_tag: DistTag,
    pub params_echo: String,
    pub values: Vec<f64>,
}

impl SampleBatch {
    /// Draw `n` variates from `dist` on the stream `(seed, stream_id)`.
    pub fn generate(seed: u64, stream_id: u64, n: usize, dist: &BatchDist) -> Result<SampleBatch> {
        if n == 0 {
            return Err(Error::InvalidData("batch size must be >= 1".to_string()));
        }
        let mut rng = stream_rng(seed, stream_id);
        let mut values = Vec::with_capacity(n);
        match dist {
            BatchDist::Ml(p) => {
                for _ in 0..n {
                    values.push(ml_sample(&mut rng, p));
                }
            }
            BatchDist::MlStableMean { params, n: inner } => {
                for _ in 0..n {
                    values.push(ml_sample_via_stable_mean(&mut rng, params, *inner)?);
                }
            }
            BatchDist::Levy(sp) => {
                for _ in 0..n {
                    values.push(levy_sample(&mut rng, sp));
                }
            }
            BatchDist::Gamma { beta, delta } => {
                for _ in 0..n {
                    values.push(gamma_sample(&mut rng, *beta, *delta)?);
                }
            }
        }
        let batch = SampleBatch {
            seed,
            stream_id,
            dist_tag: dist.tag(),
            params_echo: dist.echo(),
            values,
        };
        batch.validate()?;
        Ok(batch)
    }

    /// Structural validity: nonempty, finite, nonnegative values.
    pub fn validate(&self) -> Result<()> {
        if self.values.is_empty() {
            return Err(Error::InvalidData("batch has no values".to_string()));
        }
        for (i, v) in self.values.iter().enumerate() {
            if !v.is_finite() || *v < 0.0 {
                return Err(Error::InvalidData(format!(
                    "value #{i} is {v}; batch values must be finite and >= 0"
                )));
            }
        }
        Ok(())
    }

    /// CSV form: `#` comment header with provenance, then one value per line.
    pub fn to_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "# seed={}", self.seed)?;
        writeln!(w, "# stream_id={}", self.stream_id)?;
        writeln!(w, "# dist={}", self.dist_tag)?;
        writeln!(w, "# params={}", self.params_echo)?;
        writeln!(w, "# n={}", self.values.len())?;
        for v in &self.values {
            writeln!(w, "{v}")?;
        }
        Ok(())
    }

    /// Parse the CSV form produced by `to_csv`.
    pub fn from_csv(text: &str) -> Result<SampleBatch> {
        let mut seed = None;
        let mut stream_id = None;
        let mut dist_tag = None;
        let mut params_echo = String::new();
        let mut values = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(meta) = line.strip_prefix('#') {
                let meta = meta.trim();
                if let Some((k, v)) = meta.split_once('=') {
                    match k.trim() {
                        "seed" => seed = v.trim().parse::<u64>().ok(),
                        "stream_id" => stream_id = v.trim().parse::<u64>().ok(),
                        "dist" => {
                            dist_tag = match v.trim() {
                                "ml" => Some(DistTag::Ml),
                                "levy" => Some(DistTag::Levy),
                                "gamma" => Some(DistTag::Gamma),
                                "pathway" => Some(DistTag::Pathway),
                                _ => None,
                            }
                        }
                        "params" => params_echo = v.trim().to_string(),
                        _ => {}
                    }
                }
                continue;
            }
            values.push(
                line.parse::<f64>()
                    .map_err(|e| Error::InvalidData(format!("bad value line {line:?}: {e}")))?,
            );
        }
        let batch = SampleBatch {
            seed: seed.ok_or_else(|| Error::InvalidData("missing # seed=".to_string()))?,
            stream_id: stream_id.ok_or_else(|| Error::InvalidData("missing # stream_id=".to_string()))?,
            dist_tag: dist_tag.ok_or_else(|| Error::InvalidData("missing # dist=".to_string()))?,
            params_echo,
            values,
        };
        batch.validate()?;
        Ok(batch)
    }

    /// JSON form: metadata plus the value array.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("batch serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<SampleBatch> {
        let b: SampleBatch =
            serde_json::from_str(text).map_err(|e| Error::InvalidData(e.to_string()))?;
        b.validate()?;
        Ok(b)
    }
}
