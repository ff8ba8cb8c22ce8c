//! Seeded statistical acceptance of the samplers: KS goodness of fit,
//! structural-law checks, and the stability-under-summation properties.

use mlpath_core::ml_core::{ml_cdf, ml_laplace, ml_mellin, MLParams};
use mlpath_core::rng::stream_rng;
use mlpath_core::sampling::{gamma_sample, BatchDist, SampleBatch};
use mlpath_core::series::SeriesPolicy;
use mlpath_core::special::{erfc, gamma_lr};
use mlpath_core::stable_levy::{levy_cdf, levy_sample, StableParams};
use mlpath_core::verify::{
    empirical_laplace, ks_critical_1pct, ks_statistic, ks_two_sample,
    ks_two_sample_critical_1pct, TransformProbe,
};

fn pol() -> SeriesPolicy {
    SeriesPolicy::default()
}

#[test]
fn batches_are_bit_reproducible_for_every_sampler() {
    let dists = [
        BatchDist::Ml(MLParams::new(0.5, 1.0, 1.0).unwrap()),
        BatchDist::MlStableMean { params: MLParams::new(0.7, 2.0, 0.5).unwrap(), n: 4 },
        BatchDist::Levy(StableParams::new(0.3).unwrap()),
        BatchDist::Gamma { beta: 0.5, delta: 2.0 },
    ];
    for dist in dists {
        let a = SampleBatch::generate(2024, 11, 200, &dist).unwrap();
        let b = SampleBatch::generate(2024, 11, 200, &dist).unwrap();
        assert_eq!(a, b, "non-reproducible batch for {dist:?}");
    }
}

#[test]
fn gamma_small_shape_ks() {
    // beta = 0.5 exercises the boosted rejection path
    let batch =
        SampleBatch::generate(7, 0, 100_000, &BatchDist::Gamma { beta: 0.5, delta: 1.0 }).unwrap();
    let d = ks_statistic(&batch, |x| Ok(gamma_lr(0.5, x))).unwrap();
    let crit = ks_critical_1pct(batch.values.len());
    assert!(d < crit, "gamma(0.5) KS {d} >= {crit}");
}

#[test]
fn gamma_exponential_mean() {
    let mut rng = stream_rng(8, 0);
    let n = 1_000_000usize;
    let mut sum = 0.0;
    for _ in 0..n {
        sum += gamma_sample(&mut rng, 1.0, 1.0).unwrap();
    }
    let mean = sum / n as f64;
    // exponential: sd = 1, so 3 s.e. = 3/sqrt(n)
    assert!((mean - 1.0).abs() < 3.0 / (n as f64).sqrt(), "mean {mean}");
}

#[test]
fn levy_sampler_against_closed_form_cdf() {
    let sp = StableParams::new(0.5).unwrap();
    let batch = SampleBatch::generate(31, 0, 100_000, &BatchDist::Levy(sp)).unwrap();
    let d = ks_statistic(&batch, |u| Ok(erfc(1.0 / (2.0 * u.sqrt())))).unwrap();
    let crit = ks_critical_1pct(batch.values.len());
    assert!(d < crit, "levy KS {d} >= {crit}");
}

#[test]
fn levy_sampler_against_integrated_density_cdf() {
    // sampler/density agreement via the CDF built from levy_pdf's series and
    // kernel-integral branches
    for alpha in [0.3, 0.7] {
        let sp = StableParams::new(alpha).unwrap();
        let batch = SampleBatch::generate(32, 1, 100_000, &BatchDist::Levy(sp)).unwrap();
        let d = ks_statistic(&batch, |u| Ok(levy_cdf(u, &sp, &pol())?.value)).unwrap();
        let crit = ks_critical_1pct(batch.values.len());
        assert!(d < crit, "levy KS at alpha={alpha}: {d} >= {crit}");
    }
}

#[test]
fn levy_median_alpha_half() {
    // median of the alpha = 1/2 law solves erfc(1/(2 sqrt m)) = 1/2
    let sp = StableParams::new(0.5).unwrap();
    let mut batch = SampleBatch::generate(33, 0, 1_000_000, &BatchDist::Levy(sp)).unwrap();
    batch.values.sort_unstable_by(|a, b| a.total_cmp(b));
    let median = batch.values[batch.values.len() / 2];
    let want = 1.0990546691588662;
    assert!(
        (median - want).abs() / want < 0.01,
        "median {median} not within 1% of {want}"
    );
}

#[test]
fn levy_stability_under_summation() {
    // (u_1 + ... + u_n)/n^{1/a} has the same law as one draw, for every n
    let sp = StableParams::new(0.5).unwrap();
    let direct = SampleBatch::generate(40, 0, 100_000, &BatchDist::Levy(sp)).unwrap();
    for (k, n) in [2u32, 5, 10].iter().enumerate() {
        let mut rng = stream_rng(41, k as u64);
        let scale = (*n as f64).powf(1.0 / sp.alpha);
        let values: Vec<f64> = (0..100_000)
            .map(|_| (0..*n).map(|_| levy_sample(&mut rng, &sp)).sum::<f64>() / scale)
            .collect();
        let summed = SampleBatch {
            seed: 41,
            stream_id: k as u64,
            dist_tag: mlpath_core::sampling::DistTag::Levy,
            params_echo: format!("stable mean n={n}"),
            values,
        };
        let d = ks_two_sample(&direct, &summed).unwrap();
        let crit = ks_two_sample_critical_1pct(direct.values.len(), summed.values.len());
        assert!(d < crit, "stability KS at n={n}: {d} >= {crit}");
    }
}

#[test]
fn ml_structural_law_empirical_laplace() {
    // 1e6 draws at (0.5, 1, 1): E e^{-sX} = (1 + sqrt(s))^{-1} within 3 s.e.
    let p = MLParams::new(0.5, 1.0, 1.0).unwrap();
    let batch = SampleBatch::generate(50, 0, 1_000_000, &BatchDist::Ml(p)).unwrap();
    let probe = TransformProbe::laplace(&[0.25, 0.5, 1.0, 2.0]).unwrap();
    let est = empirical_laplace(&batch, &probe).unwrap();
    for (&s, &(mean, se)) in probe.s_values.iter().zip(&est) {
        let exact = ml_laplace(s, &p).unwrap();
        assert!(
            (mean - exact).abs() < 3.0 * se,
            "empirical laplace at s={s}: {mean} vs {exact} (3se {:e})",
            3.0 * se
        );
    }
}

#[test]
fn ml_sample_ks_against_cdf() {
    let p = MLParams::new(0.5, 1.0, 1.0).unwrap();
    let batch = SampleBatch::generate(51, 0, 100_000, &BatchDist::Ml(p)).unwrap();
    let d = ks_statistic(&batch, |x| Ok(ml_cdf(x, &p, &pol())?.value)).unwrap();
    let crit = ks_critical_1pct(batch.values.len());
    assert!(d < crit, "ml KS {d} >= {crit}");
}

#[test]
fn ml_sample_alpha_one_ks_against_gamma() {
    let p = MLParams::new(1.0, 2.0, 1.0).unwrap();
    let batch = SampleBatch::generate(52, 0, 100_000, &BatchDist::Ml(p)).unwrap();
    let d = ks_statistic(&batch, |x| Ok(gamma_lr(2.0, x))).unwrap();
    let crit = ks_critical_1pct(batch.values.len());
    assert!(d < crit, "alpha=1 ml KS {d} >= {crit}");
}

#[test]
fn ml_fractional_moments() {
    // at (0.7, 2, 1) both probe moments have finite-variance integrands:
    // 2(s-1) stays inside the Mellin strip (-0.4, 1.7)
    let p = MLParams::new(0.7, 2.0, 1.0).unwrap();
    for s in [0.75, 1.25] {
        assert!(2.0 * s - 1.0 > p.mellin_lo() && 2.0 * s - 1.0 < p.mellin_hi());
    }
    let batch = SampleBatch::generate(53, 0, 1_000_000, &BatchDist::Ml(p)).unwrap();
    for s in [0.75, 1.25] {
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for &x in &batch.values {
            let v = x.powf(s - 1.0);
            sum += v;
            sumsq += v * v;
        }
        let n = batch.values.len() as f64;
        let mean = sum / n;
        let se = ((sumsq / n - mean * mean).max(0.0) / (n - 1.0)).sqrt();
        let exact = ml_mellin(s, &p).unwrap();
        assert!(
            (mean - exact).abs() < 3.0 * se,
            "fractional moment at s={s}: {mean} vs {exact} (3se {:e})",
            3.0 * se
        );
    }
}

#[test]
fn ml_stable_mean_law_identity() {
    // two-sample KS between the stable-mean variant and the direct sampler
    let p = MLParams::new(0.5, 1.0, 1.0).unwrap();
    let direct = SampleBatch::generate(60, 0, 100_000, &BatchDist::Ml(p)).unwrap();
    for (k, n) in [2u32, 5, 10].iter().enumerate() {
        let via = SampleBatch::generate(
            61,
            k as u64,
            100_000,
            &BatchDist::MlStableMean { params: p, n: *n },
        )
        .unwrap();
        let d = ks_two_sample(&direct, &via).unwrap();
        let crit = ks_two_sample_critical_1pct(direct.values.len(), via.values.len());
        assert!(d < crit, "law identity KS at n={n}: {d} >= {crit}");
    }
}

#[test]
fn ks_engine_self_test() {
    // uniform draws against the identity CDF must pass at the 1% level in at
    // least 95 of 100 seeded repetitions
    use rand::Rng;
    let n = 2000usize;
    let mut passes = 0;
    for seed in 0..100u64 {
        let mut rng = stream_rng(1000 + seed, 0);
        let values: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        let batch = SampleBatch {
            seed,
            stream_id: 0,
            dist_tag: mlpath_core::sampling::DistTag::Gamma,
            params_echo: "uniform self-test".to_string(),
            values,
        };
        let d = ks_statistic(&batch, |x| Ok(x.clamp(0.0, 1.0))).unwrap();
        if d < ks_critical_1pct(n) {
            passes += 1;
        }
    }
    assert!(passes >= 95, "KS self-test passed only {passes}/100");
}
