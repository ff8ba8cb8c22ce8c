//! A tour of the library: evaluate, sample, and cross-check.

use mlpath_core::ml_core::{ml_cdf, ml_laplace, ml_pdf, MLParams};
use mlpath_core::sampling::{BatchDist, SampleBatch};
use mlpath_core::series::SeriesPolicy;
use mlpath_core::stable_levy::{levy_pdf, StableParams};
use mlpath_core::verify::{empirical_laplace, transform_oracle, IntegrationDomain, TransformProbe};

fn main() -> mlpath_core::Result<()> {
    let p = MLParams::new(0.5, 1.0, 1.0)?;
    let pol = SeriesPolicy::default();

    println!("Mittag-Leffler law with alpha=0.5, beta=1, delta=1");
    for x in [0.1, 1.0, 10.0, 100.0] {
        let f = ml_pdf(x, &p, &pol)?;
        let big_f = ml_cdf(x, &p, &pol)?;
        println!(
            "  x={x:>6}: pdf={:<12.6e} cdf={:<10.8} ({} / {} terms)",
            f.value, big_f.value, f.method, f.terms_used
        );
    }

    // the Levy building block
    let sp = StableParams::new(0.5)?;
    println!("positive Levy density at u=2: {:.9}", levy_pdf(2.0, &sp, &pol)?.value);

    // exact transform vs quadrature of the density
    let probe = TransformProbe::laplace(&[0.5, 1.0, 2.0])?;
    let dom = IntegrationDomain::half_line_with_origin_exponent(p.alpha * p.beta - 1.0);
    let quad = transform_oracle(
        |x| ml_pdf(x, &p, &pol).map(|r| r.value).unwrap_or(f64::NAN),
        &probe,
        &dom,
    )?;
    println!("Laplace transform, closed form vs quadrature of the density:");
    for (&s, &q) in probe.s_values.iter().zip(&quad) {
        println!("  s={s}: {:.12} vs {q:.12}", ml_laplace(s, &p)?);
    }

    // a reproducible batch and its empirical transform
    let batch = SampleBatch::generate(42, 0, 200_000, &BatchDist::Ml(p))?;
    let emp = empirical_laplace(&batch, &probe)?;
    println!("empirical Laplace transform from {} seeded draws:", batch.values.len());
    for (&s, &(mean, se)) in probe.s_values.iter().zip(&emp) {
        println!("  s={s}: {mean:.5} +- {se:.5}");
    }
    Ok(())
}
