//! Command-line front end: evaluation, sampling, and verification as
//! reproducible batch commands emitting CSV or JSON.
//!
//! Reports are deterministic: identical argv (including --seed) produces
//! byte-identical output. Exit codes: 0 success, 2 parameter/domain error,
//! 3 numerical non-convergence, 4 statistical test failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;

use mlpath_core::ml_core::{ml_cdf, ml_laplace, ml_mellin, ml_pdf, MLParams};
use mlpath_core::pathway::{pathway_norm_const, pathway_pdf, pathway_regime, PathwayParams};
use mlpath_core::sampling::{BatchDist, SampleBatch};
use mlpath_core::series::SeriesPolicy;
use mlpath_core::stable_levy::{levy_cdf, levy_mellin, levy_pdf, StableParams};
use mlpath_core::verify::{
    clt_convergence_report, ks_critical_1pct, ks_statistic, levy_limit_report, transform_oracle,
    IntegrationDomain, TransformProbe,
};
use mlpath_core::Error as CoreError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
/// environment variable consulted for the default seed; --seed overrides it
pub const SEED_ENV: &str = "MLPATH_SEED";

const EXIT_OK: i32 = 0;
const EXIT_DOMAIN: i32 = 2;
const EXIT_NUMERIC: i32 = 3;
const EXIT_STATISTICAL: i32 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    fn domain(message: impl Into<String>) -> Self {
        CliError { code: EXIT_DOMAIN, kind: "domain", message: message.into() }
    }

    /// one-line machine-parsable error record
    pub fn record(&self) -> String {
        format!(
            "{{\"error\":{{\"code\":{},\"kind\":\"{}\",\"message\":{}}}}}",
            self.code,
            self.kind,
            serde_json::to_string(&self.message).expect("string encoding")
        )
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let (code, kind) = match &e {
            CoreError::Domain(_) | CoreError::InvalidData(_) => (EXIT_DOMAIN, "domain"),
            CoreError::NonConvergence { .. } => (EXIT_NUMERIC, "non-convergence"),
            CoreError::Cancellation { .. } => (EXIT_NUMERIC, "cancellation"),
            CoreError::Quadrature(_) => (EXIT_NUMERIC, "quadrature"),
            CoreError::Overflow(_) => (EXIT_NUMERIC, "overflow"),
            CoreError::NonMonotoneCdf { .. } => (EXIT_NUMERIC, "non-monotone-cdf"),
        };
        CliError { code, kind, message: e.to_string() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformKindArg {
    Laplace,
    Mellin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SampleDist {
    Ml,
    Levy,
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LevyWhat {
    Pdf,
    Cdf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PathwayWhat {
    Pdf,
    Regime,
    Norm,
}

/// Grid specification `start:stop:count[:linear|log]`.
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    start: f64,
    stop: f64,
    count: usize,
    log: bool,
}

impl std::str::FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 && parts.len() != 4 {
            return Err(format!("grid must be start:stop:count[:linear|log], got {s:?}"));
        }
        let start: f64 = parts[0].parse().map_err(|e| format!("bad grid start: {e}"))?;
        let stop: f64 = parts[1].parse().map_err(|e| format!("bad grid stop: {e}"))?;
        let count: usize = parts[2].parse().map_err(|e| format!("bad grid count: {e}"))?;
        let log = match parts.get(3).copied().unwrap_or("linear") {
            "linear" => false,
            "log" => true,
            other => return Err(format!("grid scale must be linear or log, got {other:?}")),
        };
        if count < 1 {
            return Err("grid count must be >= 1".to_string());
        }
        if log && (start <= 0.0 || stop <= 0.0) {
            return Err("log grids need positive endpoints".to_string());
        }
        Ok(GridSpec { start, stop, count, log })
    }
}

impl GridSpec {
    fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let n = self.count;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                if self.log {
                    (self.start.ln() + t * (self.stop.ln() - self.start.ln())).exp()
                } else {
                    self.start + t * (self.stop - self.start)
                }
            })
            .collect()
    }

    fn echo(&self) -> String {
        format!(
            "{}:{}:{}:{}",
            self.start,
            self.stop,
            self.count,
            if self.log { "log" } else { "linear" }
        )
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "mlpath",
    version,
    about = "Mittag-Leffler distribution toolkit: densities, transforms, samplers, limit experiments",
    after_help = "Exit codes: 0 success, 2 parameter/domain error, 3 numerical non-convergence, 4 statistical test failure.\nThe MLPATH_SEED environment variable sets the default seed; --seed always overrides it."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// output format
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,

    /// RNG seed (overrides MLPATH_SEED; default 0)
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// RNG stream id for parallel-safe substreams
    #[arg(long, global = true, default_value_t = 0)]
    stream_id: u64,

    /// series tolerance override
    #[arg(long, global = true)]
    rel_tol: Option<f64>,

    /// series term budget override
    #[arg(long, global = true)]
    max_terms: Option<usize>,

    /// series cancellation guard override
    #[arg(long, global = true)]
    cancel_guard: Option<f64>,
}

#[derive(Debug, Args)]
struct MlArgs {
    /// stable index, 0 < alpha <= 1
    #[arg(long)]
    alpha: f64,
    /// shape, beta > 0
    #[arg(long)]
    beta: f64,
    /// scale, delta > 0
    #[arg(long)]
    delta: f64,
}

#[derive(Debug, Args)]
struct PointsArg {
    /// evaluation points (comma separated)
    #[arg(long, value_delimiter = ',')]
    x: Vec<f64>,
    /// evaluation grid start:stop:count[:linear|log]
    #[arg(long, conflicts_with = "x")]
    grid: Option<GridSpec>,
}

impl PointsArg {
    fn points(&self, what: &str) -> Result<(Vec<f64>, String), CliError> {
        if let Some(g) = &self.grid {
            Ok((g.points(), format!("grid={}", g.echo())))
        } else if !self.x.is_empty() {
            let echo = format!(
                "{what}={}",
                self.x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            );
            Ok((self.x.clone(), echo))
        } else {
            Err(CliError::domain(format!("provide --{what} or --grid")))
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Mittag-Leffler density values on a grid
    Pdf {
        #[command(flatten)]
        params: MlArgs,
        #[command(flatten)]
        points: PointsArg,
    },
    /// Mittag-Leffler distribution function values on a grid
    Cdf {
        #[command(flatten)]
        params: MlArgs,
        #[command(flatten)]
        points: PointsArg,
    },
    /// Exact Laplace/Mellin transform values, optionally with the quadrature oracle column
    Transform {
        #[command(flatten)]
        params: MlArgs,
        /// transform kind
        #[arg(long, value_enum)]
        kind: TransformKindArg,
        /// transform arguments (comma separated)
        #[arg(long, value_delimiter = ',')]
        s: Vec<f64>,
        /// also compute the independent quadrature oracle column
        #[arg(long)]
        oracle: bool,
    },
    /// Draw a reproducible sample batch
    Sample {
        /// which law to draw from
        #[arg(long, value_enum)]
        dist: SampleDist,
        /// number of draws
        #[arg(short = 'n', long)]
        count: usize,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
        /// draw the Levy factor as an n-fold normalized stable mean
        #[arg(long)]
        stable_mean_n: Option<u32>,
    },
    /// Positive Levy (one-sided stable) density or CDF values
    Levy {
        /// stable index, 0 < alpha < 1
        #[arg(long)]
        alpha: f64,
        /// what to evaluate
        #[arg(long, value_enum, default_value = "pdf")]
        what: LevyWhat,
        /// evaluation points (comma separated)
        #[arg(long, value_delimiter = ',')]
        u: Vec<f64>,
        /// evaluation grid start:stop:count[:linear|log]
        #[arg(long, conflicts_with = "u")]
        grid: Option<GridSpec>,
    },
    /// Pathway density values, normalizing constant, or regime report
    Pathway {
        /// power exponent, eta > -1
        #[arg(long)]
        eta: f64,
        /// scale, a > 0
        #[arg(long)]
        a: f64,
        /// power, alpha > 0
        #[arg(long)]
        alpha: f64,
        /// pathway parameter
        #[arg(long)]
        q: f64,
        /// what to report
        #[arg(long, value_enum, default_value = "pdf")]
        what: PathwayWhat,
        #[command(flatten)]
        points: PointsArg,
    },
    /// Central-limit experiment: normalized sums against the stable limit
    LimitClt {
        #[command(flatten)]
        params: MlArgs,
        /// transform probe points (comma separated)
        #[arg(long, value_delimiter = ',')]
        s: Vec<f64>,
        /// sample sizes n (comma separated, increasing)
        #[arg(long, value_delimiter = ',')]
        n: Vec<u32>,
        /// Monte Carlo draws per step (0 = analytic only)
        #[arg(long, default_value_t = 0)]
        mc_size: usize,
    },
    /// Scale limit: ML(alpha, beta, delta/beta) against the Levy law as beta grows
    LimitLevy {
        /// stable index, 0 < alpha <= 1
        #[arg(long)]
        alpha: f64,
        /// fixed scale delta of the limit e^{-delta s^alpha}
        #[arg(long)]
        delta: f64,
        /// transform probe points (comma separated)
        #[arg(long, value_delimiter = ',')]
        s: Vec<f64>,
        /// shape sequence (comma separated, increasing)
        #[arg(long, value_delimiter = ',')]
        beta_list: Vec<f64>,
        /// Monte Carlo draws per step (0 = analytic only)
        #[arg(long, default_value_t = 0)]
        mc_size: usize,
    },
    /// Run the built-in verification battery
    Verify {
        /// Monte Carlo sample size for the statistical checks
        #[arg(long, default_value_t = 20_000)]
        mc_size: usize,
    },
}

/// A tabular report with deterministic CSV and JSON renderings.
struct Table {
    meta: Vec<(String, String)>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(columns: Vec<&'static str>) -> Self {
        Table { meta: Vec::new(), columns, rows: Vec::new() }
    }

    fn meta(&mut self, k: &str, v: impl std::fmt::Display) {
        self.meta.push((k.to_string(), v.to_string()));
    }

    fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = String::new();
                for (k, v) in &self.meta {
                    let _ = writeln!(out, "# {k}={v}");
                }
                let _ = writeln!(out, "{}", self.columns.join(","));
                for row in &self.rows {
                    let _ = writeln!(out, "{}", row.join(","));
                }
                out
            }
            Format::Json => {
                let meta: serde_json::Map<String, serde_json::Value> = self
                    .meta
                    .iter()
                    .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
                    .collect();
                let rows: Vec<Vec<serde_json::Value>> = self
                    .rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|c| match c.parse::<f64>() {
                                Ok(v) if !c.is_empty() && c != "inf" && c != "-inf" && c != "nan" => {
                                    serde_json::json!(v)
                                }
                                _ => serde_json::Value::String(c.clone()),
                            })
                            .collect()
                    })
                    .collect();
                let doc = serde_json::json!({
                    "meta": meta,
                    "columns": self.columns,
                    "rows": rows,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("json encoding");
                s.push('\n');
                s
            }
        }
    }
}

fn fmt_f64(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else if v.is_infinite() {
        if v > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        }
    } else {
        format!("{v}")
    }
}

struct Ctx {
    format: Format,
    seed: u64,
    stream_id: u64,
    policy: SeriesPolicy,
    policy_overridden: bool,
}

impl Ctx {
    fn base_meta(&self, table: &mut Table, command: &str, extra: &[(&str, String)]) {
        table.meta("mlpath", VERSION);
        table.meta("command", command);
        for (k, v) in extra {
            table.meta(k, v);
        }
        table.meta("seed", self.seed);
        table.meta("stream_id", self.stream_id);
        table.meta("rel_tol", self.policy.rel_tol);
        table.meta("max_terms", self.policy.max_terms);
        table.meta("cancel_guard", self.policy.cancel_guard);
    }
}

/// Parse argv and execute; returns the rendered report or an error.
pub fn execute<I, T>(argv: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| {
        // --help / --version are success, not usage errors
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                CliError { code: EXIT_OK, kind: "help", message: e.to_string() }
            }
            _ => CliError::domain(e.to_string()),
        }
    })?;
    run_command(cli)
}

fn run_command(cli: Cli) -> Result<String, CliError> {
    let env_seed = std::env::var(SEED_ENV).ok().and_then(|v| v.parse::<u64>().ok());
    let seed = cli.seed.or(env_seed).unwrap_or(0);
    let mut policy = SeriesPolicy::default();
    let mut overridden = false;
    if let Some(v) = cli.rel_tol {
        policy.rel_tol = v;
        overridden = true;
    }
    if let Some(v) = cli.max_terms {
        policy.max_terms = v;
        overridden = true;
    }
    if let Some(v) = cli.cancel_guard {
        policy.cancel_guard = v;
        overridden = true;
    }
    policy.validate()?;
    let ctx = Ctx {
        format: cli.format,
        seed,
        stream_id: cli.stream_id,
        policy,
        policy_overridden: overridden,
    };

    match cli.command {
        Command::Pdf { params, points } => eval_density(&ctx, &params, &points, false),
        Command::Cdf { params, points } => eval_density(&ctx, &params, &points, true),
        Command::Transform { params, kind, s, oracle } => {
            transform(&ctx, &params, kind, &s, oracle)
        }
        Command::Sample { dist, count, alpha, beta, delta, stable_mean_n } => {
            sample(&ctx, dist, count, alpha, beta, delta, stable_mean_n)
        }
        Command::Levy { alpha, what, u, grid } => levy(&ctx, alpha, what, &u, grid),
        Command::Pathway { eta, a, alpha, q, what, points } => {
            pathway(&ctx, eta, a, alpha, q, what, &points)
        }
        Command::LimitClt { params, s, n, mc_size } => limit_clt(&ctx, &params, &s, &n, mc_size),
        Command::LimitLevy { alpha, delta, s, beta_list, mc_size } => {
            limit_levy(&ctx, alpha, delta, &s, &beta_list, mc_size)
        }
        Command::Verify { mc_size } => verify_battery(&ctx, mc_size),
    }
}

fn ml_params(args: &MlArgs) -> Result<MLParams, CliError> {
    Ok(MLParams::new(args.alpha, args.beta, args.delta)?)
}

fn eval_density(
    ctx: &Ctx,
    args: &MlArgs,
    points: &PointsArg,
    cdf: bool,
) -> Result<String, CliError> {
    let p = ml_params(args)?;
    let (xs, echo) = points.points("x")?;
    let mut t = Table::new(vec!["x", "value", "abs_err_est", "terms_used", "method"]);
    ctx.base_meta(
        &mut t,
        if cdf { "cdf" } else { "pdf" },
        &[
            ("alpha", args.alpha.to_string()),
            ("beta", args.beta.to_string()),
            ("delta", args.delta.to_string()),
            ("points", echo),
        ],
    );
    for x in xs {
        let r = if cdf { ml_cdf(x, &p, &ctx.policy)? } else { ml_pdf(x, &p, &ctx.policy)? };
        t.row(vec![
            fmt_f64(x),
            fmt_f64(r.value),
            fmt_f64(r.abs_err_est),
            r.terms_used.to_string(),
            r.method.to_string(),
        ]);
    }
    Ok(t.render(ctx.format))
}

fn transform(
    ctx: &Ctx,
    args: &MlArgs,
    kind: TransformKindArg,
    s: &[f64],
    oracle: bool,
) -> Result<String, CliError> {
    let p = ml_params(args)?;
    if s.is_empty() {
        return Err(CliError::domain("provide at least one --s value"));
    }
    let mut t = Table::new(if oracle {
        vec!["s", "value", "oracle", "abs_dev"]
    } else {
        vec!["s", "value"]
    });
    ctx.base_meta(
        &mut t,
        "transform",
        &[
            ("alpha", args.alpha.to_string()),
            ("beta", args.beta.to_string()),
            ("delta", args.delta.to_string()),
            ("kind", format!("{kind:?}").to_lowercase()),
            ("s", s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
        ],
    );
    let exact: Vec<f64> = s
        .iter()
        .map(|&sv| match kind {
            TransformKindArg::Laplace => ml_laplace(sv, &p),
            TransformKindArg::Mellin => ml_mellin(sv, &p),
        })
        .collect::<Result<_, _>>()?;
    let oracle_vals = if oracle {
        let probe = match kind {
            TransformKindArg::Laplace => TransformProbe::laplace(s)?,
            TransformKindArg::Mellin => TransformProbe::mellin(s)?,
        };
        let pol = ctx.policy;
        let f = move |x: f64| ml_pdf(x, &p, &pol).map(|r| r.value).unwrap_or(f64::NAN);
        let dom = IntegrationDomain::half_line_with_origin_exponent(p.alpha * p.beta - 1.0);
        Some(transform_oracle(f, &probe, &dom)?)
    } else {
        None
    };
    for (i, &sv) in s.iter().enumerate() {
        let mut row = vec![fmt_f64(sv), fmt_f64(exact[i])];
        if let Some(orc) = &oracle_vals {
            row.push(fmt_f64(orc[i]));
            row.push(fmt_f64((orc[i] - exact[i]).abs()));
        }
        t.row(row);
    }
    Ok(t.render(ctx.format))
}

fn sample(
    ctx: &Ctx,
    dist: SampleDist,
    count: usize,
    alpha: Option<f64>,
    beta: Option<f64>,
    delta: Option<f64>,
    stable_mean_n: Option<u32>,
) -> Result<String, CliError> {
    let need = |name: &str, v: Option<f64>| {
        v.ok_or_else(|| CliError::domain(format!("--{name} is required for this distribution")))
    };
    let bd = match dist {
        SampleDist::Ml => {
            let p =
                MLParams::new(need("alpha", alpha)?, need("beta", beta)?, need("delta", delta)?)?;
            match stable_mean_n {
                Some(n) => BatchDist::MlStableMean { params: p, n },
                None => BatchDist::Ml(p),
            }
        }
        SampleDist::Levy => {
            if stable_mean_n.is_some() {
                return Err(CliError::domain("--stable-mean-n applies to --dist ml only"));
            }
            BatchDist::Levy(StableParams::new(need("alpha", alpha)?)?)
        }
        SampleDist::Gamma => {
            if stable_mean_n.is_some() {
                return Err(CliError::domain("--stable-mean-n applies to --dist ml only"));
            }
            BatchDist::Gamma { beta: need("beta", beta)?, delta: need("delta", delta)? }
        }
    };
    let batch = SampleBatch::generate(ctx.seed, ctx.stream_id, count, &bd)?;
    match ctx.format {
        Format::Csv => {
            let mut buf = Vec::new();
            batch.to_csv(&mut buf).expect("in-memory write");
            Ok(String::from_utf8(buf).expect("utf8"))
        }
        Format::Json => {
            let mut s = batch.to_json();
            s.push('\n');
            Ok(s)
        }
    }
}

fn levy(
    ctx: &Ctx,
    alpha: f64,
    what: LevyWhat,
    u: &[f64],
    grid: Option<GridSpec>,
) -> Result<String, CliError> {
    let sp = StableParams::new(alpha)?;
    let (us, echo) = if let Some(g) = grid {
        (g.points(), format!("grid={}", g.echo()))
    } else if !u.is_empty() {
        (u.to_vec(), format!("u={}", u.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
    } else {
        return Err(CliError::domain("provide --u or --grid"));
    };
    let mut t = Table::new(vec!["u", "value", "abs_err_est", "terms_used", "method"]);
    ctx.base_meta(
        &mut t,
        "levy",
        &[
            ("alpha", alpha.to_string()),
            ("what", format!("{what:?}").to_lowercase()),
            ("points", echo),
        ],
    );
    for uv in us {
        let r = match what {
            LevyWhat::Pdf => levy_pdf(uv, &sp, &ctx.policy)?,
            LevyWhat::Cdf => levy_cdf(uv, &sp, &ctx.policy)?,
        };
        t.row(vec![
            fmt_f64(uv),
            fmt_f64(r.value),
            fmt_f64(r.abs_err_est),
            r.terms_used.to_string(),
            r.method.to_string(),
        ]);
    }
    Ok(t.render(ctx.format))
}

fn pathway(
    ctx: &Ctx,
    eta: f64,
    a: f64,
    alpha: f64,
    q: f64,
    what: PathwayWhat,
    points: &PointsArg,
) -> Result<String, CliError> {
    let pw = PathwayParams::new(eta, a, alpha, q)?;
    let meta: Vec<(&str, String)> = vec![
        ("eta", eta.to_string()),
        ("a", a.to_string()),
        ("alpha", alpha.to_string()),
        ("q", q.to_string()),
        ("what", format!("{what:?}").to_lowercase()),
    ];
    match what {
        PathwayWhat::Regime => {
            let r = pathway_regime(&pw);
            let mut t = Table::new(vec!["family", "tsallis", "superstatistics"]);
            ctx.base_meta(&mut t, "pathway", &meta);
            t.row(vec![
                format!("{:?}", r.family).to_lowercase(),
                r.tsallis.to_string(),
                r.superstatistics.to_string(),
            ]);
            Ok(t.render(ctx.format))
        }
        PathwayWhat::Norm => {
            let c = pathway_norm_const(&pw)?;
            let mut t = Table::new(vec!["norm_const", "support_upper"]);
            ctx.base_meta(&mut t, "pathway", &meta);
            t.row(vec![fmt_f64(c), fmt_f64(pw.support_upper())]);
            Ok(t.render(ctx.format))
        }
        PathwayWhat::Pdf => {
            let (xs, echo) = points.points("x")?;
            let mut t = Table::new(vec!["x", "value"]);
            let mut meta = meta;
            meta.push(("points", echo));
            ctx.base_meta(&mut t, "pathway", &meta);
            for x in xs {
                t.row(vec![fmt_f64(x), fmt_f64(pathway_pdf(x, &pw)?)]);
            }
            Ok(t.render(ctx.format))
        }
    }
}

fn report_with_meta(ctx: &Ctx, command: &str, meta: &[(&str, String)], body: String) -> String {
    // ConvergenceReport carries its own column header; prepend the meta block
    match ctx.format {
        Format::Csv => {
            let mut out = String::new();
            let mut t = Table::new(vec![]);
            ctx.base_meta(&mut t, command, meta);
            for (k, v) in &t.meta {
                let _ = writeln!(out, "# {k}={v}");
            }
            out.push_str(&body);
            out
        }
        Format::Json => body,
    }
}

fn limit_clt(
    ctx: &Ctx,
    args: &MlArgs,
    s: &[f64],
    n: &[u32],
    mc_size: usize,
) -> Result<String, CliError> {
    let p = ml_params(args)?;
    let probe = TransformProbe::laplace(s)?;
    let mut rng = mlpath_core::rng::stream_rng(ctx.seed, ctx.stream_id);
    let rep = clt_convergence_report(&p, n, &probe, mc_size, &mut rng)?;
    let meta = [
        ("alpha", args.alpha.to_string()),
        ("beta", args.beta.to_string()),
        ("delta", args.delta.to_string()),
        ("s", s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
        ("n", n.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
        ("mc_size", mc_size.to_string()),
        ("monotone_gap", rep.monotone_gap.to_string()),
    ];
    let body = match ctx.format {
        Format::Csv => rep.to_csv(),
        Format::Json => {
            let mut s = rep.to_json();
            s.push('\n');
            s
        }
    };
    Ok(report_with_meta(ctx, "limit-clt", &meta, body))
}

fn limit_levy(
    ctx: &Ctx,
    alpha: f64,
    delta: f64,
    s: &[f64],
    beta_list: &[f64],
    mc_size: usize,
) -> Result<String, CliError> {
    let p = MLParams::new(alpha, 1.0, delta)?;
    let probe = TransformProbe::laplace(s)?;
    let mut rng = mlpath_core::rng::stream_rng(ctx.seed, ctx.stream_id);
    let rep = levy_limit_report(&p, beta_list, &probe, mc_size, &mut rng)?;
    let meta = [
        ("alpha", alpha.to_string()),
        ("delta", delta.to_string()),
        ("s", s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
        ("beta_list", beta_list.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
        ("mc_size", mc_size.to_string()),
        ("monotone_gap", rep.monotone_gap.to_string()),
    ];
    let body = match ctx.format {
        Format::Csv => rep.to_csv(),
        Format::Json => {
            let mut s = rep.to_json();
            s.push('\n');
            s
        }
    };
    Ok(report_with_meta(ctx, "limit-levy", &meta, body))
}

fn verify_battery(ctx: &Ctx, mc_size: usize) -> Result<String, CliError> {
    if mc_size < 100 {
        return Err(CliError::domain("--mc-size must be at least 100"));
    }
    if ctx.policy_overridden {
        return Err(CliError::domain(
            "verify runs with the default series policy; drop the tolerance overrides",
        ));
    }
    let pol = SeriesPolicy::default();
    let mut t = Table::new(vec!["check", "status", "observed", "threshold"]);
    ctx.base_meta(&mut t, "verify", &[("mc_size", mc_size.to_string())]);

    let mut numeric_fail = false;
    let mut stat_fail = false;
    let mut push =
        |t: &mut Table, name: &str, observed: f64, threshold: f64, stat: bool| {
            let pass = observed < threshold;
            t.row(vec![
                name.to_string(),
                if pass { "pass".to_string() } else { "fail".to_string() },
                fmt_f64(observed),
                fmt_f64(threshold),
            ]);
            if !pass {
                if stat {
                    stat_fail = true;
                } else {
                    numeric_fail = true;
                }
            }
        };

    // normalization on a reduced grid
    let mut worst = 0.0f64;
    for (a, b) in [(0.5, 1.0), (0.5, 2.0), (0.7, 1.0), (1.0, 2.0)] {
        let p = MLParams::new(a, b, 1.0).unwrap();
        let f = move |x: f64| ml_pdf(x, &p, &pol).map(|r| r.value).unwrap_or(f64::NAN);
        let (mass, _) = mlpath_core::quad::integrate_density(&f, a * b - 1.0, f64::INFINITY, 1e-8)?;
        worst = worst.max((mass - 1.0).abs());
    }
    push(&mut t, "normalization", worst, 1e-6, false);

    // transform identity at (0.5, 1, 1)
    let p = MLParams::new(0.5, 1.0, 1.0).unwrap();
    let probe = TransformProbe::laplace(&[0.5, 1.0])?;
    let f = move |x: f64| ml_pdf(x, &p, &pol).map(|r| r.value).unwrap_or(f64::NAN);
    let dom = IntegrationDomain::half_line_with_origin_exponent(-0.5);
    let vals = transform_oracle(f, &probe, &dom)?;
    let mut worst = 0.0f64;
    for (&sv, &q) in probe.s_values.iter().zip(&vals) {
        worst = worst.max((q - ml_laplace(sv, &p)?).abs());
    }
    push(&mut t, "laplace_oracle", worst, 1e-8, false);

    // factorization at 6 pairs
    let mut worst = 0.0f64;
    for (a, b, d) in [(0.3, 2.0, 1.0), (0.5, 1.0, 0.5), (0.7, 0.5, 2.0)] {
        let p = MLParams::new(a, b, d).unwrap();
        let sp = StableParams::new(a).unwrap();
        for frac in [0.35, 0.7] {
            let s = p.mellin_lo().max(0.05) * (1.0 - frac) + p.mellin_hi() * frac;
            let full = ml_mellin(s, &p)?;
            let prod =
                levy_mellin(s, &sp)? * mlpath_core::sampling::gamma_power_mellin(s, b, d, a)?;
            worst = worst.max((full - prod).abs() / full);
        }
    }
    push(&mut t, "mellin_factorization", worst, 1e-12, false);

    // alpha = 1/2 closed-form anchor
    let sp = StableParams::new(0.5).unwrap();
    let pdf_dev = (levy_pdf(2.0, &sp, &pol)?.value
        - 0.5 / std::f64::consts::PI.sqrt() * 2.0f64.powf(-1.5) * (-0.125f64).exp())
    .abs();
    push(&mut t, "levy_half_anchor", pdf_dev, 1e-6, false);

    // sampler goodness of fit
    let p = MLParams::new(0.5, 1.0, 1.0).unwrap();
    let batch = SampleBatch::generate(ctx.seed, ctx.stream_id, mc_size, &BatchDist::Ml(p))?;
    let d = ks_statistic(&batch, |x| Ok(ml_cdf(x, &p, &pol)?.value))?;
    push(&mut t, "ml_sampler_ks", d, ks_critical_1pct(mc_size), true);

    let batch = SampleBatch::generate(
        ctx.seed,
        ctx.stream_id.wrapping_add(1),
        mc_size,
        &BatchDist::Gamma { beta: 0.5, delta: 1.0 },
    )?;
    let d = ks_statistic(&batch, |x| Ok(mlpath_core::special::gamma_lr(0.5, x)))?;
    push(&mut t, "gamma_sampler_ks", d, ks_critical_1pct(mc_size), true);

    let out = t.render(ctx.format);
    if numeric_fail {
        return Err(CliError {
            code: EXIT_NUMERIC,
            kind: "verification",
            message: format!("numerical verification failed\n{out}"),
        });
    }
    if stat_fail {
        return Err(CliError {
            code: EXIT_STATISTICAL,
            kind: "statistical",
            message: format!("statistical verification failed\n{out}"),
        });
    }
    Ok(out)
}

/// Entry point used by main(); prints the report or the error record.
pub fn run() -> i32 {
    match execute(std::env::args_os()) {
        Ok(report) => {
            print!("{report}");
            EXIT_OK
        }
        Err(e) if e.code == EXIT_OK => {
            // --help / --version
            println!("{}", e.message);
            EXIT_OK
        }
        Err(e) => {
            eprintln!("{}", e.record());
            e.code
        }
    }
}
