//! Argument parsing and command dispatch for the `cosmo` binary.
//!
//! [`run`] never prints; it returns the rendered report so that the binary
//! and the tests share one code path.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cosmo_core::arith::{dedekind_sum_fast, dedekind_sum_naive};
use cosmo_core::casson_walker::casson_walker_link_surgery;
use cosmo_core::links::{
    invariants_from_diagram, parse_pd, pretzel_link, torus2_diagram, BigIntJson, LinkSurgeryInvariants, DEFAULT_CROSSING_LIMIT,
};
use cosmo_core::obstructions::{
    chirally_cosmetic_obstruction, chirally_cosmetic_obstruction_ihs, pretzel_analysis, purely_cosmetic_obstruction_bl,
    purely_cosmetic_obstruction_link, purely_cosmetic_quadratic, purely_cosmetic_report_ihs,
};
use cosmo_core::seifert::{casson_gordon_tau, conway_from_seifert, seifert_torus2, total_p_signature};
use cosmo_core::{BigInt, ConwayPoly, Rational, SeifertMatrix, SkeinOracle, Slope, SurgeryResult};
use serde::Serialize;

mod selftest;

pub use selftest::{selftest, SelftestReport};

/// Environment variable overriding the skein oracle's crossing cap.
pub const CROSSING_LIMIT_VAR: &str = "COSMO_CROSSING_LIMIT";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Library(#[from] cosmo_core::Error),

    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Parser, Debug)]
#[command(name = "cosmo", version, about = "Surgery invariants and cosmetic-surgery obstructions")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Fast,
    Naive,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dedekind sum s(p, q).
    Dedekind {
        #[arg(long, allow_hyphen_values = true)]
        p: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        q: BigInt,
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
    },
    /// Conway polynomial of a diagram, a link family member or a Seifert matrix.
    Conway(ConwaySource),
    /// Casson-Walker invariant of surgery on a two-component link.
    Lambda(LambdaArgs),
    /// Casson-Gordon invariant of surgery on a knot.
    Tau {
        #[command(flatten)]
        knot: SeifertSource,
        #[arg(long, allow_hyphen_values = true)]
        slope: Slope,
    },
    /// Test for purely cosmetic surgeries.
    ObstructPurely(PurelyArgs),
    /// Test for chirally cosmetic surgeries.
    ObstructChirally(ChirallyArgs),
    /// Purely cosmetic analysis of the pretzel link P(2a+1, 2b, 2b).
    Pretzel {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        slope: Slope,
    },
    /// Run the built-in closed-form and oracle equivalence checks.
    Selftest,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct ConwaySource {
    /// PD-code file.
    #[arg(long)]
    pub pd: Option<PathBuf>,
    /// Torus link T(2, n).
    #[arg(long, allow_hyphen_values = true)]
    pub torus: Option<i64>,
    /// Pretzel link with the given comma-separated twist counts.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub pretzel: Option<Vec<i64>>,
    /// Seifert-matrix file.
    #[arg(long)]
    pub seifert: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct SeifertSource {
    /// Seifert-matrix file.
    #[arg(long)]
    pub seifert: Option<PathBuf>,
    /// Torus knot T(2, n), n odd.
    #[arg(long, allow_hyphen_values = true)]
    pub torus: Option<i64>,
}

#[derive(Args, Debug)]
pub struct LambdaArgs {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "pd", conflicts_with = "pd")]
    pub lk: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "pd", conflicts_with = "pd")]
    pub a2x: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "pd", conflicts_with = "pd")]
    pub a2y: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "pd", conflicts_with = "pd")]
    pub a3: Option<BigInt>,
    /// Two-component PD-code file; invariants come from the skein oracle.
    #[arg(long)]
    pub pd: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    pub sx: Slope,
    #[arg(long, allow_hyphen_values = true)]
    pub sy: Slope,
}

/// With no flags the integral homology sphere test runs. `--delta2` tests a
/// knot via its Alexander data, `--a2 --q0 --a3` a link at slope `1/q0`, and
/// `--a2x --a3 --slope` a link at an arbitrary slope.
#[derive(Args, Debug)]
pub struct PurelyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub delta2: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true)]
    pub a2: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true)]
    pub q0: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true)]
    pub a2x: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true)]
    pub a2y: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true)]
    pub a3: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true)]
    pub slope: Option<Slope>,
}

#[derive(Args, Debug)]
pub struct ChirallyArgs {
    /// Casson-Walker invariant of the homology sphere containing the knot.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["a2", "p0"])]
    pub lambda_w: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, requires = "p0")]
    pub a2: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true, requires = "a2")]
    pub p0: Option<BigInt>,
}

/// Rendered report and whether the command succeeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, success: true }
    }
}

#[derive(Serialize)]
struct DedekindReport<'a> {
    p: BigIntJson<'a>,
    q: BigIntJson<'a>,
    method: Method,
    value: Rational,
}

#[derive(Serialize)]
struct TauReport<'a> {
    slope: &'a Slope,
    signature: i64,
    tau: Rational,
}

/// Skein oracle honoring [`CROSSING_LIMIT_VAR`].
pub fn oracle_from_env() -> Result<SkeinOracle, CliError> {
    let limit = match std::env::var(CROSSING_LIMIT_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CROSSING_LIMIT_VAR} must be a nonnegative integer, got {v:?}")))?,
        Err(_) => DEFAULT_CROSSING_LIMIT,
    };
    Ok(SkeinOracle::default().with_crossing_limit(limit))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

/// Compact, key-order-stable JSON followed by a newline.
pub fn emit_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types always serialize");
    s.push('\n');
    s
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => emit_json(value),
        Format::Text => {
            let mut s = text();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    }
}

fn conway_text(poly: &ConwayPoly) -> String {
    let dense: Vec<String> =
        (0..=poly.degree().unwrap_or(0)).map(|e| poly.coefficient(e).to_string()).collect();
    format!("nabla(z) = {poly}\ncoefficients: [{}]", dense.join(", "))
}

fn surgery_text(r: &SurgeryResult) -> String {
    format!(
        "lambda_w = {}\nD = {}\nsigma = {}\nlambda = {}",
        r.lambda_w.to_short_string(),
        r.d.to_short_string(),
        r.sigma,
        r.lambda.to_short_string()
    )
}

fn seifert_matrix(src: &SeifertSource) -> Result<SeifertMatrix, CliError> {
    match (&src.seifert, src.torus) {
        (Some(path), _) => Ok(SeifertMatrix::parse(&read(path)?)?),
        (None, Some(n)) => Ok(seifert_torus2(n)?),
        (None, None) => Err(CliError::Usage("one of --seifert or --torus is required".into())),
    }
}

fn conway(src: &ConwaySource) -> Result<ConwayPoly, CliError> {
    if let Some(path) = &src.seifert {
        return Ok(conway_from_seifert(&SeifertMatrix::parse(&read(path)?)?)?);
    }
    let diagram = match (&src.pd, src.torus, &src.pretzel) {
        (Some(path), _, _) => parse_pd(&read(path)?)?,
        (_, Some(n), _) => torus2_diagram(n)?,
        (_, _, Some(params)) => pretzel_link(params)?,
        _ => return Err(CliError::Usage("one of --pd, --torus, --pretzel or --seifert is required".into())),
    };
    Ok(oracle_from_env()?.conway(&diagram)?)
}

fn lambda(args: &LambdaArgs) -> Result<SurgeryResult, CliError> {
    let inv = match &args.pd {
        Some(path) => invariants_from_diagram(&parse_pd(&read(path)?)?, &oracle_from_env()?)?,
        None => {
            let need = |v: &Option<BigInt>, flag: &str| v.clone().ok_or_else(|| CliError::Usage(format!("--{flag} is required")));
            LinkSurgeryInvariants::new(need(&args.a2x, "a2x")?, need(&args.a2y, "a2y")?, need(&args.a3, "a3")?, need(&args.lk, "lk")?)
        }
    };
    Ok(casson_walker_link_surgery(&inv, &args.sx, &args.sy)?)
}

fn obstruct_purely(a: &PurelyArgs) -> Result<cosmo_core::ObstructionReport, CliError> {
    let conflict = || {
        CliError::Usage(
            "use no flags, --delta2 alone, --a2 --q0 --a3, or --a2x --a3 --slope [--a2y]".into(),
        )
    };
    match (&a.delta2, &a.a2, &a.q0, &a.a2x, &a.a2y, &a.a3, &a.slope) {
        (None, None, None, None, None, None, None) => Ok(purely_cosmetic_report_ihs()),
        (Some(d), None, None, None, None, None, None) => Ok(purely_cosmetic_obstruction_bl(d)),
        (None, Some(a2), Some(q0), None, None, Some(a3), None) => Ok(purely_cosmetic_obstruction_link(a2, q0, a3)?),
        (None, None, None, Some(a2x), a2y, Some(a3), Some(s0)) => {
            let inv = LinkSurgeryInvariants::new(a2x.clone(), a2y.clone().unwrap_or_default(), a3.clone(), 0);
            Ok(purely_cosmetic_quadratic(&inv, s0)?)
        }
        _ => Err(conflict()),
    }
}

fn obstruct_chirally(a: &ChirallyArgs) -> Result<cosmo_core::ObstructionReport, CliError> {
    match (&a.lambda_w, &a.a2, &a.p0) {
        (Some(l), None, None) => Ok(chirally_cosmetic_obstruction_ihs(l)),
        (None, Some(a2), Some(p0)) => Ok(chirally_cosmetic_obstruction(a2, p0)?),
        _ => Err(CliError::Usage("use --lambda-w alone or --a2 with --p0".into())),
    }
}

/// Executes one parsed command.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let format = cli.format;
    let out = match &cli.command {
        Command::Dedekind { p, q, method } => {
            let value = match method {
                Method::Fast => dedekind_sum_fast(p, q)?,
                Method::Naive => dedekind_sum_naive(p, q)?,
            };
            let report = DedekindReport { p: BigIntJson(p), q: BigIntJson(q), method: *method, value };
            render(format, &report, || format!("s({p},{q}) = {}", report.value.to_short_string()))
        }
        Command::Conway(src) => {
            let poly = conway(src)?;
            render(format, &poly, || conway_text(&poly))
        }
        Command::Lambda(args) => {
            let r = lambda(args)?;
            render(format, &r, || surgery_text(&r))
        }
        Command::Tau { knot, slope } => {
            let s = seifert_matrix(knot)?;
            let tau = casson_gordon_tau(&s, slope)?;
            let p = u64::try_from(slope.p()).map_err(|_| CliError::Usage(format!("slope {slope} is out of range")))?;
            let report = TauReport { slope, signature: total_p_signature(&s, p)?, tau };
            render(format, &report, || {
                format!("tau = {}\nsignature sum = {}", report.tau.to_short_string(), report.signature)
            })
        }
        Command::ObstructPurely(args) => {
            let r = obstruct_purely(args)?;
            render(format, &r, || r.to_string())
        }
        Command::ObstructChirally(args) => {
            let r = obstruct_chirally(args)?;
            render(format, &r, || r.to_string())
        }
        Command::Pretzel { a, b, slope } => {
            let r = pretzel_analysis(*a, *b, slope)?;
            render(format, &r, || r.to_string())
        }
        Command::Selftest => {
            let report = selftest();
            let text = render(format, &report, || report.to_string());
            return Ok(Outcome { stdout: text, success: report.failed == 0 });
        }
    };
    Ok(Outcome::ok(out))
}
