//! Subcommand bodies. Each returns the rendered document and whether every check passed;
//! `main` owns writing and exit codes.

use rayon::prelude::*;
use serde::Serialize;
use suq2::bundle::GaugeData;
use suq2::exterior::{mask_name, masks_of_degree};
use suq2::laplacians::spectrum_table;
use suq2::{act_left, ContractionParams, Scalar};
use thiserror::Error;

use crate::config::{Config, ConfigError, ConfigInput, Context};
use crate::parse::{parse_expr, parse_scalar, ParseError};
use crate::report::{ConfigSummary, SuiteReport, SCHEMA};
use crate::suites::{factorization_holds, needs_kets, phi_family, run_tasks, tasks_for};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown suite {0:?}; expected one of algebra, envelope, exterior, hodge, sphere, laplace, bundle, all")]
    UnknownSuite(String),
    #[error("--sgauge: {0}")]
    Sgauge(ParseError),
    #[error("{0}")]
    Engine(String),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A rendered document plus the verdict that drives the exit code.
pub struct Output {
    pub text: String,
    pub all_pass: bool,
}

fn summary(cfg: &Config) -> ConfigSummary {
    ConfigSummary {
        alpha: cfg.alpha.to_string(),
        eps: cfg.eps.to_string(),
        n_range: format!("{}..{}", cfg.n_min, cfg.n_max),
        deg_max: cfg.deg_max,
        witness_deg: cfg.witness_deg,
        s0: cfg.s0.to_string(),
    }
}

pub fn parse(text: &str) -> Result<String, CliError> {
    let v = parse_expr(text)?;
    Ok(format!("{}: {}", v.sort(), v))
}

pub fn run_suite(suite: &str, input: &ConfigInput, format: Format, timings: bool) -> Result<Output, CliError> {
    let cfg = Config::from_input(input)?;
    let tasks = tasks_for(suite, &cfg).ok_or_else(|| CliError::UnknownSuite(suite.to_string()))?;
    let ctx = Context::new(cfg, needs_kets(suite))?;
    let report = SuiteReport::new(suite, summary(&ctx.cfg), run_tasks(&ctx, &tasks, timings));
    let text = match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv()?,
    };
    Ok(Output { text, all_pass: report.all_pass() })
}

#[derive(Serialize)]
struct Document<R: Serialize> {
    schema: &'static str,
    version: &'static str,
    kind: &'static str,
    alpha: String,
    eps: String,
    rows: Vec<R>,
}

fn render<R: Serialize>(kind: &'static str, params: &ContractionParams, rows: Vec<R>, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let doc = Document {
                schema: SCHEMA,
                version: env!("CARGO_PKG_VERSION"),
                kind,
                alpha: params.alpha.to_string(),
                eps: params.eps.to_string(),
                rows,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("rows serialize");
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r)?;
            }
            let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("utf-8 input"))
        }
    }
}

fn params_of(input: &ConfigInput) -> Result<ContractionParams, CliError> {
    let cfg = Config::from_input(input)?;
    Ok(ContractionParams::derive(cfg.alpha, cfg.eps).map_err(ConfigError::from)?)
}

#[derive(Serialize)]
struct SpectrumRow {
    #[serde(rename = "J")]
    j: u32,
    eigenvalue: String,
    multiplicity: u32,
}

pub fn spectrum(input: &ConfigInput, j_max: u32, format: Format) -> Result<Output, CliError> {
    let p = params_of(input)?;
    let rows = spectrum_table(j_max, &p.alpha, &p.nu)
        .into_iter()
        .map(|(j, ev, m)| SpectrumRow { j, eigenvalue: ev.to_string(), multiplicity: m })
        .collect();
    Ok(Output { text: render("spectrum-s2", &p, rows, format)?, all_pass: true })
}

#[derive(Serialize)]
struct StarMatrix {
    degree: u32,
    inputs: Vec<String>,
    outputs: Vec<String>,
    matrix: Vec<Vec<String>>,
}

/// `★` from degree `k` to `4 − k` on ordered wedge monomials; JSON only.
pub fn hodge(input: &ConfigInput) -> Result<Output, CliError> {
    let p = params_of(input)?;
    let names = |k: u32| masks_of_degree(k).into_iter().map(mask_name).collect::<Vec<_>>();
    let rows = (0..=4u32)
        .map(|k| {
            let m = p.star_matrix(k).map_err(|e| CliError::Engine(e.to_string()))?;
            Ok(StarMatrix {
                degree: k,
                inputs: names(k),
                outputs: names(4 - k),
                matrix: m.iter().map(|r| r.iter().map(Scalar::to_string).collect()).collect(),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Output { text: render("hodge-star", &p, rows, Format::Json)?, all_pass: true })
}

#[derive(Serialize)]
struct CurvatureRow {
    n: i64,
    sgauge: String,
    curvature_coefficient: String,
    factorization_holds: bool,
}

#[derive(Serialize)]
struct VerifyRow {
    n: i64,
    sgauge: String,
    curvature_coefficient: String,
    factorization_holds: bool,
    closed_form_holds: bool,
}

fn sgauge_of(text: &str) -> Result<Scalar, CliError> {
    parse_scalar(text).map_err(CliError::Sgauge)
}

pub fn bundle_curvature(input: &ConfigInput, n: i64, sgauge: &str, format: Format) -> Result<Output, CliError> {
    let s = sgauge_of(sgauge)?;
    let mut input = input.clone();
    input.n_range = Some(format!("{}..{}", n, n));
    let ctx = Context::new(Config::from_input(&input)?, true)?;
    let g = GaugeData::new(n, s);
    let holds = factorization_holds(&g, &ctx).map_err(|e| CliError::Engine(e.to_string()))?;
    let row = CurvatureRow { n, sgauge: g.sgauge.to_string(), curvature_coefficient: g.curvature().to_string(), factorization_holds: holds };
    Ok(Output { text: render("bundle-curvature", &ctx.params, vec![row], format)?, all_pass: true })
}

/// Per `n`: the gauged Laplacian against its closed form (pass/fail) and whether it
/// factorizes through the sphere Laplacian at this gauge (informational).
pub fn bundle_verify(input: &ConfigInput, sgauge: &str, format: Format) -> Result<Output, CliError> {
    let s = sgauge_of(sgauge)?;
    let ctx = Context::new(Config::from_input(input)?, true)?;
    let (alpha, nu) = (&ctx.params.alpha, &ctx.params.nu);
    let rows: Vec<VerifyRow> = ctx
        .cfg
        .n_values()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let g = GaugeData::new(n, s.clone());
            let closed = g.laplacian_closed_form(alpha, nu);
            let mut closed_ok = true;
            for phi in phi_family(n) {
                closed_ok &= g.gauged_laplacian(&phi, &ctx.sphere).map_err(|e| CliError::Engine(e.to_string()))? == act_left(&closed, &phi);
            }
            Ok(VerifyRow {
                n,
                sgauge: g.sgauge.to_string(),
                curvature_coefficient: g.curvature().to_string(),
                factorization_holds: factorization_holds(&g, &ctx).map_err(|e| CliError::Engine(e.to_string()))?,
                closed_form_holds: closed_ok,
            })
        })
        .collect::<Result<_, CliError>>()?;
    let all_pass = rows.iter().all(|r| r.closed_form_holds);
    Ok(Output { text: render("bundle-verify", &ctx.params, rows, format)?, all_pass })
}
