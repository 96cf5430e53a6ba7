use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

use suq2_cli::commands::{self, CliError, Format, Output};
use suq2_cli::config::ConfigInput;

/// Exact verification of the 4D+ calculus on SU_q(2) and the Podleś sphere.
#[derive(Parser)]
#[command(name = "suq2", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Default)]
struct Params {
    /// α as a scalar expression in s, q, i [default: 1/(2q)]
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// ε as a scalar expression [default: the Dirac-matching value]
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
}

/// `--out` takes a path, or `json` / `csv` as a shorthand for `--format`.
#[derive(Args, Clone)]
struct Sink {
    #[arg(long)]
    out: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl Sink {
    fn resolve(&self) -> (Option<PathBuf>, Format) {
        match self.out.as_deref() {
            Some("json") => (None, Format::Json),
            Some("csv") => (None, Format::Csv),
            Some(p) => (Some(PathBuf::from(p)), self.format.unwrap_or(Format::Json)),
            None => (None, self.format.unwrap_or(Format::Json)),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an expression and print its sort and normal form
    Parse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run an invariant suite: algebra, envelope, exterior, hodge, sphere, laplace, bundle or all
    Run {
        suite: String,
        #[command(flatten)]
        params: Params,
        /// Line-bundle degrees, e.g. -2..2
        #[arg(long, allow_hyphen_values = true)]
        n_range: Option<String>,
        /// Monomial degree bound for sampled families
        #[arg(long)]
        deg_max: Option<u32>,
        /// Monomial degree bound for the sphere witness families
        #[arg(long)]
        witness_deg: Option<u32>,
        /// Rational sample point in (0, 1) for the orientation audit
        #[arg(long)]
        s0: Option<String>,
        /// Record per-task wall time (makes the report run-dependent)
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        sink: Sink,
    },
    /// Sphere Laplacian spectrum as rows {J, eigenvalue, multiplicity}
    Spectrum {
        #[arg(long, default_value = "s2", value_parser = ["s2"])]
        space: String,
        #[arg(long = "j-max", alias = "J-max", default_value_t = 4)]
        j_max: u32,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        sink: Sink,
    },
    /// Hodge operator matrices in every degree (JSON)
    Hodge {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Line bundles and gauged Laplacians
    Bundle {
        #[command(subcommand)]
        cmd: BundleCmd,
    },
}

#[derive(Subcommand)]
enum BundleCmd {
    /// Check the gauged Laplacian against its closed form for every n in a range
    Verify {
        #[arg(long, allow_hyphen_values = true, default_value = "-2..2")]
        n_range: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        sgauge: String,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        sink: Sink,
    },
    /// Curvature coefficient and factorization at one n
    Curvature {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        sgauge: String,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        sink: Sink,
    },
}

fn input(p: &Params) -> ConfigInput {
    ConfigInput { alpha: p.alpha.clone(), eps: p.eps.clone(), ..ConfigInput::default() }
}

fn emit(out: Output, path: Option<PathBuf>) -> Result<bool, CliError> {
    match path {
        Some(p) => std::fs::write(&p, &out.text).map_err(|e| CliError::Engine(format!("writing {}: {}", p.display(), e)))?,
        None => print!("{}", out.text),
    }
    Ok(out.all_pass)
}

fn dispatch(cmd: Cmd) -> Result<bool, CliError> {
    match cmd {
        Cmd::Parse { expr } => {
            println!("{}", commands::parse(&expr)?);
            Ok(true)
        }
        Cmd::Run { suite, params, n_range, deg_max, witness_deg, s0, timings, sink } => {
            let cfg = ConfigInput { n_range, deg_max, witness_deg, s0, ..input(&params) };
            let (path, format) = sink.resolve();
            emit(commands::run_suite(&suite, &cfg, format, timings)?, path)
        }
        Cmd::Spectrum { space: _, j_max, params, sink } => {
            let (path, format) = sink.resolve();
            emit(commands::spectrum(&input(&params), j_max, format)?, path)
        }
        Cmd::Hodge { params, out } => emit(commands::hodge(&input(&params))?, out),
        Cmd::Bundle { cmd: BundleCmd::Verify { n_range, sgauge, params, sink } } => {
            let cfg = ConfigInput { n_range: Some(n_range), ..input(&params) };
            let (path, format) = sink.resolve();
            emit(commands::bundle_verify(&cfg, &sgauge, format)?, path)
        }
        Cmd::Bundle { cmd: BundleCmd::Curvature { n, sgauge, params, sink } } => {
            let (path, format) = sink.resolve();
            emit(commands::bundle_curvature(&input(&params), n, &sgauge, format)?, path)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
