//! Command-line front end. Exit codes: 0 success, 1 usage or input error,
//! 2 verification failure.

use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};
use dyckstat_core::{
    build_table, count_exact_dp, enumerate_with_guard, parse_path, psi, stat_gf, statistics,
    theta_forward, theta_inverse, CountMethod, StatKind, DEFAULT_ENUMERATION_GUARD,
};
use num_bigint::BigUint;
use serde_json::json;

use crate::format::{render_bijection, render_bivar, render_count, render_series, render_table, OutputFormat};
use crate::verify::{self, VerifyParams};
use crate::weightspec::WeightFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "dyckstat", version, about = "Exact counts of Dyck paths by peaks or valleys at a given height")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print coefficients of the generating function of paths with r peaks or valleys at height k.
    Series {
        #[arg(long, value_enum)]
        stat: Stat,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 30)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print one exact count.
    Count {
        #[arg(long, value_enum)]
        stat: Stat,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_GUARD)]
        guard: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Emit every count for n <= n-max, k <= k-max, all r, both kinds.
    Table {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_GUARD)]
        guard: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Apply a path bijection and print the image with both statistic profiles.
    Bijection {
        #[arg(long, value_enum)]
        map: Map,
        /// Height of the exchanged peaks (psi only).
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Steps as U/D or parentheses.
        #[arg(long)]
        path: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Evaluate a continued fraction described by a JSON weight file.
    Cfrac {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 30)]
        order: usize,
        #[arg(long, default_value_t = 4)]
        z_order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Run the cross-check suite and print the report.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    #[arg(long, default_value_t = 5)]
    k_max: usize,
    #[arg(long, default_value_t = 4)]
    r_max: usize,
    #[arg(long, default_value_t = 30)]
    order: usize,
    #[arg(long, default_value_t = 4)]
    z_order: usize,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_GUARD)]
    guard: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Stat {
    Peak,
    Valley,
}

impl From<Stat> for StatKind {
    fn from(s: Stat) -> Self {
        match s {
            Stat::Peak => StatKind::Peak,
            Stat::Valley => StatKind::Valley,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Enum,
    Dp,
    Gf,
}

impl Method {
    fn core(self) -> CountMethod {
        match self {
            Method::Enum => CountMethod::Enum,
            Method::Dp => CountMethod::Dp,
            Method::Gf => CountMethod::Gf,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Method::Enum => "enum",
            Method::Dp => "dp",
            Method::Gf => "gf",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Map {
    Psi,
    Theta,
    ThetaInverse,
}

/// Exit status with captured output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { status: EXIT_OK, stdout, stderr: String::new() }
    }
}

/// Runs the tool on `argv`, whose first element is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { status: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome { status: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e:#}\n") },
    }
}

fn execute(command: Command) -> Result<Outcome> {
    let text = match command {
        Command::Series { stat, k, r, order, format } => {
            let kind = StatKind::from(stat);
            let s = stat_gf(kind, k, r, order);
            render_series(&s, json!({"stat": kind.as_str(), "k": k, "r": r, "order": order}), format)?
        }
        Command::Count { stat, k, r, n, method, guard, format } => {
            let kind = StatKind::from(stat);
            let count = count_one(kind, k, r, n, method, guard)?;
            let meta = json!({"stat": kind.as_str(), "k": k, "r": r, "n": n, "method": method.name()});
            render_count(meta, &count.to_string(), format)?
        }
        Command::Table { n_max, k_max, method, guard, format } => {
            let t = build_table(n_max, k_max, method.core(), guard)?;
            render_table(&t, method.name(), format)?
        }
        Command::Bijection { map, k, path, format } => {
            let p = parse_path(&path).with_context(|| format!("invalid path {path:?}"))?;
            let image = match map {
                Map::Psi => Some(psi(&p, k)?),
                Map::Theta => theta_forward(&p)?,
                Map::ThetaInverse => Some(theta_inverse(&p)),
            };
            let name = match map {
                Map::Psi => "psi",
                Map::Theta => "theta",
                Map::ThetaInverse => "theta-inverse",
            };
            let input_profile = statistics(&p);
            let image_profile = image.as_ref().map(statistics);
            render_bijection(
                name,
                (&p, &input_profile),
                image.as_ref().zip(image_profile.as_ref()),
                format,
            )?
        }
        Command::Cfrac { spec, order, z_order, format } => {
            let text = std::fs::read_to_string(&spec)
                .with_context(|| format!("cannot read {}", spec.display()))?;
            let file = WeightFile::from_json(&text)?;
            let weights = file.to_spec(order, z_order)?;
            let b = dyckstat_core::rv_cfrac(&weights, order, z_order)?;
            render_bivar(&b, json!({"depth": file.depth, "order": order, "z_order": z_order}), format)?
        }
        Command::Verify(args) => {
            let params = VerifyParams {
                n_max: args.n_max,
                k_max: args.k_max,
                r_max: args.r_max,
                order: args.order,
                z_order: args.z_order,
                guard: args.guard,
            };
            let report = verify::run(&params)?;
            let status = if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            return Ok(Outcome { status, stdout: report.render(), stderr: String::new() });
        }
    };
    Ok(Outcome::ok(text))
}

fn count_one(kind: StatKind, k: usize, r: usize, n: usize, method: Method, guard: usize) -> Result<BigUint> {
    Ok(match method {
        Method::Enum => BigUint::from(
            enumerate_with_guard(n, guard)?
                .filter(|p| p.count_at(kind, k) == r)
                .count(),
        ),
        Method::Dp => count_exact_dp(n, k, r, kind),
        Method::Gf => {
            let s = stat_gf(kind, k, r, n);
            s.coeffs()[n]
                .to_integer()
                .to_biguint()
                .context("generating function produced a negative coefficient")?
        }
    })
}
