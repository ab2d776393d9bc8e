use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;

use genspin::harness::{self, AtomList, CheckConfig, DEFAULT_P_LIST};
use genspin::pillow::pillow_report;
use genspin::spin_factor::AtomPolicy;
use genspin::{
    BodyDescriptor, ConvexBody, Error, ModelDescriptor, NormModel, OUElement, SpinFactor,
};

#[derive(Parser)]
#[command(
    name = "genspin",
    version,
    about = "Transition probabilities in generalized spin factors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output file (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Transition-probability curves for a fixed pair family in X = l^p.
    Figure1 {
        /// Comma-separated exponents.
        #[arg(long, value_delimiter = ',')]
        p: Option<Vec<f64>>,
        /// Number of grid points for beta1 in [-1, 1].
        #[arg(long, default_value_t = 201)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Symmetry and complement-additivity defects over random atom pairs, per exponent.
    DefectScan {
        #[arg(long, value_delimiter = ',')]
        p: Option<Vec<f64>>,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Transition-probability matrix of a list of atoms.
    Tpmatrix {
        /// JSON file (or inline JSON) `{"atoms": [...], "model": {...}}`.
        #[arg(long)]
        atoms: String,
        /// Model descriptor; overrides the one in the atoms file.
        #[arg(long)]
        model: Option<String>,
        /// Reject atoms that are not unit vectors instead of normalizing them.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep of transition probabilities over boundary points of a body.
    Convex {
        /// Body descriptor, e.g. `{"kind":"limacon","eps":0.3}`.
        #[arg(long)]
        body: String,
        /// Number of boundary angles per axis.
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Spectral decomposition of an element x ⊕ s.
    Spectral {
        #[arg(long)]
        model: String,
        /// `{"x": [...], "s": ...}`.
        #[arg(long)]
        element: String,
        #[command(flatten)]
        common: Common,
    },
    /// The triangular-pillow report.
    Pillow {
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Accepted for compatibility; the report is always produced.
        #[arg(long)]
        report: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run an invariant suite: all, spin, convex, pillow or space.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Tolerance for every upper-bound check.
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
}

/// Reads `arg` as inline JSON when it starts with `{`, otherwise as a path.
fn load<T: DeserializeOwned>(arg: &str) -> Result<T, Error> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg)?
    };
    Ok(serde_json::from_str(&text)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Figure1 { p, samples, common } => {
            let p = p.unwrap_or_else(|| DEFAULT_P_LIST.to_vec());
            let fig = harness::figure1(&p, samples)?;
            emit(common.out.as_deref(), &fig.to_csv())?;
        }
        Command::DefectScan {
            p,
            dim,
            samples,
            common,
        } => {
            let p = p.unwrap_or_else(|| DEFAULT_P_LIST.to_vec());
            let scan = harness::defect_scan(&p, dim, samples, common.seed)?;
            emit(common.out.as_deref(), &scan.to_csv())?;
        }
        Command::Tpmatrix {
            atoms,
            model,
            strict,
            common,
        } => {
            let list: AtomList = load(&atoms)?;
            let desc = match model {
                Some(m) => load::<ModelDescriptor>(&m)?,
                None => list
                    .model
                    .clone()
                    .ok_or_else(|| Error::InvalidParameter("no model given".into()))?,
            };
            let policy = if strict {
                AtomPolicy::Strict
            } else {
                AtomPolicy::Lenient
            };
            let spin = SpinFactor::new(NormModel::from_descriptor(&desc)?).with_policy(policy);
            emit(
                common.out.as_deref(),
                &harness::tpmatrix_csv(&spin, &list.atoms)?,
            )?;
        }
        Command::Convex {
            body,
            samples,
            common,
        } => {
            let body = ConvexBody::from_descriptor(&load::<BodyDescriptor>(&body)?)?;
            emit(
                common.out.as_deref(),
                &harness::convex_sweep_csv(&body, samples)?,
            )?;
        }
        Command::Spectral {
            model,
            element,
            common,
        } => {
            let spin = SpinFactor::new(NormModel::from_descriptor(&load(&model)?)?);
            let a: OUElement = load(&element)?;
            let form = harness::spectral(&spin, &a)?;
            emit(
                common.out.as_deref(),
                &(serde_json::to_string_pretty(&form)? + "\n"),
            )?;
        }
        Command::Pillow { json, common, .. } => {
            let rep = pillow_report();
            let text = if json {
                serde_json::to_string_pretty(&rep)? + "\n"
            } else {
                rep.to_text()
            };
            emit(common.out.as_deref(), &text)?;
        }
        Command::Check {
            suite,
            samples,
            tol,
            common,
        } => {
            let report = harness::run_checks(
                &suite,
                CheckConfig {
                    seed: common.seed,
                    samples,
                    tol,
                },
            )?;
            eprint!("{}", report.summary());
            emit(
                common.out.as_deref(),
                &(serde_json::to_string_pretty(&report)? + "\n"),
            )?;
            return Ok(report.pass);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numeric() { 3 } else { 2 })
        }
    }
}
