//! `dsop`: evaluate and verify Dunkl-supersymmetric orthogonal polynomials.
//!
//! Exit status is 0 when every check passes, 1 when a verification fails
//! (the report is still written) and 2 for usage or parameter errors.

mod commands;
mod report;
mod selector;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dunkl_susy::potentials::PotentialSpec;
use dunkl_susy::quadrature::Normalization;

use report::{Format, Output};
use selector::{Params, Selector};

#[derive(Parser, Debug)]
#[command(name = "dsop", version, about = "Dunkl-SUSY orthogonal polynomials: evaluation and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Family or potential selector (see `dsop list`).
    #[arg(long, visible_alias = "spec")]
    family: Option<String>,
    #[command(flatten)]
    params: Params,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Norm {
    Monic,
    Orthonormal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate Q_n, a classical polynomial, or a potential's wavefunction.
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// One or more points, comma separated.
        #[arg(long, required = true, value_delimiter = ',', allow_negative_numbers = true)]
        x: Vec<f64>,
    },
    /// Monomial coefficients, lowest power first.
    Coeffs {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Gram matrix of Q_0, Q_1, Q_-1, ..., Q_nmax, Q_-nmax.
    Gram {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        /// Gauss rule size (default and minimum 2*nmax+1).
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = Norm::Monic)]
        normalization: Norm,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Check Y Q_n = lambda_n Q_n (polynomial families exactly, potentials on a grid).
    Eigencheck {
        #[command(flatten)]
        common: Common,
        /// Check a single index instead of -nmax..nmax.
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// Defaults to 1e-9 for polynomial families, 1e-7 for grid checks.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Shape invariance, energies, intertwining and C̃_n for potentials (all six without --family).
    Potentials {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        /// Shape-invariance residual tolerance.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Intertwining ratio spread tolerance.
        #[arg(long, default_value_t = 1e-7)]
        tol_ratio: f64,
    },
    /// Compare the block recurrence with the direct construction of Q_{±n}.
    RecurrenceCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 20)]
        nmax: usize,
        #[arg(long, default_value_t = 1e-11)]
        tol: f64,
    },
    /// List the accepted family and potential selectors.
    List {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn selector(common: &Common) -> dunkl_susy::Result<Selector> {
    let name = common
        .family
        .as_deref()
        .ok_or_else(|| dunkl_susy::Error::Domain("--family is required".into()))?;
    Selector::parse(name, &common.params)
}

fn run(cli: Cli) -> Result<(Output, Format, Option<PathBuf>), String> {
    let err = |e: dunkl_susy::Error| e.to_string();
    let (out, common) = match cli.command {
        Command::Eval { common, n, x } => (commands::eval(&selector(&common).map_err(err)?, n, &x), common),
        Command::Coeffs { common, n } => (commands::coeffs(&selector(&common).map_err(err)?, n), common),
        Command::Gram {
            common,
            nmax,
            order,
            normalization,
            tol,
        } => {
            let norm = match normalization {
                Norm::Monic => Normalization::Monic,
                Norm::Orthonormal => Normalization::Orthonormal,
            };
            (commands::gram(&selector(&common).map_err(err)?, nmax, order, norm, tol), common)
        }
        Command::Eigencheck { common, n, nmax, tol } => {
            (commands::eigen(&selector(&common).map_err(err)?, n, nmax, tol), common)
        }
        Command::Potentials {
            common,
            nmax,
            tol,
            tol_ratio,
        } => {
            let specs = match common.family {
                None => PotentialSpec::catalog(),
                Some(_) => match selector(&common).map_err(err)? {
                    Selector::Potential(spec) => vec![spec],
                    other => return Err(format!("{} is not a potential", other.name())),
                },
            };
            let tols = commands::PotentialTols {
                shape: tol,
                ratio: tol_ratio,
            };
            (commands::potentials(&specs, nmax, &tols), common)
        }
        Command::RecurrenceCheck { common, nmax, tol } => {
            (commands::recurrence(&selector(&common).map_err(err)?, nmax, tol), common)
        }
        Command::List { format, out } => return Ok((commands::list(), format, out)),
    };
    Ok((out.map_err(err)?, common.format, common.out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, format, path) = match run(cli) {
        Ok(v) => v,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = out.render(format);
    match &path {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &text) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(2);
            }
            if let Some(s) = &out.summary {
                println!("{s}");
            }
        }
        None => {
            print!("{text}");
            if format != Format::Table {
                if let Some(s) = &out.summary {
                    eprintln!("{s}");
                }
            }
        }
    }
    if out.report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
