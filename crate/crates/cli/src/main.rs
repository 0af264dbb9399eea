//! `k3mat`: searches, parametrizations and verifications on the command line.
//!
//! Exit codes: 0 when every certificate passes, 1 on a failed certificate or
//! an internal error, 2 on bad arguments.

mod commands;
mod output;
mod suite;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use k3mat::exactnum::BigRational;

use output::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "k3mat", version, about = "Integral zero-diagonal 3x3 matrices with integral eigenvalues")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Worker threads for search and enumeration (defaults to all cores).
    #[arg(long, global = true, env = "K3MAT_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Nontrivial triples 0 < a < b < c <= max with integral eigenvalues.
    Search {
        #[arg(long)]
        max: u32,
    },
    /// The low-degree family, optionally evaluated at rational t.
    Param {
        #[arg(long = "t", allow_hyphen_values = true)]
        t: Vec<BigRational>,
    },
    /// The multiple nP of the section P.
    Mult {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Also print the corresponding family of matrices.
        #[arg(long)]
        emit_param: bool,
    },
    /// Singular fibres from Tate's algorithm.
    Fibers,
    /// Height pairing of P and Q.
    Height,
    /// 2-descent and saturation steps.
    Descent,
    /// Reduced even positive binary forms of a determinant.
    LatticeForms {
        #[arg(long, default_value_t = 48)]
        det: i64,
    },
    /// Neron-Severi lattice checks.
    Ns {
        #[command(subcommand)]
        action: NsAction,
    },
    /// Orbits of the symmetry group.
    Orbits,
    /// Every claim.
    VerifyAll,
}

#[derive(Subcommand, Debug)]
enum NsAction {
    /// Determinant, signature, block decomposition and H^2.
    Verify,
    /// Count classes of given degree and arithmetic genus.
    CountClasses {
        #[arg(long, default_value_t = 2)]
        degree: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        genus: i64,
        /// Print every class.
        #[arg(long)]
        list: bool,
    },
    /// The 441 classes built from conics and exceptional curves.
    Catalogue,
}

fn run(cli: &Cli) -> k3mat::Result<Report> {
    use commands::*;
    Ok(match &cli.command {
        Command::Search { max } => search_cmd(*max),
        Command::Param { t } => param_cmd(t)?,
        Command::Mult { n, emit_param } => mult_cmd(*n, *emit_param)?,
        Command::Fibers => fibers_cmd()?,
        Command::Height => height_cmd()?,
        Command::Descent => descent_cmd()?,
        Command::LatticeForms { det } => forms_cmd(*det)?,
        Command::Ns { action: NsAction::Verify } => ns_verify_cmd()?,
        Command::Ns { action: NsAction::CountClasses { degree, genus, list } } => ns_count_cmd(*degree, *genus, *list)?,
        Command::Ns { action: NsAction::Catalogue } => ns_catalogue_cmd()?,
        Command::Orbits => orbits_cmd(),
        Command::VerifyAll => verify_all_cmd(),
    })
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Mult { n: 0, .. } => return usage_error("--n must be nonzero"),
        Command::Ns { action: NsAction::CountClasses { degree, .. } } if degree < 0 => {
            return usage_error("--degree must be nonnegative")
        }
        _ => {}
    }
    if let Some(w) = cli.workers {
        if w == 0 {
            return usage_error("--workers must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(w).build_global().expect("global pool set once");
    }
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.render(cli.format).as_bytes());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
