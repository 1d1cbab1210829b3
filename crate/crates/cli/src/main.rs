//! Command-line surface for the xygibbs library.
//!
//! Exit codes: 0 success (and above threshold for `vqa`), 1 completed below
//! threshold, 2 usage or input error, 3 optimization failure, 4 resource
//! caps exceeded.

mod commands;
mod output;

use clap::{ArgAction, Parser, Subcommand};
use xygibbs::exactsolver::Limits;
use xygibbs::Error;

#[derive(Parser)]
#[command(
    name = "xygibbs",
    version,
    about = "Exact solver, loading-circuit diagnostics and variational Gibbs-state preparation for the spin-1/2 XY chain",
    disable_help_flag = true
)]
struct Cli {
    #[arg(long = "help", action = ArgAction::Help, help = "Print help", global = true)]
    help: Option<bool>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print both parity-sector spectra with the dense cross-check residual
    Spectrum(commands::spectrum::SpectrumArgs),
    /// Closed-form degeneracy profile of an n-fermion sector
    Degeneracy(commands::degeneracy::DegeneracyArgs),
    /// Loading angles of a distribution or of an exact thermal distribution
    GrAngles(commands::gr_angles::GrAnglesArgs),
    /// Exact Gibbs state: probabilities, partition function, free energy
    GibbsExact(commands::gibbs::GibbsArgs),
    /// One variational Gibbs-preparation run
    Vqa(commands::vqa::VqaArgs),
    /// Grid sweep of variational runs over (beta, gamma, h)
    Sweep(commands::sweep::SweepArgs),
}

/// Size caps, overridable through the environment.
fn limits_from_env() -> Result<Limits, String> {
    let mut limits = Limits::default();
    let read = |name: &str| -> Result<Option<usize>, String> {
        match std::env::var(name) {
            Ok(v) => v
                .parse::<usize>()
                .map(Some)
                .map_err(|_| format!("{name} must be a non-negative integer, got {v:?}")),
            Err(_) => Ok(None),
        }
    };
    if let Some(v) = read("XYGIBBS_ANALYTIC_CAP")? {
        limits.analytic_sites = v;
    }
    if let Some(v) = read("XYGIBBS_DENSE_CAP")? {
        limits.dense_sites = v;
    }
    if let Some(v) = read("XYGIBBS_SIM_CAP")? {
        limits.sim_qubits = v;
    }
    Ok(limits)
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::ResourceLimit { .. } => 4,
        Error::OptimizationFailed(_) => 3,
        _ => 2,
    }
}

fn main() {
    let cli = Cli::parse();
    let limits = match limits_from_env() {
        Ok(l) => l,
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    };
    let outcome = match cli.command {
        Command::Spectrum(args) => commands::spectrum::run(args, &limits),
        Command::Degeneracy(args) => commands::degeneracy::run(args),
        Command::GrAngles(args) => commands::gr_angles::run(args, &limits),
        Command::GibbsExact(args) => commands::gibbs::run(args, &limits),
        Command::Vqa(args) => commands::vqa::run(args, &limits),
        Command::Sweep(args) => commands::sweep::run(args, &limits),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code_for(&err));
        }
    }
}
