//! Command line for exact relatively-prime subset counting.
//!
//! Exit codes: 0 on success, 1 on usage or domain errors, 2 when a sweep or
//! verification run found a mismatch.

use std::env;
use std::process;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use relprime::oracle::DEFAULT_ENUMERATION_CAP;

use relprime_cli::run::{
    cmd_check, cmd_invert_demo, cmd_phi, cmd_psi, cmd_psi2, cmd_sweep, cmd_unary, cmd_verify,
    CheckArgs, InvertDemoArgs, PhiArgs, Psi2Args, PsiArgs, Runtime, SweepArgs, UnaryArgs,
    VerifyArgs,
};

#[derive(Debug, Parser)]
#[command(
    name = "relprime",
    version,
    about = "Exact counts of relatively prime subsets of integer intervals",
    long_about = "Counts subsets of [l1,m1] or [l1,m1] u [l2,m2] that are relatively prime to n, \
                  with exact big-integer results evaluated as Mobius divisor sums. Also sweeps \
                  the underlying divisor-sum identities and cross-checks every closed form \
                  against a brute-force enumeration oracle.\n\n\
                  Environment: PHI_ORACLE_CAP overrides the oracle's 22-element domain cap; \
                  PHI_FAULT_FLIP_MU=1 deliberately corrupts the Mobius sign in evaluators and \
                  checkers (self-test hook for the mismatch exit code)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count relatively prime subsets of an interval or a two-interval union
    Phi(PhiArgs),
    /// Count subsets anchored at the interval's lower endpoint
    Psi(PsiArgs),
    /// Count union subsets anchored at both lower endpoints
    Psi2(Psi2Args),
    /// Mobius function of n
    Mobius(UnaryArgs),
    /// Number of divisors of n
    Tau(UnaryArgs),
    /// Liouville function of n
    Lambda(UnaryArgs),
    /// Round-trip multivariable Mobius inversion on seeded random functions
    InvertDemo(InvertDemoArgs),
    /// Check an identity family over a parameter grid
    Sweep(SweepArgs),
    /// Check one identity at one point
    Check(CheckArgs),
    /// Compare every closed form against the enumeration oracle
    Verify(VerifyArgs),
}

fn runtime() -> Result<Runtime, String> {
    let flip_mu = match env::var("PHI_FAULT_FLIP_MU") {
        Ok(v) => v == "1" || v.eq_ignore_ascii_case("true"),
        Err(_) => false,
    };
    let oracle_cap = match env::var("PHI_ORACLE_CAP") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| format!("PHI_ORACLE_CAP must be an integer, got {v:?}"))?,
        Err(_) => DEFAULT_ENUMERATION_CAP,
    };
    Ok(Runtime { flip_mu, oracle_cap })
}

fn main() {
    process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };

    let rt = match runtime() {
        Ok(rt) => rt,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };

    let outcome = match &cli.command {
        Command::Phi(args) => cmd_phi(args, &rt),
        Command::Psi(args) => cmd_psi(args, &rt),
        Command::Psi2(args) => cmd_psi2(args, &rt),
        Command::Mobius(args) => cmd_unary("mobius", args),
        Command::Tau(args) => cmd_unary("tau", args),
        Command::Lambda(args) => cmd_unary("lambda", args),
        Command::InvertDemo(args) => cmd_invert_demo(args),
        Command::Sweep(args) => cmd_sweep(args, &rt),
        Command::Check(args) => cmd_check(args, &rt),
        Command::Verify(args) => cmd_verify(args, &rt),
    };

    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
