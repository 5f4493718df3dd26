//! File formats, tabular output and the `plmc` command line on top of
//! [`plmc_core`].
//!
//! Exit codes: 0 success, 2 usage or precondition failure, 3 the exact solver
//! refused an oversized component, 4 the reduction is infeasible for the
//! requested parameters.

pub mod analyze;
pub mod bench;
pub mod cli;
pub mod commands;
pub mod config;
pub mod format;
pub mod table;
pub mod values;

use std::ffi::OsString;

use clap::{CommandFactory, Parser};

use cli::{Cli, Commands};
use format::FormatError;

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;
pub const EXIT_INFEASIBLE: i32 = 4;

fn core_code(e: &plmc_core::Error) -> i32 {
    match e {
        plmc_core::Error::OracleLimit { .. } => EXIT_ORACLE,
        plmc_core::Error::Infeasible(_) => EXIT_INFEASIBLE,
        _ => EXIT_USAGE,
    }
}

/// Process exit code for a failed command.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<plmc_core::Error>() {
            return core_code(e);
        }
        if let Some(FormatError::Graph(e)) = cause.downcast_ref::<FormatError>() {
            return core_code(e);
        }
    }
    EXIT_USAGE
}

fn dispatch(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Commands::Generate(a) => commands::generate(a),
        Commands::Solve(a) => commands::solve(a),
        Commands::Analyze(a) => analyze::analyze(a.what),
        Commands::Reduce(a) => commands::reduce(a),
        Commands::Bench(a) => bench::bench(a),
    }
}

/// Runs the command line and returns the process exit code.
pub fn run(args: impl IntoIterator<Item = OsString>) -> i32 {
    let argv = match config::merge(&Cli::command(), args.into_iter().collect()) {
        Ok(argv) => argv,
        Err(e) => {
            eprintln!("plmc: {e:#}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("plmc: {e:#}");
            exit_code(&e)
        }
    }
}
