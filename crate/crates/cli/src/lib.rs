//! Command-line front end: `wem rank`, `wem robustness` and `wem sir-eval`.
//!
//! Every option can also be set through a `WEM_*` environment variable; an
//! explicit flag wins over the environment, which wins over the default.

pub mod commands;
pub mod config;

use std::ffi::OsString;

use clap::Parser;

pub use commands::{cmd_rank, cmd_robustness, cmd_sir_eval, load_graph, CorrelationReport, LoadedGraph, ResultTable};
pub use config::{Cli, CliError, Command, RunConfig};

fn execute(command: &Command) -> Result<(), CliError> {
    match command {
        Command::Rank(common) => {
            let config = RunConfig::from_args(common, None)?;
            for path in with_threads(config.threads, || cmd_rank(&config))? {
                println!("{}", path.display());
            }
        }
        Command::Robustness(common) => {
            let config = RunConfig::from_args(common, None)?;
            let table = with_threads(config.threads, || cmd_robustness(&config))?;
            print!("{}", table.render(false));
        }
        Command::SirEval { common, sir } => {
            let config = RunConfig::from_args(common, Some(sir))?;
            let reports = with_threads(config.threads, || cmd_sir_eval(&config))?;
            for report in reports {
                for ((name, _), beta) in report.table.rows.iter().zip(&report.betas) {
                    println!("{name}: beta = {beta}");
                }
                println!("{}", commands::variant_name(report.variant));
                print!("{}", report.table.render(true));
            }
        }
    }
    Ok(())
}

fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> Result<T, CliError> + Send) -> Result<T, CliError> {
    if threads == 0 {
        return f();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {threads} worker threads: {e}")))?;
    pool.install(f)
}

/// Parses `args` (program name first), runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
