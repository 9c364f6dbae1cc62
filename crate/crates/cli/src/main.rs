//! Command-line surface: game-file ingestion, equilibrium solving,
//! regularity checks, all-priors BNE verification, and the bundled worked
//! examples. Exit codes: 0 certified/valid, 1 refuted or invalid, 2 input
//! error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use multigame_cli::commands::{
    cmd_check_regularity, cmd_example, cmd_solve, cmd_verify_bne, CliError, ExampleArgs,
};
use multigame_cli::report::{render_human, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Parser)]
#[command(
    name = "multigame",
    version,
    about = "Exact equilibrium toolkit for Bayesian games and multi-games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate Nash equilibria of a normal-form game file
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Print elapsed wall time to stderr
        #[arg(long)]
        timing: bool,
    },
    /// Search for a vertex type-regularity witness and verify it on a grid
    CheckRegularity {
        file: PathBuf,
        /// Barycentric grid denominator for the verification pass
        #[arg(long, default_value_t = 10)]
        grid: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        #[arg(long)]
        timing: bool,
    },
    /// Audit a strategy map: local Nash everywhere vs BNE under many priors
    VerifyBne {
        game: PathBuf,
        strategy: PathBuf,
        /// Number of random priors to sample
        #[arg(long, default_value_t = 64)]
        priors: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        #[arg(long)]
        timing: bool,
    },
    /// Run a bundled worked example: pd, trust, markets, or coordination
    Example {
        name: String,
        /// trust: conditional mass on the selfish receiver type
        #[arg(long)]
        belief: Option<String>,
        /// pd: six comma-separated rationals t,r,p,s,y,z
        #[arg(long)]
        params: Option<String>,
        /// pd, trust: a type value as "p/q"
        #[arg(long)]
        theta1: Option<String>,
        /// pd: the other agent's type value as "p/q"
        #[arg(long)]
        theta2: Option<String>,
        #[arg(long, default_value_t = 10)]
        grid: u32,
        #[arg(long, default_value_t = 64)]
        priors: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// trust: grid refinement; sender sends multiples of 1/steps
        #[arg(long, default_value_t = 1)]
        steps: u32,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        #[arg(long)]
        timing: bool,
    },
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Human => print!("{}", render_human(report)),
        Format::Structured => {
            println!(
                "{}",
                serde_json::to_string_pretty(report).expect("serializable report")
            );
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (result, format, timing) = match cli.command {
        Command::Solve { file, format, timing } => (cmd_solve(&file), format, timing),
        Command::CheckRegularity {
            file,
            grid,
            seed,
            format,
            timing,
        } => (cmd_check_regularity(&file, grid, seed), format, timing),
        Command::VerifyBne {
            game,
            strategy,
            priors,
            seed,
            format,
            timing,
        } => (cmd_verify_bne(&game, &strategy, priors, seed), format, timing),
        Command::Example {
            name,
            belief,
            params,
            theta1,
            theta2,
            grid,
            priors,
            seed,
            steps,
            format,
            timing,
        } => {
            let args = ExampleArgs {
                name,
                belief,
                params,
                theta1,
                theta2,
                grid,
                priors,
                seed,
                steps,
            };
            (cmd_example(&args), format, timing)
        }
    };
    let code = match result {
        Ok(report) => {
            emit(&report, format);
            report.status.exit_code() as u8
        }
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            2
        }
    };
    if timing {
        eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    }
    ExitCode::from(code)
}
