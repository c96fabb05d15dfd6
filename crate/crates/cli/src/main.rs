//! Command-line front end: load game tables, run the pipelines and
//! analyses, emit deterministic reports.
//!
//! Exit status: 0 on success, 1 when any reported check fails, 2 on input
//! errors (bad flags, malformed table files, out-of-range parameters).

mod commands;
mod report;
mod table;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{ChannelMode, Ctx, InitialArgs, TacticArgs};
use report::Format;
use table::TableArgs;

#[derive(Parser)]
#[command(
    name = "qbos",
    version,
    about = "Exact simulator and equilibrium analyzer for quantized 2x2 games",
    after_help = "Angles are radians; probabilities are decimals in [0, 1]."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    table: TableArgs,

    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Seed for every randomized component, echoed in the report
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Classical equilibria of the table plus a uniqueness analysis
    ClassicalEq {
        /// Grid resolution per axis for the equilibrium scan
        #[arg(long, default_value_t = 101)]
        grid: usize,
        /// Equilibrium slack in payoff units
        #[arg(long, default_value_t = 1e-6)]
        eps: f64,
    },
    /// Distribution and payoffs of one restricted (flip-probability) play
    MwPayoff {
        /// Player 1's spin-flip probability
        #[arg(long)]
        p: f64,
        /// Player 2's spin-flip probability
        #[arg(long)]
        q: f64,
        #[command(flatten)]
        initial: InitialArgs,
        /// Also sample this many outcomes (demonstration only)
        #[arg(long)]
        shots: Option<u64>,
    },
    /// Equilibria of the restricted quantum game plus a uniqueness analysis
    MwEq {
        #[command(flatten)]
        initial: InitialArgs,
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long, default_value_t = 1e-6)]
        eps: f64,
    },
    /// One play of the gate-based pipeline with unitary tactics
    Eisert {
        /// Entangling angle in radians, 0 to pi/2
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
        gamma_e: f64,
        #[command(flatten)]
        tactics: TacticArgs,
        /// Also sample this many outcomes (demonstration only)
        #[arg(long)]
        shots: Option<u64>,
    },
    /// Compare the two pipelines on the same inputs
    Bridge {
        /// Entangling angle in radians, 0 to pi/2
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
        gamma_e: f64,
        #[command(flatten)]
        tactics: TacticArgs,
    },
    /// Verify the conjugate-response identity on Haar-random tactics
    ConjugateCheck {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Phase-equality tolerance on the overlap
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Maximize player 1's payoff over both players' SU(2) tactics
    UnitaryMax {
        #[command(flatten)]
        initial: InitialArgs,
        #[arg(long, default_value_t = 12)]
        restarts: usize,
        #[arg(long, default_value_t = 200)]
        iters: usize,
    },
    /// Maximize player 1's payoff over channel tactics
    ChannelMax {
        #[command(flatten)]
        initial: InitialArgs,
        #[arg(long, value_enum, default_value_t = ChannelMode::Demo)]
        mode: ChannelMode,
        #[arg(long, default_value_t = 12)]
        restarts: usize,
        #[arg(long, default_value_t = 200)]
        iters: usize,
    },
    /// Run every analysis and print one pass/fail check per claim
    Suite {
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long, default_value_t = 1e-6)]
        eps: f64,
        #[arg(long, default_value_t = 12)]
        restarts: usize,
        #[arg(long, default_value_t = 200)]
        iters: usize,
        /// Randomized cases per structural invariant and conjugate samples
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let resolved = cli.table.resolve()?;
    let ctx = Ctx {
        table_echo: cli.table.echo(&resolved),
        table: resolved.table,
        format: match cli.format {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Table => "table",
        },
        seed: cli.seed,
    };

    let report = match &cli.command {
        Command::ClassicalEq { grid, eps } => commands::classical_eq(&ctx, *grid, *eps)?,
        Command::MwPayoff { p, q, initial, shots } => {
            commands::mw_payoff(&ctx, *p, *q, initial, *shots)?
        }
        Command::MwEq { initial, grid, eps } => commands::mw_eq(&ctx, initial, *grid, *eps)?,
        Command::Eisert { gamma_e, tactics, shots } => {
            commands::eisert(&ctx, *gamma_e, tactics, *shots)?
        }
        Command::Bridge { gamma_e, tactics } => commands::bridge(&ctx, *gamma_e, tactics)?,
        Command::ConjugateCheck { samples, tol } => {
            commands::conjugate_check(&ctx, *samples, *tol)?
        }
        Command::UnitaryMax { initial, restarts, iters } => {
            commands::unitary_max(&ctx, initial, *restarts, *iters)?
        }
        Command::ChannelMax { initial, mode, restarts, iters } => {
            commands::channel_max(&ctx, initial, *mode, *restarts, *iters)?
        }
        Command::Suite { grid, eps, restarts, iters, samples } => {
            commands::suite(&ctx, *grid, *eps, *restarts, *iters, *samples)?
        }
    };

    print!("{}", report.render(cli.format));
    Ok(!report.any_failed())
}
