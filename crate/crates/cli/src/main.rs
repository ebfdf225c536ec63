//! `calogero`: command-line access to the rational Calogero-Moser toolkit.
//!
//! Exit status: 0 success, 1 invalid input, 2 numerical failure,
//! 3 verification failure.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "calogero",
    version,
    about = "Spectral coordinates, duality maps and exact dynamics of the rational Calogero-Moser system"
)]
pub struct Cli {
    #[command(flatten)]
    pub numeric: NumericArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct NumericArgs {
    /// Minimum eigenvalue gap, relative to 1 + spectral diameter.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub eig_gap_tol: f64,
    /// Finite-difference step scale.
    #[arg(long, global = true, default_value_t = 1e-5)]
    pub fd_step: f64,
    /// Residual tolerance for exact identities.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub identity_tol: f64,
}

#[derive(Debug, Args)]
pub struct Input {
    /// State file; reads standard input when omitted or `-`.
    pub input: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump the Lax pair of a state (position gauge for (q, p), momentum gauge for (lambda, phi)).
    Lax(Input),
    /// Spectral coordinates lambda, mu, theta and the correction f.
    Spectral(Input),
    /// Map a state to its dual: (q, p) -> (lambda, phi) or back.
    Map(Input),
    /// Evolve a state under the flow of H_k.
    Evolve {
        #[command(flatten)]
        input: Input,
        /// Final time.
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        /// Index of the generating Hamiltonian H_k = tr(L^k)/k.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Number of evenly spaced samples on [0, t]; 1 emits only the final state.
        #[arg(long, default_value_t = 1)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Asymptotic momenta and offsets of the H_2 flow.
    Scatter {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1e4)]
        t_large: f64,
    },
    /// Check the canonical bracket relations on random points.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Particle number.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Couplings are drawn uniformly from [-g_range, g_range].
        #[arg(long, default_value_t = 3.0)]
        g_range: f64,
        /// Minimum gap between neighbouring positions.
        #[arg(long, default_value_t = 0.5)]
        min_gap: f64,
        #[arg(long, value_enum, default_value_t = Mode::Extrapolated)]
        mode: Mode,
        /// Largest admissible deviation from the canonical pattern.
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Fast,
    Extrapolated,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(&cli) {
        Ok(output) => {
            println!("{}", output.text);
            ExitCode::from(output.status)
        }
        Err(e) => {
            eprintln!("calogero: {e}");
            ExitCode::from(e.status())
        }
    }
}
