//! Command-line schema. The parsed configuration round-trips through JSON,
//! so runs can be archived and replayed.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug, Clone, PartialEq, Serialize, Deserialize)]
#[command(
    name = "qerasure",
    version,
    about = "Capacity curves, Monte Carlo tables and verification reports for quantum erasure-type channels",
    after_help = "Exit codes: 0 success, 1 failed verification checks, 2 usage error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format for tabular commands
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output path; stdout when absent. Relative paths resolve against
    /// QERASURE_OUT_DIR when that variable is set.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Closed-form capacity curves (Q, Q2, C per grid point)
    Curves {
        /// Channel family to sweep
        #[arg(long, value_enum)]
        family: Family,
        /// Inclusive grid start:stop:steps, e.g. 0:1:101
        #[arg(long, value_parser = parse_grid)]
        grid: Grid,
    },
    /// Maximize single-use coherent information over the Bloch ball
    CoherentInfo {
        #[arg(long, value_enum)]
        channel: ChannelKind,
        #[arg(long)]
        eps: f64,
        /// Value tolerance of the maximizer refinement
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Holevo chi of the uniform z-basis ensemble, with the capacity
    /// reference value
    Chi {
        #[arg(long, value_enum)]
        channel: ChannelKind,
        #[arg(long)]
        eps: f64,
    },
    /// Monte Carlo failure rates of random stabilizer codes against
    /// erasures at known locations
    HashMc {
        /// Block length (qubits), at most 2048
        #[arg(long)]
        n: usize,
        #[arg(long)]
        eps: f64,
        /// Code rates k/n, comma separated
        #[arg(long, value_delimiter = ',')]
        rates: Vec<f64>,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// Erase exactly floor(n*eps) qubits instead of i.i.d. Bernoulli
        #[arg(long, default_value_t = false)]
        fixed_weight: bool,
    },
    /// Share entangled pairs through the erasure channel and teleport over
    /// the survivors
    Teleport {
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        pairs: usize,
        #[arg(long)]
        seed: u64,
        /// How many random states to teleport over surviving pairs
        #[arg(long, default_value_t = 100)]
        states: usize,
    },
    /// Verify the fair-coin splitting: each receiver's marginal must equal
    /// the erasure channel it simulates
    SplitCheck {
        #[arg(long)]
        eps: f64,
        /// Phase-erasure probability; 0 selects the plain splitting
        #[arg(long, default_value_t = 0.0)]
        delta: f64,
    },
    /// Run the built-in verification suite and emit a JSON report
    Verify {
        #[arg(long, hide = true, default_value_t = 0.0)]
        perturb_eps: f64,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Qec,
    MixedEqual,
    Pec,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChannelKind {
    Qec,
    Pec,
    Depolarizing,
}

/// Inclusive linear grid specification.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        qerasure::capacities::linear_grid(self.start, self.stop, self.steps)
    }
}

pub fn parse_grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err("expected start:stop:steps".into());
    }
    let start: f64 = parts[0].parse().map_err(|e| format!("bad start: {e}"))?;
    let stop: f64 = parts[1].parse().map_err(|e| format!("bad stop: {e}"))?;
    let steps: usize = parts[2].parse().map_err(|e| format!("bad steps: {e}"))?;
    if !(0.0..=1.0).contains(&start) || !(0.0..=1.0).contains(&stop) || start > stop {
        return Err("grid must satisfy 0 <= start <= stop <= 1".into());
    }
    if steps == 0 {
        return Err("steps must be at least 1".into());
    }
    if steps == 1 && start != stop {
        return Err("a single-point grid needs start == stop".into());
    }
    Ok(Grid { start, stop, steps })
}
