use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ll_core::coulomb::{Spin, ALPHA, ELECTRON_MASS_EV};
use ll_core::verify::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "ll",
    version,
    about = "Levy-Leblond spectra, wavefunctions, scattering and verification"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand. Inputs are always natural units
/// (`m` is the energy unit); `--units` only changes how energies are printed.
#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Nuclear charge
    #[arg(long = "Z", global = true, default_value_t = 1)]
    pub z: u32,
    /// Regularization parameter
    #[arg(long, global = true, default_value_t = 0.0)]
    pub eps: f64,
    /// Fine-structure constant
    #[arg(long, global = true, env = "LL_ALPHA", default_value_t = ALPHA)]
    pub alpha: f64,
    /// Particle mass
    #[arg(long, global = true, default_value_t = 1.0)]
    pub m: f64,
    #[arg(long, global = true, value_enum, default_value_t = Units::Natural)]
    pub units: Units,
    /// Rest energy used for `--units eV`
    #[arg(long = "electron-mass-ev", global = true, default_value_t = ELECTRON_MASS_EV)]
    pub electron_mass_ev: f64,
    /// Output format (default: text for verify, csv otherwise)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to a file instead of stdout
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    Natural,
    #[value(name = "eV", alias = "ev")]
    Ev,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound-state energies for every (n', kappa) up to n_max
    Spectrum {
        #[arg(long = "n-max", default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=10))]
        n_max: u32,
        /// Skip the shooting column
        #[arg(long)]
        no_shooting: bool,
    },
    /// Radial functions of one state, plus the ground-state display data
    Wavefunction {
        #[arg(long, default_value = "1s")]
        state: String,
        #[arg(long, default_value = "up", value_parser = parse_spin)]
        spin: Spin,
        /// Polar angle for the spinor in the header
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        /// Largest radius, in Bohr radii
        #[arg(long = "r-max", default_value_t = 20.0)]
        r_max: f64,
        #[arg(long, default_value_t = 201, value_parser = clap::value_parser!(u32).range(2..))]
        points: u32,
    },
    /// Reflection and transmission off a step or barrier
    #[command(group(ArgGroup::new("profile").args(["step", "barrier"]).required(true)))]
    Scatter {
        #[arg(long)]
        step: bool,
        #[arg(long)]
        barrier: bool,
        /// Barrier width
        #[arg(long, default_value_t = 1.0)]
        width: f64,
        #[arg(long = "V0", default_value_t = 0.5)]
        v0: f64,
        /// Single incident energy; otherwise a sweep
        #[arg(long = "E", conflicts_with_all = ["e_min", "e_max", "e_steps"])]
        e: Option<f64>,
        #[arg(long = "E-min", default_value_t = 0.05)]
        e_min: f64,
        #[arg(long = "E-max", default_value_t = 2.0)]
        e_max: f64,
        #[arg(long = "E-steps", default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
        e_steps: u32,
    },
    /// Run verification suites; exit 1 if any check fails
    Verify {
        /// Suite to run (repeatable; default all)
        #[arg(long = "suite")]
        suites: Vec<Suite>,
        #[arg(long, default_value_t = 0x1e71)]
        seed: u64,
    },
    /// Series against shooting, state by state
    OracleCompare {
        #[arg(long = "n-max", default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=10))]
        n_max: u32,
    },
}

fn parse_spin(s: &str) -> Result<Spin, String> {
    s.parse().map_err(|e: ll_core::Error| e.to_string())
}
