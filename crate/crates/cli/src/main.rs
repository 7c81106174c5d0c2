mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{ScatterArgs, WavefunctionArgs};
use output::CliError;

fn run(cli: Cli) -> Result<(), CliError> {
    let c = &cli.common;
    match cli.command {
        Command::Spectrum { n_max, no_shooting } => commands::spectrum(c, n_max, !no_shooting),
        Command::Wavefunction {
            state,
            spin,
            theta,
            phi,
            r_max,
            points,
        } => commands::wavefunction(
            c,
            &WavefunctionArgs {
                state: &state,
                spin,
                theta,
                phi,
                r_max,
                points,
            },
        ),
        Command::Scatter {
            step: _,
            barrier,
            width,
            v0,
            e,
            e_min,
            e_max,
            e_steps,
        } => {
            let energies = match e {
                Some(e) => vec![e],
                None if e_steps == 1 => vec![e_min],
                None => (0..e_steps)
                    .map(|i| e_min + (e_max - e_min) * f64::from(i) / f64::from(e_steps - 1))
                    .collect(),
            };
            commands::scatter(
                c,
                &ScatterArgs {
                    barrier: barrier.then_some(width),
                    v0,
                    energies,
                },
            )
        }
        Command::Verify { suites, seed } => commands::verify(c, &suites, seed),
        Command::OracleCompare { n_max } => commands::oracle_compare(c, n_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ll: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
