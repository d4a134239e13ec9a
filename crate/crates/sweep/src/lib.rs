//! Sweeps, figure data and oracle reports on top of the `dicke-ising` library.

pub mod axis;
pub mod commands;
pub mod config;
pub mod error;
pub mod table;

use std::fs;

pub use axis::{Axis, SizeAxis};
pub use config::{Command, FigureRecipe, Format, PartialConfig, SweepConfig};
pub use error::CliError;
pub use table::{Cell, Table};

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub table: Table,
    /// Failed hard checks; nonzero only for `oracle`.
    pub hard_failures: usize,
}

/// Runs the configured command on a pool of `cfg.threads` workers.
pub fn run(cfg: &SweepConfig) -> Result<RunOutput, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| CliError::validation("threads", e.to_string()))?;
    pool.install(|| {
        let plain = |table| RunOutput {
            table,
            hard_failures: 0,
        };
        match cfg.command {
            Command::IsingSpectrum => commands::ising_spectrum(cfg).map(plain),
            Command::Polaritons => commands::polaritons(cfg).map(plain),
            Command::Saturation => commands::saturation(cfg).map(plain),
            Command::FnCorrection => commands::fn_correction(cfg).map(plain),
            Command::Oracle => commands::oracle(cfg).map(|(table, hard_failures)| RunOutput {
                table,
                hard_failures,
            }),
        }
    })
}

/// Runs, renders and writes to `cfg.out` (stdout when unset). The report is
/// written before a hard-check failure is returned.
pub fn execute(cfg: &SweepConfig) -> Result<(), CliError> {
    let out = run(cfg)?;
    let text = out.table.render(cfg);
    match &cfg.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => print!("{text}"),
    }
    match out.hard_failures {
        0 => Ok(()),
        failed => Err(CliError::OracleFailure { failed }),
    }
}

pub fn read_config(path: &std::path::Path) -> Result<PartialConfig, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    PartialConfig::from_toml(&text)
}
