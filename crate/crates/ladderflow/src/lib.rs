//! Sweep drivers, CSV serialization, and trend summaries on top of
//! `ladderflow-core`.

pub mod config;
pub mod csv;
pub mod report;
pub mod sweep;

pub use config::{AngleArg, SweepConfig, SweepMode};
pub use report::{trend_report, TrendReport, TrendRow};
pub use sweep::{fixed_sweep, random_sweep, RNG_ID};

/// Errors surfaced by the drivers and the CLI.
#[derive(Debug, thiserror::Error)]
pub enum DriverError {
    #[error(transparent)]
    Core(#[from] ladderflow_core::Error),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed CSV: {0}")]
    Csv(String),
}

impl DriverError {
    /// The process exit code this error maps to: 2 for numerical failures,
    /// 1 for everything user-correctable.
    pub fn exit_code(&self) -> u8 {
        match self {
            DriverError::Core(ladderflow_core::Error::NumericalFailure(_)) => 2,
            _ => 1,
        }
    }
}
