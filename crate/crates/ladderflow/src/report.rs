//! Trend summaries over the fixed-angle sweeps: the per-size maxima of the
//! averaged discords and concurrence, for human inspection.

use std::fmt;

use ladderflow_core::experiments::Preset;

use crate::config::{SweepConfig, SweepMode};
use crate::sweep::fixed_sweep;
use crate::DriverError;

/// Maxima over the φ_{n−3} grid for one ladder size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrendRow {
    pub n: u32,
    pub max_d_meas_last: f64,
    pub max_d_meas_secondlast: f64,
    pub max_concurrence: f64,
}

/// The preset's trend rows across ladder sizes.
#[derive(Debug, Clone, PartialEq)]
pub struct TrendReport {
    pub preset: Preset,
    pub grid_points: usize,
    pub rows: Vec<TrendRow>,
}

/// Run fixed sweeps for each ladder size (default 4, 6, 8, 10) and collect
/// the per-size maxima.
pub fn trend_report(
    preset: Preset,
    grid_points: usize,
    sizes: &[u32],
) -> Result<TrendReport, DriverError> {
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let config = SweepConfig {
            n,
            mode: SweepMode::Fixed,
            samples: 1,
            grid_points,
            preset: Some(preset.name().to_string()),
            angles: None,
            seed: 0,
            output_path: None,
        };
        let records = fixed_sweep(&config)?;
        let fold = |pick: fn(&ladderflow_core::experiments::SweepRecord) -> f64| {
            records.iter().map(pick).fold(f64::NEG_INFINITY, f64::max)
        };
        rows.push(TrendRow {
            n,
            max_d_meas_last: fold(|r| r.d_meas_last),
            max_d_meas_secondlast: fold(|r| r.d_meas_secondlast),
            max_concurrence: fold(|r| r.concurrence),
        });
    }
    Ok(TrendReport { preset, grid_points, rows })
}

impl fmt::Display for TrendReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "preset {} ({} grid points per size)",
            self.preset.name(),
            self.grid_points
        )?;
        writeln!(
            f,
            "{:>4}  {:>16}  {:>20}  {:>16}",
            "n", "max D_meas_last", "max D_meas_secondlast", "max concurrence"
        )?;
        for row in &self.rows {
            writeln!(
                f,
                "{:>4}  {:>16.6}  {:>20.6}  {:>16.6}",
                row.n, row.max_d_meas_last, row.max_d_meas_secondlast, row.max_concurrence
            )?;
        }
        Ok(())
    }
}
