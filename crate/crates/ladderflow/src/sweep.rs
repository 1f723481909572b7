//! Random and fixed-angle sweep drivers.
//!
//! Sampling is decoupled from evaluation: all angles are drawn up front from
//! the seeded generator in sample order, then records are evaluated in
//! parallel and collected in index order. Output is therefore byte-identical
//! for a given seed no matter how many worker threads run.

use ladderflow_core::experiments::{angle_grid, evaluate_sample, SweepRecord};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::config::{SweepConfig, SweepMode};
use crate::DriverError;

/// Identifier of the angle-sampling generator recorded in CSV headers:
/// ChaCha12 seeded with the 64-bit seed, angles drawn per sample in
/// φ₁..φ_{n−3} order, each uniform on [0, 2π).
pub const RNG_ID: &str = "chacha12";

/// Draw `samples` random angle tuples and evaluate the outcome-averaged
/// correlations for each. Records are ordered by sample index.
pub fn random_sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>, DriverError> {
    config.validate()?;
    if config.mode != SweepMode::Random {
        return Err(DriverError::Config(String::from("random_sweep requires mode = random")));
    }
    let m = config.n as usize - 3;
    let mut rng = ChaCha12Rng::seed_from_u64(config.seed);
    let tuples: Vec<Vec<f64>> = (0..config.samples)
        .map(|_| (0..m).map(|_| rng.random_range(0.0..core::f64::consts::TAU)).collect())
        .collect();
    evaluate_tuples(config.n, tuples)
}

/// Grid φ_{n−3} over [0, 2π) with φ₁..φ_{n−4} fixed by the preset or the
/// explicit angle list. Records are ordered by grid index.
pub fn fixed_sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>, DriverError> {
    config.validate()?;
    if config.mode != SweepMode::Fixed {
        return Err(DriverError::Config(String::from("fixed_sweep requires mode = fixed")));
    }
    let fixed = config.fixed_angles()?;
    let tuples: Vec<Vec<f64>> = angle_grid(config.grid_points)
        .into_iter()
        .map(|last| {
            let mut angles = fixed.clone();
            angles.push(last);
            angles
        })
        .collect();
    evaluate_tuples(config.n, tuples)
}

fn evaluate_tuples(n: u32, tuples: Vec<Vec<f64>>) -> Result<Vec<SweepRecord>, DriverError> {
    let records: Result<Vec<SweepRecord>, ladderflow_core::Error> = tuples
        .into_par_iter()
        .enumerate()
        .map(|(index, angles)| evaluate_sample(n, index as u64, angles))
        .collect();
    Ok(records?)
}
