//! Sweep configuration, shared between command-line flags and the optional
//! JSON config file. Flags always override file values.

use std::path::PathBuf;

use serde::Deserialize;

use crate::DriverError;

/// What a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    /// Draw all n−3 angles uniformly from [0, 2π) per sample.
    Random,
    /// Keep φ₁..φ_{n−4} fixed and grid φ_{n−3} over [0, 2π).
    Fixed,
    /// A single explicit configuration.
    Single,
}

impl SweepMode {
    pub fn name(self) -> &'static str {
        match self {
            SweepMode::Random => "random",
            SweepMode::Fixed => "fixed",
            SweepMode::Single => "single",
        }
    }
}

/// An angle given either in radians (number) or as a multiple of π with a
/// `pi` suffix (string), matching the tabulated values like `0.37pi`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum AngleArg {
    Radians(f64),
    Text(String),
}

impl AngleArg {
    pub fn to_radians(&self) -> Result<f64, DriverError> {
        match self {
            AngleArg::Radians(x) => {
                if x.is_finite() {
                    Ok(*x)
                } else {
                    Err(DriverError::Config(format!("angle {x} is not finite")))
                }
            }
            AngleArg::Text(s) => parse_angle(s),
        }
    }
}

/// Parse `0.37pi` (multiples of π) or a plain radian value.
pub fn parse_angle(text: &str) -> Result<f64, DriverError> {
    let trimmed = text.trim();
    let (body, scale) = match trimmed.strip_suffix("pi") {
        Some(body) => (body.trim_end(), core::f64::consts::PI),
        None => (trimmed, 1.0),
    };
    let value: f64 = body
        .parse()
        .map_err(|_| DriverError::Config(format!("cannot parse angle '{text}'")))?;
    if !value.is_finite() {
        return Err(DriverError::Config(format!("angle '{text}' is not finite")));
    }
    Ok(value * scale)
}

/// One experiment configuration. The JSON config file mirrors these keys
/// one-to-one; unknown keys are rejected.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub n: u32,
    pub mode: SweepMode,
    /// Sample count for random mode.
    #[serde(default = "default_samples")]
    pub samples: usize,
    /// Grid resolution over φ_{n−3} for fixed mode.
    #[serde(default = "default_grid_points")]
    pub grid_points: usize,
    /// Named preset (`example1` / `example2`) supplying φ₁..φ_{n−4}.
    #[serde(default)]
    pub preset: Option<String>,
    /// Explicit fixed-angle list; overrides `preset` when both are given.
    #[serde(default)]
    pub angles: Option<Vec<AngleArg>>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub output_path: Option<PathBuf>,
}

fn default_samples() -> usize {
    500
}

fn default_grid_points() -> usize {
    256
}

impl SweepConfig {
    /// Validate the parts every mode shares.
    pub fn validate(&self) -> Result<(), DriverError> {
        if self.n % 2 != 0 || self.n < 4 {
            return Err(DriverError::Config(String::from("n must be even and ≥ 4")));
        }
        match self.mode {
            SweepMode::Random => {
                if self.samples == 0 {
                    return Err(DriverError::Config(String::from("samples must be ≥ 1")));
                }
            }
            SweepMode::Fixed => {
                if self.grid_points == 0 {
                    return Err(DriverError::Config(String::from("grid must be ≥ 1")));
                }
            }
            SweepMode::Single => {}
        }
        Ok(())
    }

    /// Resolve the fixed angles φ₁..φ_{n−4} for fixed mode, from the explicit
    /// list or the named preset. Reports length mismatches.
    pub fn fixed_angles(&self) -> Result<Vec<f64>, DriverError> {
        let want = self.n as usize - 4;
        if let Some(args) = &self.angles {
            let angles: Vec<f64> =
                args.iter().map(|a| a.to_radians()).collect::<Result<_, _>>()?;
            if angles.len() != want {
                return Err(DriverError::Config(format!(
                    "fixed mode at n = {} needs {} fixed angles, got {}",
                    self.n,
                    want,
                    angles.len()
                )));
            }
            return Ok(angles);
        }
        if let Some(name) = &self.preset {
            let preset = ladderflow_core::experiments::Preset::parse(name)
                .ok_or_else(|| DriverError::Config(format!("unknown preset '{name}'")))?;
            return Ok(preset.angles(self.n)?);
        }
        if want == 0 {
            return Ok(Vec::new());
        }
        Err(DriverError::Config(String::from(
            "fixed mode needs --preset or an explicit angle list",
        )))
    }

    /// Load a config file and overlay it under explicitly-set flags.
    pub fn from_json(text: &str) -> Result<Self, DriverError> {
        serde_json::from_str(text)
            .map_err(|e| DriverError::Config(format!("config file: {e}")))
    }
}
