//! Outcome-branch enumeration, outcome-averaged correlation measures, the
//! closed-form four-qubit output state, and the fixed-angle preset tables.
//!
//! An n-qubit ladder with measurements on qubits 1..n−3 has 2^(n−3) outcome
//! branches. [`outcome_averaged_correlations`] enumerates them in lexical
//! outcome order (deterministic summation), weights each branch by its
//! probability, and averages both discords and the concurrence of the last
//! rung. Branch probabilities are uniform for ladder clusters, but the
//! weighting stays correct if the model is ever extended.

use alloc::{format, string::String, vec, vec::Vec};

use num_complex::Complex64;
use num_traits::Float;

use crate::cluster::{measurement_cascade, prepare_cluster, LadderGraph};
use crate::correl::{concurrence, discord, Subsystem};
use crate::linalg::CMatrix;
use crate::qstate::{DensityMatrix, MeasurementSpec};
use crate::{Error, Result};

/// Outcome-averaged correlations of the last rung of the ladder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutcomeAverages {
    /// D_{n−1, n̄}: discord with the measurement on the last qubit.
    pub d_meas_last: f64,
    /// D_{\overline{n−1}, n}: discord with the measurement on the
    /// second-to-last qubit.
    pub d_meas_secondlast: f64,
    /// Outcome-averaged concurrence of the last two qubits.
    pub concurrence: f64,
    /// Branches that contributed (2^(n−3) minus skipped zero-probability
    /// branches).
    pub branch_count: u32,
}

/// One row of a sweep: the sampled angles with their averaged correlations.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub index: u64,
    /// The n−3 measurement angles φ₁..φ_{n−3} in radians.
    pub angles: Vec<f64>,
    pub d_meas_last: f64,
    pub d_meas_secondlast: f64,
    pub concurrence: f64,
    pub branch_count: u32,
}

/// Enumerate all outcome branches of the cascade on qubits 1..n−3 at the
/// given angles and average both discords and the concurrence of qubits
/// {n−1, n}, weighted by branch probability.
pub fn outcome_averaged_correlations(n: u32, angles: &[f64]) -> Result<OutcomeAverages> {
    let graph = LadderGraph::new(n)?;
    let m = (n - 3) as usize;
    if angles.len() != m {
        return Err(Error::InvalidInput(format!(
            "an {n}-qubit ladder takes {m} measurement angles, got {}",
            angles.len()
        )));
    }
    if angles.iter().any(|a| !a.is_finite()) {
        return Err(Error::InvalidInput(String::from("measurement angles must be finite")));
    }
    let cluster = prepare_cluster(&graph);
    let keep = [n - 1, n];

    let mut acc_last = 0.0;
    let mut acc_second = 0.0;
    let mut acc_conc = 0.0;
    let mut weight = 0.0;
    let mut branch_count = 0u32;
    for branch in 0..1u32 << m {
        let specs: Vec<MeasurementSpec> = (0..m)
            .map(|i| {
                let outcome = ((branch >> (m - 1 - i)) & 1) as u8;
                MeasurementSpec::new(i as u32 + 1, angles[i], outcome)
            })
            .collect::<Result<_>>()?;
        let (p, post) = match measurement_cascade(&cluster, &specs) {
            Ok(v) => v,
            Err(Error::ZeroProbabilityBranch) => continue,
            Err(e) => return Err(e),
        };
        let rho = post.partial_trace(&keep)?;
        acc_last += p * discord(&rho, Subsystem::B)?.value;
        acc_second += p * discord(&rho, Subsystem::A)?.value;
        acc_conc += p * concurrence(&rho)?;
        weight += p;
        branch_count += 1;
    }
    if weight <= 0.0 {
        return Err(Error::NumericalFailure(String::from(
            "every outcome branch had zero probability",
        )));
    }
    Ok(OutcomeAverages {
        d_meas_last: acc_last / weight,
        d_meas_secondlast: acc_second / weight,
        concurrence: acc_conc / weight,
        branch_count,
    })
}

/// [`outcome_averaged_correlations`] packaged as a sweep row.
pub fn evaluate_sample(n: u32, index: u64, angles: Vec<f64>) -> Result<SweepRecord> {
    let averages = outcome_averaged_correlations(n, &angles)?;
    Ok(SweepRecord {
        index,
        angles,
        d_meas_last: averages.d_meas_last,
        d_meas_secondlast: averages.d_meas_secondlast,
        concurrence: averages.concurrence,
        branch_count: averages.branch_count,
    })
}

/// The reduced state of qubits {3, 4} of the four-qubit ladder after qubit 1
/// is measured at angle φ₁ with outcome s₁, in closed form:
///
/// ρ = (1/4) [[1, A, 0, B], [A*, 1, B*, 0], [0, B, 1, A], [B*, 0, A*, 1]]
///
/// with A = (−1)^{s₁} cos φ₁ and B = i(−1)^{s₁} sin φ₁, in ∣q₃ q₄⟩ ordering.
pub fn closed_form_rho34(phi1: f64, s1: u8) -> Result<DensityMatrix> {
    if !phi1.is_finite() {
        return Err(Error::InvalidInput(String::from("angle must be finite")));
    }
    if s1 > 1 {
        return Err(Error::InvalidInput(format!("outcome must be 0 or 1, got {s1}")));
    }
    let sign = if s1 == 1 { -1.0 } else { 1.0 };
    let a = Complex64::new(sign * phi1.cos(), 0.0);
    let b = Complex64::new(0.0, sign * phi1.sin());
    let one = Complex64::ONE;
    let zero = Complex64::ZERO;
    let rows = [
        [one, a, zero, b],
        [a.conj(), one, b.conj(), zero],
        [zero, b, one, a],
        [b.conj(), zero, a.conj(), one],
    ];
    let mat = CMatrix::from_fn(4, |r, c| rows[r][c] * 0.25);
    DensityMatrix::new(vec![3, 4], mat)
}

/// The tabulated fixed-angle examples. For ladder size n the preset supplies
/// φ₁..φ_{n−4}; the remaining angle φ_{n−3} is the sweep variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Example1,
    Example2,
}

impl Preset {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "example1" => Some(Preset::Example1),
            "example2" => Some(Preset::Example2),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::Example1 => "example1",
            Preset::Example2 => "example2",
        }
    }

    /// Fixed angles as multiples of π, as tabulated.
    pub fn angles_in_pi_units(self, n: u32) -> Result<Vec<f64>> {
        let table: &[f64] = match (self, n) {
            (_, 4) => &[],
            (Preset::Example1, 6) => &[0.37, 0.78],
            (Preset::Example1, 8) => &[1.5, 0.19, 0.37, 0.78],
            (Preset::Example1, 10) => &[0.24, 0.53, 1.5, 0.19, 0.37, 0.78],
            (Preset::Example2, 6) => &[1.3, 0.67],
            (Preset::Example2, 8) => &[0.95, 1.7, 1.3, 0.67],
            (Preset::Example2, 10) => &[0.59, 1.13, 0.95, 1.7, 1.3, 0.67],
            _ => {
                return Err(Error::InvalidInput(format!(
                    "preset {} is tabulated for n ∈ {{4, 6, 8, 10}}, got {n}",
                    self.name()
                )))
            }
        };
        Ok(table.to_vec())
    }

    /// Fixed angles φ₁..φ_{n−4} in radians.
    pub fn angles(self, n: u32) -> Result<Vec<f64>> {
        Ok(self
            .angles_in_pi_units(n)?
            .into_iter()
            .map(|x| x * core::f64::consts::PI)
            .collect())
    }
}

/// Uniform grid of `points` angles over [0, 2π), for fixed sweeps of the
/// last measurement angle.
pub fn angle_grid(points: usize) -> Vec<f64> {
    (0..points)
        .map(|j| j as f64 * core::f64::consts::TAU / points as f64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    #[test]
    fn closed_form_at_half_pi() {
        let rho = closed_form_rho34(FRAC_PI_2, 0).unwrap();
        // (1/4) [[1,0,0,i],[0,1,−i,0],[0,i,1,0],[−i,0,0,1]]
        let i4 = Complex64::new(0.0, 0.25);
        assert!((rho.entry(0, 3) - i4).norm() < 1e-12);
        assert!((rho.entry(2, 1) - i4).norm() < 1e-12);
        assert!((rho.entry(1, 2) + i4).norm() < 1e-12);
        assert!((rho.entry(3, 0) + i4).norm() < 1e-12);
        assert!(rho.entry(0, 1).norm() < 1e-12);
        for d in 0..4 {
            assert!((rho.entry(d, d) - Complex64::new(0.25, 0.0)).norm() < 1e-15);
        }
        rho.validate().unwrap();
    }

    #[test]
    fn closed_form_at_zero_with_flipped_outcome() {
        let rho = closed_form_rho34(0.0, 1).unwrap();
        // A = −1, B = 0
        assert!((rho.entry(0, 1) - Complex64::new(-0.25, 0.0)).norm() < 1e-15);
        assert!((rho.entry(2, 3) - Complex64::new(-0.25, 0.0)).norm() < 1e-15);
        assert!(rho.entry(0, 3).norm() < 1e-15);
        rho.validate().unwrap();
    }

    #[test]
    fn closed_form_matches_simulation() {
        let graph = LadderGraph::new(4).unwrap();
        let cluster = prepare_cluster(&graph);
        for (k, s1) in [(0u32, 0u8), (1, 1), (2, 0), (3, 1), (4, 0), (5, 1)] {
            let phi1 = 0.17 + k as f64 * 1.03;
            let spec = MeasurementSpec::new(1, phi1, s1).unwrap();
            let (_, post) = cluster.measure_xy(&spec).unwrap();
            let simulated = post.partial_trace(&[3, 4]).unwrap();
            let closed = closed_form_rho34(phi1, s1).unwrap();
            assert!(
                simulated.matrix().max_abs_diff(closed.matrix()) < 1e-12,
                "phi={phi1} s={s1}"
            );
        }
    }

    #[test]
    fn closed_form_rejects_bad_inputs() {
        assert!(matches!(closed_form_rho34(f64::NAN, 0), Err(Error::InvalidInput(_))));
        assert!(matches!(closed_form_rho34(0.0, 2), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn four_qubit_averages_at_half_pi_vanish() {
        let averages = outcome_averaged_correlations(4, &[FRAC_PI_2]).unwrap();
        assert!(averages.d_meas_last < 1e-4);
        assert!(averages.d_meas_secondlast < 1e-4);
        assert!(averages.concurrence < 1e-8);
        assert_eq!(averages.branch_count, 2);
    }

    #[test]
    fn four_qubit_quarter_pi_matches_frozen_oracle_value() {
        // 0.201752073386 is the 256×256 dense-grid oracle value for the
        // closed-form state at φ₁ = π/4 (same for both outcomes)
        let averages = outcome_averaged_correlations(4, &[FRAC_PI_4]).unwrap();
        assert!((averages.d_meas_last - 0.201752073386).abs() < 1e-3);
        assert!(averages.d_meas_secondlast < 1e-4);
    }

    #[test]
    fn four_qubit_branches_agree() {
        // the two outcome branches are related by a local unitary on qubit 4
        let graph = LadderGraph::new(4).unwrap();
        let cluster = prepare_cluster(&graph);
        let mut per_branch = Vec::new();
        for s1 in [0u8, 1] {
            let spec = MeasurementSpec::new(1, 0.83, s1).unwrap();
            let (_, post) = cluster.measure_xy(&spec).unwrap();
            let rho = post.partial_trace(&[3, 4]).unwrap();
            per_branch.push(discord(&rho, Subsystem::B).unwrap().value);
        }
        assert!((per_branch[0] - per_branch[1]).abs() < 1e-6);
    }

    #[test]
    fn pi_shift_of_any_angle_is_invisible() {
        let base = outcome_averaged_correlations(4, &[0.9]).unwrap();
        let shifted = outcome_averaged_correlations(4, &[0.9 + PI]).unwrap();
        assert!((base.d_meas_last - shifted.d_meas_last).abs() < 1e-12);
        assert!((base.d_meas_secondlast - shifted.d_meas_secondlast).abs() < 1e-12);
        assert!((base.concurrence - shifted.concurrence).abs() < 1e-12);
    }

    #[test]
    fn rejects_wrong_angle_count() {
        assert!(matches!(outcome_averaged_correlations(6, &[0.1]), Err(Error::InvalidInput(_))));
        assert!(matches!(outcome_averaged_correlations(5, &[0.1, 0.2]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn preset_tables() {
        assert_eq!(Preset::parse("example1"), Some(Preset::Example1));
        assert_eq!(Preset::parse("nope"), None);
        assert!(Preset::Example1.angles(4).unwrap().is_empty());
        let a6 = Preset::Example1.angles_in_pi_units(6).unwrap();
        assert_eq!(a6, vec![0.37, 0.78]);
        let a10 = Preset::Example1.angles_in_pi_units(10).unwrap();
        assert_eq!(a10, vec![0.24, 0.53, 1.5, 0.19, 0.37, 0.78]);
        let a8 = Preset::Example2.angles(8).unwrap();
        assert!((a8[0] - 0.95 * PI).abs() < 1e-15);
        assert_eq!(a8.len(), 4);
        assert!(Preset::Example1.angles(12).is_err());
    }

    #[test]
    fn angle_grid_covers_the_circle() {
        let grid = angle_grid(256);
        assert_eq!(grid.len(), 256);
        assert_eq!(grid[0], 0.0);
        assert!((grid[64] - FRAC_PI_2).abs() < 1e-12);
        assert!(grid.iter().all(|&a| (0.0..core::f64::consts::TAU).contains(&a)));
    }
}
