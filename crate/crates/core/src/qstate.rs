//! Labeled-register statevectors: initialization, gates, X-Y-plane projective
//! measurements, and reduction to density matrices.
//!
//! A register is a set of distinct positive integer labels held in ascending
//! order; the *first* (smallest) label is the most significant bit of the
//! amplitude index. Measured qubits are removed from the register, so a
//! statevector always describes exactly the qubits that are still live.
//!
//! All values are immutable after construction and every operation returns a
//! new value, so states can be shared freely across threads.

use alloc::{format, string::String, vec, vec::Vec};

use num_complex::Complex64;
use num_traits::Float;

use crate::linalg::CMatrix;
use crate::{Error, Result};

/// Qubit labels are positive integers; label 1 is the left end of the ladder.
pub type QubitLabel = u32;

/// Threshold below which a measurement branch is reported as zero-probability.
pub const ZERO_BRANCH_THRESHOLD: f64 = 1e-14;

const NORM_TOL: f64 = 1e-12;
const UNITARITY_TOL: f64 = 1e-12;
const HERMITICITY_TOL: f64 = 1e-10;
const TRACE_TOL: f64 = 1e-10;
const PSD_FLOOR: f64 = 1e-8;

/// One projective measurement in the X-Y plane of the Bloch sphere: qubit
/// `qubit` is projected onto (∣0⟩ + (−1)^outcome e^{iφ}∣1⟩)/√2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementSpec {
    pub qubit: QubitLabel,
    /// Measurement angle φ in radians, stored in [0, 2π).
    pub angle: f64,
    /// Outcome bit s ∈ {0, 1}.
    pub outcome: u8,
}

impl MeasurementSpec {
    pub fn new(qubit: QubitLabel, angle: f64, outcome: u8) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::InvalidInput(format!("measurement angle must be finite, got {angle}")));
        }
        if outcome > 1 {
            return Err(Error::InvalidInput(format!("measurement outcome must be 0 or 1, got {outcome}")));
        }
        Ok(Self { qubit, angle: wrap_angle(angle), outcome })
    }
}

/// Reduce an angle into [0, 2π).
pub fn wrap_angle(angle: f64) -> f64 {
    let tau = core::f64::consts::TAU;
    let r = angle % tau;
    if r < 0.0 {
        r + tau
    } else {
        r
    }
}

/// Pure state of a labeled qubit register.
///
/// Amplitudes are indexed with the first (smallest) label as the most
/// significant bit, so for labels `[3, 4]` the index order is
/// ∣00⟩, ∣01⟩, ∣10⟩, ∣11⟩ in ∣q3 q4⟩ notation.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    labels: Vec<QubitLabel>,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Every qubit in ∣+⟩: the uniform superposition with amplitude 2^(−m/2).
    pub fn init_plus(labels: &[QubitLabel]) -> Result<Self> {
        let labels = validated_labels(labels)?;
        let m = labels.len();
        let amp = Complex64::new(0.5f64.powf(m as f64 / 2.0), 0.0);
        Ok(Self { labels, amps: vec![amp; 1 << m] })
    }

    /// Build a state from explicit amplitudes (must be normalized to 1e-12).
    pub fn from_amplitudes(labels: &[QubitLabel], amps: Vec<Complex64>) -> Result<Self> {
        let labels = validated_labels(labels)?;
        if amps.len() != 1 << labels.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} amplitudes for {} qubits, got {}",
                1usize << labels.len(),
                labels.len(),
                amps.len()
            )));
        }
        let norm_sq: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq.sqrt() - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidInput(format!(
                "amplitudes are not normalized: |ψ| = {}",
                norm_sq.sqrt()
            )));
        }
        Ok(Self { labels, amps })
    }

    pub fn labels(&self) -> &[QubitLabel] {
        &self.labels
    }

    pub fn num_qubits(&self) -> usize {
        self.labels.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Bit position (from the least significant end) of `label` in amplitude
    /// indices, or an error if the label is not in the register.
    pub fn bit_position(&self, label: QubitLabel) -> Result<usize> {
        match self.labels.binary_search(&label) {
            Ok(j) => Ok(self.labels.len() - 1 - j),
            Err(_) => Err(Error::InvalidInput(format!("qubit {label} is not in the register"))),
        }
    }

    /// Controlled-Z between qubits `j` and `k`: negates every amplitude with
    /// both qubits in ∣1⟩. Symmetric in its arguments.
    pub fn apply_cz(&self, j: QubitLabel, k: QubitLabel) -> Result<Self> {
        if j == k {
            return Err(Error::InvalidInput(format!("CZ requires two distinct qubits, got {j} twice")));
        }
        let pj = self.bit_position(j)?;
        let pk = self.bit_position(k)?;
        let mask = (1usize << pj) | (1usize << pk);
        let mut amps = self.amps.clone();
        for (i, a) in amps.iter_mut().enumerate() {
            if i & mask == mask {
                *a = -*a;
            }
        }
        Ok(Self { labels: self.labels.clone(), amps })
    }

    /// Apply a single-qubit unitary `u` (row-major 2×2) to qubit `j`.
    pub fn apply_1q(&self, j: QubitLabel, u: &[[Complex64; 2]; 2]) -> Result<Self> {
        if unitarity_defect(u) > UNITARITY_TOL {
            return Err(Error::InvalidInput(String::from("matrix is not unitary within 1e-12")));
        }
        let p = self.bit_position(j)?;
        let step = 1usize << p;
        let mut amps = self.amps.clone();
        let mut i = 0;
        while i < amps.len() {
            for offset in i..i + step {
                let a0 = amps[offset];
                let a1 = amps[offset + step];
                amps[offset] = u[0][0] * a0 + u[0][1] * a1;
                amps[offset + step] = u[1][0] * a0 + u[1][1] * a1;
            }
            i += 2 * step;
        }
        Ok(Self { labels: self.labels.clone(), amps })
    }

    /// Project onto the X-Y-plane basis state
    /// (∣0⟩ + (−1)^s e^{iφ}∣1⟩)/√2 of `spec.qubit`, remove the qubit from the
    /// register, and renormalize.
    ///
    /// Returns the branch probability together with the post-measurement
    /// state. A branch with probability below [`ZERO_BRANCH_THRESHOLD`] is
    /// reported as [`Error::ZeroProbabilityBranch`]; the caller decides
    /// whether to skip it.
    pub fn measure_xy(&self, spec: &MeasurementSpec) -> Result<(f64, Self)> {
        if spec.outcome > 1 {
            return Err(Error::InvalidInput(format!(
                "measurement outcome must be 0 or 1, got {}",
                spec.outcome
            )));
        }
        if !spec.angle.is_finite() {
            return Err(Error::InvalidInput(String::from("measurement angle must be finite")));
        }
        let p = self.bit_position(spec.qubit)?;
        if self.labels.len() == 1 {
            return Err(Error::InvalidInput(String::from(
                "cannot measure the last remaining qubit of a register",
            )));
        }
        // bra coefficient on the ∣1⟩ component
        let sign = if spec.outcome == 0 { 1.0 } else { -1.0 };
        let coeff = Complex64::from_polar(sign, -spec.angle);
        let inv_sqrt2 = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);

        let low_mask = (1usize << p) - 1;
        let mut amps = Vec::with_capacity(self.amps.len() / 2);
        for y in 0..self.amps.len() / 2 {
            let hi = (y & !low_mask) << 1;
            let lo = y & low_mask;
            let i0 = hi | lo;
            let i1 = i0 | (1usize << p);
            amps.push((self.amps[i0] + coeff * self.amps[i1]) * inv_sqrt2);
        }
        let probability: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if probability < ZERO_BRANCH_THRESHOLD {
            return Err(Error::ZeroProbabilityBranch);
        }
        let renorm = Complex64::new(1.0 / probability.sqrt(), 0.0);
        for a in amps.iter_mut() {
            *a *= renorm;
        }
        let labels: Vec<QubitLabel> =
            self.labels.iter().copied().filter(|&l| l != spec.qubit).collect();
        Ok((probability, Self { labels, amps }))
    }

    /// Reduced density matrix over the `keep` labels, tracing out the rest.
    pub fn partial_trace(&self, keep: &[QubitLabel]) -> Result<DensityMatrix> {
        let keep = validated_labels(keep)?;
        let keep_pos: Vec<usize> =
            keep.iter().map(|&l| self.bit_position(l)).collect::<Result<_>>()?;
        let env_pos: Vec<usize> = (0..self.labels.len())
            .map(|j| self.labels.len() - 1 - j)
            .filter(|p| !keep_pos.contains(p))
            .collect();

        let dk = 1usize << keep.len();
        let de = 1usize << env_pos.len();
        // scatter the bits of a compact index into a full amplitude index
        let scatter = |compact: usize, positions: &[usize]| -> usize {
            let width = positions.len();
            positions
                .iter()
                .enumerate()
                .fold(0usize, |acc, (j, &pos)| acc | (((compact >> (width - 1 - j)) & 1) << pos))
        };

        let mut mat = CMatrix::zeros(dk);
        for e in 0..de {
            let env_bits = scatter(e, &env_pos);
            for a in 0..dk {
                let ia = scatter(a, &keep_pos) | env_bits;
                for b in 0..dk {
                    let ib = scatter(b, &keep_pos) | env_bits;
                    let v = mat.get(a, b) + self.amps[ia] * self.amps[ib].conj();
                    mat.set(a, b, v);
                }
            }
        }
        DensityMatrix::new(keep, mat)
    }

    /// Exact equality of label lists and amplitude vectors.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.labels == other.labels
            && self
                .amps
                .iter()
                .zip(other.amps.iter())
                .all(|(a, b)| (a - b).norm() <= tol)
    }

    /// |⟨self|other⟩|, defined for identical registers.
    pub fn overlap_magnitude(&self, other: &Self) -> Result<f64> {
        if self.labels != other.labels {
            return Err(Error::InvalidInput(String::from("overlap requires identical registers")));
        }
        let ip: Complex64 =
            self.amps.iter().zip(other.amps.iter()).map(|(a, b)| a.conj() * b).sum();
        Ok(ip.norm())
    }
}

/// Mixed or reduced state of a small labeled register.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    labels: Vec<QubitLabel>,
    mat: CMatrix,
}

impl DensityMatrix {
    /// Wrap a matrix as a density matrix. Checks shape, Hermiticity (1e-10)
    /// and unit trace (1e-10); positivity is checked by [`Self::validate`].
    pub fn new(labels: Vec<QubitLabel>, mat: CMatrix) -> Result<Self> {
        let labels = validated_labels(&labels)?;
        if mat.dim() != 1 << labels.len() {
            return Err(Error::InvalidInput(format!(
                "matrix dimension {} does not match {} qubits",
                mat.dim(),
                labels.len()
            )));
        }
        if mat.hermiticity_defect() > HERMITICITY_TOL {
            return Err(Error::InvalidInput(format!(
                "matrix is not Hermitian within {HERMITICITY_TOL:e}"
            )));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidInput(format!("matrix trace {tr} is not 1 within {TRACE_TOL:e}")));
        }
        Ok(Self { labels, mat })
    }

    pub fn labels(&self) -> &[QubitLabel] {
        &self.labels
    }

    pub fn num_qubits(&self) -> usize {
        self.labels.len()
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        self.mat.get(r, c)
    }

    /// Eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.mat.hermitian_eigenvalues()
    }

    /// Full invariant check: Hermitian within 1e-10, trace 1 within 1e-10,
    /// eigenvalues ≥ −1e-8.
    pub fn validate(&self) -> Result<()> {
        if self.mat.hermiticity_defect() > HERMITICITY_TOL {
            return Err(Error::NumericalFailure(String::from("density matrix lost Hermiticity")));
        }
        let tr = self.mat.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::NumericalFailure(format!("density matrix trace drifted to {tr}")));
        }
        let min = self
            .eigenvalues()
            .first()
            .copied()
            .expect("density matrix has at least one eigenvalue");
        if min < -PSD_FLOOR {
            return Err(Error::NumericalFailure(format!(
                "density matrix eigenvalue {min:e} below -{PSD_FLOOR:e}"
            )));
        }
        Ok(())
    }

    /// Reduced density matrix over the `keep` labels.
    pub fn partial_trace(&self, keep: &[QubitLabel]) -> Result<DensityMatrix> {
        let keep = validated_labels(keep)?;
        let keep_pos: Vec<usize> = keep
            .iter()
            .map(|&l| match self.labels.binary_search(&l) {
                Ok(j) => Ok(self.labels.len() - 1 - j),
                Err(_) => Err(Error::InvalidInput(format!("qubit {l} is not in the register"))),
            })
            .collect::<Result<_>>()?;
        let env_pos: Vec<usize> = (0..self.labels.len())
            .map(|j| self.labels.len() - 1 - j)
            .filter(|p| !keep_pos.contains(p))
            .collect();

        let dk = 1usize << keep.len();
        let de = 1usize << env_pos.len();
        let scatter = |compact: usize, positions: &[usize]| -> usize {
            let width = positions.len();
            positions
                .iter()
                .enumerate()
                .fold(0usize, |acc, (j, &pos)| acc | (((compact >> (width - 1 - j)) & 1) << pos))
        };

        let mut mat = CMatrix::zeros(dk);
        for e in 0..de {
            let env_bits = scatter(e, &env_pos);
            for a in 0..dk {
                let ra = scatter(a, &keep_pos) | env_bits;
                for b in 0..dk {
                    let cb = scatter(b, &keep_pos) | env_bits;
                    let v = mat.get(a, b) + self.mat.get(ra, cb);
                    mat.set(a, b, v);
                }
            }
        }
        DensityMatrix::new(keep, mat)
    }
}

fn validated_labels(labels: &[QubitLabel]) -> Result<Vec<QubitLabel>> {
    if labels.is_empty() {
        return Err(Error::InvalidInput(String::from("label list must be nonempty")));
    }
    if labels.iter().any(|&l| l == 0) {
        return Err(Error::InvalidInput(String::from("qubit labels are positive integers")));
    }
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput(String::from("qubit labels must be distinct")));
    }
    Ok(sorted)
}

fn unitarity_defect(u: &[[Complex64; 2]; 2]) -> f64 {
    // max |(u†u − 1)_rc|
    let mut worst = 0.0f64;
    for r in 0..2 {
        for c in 0..2 {
            let mut acc = Complex64::ZERO;
            for k in 0..2 {
                acc += u[k][r].conj() * u[k][c];
            }
            if r == c {
                acc -= Complex64::ONE;
            }
            worst = worst.max(acc.norm());
        }
    }
    worst
}
