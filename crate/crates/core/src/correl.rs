//! Entropic correlation measures on one- and two-qubit density matrices:
//! von Neumann entropy, mutual information, quantum discord with its inner
//! measurement-basis minimization, and concurrence.
//!
//! All entropies are in bits (base-2 logarithms). Discord is asymmetric: the
//! measured side is selected by [`Subsystem`], with `A` the first (smaller)
//! label of the state and `B` the second.
//!
//! The inner minimization runs over rank-1 projective measurements
//! (𝟙 ± n̂·σ⃗)/2 parameterized by the Bloch direction n̂(θ, α). It seeds a
//! 32×32 grid over the (θ, α) rectangle, refines every grid-local minimum
//! (plus the three Pauli axes) with a shrinking-neighborhood search, and is
//! fully deterministic.

use alloc::{format, string::String, vec::Vec};

use num_complex::Complex64;
use num_traits::Float;

use crate::linalg::CMatrix;
use crate::qstate::DensityMatrix;
use crate::{Error, Result};

/// Which qubit of a two-qubit state is measured: `A` is the first (smaller)
/// label, `B` the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Bloch direction n̂(θ, α) of the optimal measurement basis: projectors are
/// (𝟙 ± n̂·σ⃗)/2 with θ ∈ [0, π], α ∈ [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementBasisParams {
    pub theta: f64,
    pub alpha: f64,
}

/// Quantum discord together with the quantities it is assembled from.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscordResult {
    /// D = I(A:B) − 𝒥, in bits; values in [−1e-9, 0) are clamped to 0.
    pub value: f64,
    pub optimal_basis: MeasurementBasisParams,
    pub mutual_information: f64,
    pub classical_correlations: f64,
}

const EIGEN_ERROR_FLOOR: f64 = 1e-8;
const GRID: usize = 32;
const REFINE_ROUNDS: usize = 60;
const REFINE_STOP: f64 = 1e-9;
const WALK_CAP: usize = 100;
const SEED_CAP: usize = 8;
const PROB_FLOOR: f64 = 1e-14;

/// −Σ λ log₂ λ over the eigenvalues, with 0·log 0 = 0. Eigenvalues below
/// −1e-8 are a numerical failure; the window [−1e-8, 0) is clamped to 0.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    entropy_from_eigenvalues(rho.eigenvalues().into_iter())
}

fn entropy_from_eigenvalues(eigenvalues: impl Iterator<Item = f64>) -> Result<f64> {
    let mut entropy = 0.0;
    for ev in eigenvalues {
        if ev < -EIGEN_ERROR_FLOOR {
            return Err(Error::NumericalFailure(format!(
                "eigenvalue {ev:e} below -{EIGEN_ERROR_FLOOR:e} in entropy"
            )));
        }
        if ev > 0.0 {
            entropy -= ev * ev.log2();
        }
    }
    Ok(entropy)
}

/// I(A:B) = S(A) + S(B) − S(AB) for a two-qubit state.
pub fn mutual_information(rho: &DensityMatrix) -> Result<f64> {
    let labels = require_two_qubits(rho)?;
    let s_a = von_neumann_entropy(&rho.partial_trace(&[labels.0])?)?;
    let s_b = von_neumann_entropy(&rho.partial_trace(&[labels.1])?)?;
    let s_ab = von_neumann_entropy(rho)?;
    Ok(s_a + s_b - s_ab)
}

/// Minimum over projective measurement bases on the measured qubit of
/// Σ_j p_j S(unmeasured ∣ outcome j), together with the minimizing basis.
///
/// Outcomes with p_j < 1e-14 contribute 0.
pub fn min_conditional_entropy(
    rho: &DensityMatrix,
    measured: Subsystem,
) -> Result<(f64, MeasurementBasisParams)> {
    require_two_qubits(rho)?;
    let ctx = MeasurementContext::new(rho, measured);

    // coarse grid over [0, π] × [0, 2π); 32 divides by 4, so the Pauli axes
    // θ ∈ {0, π/2}, α ∈ {0, π/2, π, 3π/2} land exactly on grid points
    let d_theta = core::f64::consts::PI / GRID as f64;
    let d_alpha = core::f64::consts::TAU / GRID as f64;
    let mut values = Vec::with_capacity(GRID * GRID);
    for i in 0..GRID {
        for j in 0..GRID {
            values.push(ctx.objective(i as f64 * d_theta, j as f64 * d_alpha));
        }
    }

    // seeds: every grid-local minimum (deduplicated by value, best first,
    // capped), then the Pauli axes
    let mut local_minima: Vec<(f64, usize, usize)> = Vec::new();
    for i in 0..GRID {
        for j in 0..GRID {
            let v = values[i * GRID + j];
            let mut is_min = true;
            'scan: for di in -1i32..=1 {
                for dj in -1i32..=1 {
                    if di == 0 && dj == 0 {
                        continue;
                    }
                    let i2 = i as i32 + di;
                    if i2 < 0 || i2 >= GRID as i32 {
                        continue;
                    }
                    let j2 = (j as i32 + dj).rem_euclid(GRID as i32);
                    if values[i2 as usize * GRID + j2 as usize] < v {
                        is_min = false;
                        break 'scan;
                    }
                }
            }
            if is_min {
                local_minima.push((v, i, j));
            }
        }
    }
    local_minima.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("objective values are finite"));
    let mut seeds: Vec<(f64, f64)> = Vec::new();
    let mut seen: Vec<f64> = Vec::new();
    for (v, i, j) in local_minima {
        if seen.iter().any(|w| (v - w).abs() < 1e-12) {
            continue;
        }
        seen.push(v);
        seeds.push((i as f64 * d_theta, j as f64 * d_alpha));
        if seeds.len() >= SEED_CAP {
            break;
        }
    }
    seeds.push((core::f64::consts::FRAC_PI_2, 0.0));
    seeds.push((core::f64::consts::FRAC_PI_2, core::f64::consts::FRAC_PI_2));
    seeds.push((0.0, 0.0));

    let mut best = f64::INFINITY;
    let mut best_at = (0.0, 0.0);
    for &(theta0, alpha0) in &seeds {
        let (v, at) = ctx.refine(theta0, alpha0, d_theta, d_alpha);
        if v < best {
            best = v;
            best_at = at;
        }
    }
    Ok((best, MeasurementBasisParams { theta: best_at.0, alpha: best_at.1 }))
}

/// Quantum discord D = I(A:B) − [S(unmeasured) − min conditional entropy],
/// with the bar over the measured side: `Subsystem::B` computes D_{A B̄}.
pub fn discord(rho: &DensityMatrix, measured: Subsystem) -> Result<DiscordResult> {
    let mutual = mutual_information(rho)?;
    let ctx = MeasurementContext::new(rho, measured);
    let (p, s_weighted) = entropy_2x2_unnormalized(&ctx.unmeasured);
    debug_assert!((p - 1.0).abs() < 1e-9);
    let s_unmeasured = s_weighted / p;
    let (min_conditional, basis) = min_conditional_entropy(rho, measured)?;
    let classical = s_unmeasured - min_conditional;
    let mut value = mutual - classical;
    if value >= -1e-9 && value < 0.0 {
        value = 0.0;
    }
    Ok(DiscordResult {
        value,
        optimal_basis: basis,
        mutual_information: mutual,
        classical_correlations: classical,
    })
}

/// Concurrence through the spin-flip spectrum: λ's are the square roots of
/// the eigenvalues of ρ·(Y⊗Y)ρ*(Y⊗Y), C = max(0, λ₁−λ₂−λ₃−λ₄), clamped to
/// [0, 1].
///
/// Evaluated on the Hermitian form √ρ·ρ̃·√ρ, which shares the spectrum of
/// ρρ̃.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho)?;
    let yy = y_kron_y();
    let rho_tilde = &(&yy * &rho.matrix().conjugate()) * &yy;
    let root = rho.matrix().sqrt_psd(EIGEN_ERROR_FLOOR)?;
    let h = &(&root * &rho_tilde) * &root;
    let mut eigenvalues = h.hermitian_eigenvalues();
    for ev in eigenvalues.iter_mut() {
        if *ev < -EIGEN_ERROR_FLOOR {
            return Err(Error::NumericalFailure(format!(
                "spin-flip spectrum eigenvalue {ev:e} below -{EIGEN_ERROR_FLOOR:e}"
            )));
        }
        *ev = ev.max(0.0);
    }
    // ascending order: the largest λ minus the rest
    let lambdas: Vec<f64> = eigenvalues.iter().map(|e| e.sqrt()).collect();
    let c = lambdas[3] - lambdas[2] - lambdas[1] - lambdas[0];
    Ok(c.clamp(0.0, 1.0))
}

fn require_two_qubits(rho: &DensityMatrix) -> Result<(u32, u32)> {
    if rho.num_qubits() != 2 {
        return Err(Error::InvalidInput(String::from(
            "correlation measures require a two-qubit density matrix",
        )));
    }
    Ok((rho.labels()[0], rho.labels()[1]))
}

fn y_kron_y() -> CMatrix {
    let mut y = CMatrix::zeros(2);
    y.set(0, 1, -Complex64::I);
    y.set(1, 0, Complex64::I);
    y.kron(&y)
}

/// Precomputed pieces of the conditional-entropy objective. For a basis n̂
/// the unnormalized conditional states are (R ± n̂·T⃗)/2 with R the reduced
/// unmeasured state and T_k = tr_meas[ρ(σ_k on the measured side)], so each
/// objective evaluation is a 2×2 closed form.
struct MeasurementContext {
    unmeasured: [Complex64; 4],
    t: [[Complex64; 4]; 3],
}

impl MeasurementContext {
    fn new(rho: &DensityMatrix, measured: Subsystem) -> Self {
        let m = rho.matrix();
        let sigma_x = [Complex64::ZERO, Complex64::ONE, Complex64::ONE, Complex64::ZERO];
        let sigma_y = [Complex64::ZERO, -Complex64::I, Complex64::I, Complex64::ZERO];
        let sigma_z = [Complex64::ONE, Complex64::ZERO, Complex64::ZERO, -Complex64::ONE];

        let mut unmeasured = [Complex64::ZERO; 4];
        let mut t = [[Complex64::ZERO; 4]; 3];
        for u in 0..2 {
            for u2 in 0..2 {
                let mut r_acc = Complex64::ZERO;
                let mut t_acc = [Complex64::ZERO; 3];
                for v in 0..2 {
                    for v2 in 0..2 {
                        // entry of ρ at (unmeasured u, measured v) indices
                        let entry = match measured {
                            Subsystem::B => m.get(2 * u + v, 2 * u2 + v2),
                            Subsystem::A => m.get(2 * v + u, 2 * v2 + u2),
                        };
                        if v == v2 {
                            r_acc += entry;
                        }
                        // tr over the measured side of ρ·(σ on measured):
                        // contract σ[v2, v]
                        for (k, sigma) in [sigma_x, sigma_y, sigma_z].iter().enumerate() {
                            t_acc[k] += entry * sigma[2 * v2 + v];
                        }
                    }
                }
                unmeasured[2 * u + u2] = r_acc;
                for k in 0..3 {
                    t[k][2 * u + u2] = t_acc[k];
                }
            }
        }
        Self { unmeasured, t }
    }

    fn objective(&self, theta: f64, alpha: f64) -> f64 {
        let (st, ct) = theta.sin_cos();
        let (sa, ca) = alpha.sin_cos();
        let n = [st * ca, st * sa, ct];
        let mut contracted = [Complex64::ZERO; 4];
        for e in 0..4 {
            contracted[e] = self.t[0][e] * n[0] + self.t[1][e] * n[1] + self.t[2][e] * n[2];
        }
        let mut total = 0.0;
        for sign in [1.0, -1.0] {
            let cond = [
                (self.unmeasured[0] + contracted[0] * sign) * 0.5,
                (self.unmeasured[1] + contracted[1] * sign) * 0.5,
                (self.unmeasured[2] + contracted[2] * sign) * 0.5,
                (self.unmeasured[3] + contracted[3] * sign) * 0.5,
            ];
            let (_, weighted) = entropy_2x2_unnormalized(&cond);
            total += weighted;
        }
        total
    }

    /// Shrinking-neighborhood search: at each of up to 60 rounds, walk to the
    /// best improving compass neighbor until stuck, then halve the steps.
    /// Stops when a round's improvement drops below 1e-9 (once positive) or
    /// the scale is exhausted.
    fn refine(&self, theta0: f64, alpha0: f64, mut d_theta: f64, mut d_alpha: f64) -> (f64, (f64, f64)) {
        let tau = core::f64::consts::TAU;
        let pi = core::f64::consts::PI;
        let mut theta = theta0;
        let mut alpha = alpha0;
        let mut current = self.objective(theta, alpha);
        for _round in 0..REFINE_ROUNDS {
            let round_start = current;
            for _ in 0..WALK_CAP {
                let mut moved = false;
                for di in -1i32..=1 {
                    for dj in -1i32..=1 {
                        if di == 0 && dj == 0 {
                            continue;
                        }
                        let t = (theta + di as f64 * d_theta).clamp(0.0, pi);
                        let mut a = (alpha + dj as f64 * d_alpha) % tau;
                        if a < 0.0 {
                            a += tau;
                        }
                        let v = self.objective(t, a);
                        if v < current {
                            current = v;
                            theta = t;
                            alpha = a;
                            moved = true;
                        }
                    }
                }
                if !moved {
                    break;
                }
            }
            d_theta *= 0.5;
            d_alpha *= 0.5;
            let improvement = round_start - current;
            if improvement > 0.0 && improvement < REFINE_STOP {
                break;
            }
            if improvement == 0.0 && d_theta < 1e-9 {
                break;
            }
        }
        (current, (theta, alpha))
    }
}

/// For an unnormalized Hermitian 2×2 block, return (trace p, p·S(block/p)).
/// Blocks with p < 1e-14 contribute nothing.
fn entropy_2x2_unnormalized(m: &[Complex64; 4]) -> (f64, f64) {
    let a = m[0].re;
    let d = m[3].re;
    let p = a + d;
    if p < PROB_FLOOR {
        return (p, 0.0);
    }
    let mid = 0.5 * (a + d);
    let disc = (0.25 * (a - d) * (a - d) + m[1].norm_sqr()).sqrt();
    let mut weighted = 0.0;
    for lambda in [(mid + disc).clamp(0.0, p), (mid - disc).clamp(0.0, p)] {
        let q = lambda / p;
        if q > 0.0 {
            weighted -= p * q * q.log2();
        }
    }
    (p, weighted)
}
