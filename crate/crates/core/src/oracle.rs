//! Slow reference implementations used to cross-check the optimized paths.
//!
//! The discord oracle scans a dense basis grid with explicit projector
//! matrices and brute-force partial traces; it shares nothing with the
//! seeded-and-refined minimizer in [`crate::correl`] beyond the density
//! matrix itself, so agreement between the two is a meaningful check.

use num_complex::Complex64;
use num_traits::Float;

use crate::correl::Subsystem;
use crate::linalg::CMatrix;
use crate::qstate::DensityMatrix;
use crate::{Error, Result};

/// Minimum of Σ_j p_j S(unmeasured ∣ j) over an inclusive `grid` × `grid`
/// scan of (θ, α) ∈ [0, π] × [0, 2π), built from explicit projectors.
pub fn dense_grid_min_conditional_entropy(
    rho: &DensityMatrix,
    measured: Subsystem,
    grid: usize,
) -> Result<f64> {
    if rho.num_qubits() != 2 {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "the discord oracle requires a two-qubit density matrix",
        )));
    }
    if grid == 0 {
        return Err(Error::InvalidInput(alloc::string::String::from("grid must be positive")));
    }
    let identity = CMatrix::identity(2);
    let mut best = f64::INFINITY;
    for i in 0..grid {
        let theta = i as f64 * core::f64::consts::PI / grid as f64;
        for j in 0..grid {
            let alpha = j as f64 * core::f64::consts::TAU / grid as f64;
            let n = [theta.sin() * alpha.cos(), theta.sin() * alpha.sin(), theta.cos()];
            let mut total = 0.0;
            for sign in [1.0, -1.0] {
                let projector = bloch_projector(&n, sign);
                let big = match measured {
                    Subsystem::A => projector.kron(&identity),
                    Subsystem::B => identity.kron(&projector),
                };
                let sub = &(&big * rho.matrix()) * &big;
                let reduced = trace_out_measured(&sub, measured);
                let p = reduced[0].re + reduced[3].re;
                if p < 1e-14 {
                    continue;
                }
                total += p * normalized_entropy(&reduced, p);
            }
            best = best.min(total);
        }
    }
    Ok(best)
}

/// Quantum discord evaluated with the dense-grid oracle minimizer.
pub fn dense_grid_discord(rho: &DensityMatrix, measured: Subsystem, grid: usize) -> Result<f64> {
    let mutual = crate::correl::mutual_information(rho)?;
    let unmeasured_label = match measured {
        Subsystem::B => rho.labels()[0],
        Subsystem::A => rho.labels()[1],
    };
    let s_unmeasured =
        crate::correl::von_neumann_entropy(&rho.partial_trace(&[unmeasured_label])?)?;
    let min_conditional = dense_grid_min_conditional_entropy(rho, measured, grid)?;
    Ok(mutual - (s_unmeasured - min_conditional))
}

/// (𝟙 + sign·n̂·σ⃗)/2 as an explicit matrix.
fn bloch_projector(n: &[f64; 3], sign: f64) -> CMatrix {
    let mut p = CMatrix::zeros(2);
    p.set(0, 0, Complex64::new(0.5 * (1.0 + sign * n[2]), 0.0));
    p.set(1, 1, Complex64::new(0.5 * (1.0 - sign * n[2]), 0.0));
    p.set(0, 1, Complex64::new(0.5 * sign * n[0], -0.5 * sign * n[1]));
    p.set(1, 0, Complex64::new(0.5 * sign * n[0], 0.5 * sign * n[1]));
    p
}

/// Trace a 4×4 two-qubit operator down to the unmeasured qubit, row-major.
fn trace_out_measured(m: &CMatrix, measured: Subsystem) -> [Complex64; 4] {
    let mut out = [Complex64::ZERO; 4];
    for u in 0..2 {
        for u2 in 0..2 {
            let mut acc = Complex64::ZERO;
            for v in 0..2 {
                acc += match measured {
                    Subsystem::B => m.get(2 * u + v, 2 * u2 + v),
                    Subsystem::A => m.get(2 * v + u, 2 * v + u2),
                };
            }
            out[2 * u + u2] = acc;
        }
    }
    out
}

/// Entropy of an unnormalized 2×2 Hermitian block with trace `p`, from the
/// closed-form eigenvalue pair.
fn normalized_entropy(m: &[Complex64; 4], p: f64) -> f64 {
    let a = m[0].re;
    let d = m[3].re;
    let disc = (0.25 * (a - d) * (a - d) + m[1].norm_sqr()).sqrt();
    let mut s = 0.0;
    for lambda in [0.5 * (a + d) + disc, 0.5 * (a + d) - disc] {
        let q = (lambda / p).clamp(0.0, 1.0);
        if q > 0.0 {
            s -= q * q.log2();
        }
    }
    s
}
