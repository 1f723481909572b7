//! Small dense complex matrices and a Hermitian Jacobi eigensolver.
//!
//! Every matrix in this crate is tiny (dimension 2 to 16: one- and two-qubit
//! density matrices and reduced states of short registers), so a dense
//! row-major representation with a cyclic Jacobi diagonalizer is both simple
//! and accurate to machine precision.

use alloc::{vec, vec::Vec};
use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use num_traits::Float;

use crate::{Error, Result};

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    /// Zero matrix of the given dimension.
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![Complex64::ZERO; dim * dim] }
    }

    /// Identity matrix of the given dimension.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    /// Build a matrix entry by entry.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.dim + c] = v;
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    /// Entry-wise complex conjugate (no transpose).
    pub fn conjugate(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(r, c).conj())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(r, c) * s)
    }

    /// Kronecker product; `self` supplies the most significant index block.
    pub fn kron(&self, other: &Self) -> Self {
        let (da, db) = (self.dim, other.dim);
        Self::from_fn(da * db, |r, c| {
            self.get(r / db, c / db) * other.get(r % db, c % db)
        })
    }

    /// Largest entry-wise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0;
        for (a, b) in self.data.iter().zip(other.data.iter()) {
            worst = worst.max((a - b).norm());
        }
        worst
    }

    /// Largest deviation from Hermitian symmetry, max |a_rc − conj(a_cr)|.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0;
        for r in 0..self.dim {
            for c in r..self.dim {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        self.hermitian_eigen().0
    }

    /// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi
    /// rotations. Returns eigenvalues ascending and the unitary whose columns
    /// are the matching eigenvectors, so that `self = V diag(λ) V†`.
    ///
    /// The input is symmetrized first; callers are expected to hold matrices
    /// that are Hermitian up to rounding noise.
    pub fn hermitian_eigen(&self) -> (Vec<f64>, CMatrix) {
        let n = self.dim;
        // work on (H + H†)/2 to shed rounding asymmetry
        let mut h = CMatrix::from_fn(n, |r, c| {
            (self.get(r, c) + self.get(c, r).conj()) * 0.5
        });
        let mut v = CMatrix::identity(n);

        let scale: f64 = h.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let stop = (1e-15 * (1.0 + scale)).powi(2);
        for _sweep in 0..100 {
            let off: f64 = (0..n)
                .flat_map(|p| (0..n).map(move |q| (p, q)))
                .filter(|&(p, q)| p != q)
                .map(|(p, q)| h.get(p, q).norm_sqr())
                .sum();
            if off <= stop {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let b = h.get(p, q);
                    if b.norm() <= 1e-300 {
                        continue;
                    }
                    let a = h.get(p, p).re;
                    let c = h.get(q, q).re;
                    // unit phase of the pivot and the rotation angle that
                    // zeroes it: tan 2θ = 2|b| / (a − c)
                    let u = b / b.norm();
                    let theta = 0.5 * f64::atan2(2.0 * b.norm(), a - c);
                    let (sn, cs) = theta.sin_cos();
                    let su = u * sn;
                    // columns: col_p ← cs·col_p + s·u*·col_q ; col_q ← −s·u·col_p + cs·col_q
                    for k in 0..n {
                        let hkp = h.get(k, p);
                        let hkq = h.get(k, q);
                        h.set(k, p, hkp * cs + hkq * su.conj());
                        h.set(k, q, hkq * cs - hkp * su);
                    }
                    // rows with conjugate coefficients
                    for k in 0..n {
                        let hpk = h.get(p, k);
                        let hqk = h.get(q, k);
                        h.set(p, k, hpk * cs + hqk * su);
                        h.set(q, k, hqk * cs - hpk * su.conj());
                    }
                    for k in 0..n {
                        let vkp = v.get(k, p);
                        let vkq = v.get(k, q);
                        v.set(k, p, vkp * cs + vkq * su.conj());
                        v.set(k, q, vkq * cs - vkp * su);
                    }
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| {
            h.get(i, i).re.partial_cmp(&h.get(j, j).re).expect("eigenvalues are finite")
        });
        let eigenvalues: Vec<f64> = order.iter().map(|&i| h.get(i, i).re).collect();
        let vectors = CMatrix::from_fn(n, |r, c| v.get(r, order[c]));
        (eigenvalues, vectors)
    }

    /// Hermitian square root of a positive-semidefinite matrix. Eigenvalues
    /// in `[-floor, 0)` are clamped to zero; anything below `-floor` is a
    /// numerical failure.
    pub fn sqrt_psd(&self, floor: f64) -> Result<CMatrix> {
        let (mut eigenvalues, v) = self.hermitian_eigen();
        for ev in eigenvalues.iter_mut() {
            if *ev < -floor {
                return Err(Error::NumericalFailure(alloc::format!(
                    "eigenvalue {ev:e} below -{floor:e} in matrix square root"
                )));
            }
            *ev = ev.max(0.0);
        }
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = Complex64::ZERO;
                for (k, ev) in eigenvalues.iter().enumerate() {
                    acc += v.get(r, k) * ev.sqrt() * v.get(c, k).conj();
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;

    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions must agree");
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == Complex64::ZERO {
                    continue;
                }
                for c in 0..n {
                    let v = out.get(r, c) + a * rhs.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;

    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions must agree");
        CMatrix::from_fn(self.dim, |r, c| self.get(r, c) + rhs.get(r, c))
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;

    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions must agree");
        CMatrix::from_fn(self.dim, |r, c| self.get(r, c) - rhs.get(r, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eigen_diagonal() {
        let mut m = CMatrix::zeros(3);
        m.set(0, 0, c(2.0, 0.0));
        m.set(1, 1, c(-1.0, 0.0));
        m.set(2, 2, c(0.5, 0.0));
        let ev = m.hermitian_eigenvalues();
        assert!((ev[0] + 1.0).abs() < 1e-14);
        assert!((ev[1] - 0.5).abs() < 1e-14);
        assert!((ev[2] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn eigen_pauli_y() {
        let mut y = CMatrix::zeros(2);
        y.set(0, 1, c(0.0, -1.0));
        y.set(1, 0, c(0.0, 1.0));
        let (ev, v) = y.hermitian_eigen();
        assert!((ev[0] + 1.0).abs() < 1e-14);
        assert!((ev[1] - 1.0).abs() < 1e-14);
        // reconstruct
        let mut recon = CMatrix::zeros(2);
        for r in 0..2 {
            for col in 0..2 {
                let mut acc = Complex64::ZERO;
                for k in 0..2 {
                    acc += v.get(r, k) * ev[k] * v.get(col, k).conj();
                }
                recon.set(r, col, acc);
            }
        }
        assert!(recon.max_abs_diff(&y) < 1e-14);
    }

    #[test]
    fn eigen_reconstructs_random_hermitian() {
        // deterministic pseudo-random Hermitian fill
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for dim in [2usize, 3, 4, 8] {
            let mut h = CMatrix::zeros(dim);
            for r in 0..dim {
                h.set(r, r, c(next(), 0.0));
                for col in (r + 1)..dim {
                    let z = c(next(), next());
                    h.set(r, col, z);
                    h.set(col, r, z.conj());
                }
            }
            let (ev, v) = h.hermitian_eigen();
            // V unitary
            let vdv = &v.adjoint() * &v;
            assert!(vdv.max_abs_diff(&CMatrix::identity(dim)) < 1e-12);
            // H = V diag(ev) V†
            let mut recon = CMatrix::zeros(dim);
            for r in 0..dim {
                for col in 0..dim {
                    let mut acc = Complex64::ZERO;
                    for k in 0..dim {
                        acc += v.get(r, k) * ev[k] * v.get(col, k).conj();
                    }
                    recon.set(r, col, acc);
                }
            }
            assert!(recon.max_abs_diff(&h) < 1e-12, "dim {dim}");
            // ascending order
            for w in ev.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn sqrt_psd_squares_back() {
        let mut h = CMatrix::zeros(2);
        h.set(0, 0, c(0.75, 0.0));
        h.set(0, 1, c(0.1, 0.2));
        h.set(1, 0, c(0.1, -0.2));
        h.set(1, 1, c(0.25, 0.0));
        let s = h.sqrt_psd(1e-8).unwrap();
        assert!((&s * &s).max_abs_diff(&h) < 1e-12);
    }

    #[test]
    fn sqrt_psd_rejects_negative() {
        let mut h = CMatrix::zeros(2);
        h.set(0, 0, c(1.0, 0.0));
        h.set(1, 1, c(-1e-3, 0.0));
        assert!(matches!(h.sqrt_psd(1e-8), Err(Error::NumericalFailure(_))));
    }

    #[test]
    fn kron_dimensions_and_values() {
        let a = CMatrix::from_fn(2, |r, c_| c((r * 2 + c_) as f64, 0.0));
        let id = CMatrix::identity(2);
        let k = a.kron(&id);
        assert_eq!(k.dim(), 4);
        assert_eq!(k.get(0, 0), a.get(0, 0));
        assert_eq!(k.get(2, 2), a.get(1, 1));
        assert_eq!(k.get(0, 2), a.get(0, 1));
        assert_eq!(k.get(1, 0), Complex64::ZERO);
    }
}
