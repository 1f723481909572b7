//! Dense statevector simulation of ladder-shaped cluster states and the
//! non-classical correlations produced in them by projective measurements.
//!
//! A cluster state is prepared by placing ∣+⟩ qubits on the vertices of a
//! ladder graph and applying a CZ gate across every edge. Measuring all but
//! the last three qubits in X-Y-plane bases detaches the measured qubits and
//! steers the reduced state of the last two. This crate simulates that
//! process exactly and quantifies the resulting correlations:
//!
//! - [`qstate`] — labeled-register statevectors, gates, X-Y-plane projective
//!   measurements, density matrices, and partial traces.
//! - [`cluster`] — ladder graphs, cluster preparation, stabilizer generators,
//!   and sequential measurement cascades.
//! - [`pauli`] — Pauli-string algebra, expectation values, a brute-force
//!   stabilizer census, and the transformed-generator fixtures for the four-
//!   and six-qubit ladders.
//! - [`correl`] — von Neumann entropy, mutual information, quantum discord
//!   (both measurement directions) and concurrence on two-qubit states.
//! - [`experiments`] — outcome-branch enumeration, outcome-averaged
//!   correlations, the closed-form four-qubit output state, and the
//!   fixed-angle preset tables.
//! - [`oracle`] — slow reference implementations used to cross-check the
//!   optimized paths.
//!
//! The crate is `no_std` (with `alloc`); everything is pure computation over
//! immutable values, so all operations are safe to call concurrently.

#![no_std]

extern crate alloc;

pub mod cluster;
pub mod correl;
mod error;
pub mod experiments;
pub mod linalg;
pub mod oracle;
pub mod pauli;
pub mod qstate;

pub use error::Error;
pub use num_complex::Complex64;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
