//! Weighted composition operators `f ↦ ψ·(f∘φ)` on the Fock space, with
//! affine symbols `φ(z) = az + b` and weights `ψ = γ·p(z)·e^{c̄z}`.
//!
//! The crate holds closed-form predicates (boundedness, normality, closed
//! range, exact norms) next to truncated-matrix oracles that check them.
//! Kernels follow `K_c(z) = e^{c̄z}` throughout, and vectors live in the
//! orthonormal basis `e_n = zⁿ/√n!`.
#![no_std]
extern crate alloc;

pub mod classify;
mod error;
pub mod matrix;
pub mod numerics;
pub mod scalar;
pub mod symbol;
pub mod vector;
pub mod weight;

pub use error::{FockError, Result};

pub type C64 = nalgebra::Complex<f64>;
