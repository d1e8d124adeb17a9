//! Coefficient vectors in the orthonormal basis `e_n = zⁿ/√n!`.
//!
//! Everything is stored in the `e_n` basis so entries stay `O(1)`;
//! monomial coefficients are converted with the ratio `√n! = √(n−1)!·√n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{FockError, Result};
use crate::scalar::{c64, checked_exp, exp, ln, sqrt};
use crate::C64;

/// A truncated element of the Fock space.
///
/// `tail_bound` bounds the squared norm of the discarded coefficients
/// (`Σ_{n ≥ dim} |f_n|²`); it is zero for exact (polynomial) data and may
/// be `+∞` when no useful bound is known.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    coeffs: Vec<C64>,
    tail_bound: f64,
}

impl FockVector {
    pub fn new(coeffs: Vec<C64>) -> Self {
        Self { coeffs, tail_bound: 0.0 }
    }

    pub fn with_tail_bound(coeffs: Vec<C64>, tail_bound: f64) -> Self {
        Self { coeffs, tail_bound }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![C64::default(); dim])
    }

    /// The basis vector `e_n` in dimension `dim`.
    pub fn basis(n: usize, dim: usize) -> Self {
        let mut v = Self::zeros(dim.max(n + 1));
        v.coeffs[n] = c64(1.0, 0.0);
        v
    }

    /// Converts monomial coefficients `f(z) = Σ m_n zⁿ` to the `e_n` basis.
    pub fn from_monomials(monomials: &[C64]) -> Self {
        let mut sqrt_fact = 1.0;
        let coeffs = monomials
            .iter()
            .enumerate()
            .map(|(n, m)| {
                if n > 0 {
                    sqrt_fact *= sqrt(n as f64);
                }
                *m * sqrt_fact
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn to_monomials(&self) -> Vec<C64> {
        let mut sqrt_fact = 1.0;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, f)| {
                if n > 0 {
                    sqrt_fact *= sqrt(n as f64);
                }
                *f / sqrt_fact
            })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C64> {
        self.coeffs
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        sqrt(self.norm_sqr())
    }

    /// Pointwise value of the truncated series, `Σ f_n e_n(z)`.
    pub fn eval(&self, z: C64) -> C64 {
        let mut basis = c64(1.0, 0.0);
        let mut acc = C64::default();
        for (n, f) in self.coeffs.iter().enumerate() {
            if n > 0 {
                basis = basis * z / sqrt(n as f64);
            }
            acc += *f * basis;
        }
        acc
    }

    /// Zero-pads or truncates to `dim`.
    pub fn resized(&self, dim: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(dim, C64::default());
        Self { coeffs, tail_bound: self.tail_bound }
    }
}

/// `⟨f, g⟩ = Σ f_n ḡ_n`; the shorter vector is zero-padded.
pub fn fock_inner(f: &FockVector, g: &FockVector) -> C64 {
    f.coeffs
        .iter()
        .zip(g.coeffs.iter())
        .map(|(x, y)| *x * y.conj())
        .sum()
}

/// `‖K_w‖ = e^{|w|²/2}`.
pub fn kernel_norm(w: C64) -> Result<f64> {
    checked_exp(w.norm_sqr() / 2.0)
}

/// Coefficients `w̄ⁿ/√n!` of `K_w(z) = e^{w̄z}`, `0 ≤ n < dim`.
pub fn kernel_vector(w: C64, dim: usize) -> Result<FockVector> {
    if dim == 0 {
        return Err(FockError::InvalidDimension { outer: dim, inner: dim });
    }
    kernel_norm(w)?;
    let wc = w.conj();
    let mut coeffs = Vec::with_capacity(dim);
    let mut cur = c64(1.0, 0.0);
    coeffs.push(cur);
    for n in 1..dim {
        cur = cur * wc / sqrt(n as f64);
        coeffs.push(cur);
    }
    Ok(FockVector::with_tail_bound(coeffs, kernel_tail_bound(w, dim)))
}

/// Majorant `|w|^{2N}/N! · e^{|w|²}` for `Σ_{n ≥ N} |w|^{2n}/n!`.
pub fn kernel_tail_bound(w: C64, dim: usize) -> f64 {
    let r2 = w.norm_sqr();
    if r2 == 0.0 {
        return if dim == 0 { 1.0 } else { 0.0 };
    }
    let n = dim as f64;
    let log_bound = n * ln(r2) - libm::lgamma(n + 1.0) + r2;
    exp(log_bound)
}

/// `k_w = K_w/‖K_w‖` as a vector.
pub fn normalized_kernel_vector(w: C64, dim: usize) -> Result<FockVector> {
    let norm = kernel_norm(w)?;
    let v = kernel_vector(w, dim)?;
    let tail = v.tail_bound / (norm * norm);
    Ok(FockVector::with_tail_bound(
        v.coeffs.into_iter().map(|z| z / norm).collect(),
        tail,
    ))
}
