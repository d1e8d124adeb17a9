//! Numerical oracles that check the closed forms against truncated matrices.
//!
//! Every estimate runs on outer-padded truncations whose padding grows
//! until the quantity of interest stops moving, and carries the dimensions
//! it was computed at.

use alloc::vec::Vec;

mod commutator;
pub mod linalg;
mod norm;
mod resolve;
mod residual;
mod spectrum;
mod witness;

pub use commutator::{self_commutator, CommutatorVerdict, DefectKind};
pub use norm::{op_norm_at, op_norm_estimate, NormEstimate};
pub use resolve::{resolve_gram_blocks, GramBlocks};
pub use residual::{
    adjoint_residual, conjugation_residual, eigen_relation_check, gram_kernel_eigen_residual,
    Residual,
};
pub use spectrum::{point_spectrum_estimate, spectral_radius_estimate, truncated_eigenvalues};
pub use witness::{closed_range_witness, witness_log_g, WitnessProfile, WitnessRow, WITNESS_LEVEL};

/// Knobs shared by the numerical routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericsConfig {
    /// Padding grows until derived blocks change by less than this.
    pub block_tol: f64,
    /// Successive-difference tolerance for the norm ladder.
    pub conv_tol: f64,
    pub max_inner: usize,
    pub max_outer: usize,
    /// Fixed outer padding `M − N` for the first attempt; `None` uses
    /// [`default_outer`](crate::matrix::default_outer).
    pub outer_pad: Option<usize>,
    /// Self-commutator defect at or below this is normal-like.
    pub normal_tol: f64,
    /// Eigenvalues of the defect beyond ±this count as a definite sign.
    pub indefinite_tol: f64,
}

impl Default for NumericsConfig {
    fn default() -> Self {
        Self {
            block_tol: 1e-10,
            conv_tol: 1e-8,
            max_inner: 256,
            max_outer: 1024,
            outer_pad: None,
            normal_tol: 1e-8,
            indefinite_tol: 1e-4,
        }
    }
}

impl NumericsConfig {
    pub(crate) fn first_outer(&self, inner: usize) -> usize {
        let outer = match self.outer_pad {
            Some(pad) => inner + pad,
            None => crate::matrix::default_outer(inner),
        };
        outer.min(self.max_outer.max(inner))
    }
}

/// History of a quantity computed at growing truncations.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConvergenceRecord {
    /// `(inner N, outer M)` per evaluation.
    pub dims: Vec<(usize, usize)>,
    pub values: Vec<f64>,
    pub converged: bool,
    pub final_delta: f64,
}

impl ConvergenceRecord {
    pub fn push(&mut self, inner: usize, outer: usize, value: f64) {
        self.dims.push((inner, outer));
        self.values.push(value);
        let n = self.values.len();
        self.final_delta = if n >= 2 {
            (self.values[n - 1] - self.values[n - 2]).abs()
        } else {
            f64::INFINITY
        };
    }

    /// Marks convergence when the last step moved by at most `tol`.
    pub fn settle(&mut self, tol: f64) -> bool {
        self.converged = self.final_delta <= tol;
        self.converged
    }

    pub fn last(&self) -> Option<f64> {
        self.values.last().copied()
    }

    pub fn last_dims(&self) -> Option<(usize, usize)> {
        self.dims.last().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_settles_on_last_difference() {
        let mut r = ConvergenceRecord::default();
        r.push(16, 48, 1.0);
        assert!(!r.settle(1e-3));
        r.push(32, 64, 1.0005);
        assert!(r.settle(1e-3));
        assert_eq!(r.values.len(), r.dims.len());
        assert!((r.final_delta - 5e-4).abs() < 1e-15);
    }
}
