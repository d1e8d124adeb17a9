use thiserror::Error;

use crate::C64;

/// Errors raised by the Fock-space toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FockError {
    /// An exponential would leave the `f64` range.
    #[error("exponent {exponent} overflows the f64 range")]
    Overflow { exponent: f64 },

    #[error("invalid truncation: outer {outer}, inner {inner} (need outer >= inner >= 1)")]
    InvalidDimension { outer: usize, inner: usize },

    #[error("translation by {b} has no finite fixed point")]
    NoFiniteFixedPoint { b: C64 },

    #[error("operator is unbounded on the Fock space")]
    Unbounded,

    /// The classifier only handles weights of the form γ·K_c.
    #[error("weight is not a scaled reproducing kernel")]
    UnsupportedWeight,

    #[error("eigenvalue bound needs |a| < 1")]
    EigenvalueBoundUndefined,

    /// The decay witness only exists for `|a| < 1`; on the unit circle
    /// closed range is decided by the classifier.
    #[error("closed-range witness needs |a| < 1")]
    WitnessUndefined,

    #[error("weight is identically zero")]
    ZeroWeight,

    #[error("{what} did not converge by dimension {dim} (last change {delta:e})")]
    NonConvergence {
        what: &'static str,
        dim: usize,
        delta: f64,
    },

    #[error("eigensolver failed to converge on a {dim}x{dim} matrix")]
    Eigensolver { dim: usize },
}

pub type Result<T> = core::result::Result<T, FockError>;
