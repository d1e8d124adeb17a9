use super::linalg::hermitian_eigenvalues;
use super::{resolve_gram_blocks, NumericsConfig};
use crate::error::Result;
use crate::matrix::OperatorSpec;

/// Sign pattern of the truncated self-commutator `A*A − AA*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectKind {
    /// Defect norm at or below `normal_tol`.
    NormalLike,
    /// Eigenvalues beyond both `−indefinite_tol` and `+indefinite_tol`.
    Indefinite,
    /// `A*A ≥ AA*` up to `indefinite_tol`.
    PositiveDefectLike,
    /// `A*A ≤ AA*` up to `indefinite_tol`.
    NegativeDefectLike,
    /// Nonzero but every eigenvalue sits inside the gray zone.
    Unresolved,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutatorVerdict {
    /// Spectral norm of the defect block.
    pub defect_norm: f64,
    pub min_eig: f64,
    pub max_eig: f64,
    pub verdict: DefectKind,
    pub inner: usize,
    pub outer: usize,
}

impl CommutatorVerdict {
    pub fn classify(min_eig: f64, max_eig: f64, cfg: &NumericsConfig) -> DefectKind {
        let defect = min_eig.abs().max(max_eig.abs());
        let pos = max_eig > cfg.indefinite_tol;
        let neg = min_eig < -cfg.indefinite_tol;
        if defect <= cfg.normal_tol {
            DefectKind::NormalLike
        } else if pos && neg {
            DefectKind::Indefinite
        } else if pos {
            DefectKind::PositiveDefectLike
        } else if neg {
            DefectKind::NegativeDefectLike
        } else {
            DefectKind::Unresolved
        }
    }
}

/// Eigenvalues of the principal `N × N` block of `A*A − AA*`, with padding
/// grown until both Gram blocks are converged.
pub fn self_commutator(spec: &OperatorSpec, inner: usize, cfg: &NumericsConfig) -> Result<CommutatorVerdict> {
    let blocks = resolve_gram_blocks(spec, inner, cfg)?;
    let defect = &blocks.gram - &blocks.cogram;
    let eig = hermitian_eigenvalues(&defect)?;
    let min_eig = eig.first().copied().unwrap_or(0.0);
    let max_eig = eig.last().copied().unwrap_or(0.0);
    Ok(CommutatorVerdict {
        defect_norm: min_eig.abs().max(max_eig.abs()),
        min_eig,
        max_eig,
        verdict: CommutatorVerdict::classify(min_eig, max_eig, cfg),
        inner,
        outer: blocks.outer,
    })
}
