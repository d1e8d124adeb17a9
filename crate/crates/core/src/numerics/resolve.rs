use nalgebra::DMatrix;

use super::linalg::{block, frobenius};
use super::NumericsConfig;
use crate::error::{FockError, Result};
use crate::matrix::{build_matrix, OperatorSpec};
use crate::C64;

/// Converged principal `N × N` blocks of `A*A` and `AA*`.
#[derive(Debug, Clone)]
pub struct GramBlocks {
    /// `⟨C e_j, C e_i⟩`.
    pub gram: DMatrix<C64>,
    /// `⟨C* e_j, C* e_i⟩`.
    pub cogram: DMatrix<C64>,
    /// Side of the square truncation the blocks were read from.
    pub outer: usize,
    /// Relative change at the last doubling.
    pub delta: f64,
}

fn blocks_at(spec: &OperatorSpec, inner: usize, side: usize) -> Result<(DMatrix<C64>, DMatrix<C64>)> {
    let a = build_matrix(spec, side, side)?.into_entries();
    let cols = a.columns(0, inner);
    let rows = a.rows(0, inner);
    let gram = cols.adjoint() * cols;
    let cogram = rows * rows.adjoint();
    Ok((gram, cogram))
}

/// Builds `L × L` truncations with `L` doubling from the default padding
/// until both blocks move by less than `block_tol` (relative).
pub fn resolve_gram_blocks(spec: &OperatorSpec, inner: usize, cfg: &NumericsConfig) -> Result<GramBlocks> {
    if inner == 0 {
        return Err(FockError::InvalidDimension { outer: 0, inner });
    }
    let mut side = cfg.first_outer(inner).max(inner);
    let (mut gram, mut cogram) = blocks_at(spec, inner, side)?;
    loop {
        let next = (side * 2).min(cfg.max_outer);
        if next <= side {
            return Err(FockError::NonConvergence { what: "gram blocks", dim: side, delta: f64::INFINITY });
        }
        let (g2, c2) = blocks_at(spec, inner, next)?;
        let scale = frobenius(&g2).max(frobenius(&c2)).max(1.0);
        let delta = frobenius(&(&g2 - &gram)).max(frobenius(&(&c2 - &cogram))) / scale;
        side = next;
        gram = g2;
        cogram = c2;
        if delta < cfg.block_tol {
            return Ok(GramBlocks { gram: block(&gram, inner, inner), cogram: block(&cogram, inner, inner), outer: side, delta });
        }
        if side >= cfg.max_outer {
            return Err(FockError::NonConvergence { what: "gram blocks", dim: side, delta });
        }
    }
}
