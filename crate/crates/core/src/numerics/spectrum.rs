use alloc::vec::Vec;

use super::linalg::eigenvalues;
use crate::error::Result;
use crate::matrix::{build_matrix, OperatorSpec};
use crate::scalar::abs;
use crate::C64;

/// Eigenvalues of the `N × N` compression, sorted by decreasing modulus.
pub fn truncated_eigenvalues(spec: &OperatorSpec, inner: usize) -> Result<Vec<C64>> {
    let a = build_matrix(spec, inner, inner)?;
    let mut ev = eigenvalues(a.entries())?;
    ev.sort_by(|x, y| abs(*y).total_cmp(&abs(*x)));
    Ok(ev)
}

/// Largest eigenvalue modulus of the `N × N` compression. Meaningful for
/// `|a| < 1`, where the operator is compact and these converge.
pub fn spectral_radius_estimate(spec: &OperatorSpec, inner: usize) -> Result<f64> {
    Ok(truncated_eigenvalues(spec, inner)?.first().map_or(0.0, |z| abs(*z)))
}

/// The `k` largest-modulus eigenvalues of the `N × N` compression.
pub fn point_spectrum_estimate(spec: &OperatorSpec, inner: usize, k: usize) -> Result<Vec<C64>> {
    let mut ev = truncated_eigenvalues(spec, inner)?;
    ev.truncate(k);
    Ok(ev)
}
