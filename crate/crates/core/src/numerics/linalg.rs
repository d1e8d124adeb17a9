//! Thin wrappers over nalgebra's dense decompositions.

use alloc::vec::Vec;

use nalgebra::linalg::{Schur, SymmetricEigen, SVD};
use nalgebra::DMatrix;

use crate::error::{FockError, Result};
use crate::scalar::{abs, sqrt};
use crate::C64;

const MAX_ITER: usize = 100_000;

/// Largest singular value.
pub fn max_singular_value(m: &DMatrix<C64>) -> Result<f64> {
    if m.is_empty() {
        return Ok(0.0);
    }
    let svd = SVD::try_new(m.clone(), false, false, f64::EPSILON, MAX_ITER)
        .ok_or(FockError::Eigensolver { dim: m.ncols() })?;
    Ok(svd.singular_values.max())
}

pub fn singular_values(m: &DMatrix<C64>) -> Result<Vec<f64>> {
    let svd = SVD::try_new(m.clone(), false, false, f64::EPSILON, MAX_ITER)
        .ok_or(FockError::Eigensolver { dim: m.ncols() })?;
    let mut s: Vec<f64> = svd.singular_values.iter().copied().collect();
    s.sort_by(|x, y| y.total_cmp(x));
    Ok(s)
}

/// Eigenvalues of a Hermitian matrix, ascending. The input is
/// symmetrized first.
pub fn hermitian_eigenvalues(m: &DMatrix<C64>) -> Result<Vec<f64>> {
    let sym = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let eig = SymmetricEigen::try_new(sym, f64::EPSILON, MAX_ITER)
        .ok_or(FockError::Eigensolver { dim: m.nrows() })?;
    let mut v: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    Ok(v)
}

/// Eigenvalues of a general square matrix via the complex Schur form.
pub fn eigenvalues(m: &DMatrix<C64>) -> Result<Vec<C64>> {
    let n = m.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let schur = Schur::try_new(m.clone(), f64::EPSILON, MAX_ITER)
        .ok_or(FockError::Eigensolver { dim: n })?;
    let (_, t) = schur.unpack();
    let scale = frobenius(&t).max(f64::MIN_POSITIVE);
    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    while i < n {
        if i + 1 < n && abs(t[(i + 1, i)]) > 1e-14 * scale {
            // Leftover 2×2 block.
            let (p, q, r, s) = (t[(i, i)], t[(i, i + 1)], t[(i + 1, i)], t[(i + 1, i + 1)]);
            let half_tr = (p + s) * 0.5;
            let disc = ((p - s) * 0.5).powi(2) + q * r;
            let root = csqrt(disc);
            out.push(half_tr + root);
            out.push(half_tr - root);
            i += 2;
        } else {
            out.push(t[(i, i)]);
            i += 1;
        }
    }
    Ok(out)
}

fn csqrt(z: C64) -> C64 {
    let r = abs(z);
    let re = sqrt(((r + z.re) / 2.0).max(0.0));
    let im = sqrt(((r - z.re) / 2.0).max(0.0));
    C64::new(re, if z.im < 0.0 { -im } else { im })
}

pub fn frobenius(m: &DMatrix<C64>) -> f64 {
    sqrt(m.iter().map(|z| z.norm_sqr()).sum())
}

/// Leading `rows × cols` block.
pub fn block(m: &DMatrix<C64>, rows: usize, cols: usize) -> DMatrix<C64> {
    m.view((0, 0), (rows, cols)).into_owned()
}
