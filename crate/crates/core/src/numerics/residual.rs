use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};

use super::linalg::frobenius;
use super::NumericsConfig;
use crate::error::{FockError, Result};
use crate::matrix::{adjoint_spec, build_matrix, compose_specs, weyl_conjugate, weyl_spec, OperatorSpec};
use crate::scalar::{abs, c64, checked_exp, powi};
use crate::symbol::AffineSymbol;
use crate::vector::kernel_vector;
use crate::weight::EntireWeight;
use crate::C64;

/// A residual together with the truncation it was measured at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub value: f64,
    pub inner: usize,
    pub outer: usize,
    /// Relative change of the measured quantity at the last padding step.
    pub delta: f64,
}

fn conjugated_block(spec: &OperatorSpec, u: C64, inner: usize, side: usize) -> Result<DMatrix<C64>> {
    let w = build_matrix(&weyl_spec(u), side, side)?.into_entries();
    let a = build_matrix(spec, side, side)?.into_entries();
    let w_rows = w.rows(0, inner);
    Ok((w_rows * &a) * w_rows.adjoint())
}

/// Frobenius norm of `W_u A W_u* − B` on the leading `N × N` block, where
/// `B` truncates [`weyl_conjugate`]`(spec, u)`. Padding doubles until the
/// triple product settles.
pub fn conjugation_residual(spec: &OperatorSpec, u: C64, inner: usize, cfg: &NumericsConfig) -> Result<Residual> {
    let conj = weyl_conjugate(spec, u);
    let mut side = cfg.first_outer(inner);
    let mut prev = conjugated_block(spec, u, inner, side)?;
    loop {
        let next = (side * 2).min(cfg.max_outer);
        if next <= side {
            return Err(FockError::NonConvergence { what: "conjugation block", dim: side, delta: f64::INFINITY });
        }
        let cur = conjugated_block(spec, u, inner, next)?;
        let delta = frobenius(&(&cur - &prev)) / frobenius(&cur).max(1.0);
        side = next;
        prev = cur;
        if delta < cfg.block_tol {
            let target = build_matrix(&conj, side, side)?.into_entries();
            let value = frobenius(&(&prev - target.view((0, 0), (inner, inner))));
            return Ok(Residual { value, inner, outer: side, delta });
        }
        if side >= cfg.max_outer {
            return Err(FockError::NonConvergence { what: "conjugation block", dim: side, delta });
        }
    }
}

/// `A* K_w` on the first `N` coordinates, with `A` resolved to an outer
/// dimension at which the product settles.
fn adjoint_on_kernel(spec: &OperatorSpec, w: C64, inner: usize, cfg: &NumericsConfig) -> Result<(DVector<C64>, usize, f64)> {
    let eval = |outer: usize| -> Result<DVector<C64>> {
        let a = build_matrix(spec, outer, inner)?.into_entries();
        let k = DVector::from_vec(kernel_vector(w, outer)?.into_coeffs());
        Ok(a.adjoint() * k)
    };
    let mut outer = cfg.first_outer(inner);
    let mut prev = eval(outer)?;
    loop {
        let next = (outer * 2).min(cfg.max_outer);
        if next <= outer {
            return Err(FockError::NonConvergence { what: "adjoint action", dim: outer, delta: f64::INFINITY });
        }
        let cur = eval(next)?;
        let delta = (&cur - &prev).norm() / cur.norm().max(f64::MIN_POSITIVE);
        outer = next;
        prev = cur;
        if delta < cfg.block_tol {
            return Ok((prev, outer, delta));
        }
        if outer >= cfg.max_outer {
            return Err(FockError::NonConvergence { what: "adjoint action", dim: outer, delta });
        }
    }
}

fn relative_gap(lhs: &DVector<C64>, rhs: &[C64]) -> f64 {
    let rhs = DVector::from_column_slice(rhs);
    let scale = rhs.norm().max(lhs.norm()).max(f64::MIN_POSITIVE);
    (lhs - &rhs).norm() / scale
}

/// Relative gap between `A* K_w` and `ψ(w)̄ K_{φ(w)}` on the first `N`
/// coordinates.
pub fn adjoint_residual(spec: &OperatorSpec, w: C64, inner: usize, cfg: &NumericsConfig) -> Result<Residual> {
    let (lhs, outer, delta) = adjoint_on_kernel(spec, w, inner, cfg)?;
    let factor = spec.weight.eval(w)?.conj();
    let rhs: Vec<C64> = kernel_vector(spec.symbol.eval(w), inner)?
        .into_coeffs()
        .into_iter()
        .map(|z| z * factor)
        .collect();
    Ok(Residual { value: relative_gap(&lhs, &rhs), inner, outer, delta })
}

/// For `G = C_φ* C_φ = C_{K_b, |a|²z+b}` checks
/// `G* K_w = e^{|b|²/(1−|a|²)} K_w` with `w = b/(1−|a|²)`.
/// Returns the residual and the eigenvalue used.
pub fn gram_kernel_eigen_residual(phi: &AffineSymbol, inner: usize, cfg: &NumericsConfig) -> Result<(Residual, f64)> {
    let gram = compose_specs(&adjoint_spec(phi), &OperatorSpec::composition(*phi));
    let denom = 1.0 - phi.a().norm_sqr();
    let w = phi.b() / denom;
    let lambda = checked_exp(phi.b().norm_sqr() / denom)?;
    let (lhs, outer, delta) = adjoint_on_kernel(&gram, w, inner, cfg)?;
    let rhs: Vec<C64> = kernel_vector(w, inner)?.into_coeffs().into_iter().map(|z| z * lambda).collect();
    Ok((Residual { value: relative_gap(&lhs, &rhs), inner, outer, delta }, lambda))
}

/// `max_z |λⁿ h(z) − ∏_{j<n} ψ(φ_j(z)) · h(φ_n(z))|`; zero for an
/// eigenpair `(λ, h)` of `C_{ψ,φ}`.
pub fn eigen_relation_check(
    spec: &OperatorSpec,
    lambda: C64,
    h: &EntireWeight,
    n: u64,
    z_samples: &[C64],
) -> Result<f64> {
    let lambda_n = powi(lambda, n);
    let mut worst: f64 = 0.0;
    for &z in z_samples {
        let mut product = c64(1.0, 0.0);
        let mut orbit = z;
        for _ in 0..n {
            product *= spec.weight.eval(orbit)?;
            orbit = spec.symbol.eval(orbit);
        }
        debug_assert!(abs(orbit - spec.symbol.iterate(n).eval(z)) <= 1e-9 * (1.0 + abs(orbit)));
        let gap = lambda_n * h.eval(z)? - product * h.eval(orbit)?;
        worst = worst.max(abs(gap));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::KernelOperator;
    use crate::scalar::exp;

    fn kernel_spec() -> OperatorSpec {
        KernelOperator::from_parts(c64(1.0, 0.0), c64(0.3, 0.0), c64(0.5, 0.0), c64(0.3, 0.0)).spec()
    }

    #[test]
    fn conjugation_examples() {
        let cfg = NumericsConfig::default();
        let zero = conjugation_residual(&kernel_spec(), C64::default(), 32, &cfg).unwrap();
        assert_eq!(zero.value, 0.0);
        let to_origin = conjugation_residual(&kernel_spec(), c64(-0.6, 0.0), 32, &cfg).unwrap();
        assert!(to_origin.value <= 1e-8, "{to_origin:?}");
        let target = weyl_conjugate(&kernel_spec(), c64(-0.6, 0.0));
        assert_eq!(target.symbol, AffineSymbol::dilation(c64(0.5, 0.0)));
        assert!(abs(target.weight.gamma() - c64(exp(0.18), 0.0)) < 1e-14);
        let plain = OperatorSpec::composition(AffineSymbol::new(c64(0.5, 0.0), c64(0.3, 0.0)));
        assert!(conjugation_residual(&plain, c64(-0.6, 0.0), 32, &cfg).unwrap().value <= 1e-8);
        assert!(conjugation_residual(&plain, c64(0.0, 0.3), 32, &cfg).unwrap().value <= 1e-8);
    }

    #[test]
    fn adjoint_examples() {
        let cfg = NumericsConfig::default();
        assert!(adjoint_residual(&kernel_spec(), C64::default(), 64, &cfg).unwrap().value <= 1e-8);
        let dilation = OperatorSpec::composition(AffineSymbol::dilation(c64(0.5, 0.0)));
        assert!(adjoint_residual(&dilation, c64(1.0, 0.0), 64, &cfg).unwrap().value <= 1e-8);
        let unitary = KernelOperator::from_parts(c64(1.0, 0.0), c64(0.0, 1.0), c64(0.0, 1.0), c64(1.0, 0.0)).spec();
        assert!(adjoint_residual(&unitary, c64(0.7, 0.0), 96, &cfg).unwrap().value <= 1e-6);
    }

    #[test]
    fn gram_kernel_is_eigenvector() {
        let cfg = NumericsConfig::default();
        let (r, lambda) = gram_kernel_eigen_residual(&AffineSymbol::new(c64(0.5, 0.0), c64(0.3, 0.0)), 48, &cfg).unwrap();
        assert!(r.value <= 1e-8, "{r:?}");
        assert!((lambda - exp(0.12)).abs() < 1e-14);
    }

    #[test]
    fn eigen_relations() {
        let zs = [C64::default(), c64(1.0, 0.0), c64(0.0, 1.0)];
        let plain = OperatorSpec::composition(AffineSymbol::new(c64(0.5, 0.0), c64(0.3, 0.0)));
        let h = EntireWeight::polynomial(alloc::vec![c64(-0.6, 0.0), c64(1.0, 0.0)]);
        assert!(eigen_relation_check(&plain, c64(0.5, 0.0), &h, 4, &zs).unwrap() <= 1e-12);

        let spec = kernel_spec();
        let lead = c64(exp(0.18), 0.0);
        let k = EntireWeight::kernel(c64(0.6, 0.0));
        let hk = EntireWeight::polynomial(alloc::vec![c64(-0.6, 0.0), c64(1.0, 0.0)]).mul(&k);
        for n in [1, 2, 4] {
            assert!(eigen_relation_check(&spec, lead, &k, n, &zs).unwrap() <= 1e-10);
            assert!(eigen_relation_check(&spec, lead * 0.5, &hk, n, &zs).unwrap() <= 1e-10);
        }
        // the constant function is not an eigenvector here
        let one = EntireWeight::one();
        assert!(eigen_relation_check(&spec, lead, &one, 1, &zs).unwrap() > 1e-3);
    }
}
