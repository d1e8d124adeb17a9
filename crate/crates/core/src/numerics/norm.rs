use super::linalg::max_singular_value;
use super::{ConvergenceRecord, NumericsConfig};
use crate::error::Result;
use crate::matrix::{build_matrix, OperatorSpec};

/// Inner dimensions tried by [`op_norm_estimate`].
const LADDER: [usize; 8] = [16, 32, 48, 64, 96, 128, 192, 256];

/// Largest singular value of the `outer × inner` truncation.
pub fn op_norm_at(spec: &OperatorSpec, inner: usize, outer: usize) -> Result<f64> {
    max_singular_value(build_matrix(spec, outer, inner)?.entries())
}

/// Norm of the restriction to `span{e_0..e_{N−1}}` with the outer
/// dimension doubled until the singular value settles.
pub(crate) fn resolved_norm(spec: &OperatorSpec, inner: usize, cfg: &NumericsConfig) -> Result<(f64, usize)> {
    let mut outer = cfg.first_outer(inner);
    let mut value = op_norm_at(spec, inner, outer)?;
    while outer < cfg.max_outer {
        let next = (outer * 2).min(cfg.max_outer);
        let v = op_norm_at(spec, inner, next)?;
        let settled = (v - value).abs() <= cfg.block_tol * v.max(1.0);
        outer = next;
        value = v;
        if settled {
            break;
        }
    }
    Ok((value, outer))
}

/// A norm estimate with its convergence history.
#[derive(Debug, Clone, PartialEq)]
pub struct NormEstimate {
    pub value: f64,
    pub record: ConvergenceRecord,
}

/// Largest singular value over a ladder of inner dimensions ending at
/// `cfg.max_inner`, stopping once
/// successive values differ by at most `conv_tol` (relative to
/// `max(1, value)`). A ladder that runs out is reported through
/// `record.converged == false`, not as an error.
pub fn op_norm_estimate(spec: &OperatorSpec, cfg: &NumericsConfig) -> Result<NormEstimate> {
    let mut record = ConvergenceRecord::default();
    let ladder = LADDER.iter().copied().filter(|&n| n < cfg.max_inner).chain(core::iter::once(cfg.max_inner));
    for inner in ladder {
        let (value, outer) = resolved_norm(spec, inner, cfg)?;
        record.push(inner, outer, value);
        if record.settle(cfg.conv_tol * value.max(1.0)) {
            break;
        }
    }
    let value = record.last().unwrap_or(0.0);
    Ok(NormEstimate { value, record })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{exact_norm, ClassifyOptions, KernelOperator};
    use crate::scalar::{c64, exp};
    use crate::symbol::AffineSymbol;

    #[test]
    fn diagonal_norm_is_one() {
        let spec = OperatorSpec::composition(AffineSymbol::dilation(c64(0.5, 0.0)));
        assert_eq!(op_norm_at(&spec, 16, 16).unwrap(), 1.0);
        let est = op_norm_estimate(&spec, &NumericsConfig::default()).unwrap();
        assert!((est.value - 1.0).abs() < 1e-14);
        assert!(est.record.converged);
    }

    #[test]
    fn composition_norm_matches_closed_form() {
        let spec = OperatorSpec::composition(AffineSymbol::new(c64(0.5, 0.0), c64(0.3, 0.0)));
        let (value, _) = resolved_norm(&spec, 64, &NumericsConfig::default()).unwrap();
        assert!((value - exp(0.06)).abs() < 1e-8);
        let est = op_norm_estimate(&spec, &NumericsConfig::default()).unwrap();
        assert!(est.record.converged);
        assert_eq!(est.record.dims.len(), est.record.values.len());
        assert!((est.value - 1.061837).abs() < 1e-6);
    }

    #[test]
    fn weighted_norm_matches_closed_form() {
        let op = KernelOperator::from_parts(c64(1.0, 0.0), c64(0.3, 0.0), c64(0.5, 0.0), c64(0.3, 0.0));
        let exact = exact_norm(&op, &ClassifyOptions::default()).unwrap();
        let est = op_norm_estimate(&op.spec(), &NumericsConfig::default()).unwrap();
        assert!((est.value - exact).abs() < 1e-8 * exact);
    }

    #[test]
    fn unit_circle_norms_resolve() {
        let cfg = NumericsConfig::default();
        for (a, b, c, target) in [
            (c64(0.0, 1.0), c64(1.0, 0.0), c64(0.0, 1.0), exp(0.5)),
            (c64(1.0, 0.0), c64(2.0, 0.0), c64(-2.0, 0.0), exp(2.0)),
        ] {
            let op = KernelOperator::from_parts(c64(1.0, 0.0), c, a, b);
            let (value, _) = resolved_norm(&op.spec(), 48, &cfg).unwrap();
            assert!((value - target).abs() < 1e-10 * target, "{a} {b}: {value}");
        }
    }
}
