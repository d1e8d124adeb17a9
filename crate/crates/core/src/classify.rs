//! Closed-form verdicts for `C_{γK_c, az+b}`.
//!
//! For scaled-kernel weights every question the toolkit asks has an exact
//! answer in terms of `(γ, c, a, b)`: boundedness, compactness, normality
//! (equivalently hyponormality, cohyponormality and normaloidness),
//! closed range, the norm and the eigenvalue bound.

use crate::error::{FockError, Result};
use crate::matrix::OperatorSpec;
use crate::scalar::{abs, c64, close, exp};
use crate::symbol::{AffineSymbol, DiskPosition, UNIT_CIRCLE_EPS};
use crate::weight::EntireWeight;
use crate::C64;

/// Default tolerance for `c == critical_c(a, b)`.
pub const CRITICAL_EPS: f64 = 1e-12;

/// `C_{γK_c, φ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelOperator {
    pub gamma: C64,
    pub c: C64,
    pub symbol: AffineSymbol,
}

impl KernelOperator {
    pub const fn new(gamma: C64, c: C64, symbol: AffineSymbol) -> Self {
        Self { gamma, c, symbol }
    }

    pub fn from_parts(gamma: C64, c: C64, a: C64, b: C64) -> Self {
        Self::new(gamma, c, AffineSymbol::new(a, b))
    }

    /// Fails with `UnsupportedWeight` unless the weight is `γK_c`.
    pub fn from_spec(spec: &OperatorSpec) -> Result<Self> {
        let (gamma, c) = spec.weight.as_scaled_kernel().ok_or(FockError::UnsupportedWeight)?;
        Ok(Self::new(gamma, c, spec.symbol))
    }

    pub fn spec(&self) -> OperatorSpec {
        OperatorSpec::new(EntireWeight::scaled_kernel(self.gamma, self.c), self.symbol)
    }

    /// `ψ(z) = γ e^{c̄z}`.
    pub fn weight_at(&self, z: C64) -> Result<C64> {
        EntireWeight::scaled_kernel(self.gamma, self.c).eval(z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyOptions {
    /// `||a| − 1| ≤ unit_circle_eps` counts as `|a| = 1`; also used for `a = 1`.
    pub unit_circle_eps: f64,
    /// Absolute tolerance for weight-parameter equalities.
    pub critical_eps: f64,
}

impl ClassifyOptions {
    /// Bit-exact comparisons only.
    pub const EXACT: Self = Self { unit_circle_eps: 0.0, critical_eps: 0.0 };
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { unit_circle_eps: UNIT_CIRCLE_EPS, critical_eps: CRITICAL_EPS }
    }
}

/// Full verdict for one operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassificationReport {
    pub bounded: bool,
    pub compact: bool,
    pub unitary_multiple: bool,
    pub normal: bool,
    pub hyponormal: bool,
    pub cohyponormal: bool,
    pub normaloid: bool,
    pub closed_range: bool,
    pub exact_norm: Option<f64>,
    pub fixed_point: Option<C64>,
    pub eigenvalue_bound: Option<f64>,
    pub critical_c: C64,
    /// `γ = 0`: the zero operator.
    pub degenerate: bool,
}

/// The weight parameter making `C_{K_c, az+b}` normal:
/// `b(ā−1)/(a−1)` for `a ≠ 1`, and `−b` for `a = 1`.
pub fn critical_c(a: C64, b: C64) -> C64 {
    critical_c_eps(a, b, UNIT_CIRCLE_EPS)
}

pub fn critical_c_eps(a: C64, b: C64, eps: f64) -> C64 {
    let one = c64(1.0, 0.0);
    if close(a, one, eps) {
        -b
    } else {
        b * (a.conj() - one) / (a - one)
    }
}

/// Boundedness on the unit circle forces `c = −āb`.
fn unit_circle_compatible(op: &KernelOperator, opts: &ClassifyOptions) -> bool {
    let a = op.symbol.a();
    close(op.c, -(a.conj() * op.symbol.b()), opts.critical_eps)
}

pub fn is_bounded(op: &KernelOperator, opts: &ClassifyOptions) -> bool {
    if op.gamma == C64::default() {
        return true;
    }
    match op.symbol.disk_position(opts.unit_circle_eps) {
        DiskPosition::Interior => true,
        DiskPosition::UnitCircle => unit_circle_compatible(op, opts),
        DiskPosition::Exterior => false,
    }
}

pub fn classify(op: &KernelOperator, opts: &ClassifyOptions) -> ClassificationReport {
    let a = op.symbol.a();
    let b = op.symbol.b();
    let crit = critical_c_eps(a, b, opts.unit_circle_eps);
    let position = op.symbol.disk_position(opts.unit_circle_eps);
    let fixed_point = op.symbol.fixed_point_eps(opts.unit_circle_eps).ok();

    if op.gamma == C64::default() {
        return ClassificationReport {
            bounded: true,
            compact: true,
            unitary_multiple: false,
            normal: true,
            hyponormal: true,
            cohyponormal: true,
            normaloid: true,
            closed_range: false,
            exact_norm: Some(0.0),
            fixed_point,
            eigenvalue_bound: (position == DiskPosition::Interior).then_some(0.0),
            critical_c: crit,
            degenerate: true,
        };
    }

    let bounded = is_bounded(op, opts);
    let compact = bounded && position == DiskPosition::Interior;
    let unitary_multiple = bounded && position == DiskPosition::UnitCircle;
    // On the unit circle the critical parameter coincides with −āb, so every
    // bounded operator there is normal.
    let normal = bounded && (unitary_multiple || close(op.c, crit, opts.critical_eps));

    ClassificationReport {
        bounded,
        compact,
        unitary_multiple,
        normal,
        hyponormal: normal,
        cohyponormal: normal,
        normaloid: normal,
        closed_range: unitary_multiple,
        exact_norm: exact_norm(op, opts).ok(),
        fixed_point,
        eigenvalue_bound: eigenvalue_bound(op, opts).ok(),
        critical_c: crit,
        degenerate: false,
    }
}

/// Classifies a general spec; only scaled-kernel weights are supported.
pub fn classify_spec(spec: &OperatorSpec, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    Ok(classify(&KernelOperator::from_spec(spec)?, opts))
}

/// Exact operator norm.
///
/// * `|a| < 1`: `|γ| · |e^{c̄b/(1−a)}| · e^{|s|²/(2(1−|a|²))}` with the
///   residual translation `s = c(1−a)/(ā−1) + b`. The first factor is
///   `|ψ(p)|` at the fixed point `p = b/(1−a)`.
/// * `|a| = 1, a ≠ 1`: `|γ| · |e^{|b|²/(1−ā)}|`.
/// * `a = 1`: `|γ| · e^{|b|²/2}`.
pub fn exact_norm(op: &KernelOperator, opts: &ClassifyOptions) -> Result<f64> {
    let g = abs(op.gamma);
    if g == 0.0 {
        return Ok(0.0);
    }
    if !is_bounded(op, opts) {
        return Err(FockError::Unbounded);
    }
    let one = c64(1.0, 0.0);
    let a = op.symbol.a();
    let b = op.symbol.b();
    let log_norm = match op.symbol.disk_position(opts.unit_circle_eps) {
        DiskPosition::Interior => {
            let shift = op.c * (one - a) / (a.conj() - one) + b;
            (op.c.conj() * b / (one - a)).re + 0.5 * shift.norm_sqr() / (1.0 - a.norm_sqr())
        }
        DiskPosition::UnitCircle if op.symbol.is_unit_dilation(opts.unit_circle_eps) => {
            0.5 * b.norm_sqr()
        }
        DiskPosition::UnitCircle => (c64(b.norm_sqr(), 0.0) / (one - a.conj())).re,
        DiskPosition::Exterior => return Err(FockError::Unbounded),
    };
    let norm = g * crate::scalar::checked_exp(log_norm)?;
    Ok(norm)
}

/// `|ψ(b/(1−a))| = |γ e^{c̄b/(1−a)}|`, the bound on eigenvalue moduli for `|a| < 1`.
pub fn eigenvalue_bound(op: &KernelOperator, opts: &ClassifyOptions) -> Result<f64> {
    if op.symbol.disk_position(opts.unit_circle_eps) != DiskPosition::Interior {
        return Err(FockError::EigenvalueBoundUndefined);
    }
    let one = c64(1.0, 0.0);
    let p = op.symbol.b() / (one - op.symbol.a());
    Ok(abs(op.gamma) * exp((op.c.conj() * p).re))
}
