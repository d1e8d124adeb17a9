//! Truncated matrices of weighted composition operators in the `e_n` basis.
//!
//! `C_{ψ,φ} f = ψ·(f∘φ)` with `φ(z) = az + b`. Column `n` of a truncation
//! holds the `e_m` coefficients (`m < M`) of `ψ·(az+b)ⁿ/√n!`. The domain is
//! `span{e_0..e_{N−1}}` and the range is resolved to an outer dimension
//! `M ≥ N`, since products and adjoints of truncations are only right when
//! the range is resolved.

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};

use crate::error::{FockError, Result};
use crate::scalar::{c64, cexp, checked_exp, exp, sqrt};
use crate::symbol::AffineSymbol;
use crate::weight::EntireWeight;
use crate::C64;

/// Everything needed to describe `C_{ψ,φ}`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSpec {
    pub weight: EntireWeight,
    pub symbol: AffineSymbol,
}

impl OperatorSpec {
    pub fn new(weight: EntireWeight, symbol: AffineSymbol) -> Self {
        Self { weight, symbol }
    }

    /// Plain composition operator `C_φ`.
    pub fn composition(symbol: AffineSymbol) -> Self {
        Self::new(EntireWeight::one(), symbol)
    }

    pub fn identity() -> Self {
        Self::composition(AffineSymbol::identity())
    }

    /// `C_{γK_c, φ}`.
    pub fn scaled_kernel(gamma: C64, c: C64, symbol: AffineSymbol) -> Self {
        Self::new(EntireWeight::scaled_kernel(gamma, c), symbol)
    }

    /// `(C_{ψ,φ} f)(z)` for a closed-form `f`.
    pub fn apply_closed_form(&self, f: &EntireWeight) -> EntireWeight {
        self.weight.mul(&f.compose_affine(&self.symbol))
    }
}

/// An `M × N` truncation of an operator.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedOperator {
    entries: DMatrix<C64>,
    spec: OperatorSpec,
}

impl TruncatedOperator {
    pub fn outer_dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn inner_dim(&self) -> usize {
        self.entries.ncols()
    }

    pub fn entries(&self) -> &DMatrix<C64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<C64> {
        self.entries
    }

    /// `⟨C e_n, e_m⟩`.
    pub fn entry(&self, m: usize, n: usize) -> C64 {
        self.entries[(m, n)]
    }

    pub fn spec(&self) -> &OperatorSpec {
        &self.spec
    }

    /// Leading `k × k` block.
    pub fn principal_block(&self, k: usize) -> DMatrix<C64> {
        self.entries.view((0, 0), (k, k)).into_owned()
    }
}

/// Default outer dimension for an inner truncation `N`: `N + max(32, N/2)`.
pub fn default_outer(inner: usize) -> usize {
    inner + (inner / 2).max(32)
}

/// Builds the `outer × inner` truncation of `spec`.
///
/// With `b = 0` the columns are `ψ·aⁿ e_n`. Otherwise the operator is
/// factored as
///
/// ```text
/// C_{γpK_c, az+b} = γ e^{|b|²/2} · M_{p·K_{c+āb}} · C_{az} · W_{−b}
/// ```
///
/// with the Weyl unitary taken from its Laguerre closed form, so no column
/// is formed as a large cancelling sum. On the unit circle with `c = −āb`
/// the multiplier is the identity.
pub fn build_matrix(spec: &OperatorSpec, outer: usize, inner: usize) -> Result<TruncatedOperator> {
    if inner == 0 || outer < inner {
        return Err(FockError::InvalidDimension { outer, inner });
    }
    let a = spec.symbol.a();
    let b = spec.symbol.b();
    let zero = C64::default();
    let mut entries = DMatrix::<C64>::zeros(outer, inner);

    if b == zero {
        let mut q = vec![zero; outer];
        let mut power = c64(1.0, 0.0);
        for n in 0..inner {
            if n > 0 {
                power *= a;
                q[n - 1] = zero;
            }
            q[n] = power;
            let column = if spec.weight.is_one() { q.clone() } else { spec.weight.apply(&q) };
            entries.set_column(n, &DVector::from_vec(column));
        }
        return Ok(TruncatedOperator { entries, spec: spec.clone() });
    }

    let shift = displacement(-b.conj(), outer, inner);
    let scale = checked_exp(b.norm_sqr() / 2.0)?;
    let multiplier = spec.weight.mul_exp(a * b.conj()).scale(c64(scale, 0.0));
    let mut dilation = vec![c64(1.0, 0.0); outer];
    for m in 1..outer {
        dilation[m] = dilation[m - 1] * a;
    }
    for n in 0..inner {
        let column: Vec<C64> = shift.column(n).iter().zip(dilation.iter()).map(|(w, d)| *w * *d).collect();
        let column = if multiplier.is_one() { column } else { multiplier.apply(&column) };
        entries.set_column(n, &DVector::from_vec(column));
    }
    Ok(TruncatedOperator { entries, spec: spec.clone() })
}

/// `outer × inner` block of the displacement `D(α) = e^{αZ − ᾱZ*}`, where
/// `Z` multiplies by `z`. The Weyl unitary is `W_u = D(ū)`.
///
/// For `m ≥ n`, `⟨D e_n, e_m⟩ = e^{−|α|²/2} α^{m−n} √(n!/m!) L_n^{(m−n)}(|α|²)`
/// and for `m < n` the same with `(−ᾱ)^{n−m}` and the roles of `m, n`
/// swapped. Each diagonal is filled by the three-term Laguerre recurrence
/// on the normalized values `g_j = √(j!/(j+k)!) L_j^{(k)}`:
///
/// ```text
/// g_{j+1} = ((2j+1+k−x) g_j − √(j(j+k)) g_{j−1}) / √((j+1)(j+1+k))
/// ```
pub fn displacement(alpha: C64, outer: usize, inner: usize) -> DMatrix<C64> {
    let x = alpha.norm_sqr();
    let mut out = DMatrix::<C64>::zeros(outer, inner);
    let base = exp(-x / 2.0);
    let mut lower_seed = c64(base, 0.0);
    let mut upper_seed = c64(base, 0.0);
    let minus_conj = -alpha.conj();
    for k in 0..outer.max(inner) {
        if k > 0 {
            let root = sqrt(k as f64);
            lower_seed = lower_seed * alpha / root;
            upper_seed = upper_seed * minus_conj / root;
        }
        // m = n + k
        if k < outer {
            let len = inner.min(outer - k);
            fill_diagonal(k, x, lower_seed, len, |j, v| out[(j + k, j)] = v);
        }
        // n = m + k
        if k > 0 && k < inner {
            let len = outer.min(inner - k);
            fill_diagonal(k, x, upper_seed, len, |j, v| out[(j, j + k)] = v);
        }
    }
    out
}

fn fill_diagonal(k: usize, x: f64, seed: C64, len: usize, mut put: impl FnMut(usize, C64)) {
    if len == 0 {
        return;
    }
    let kf = k as f64;
    let mut prev = C64::default();
    let mut cur = seed;
    put(0, cur);
    for j in 0..len.saturating_sub(1) {
        let jf = j as f64;
        let next = (cur * (2.0 * jf + 1.0 + kf - x) - prev * sqrt(jf * (jf + kf)))
            / sqrt((jf + 1.0) * (jf + 1.0 + kf));
        prev = cur;
        cur = next;
        put(j + 1, cur);
    }
}

/// Spec of the Weyl unitary `W_u = C_{k_u, z−u}`.
pub fn weyl_spec(u: C64) -> OperatorSpec {
    OperatorSpec::new(EntireWeight::normalized_kernel(u), AffineSymbol::translation(-u))
}

/// Square truncation of `W_u`.
pub fn weyl_matrix(u: C64, dim: usize) -> Result<TruncatedOperator> {
    if dim == 0 {
        return Err(FockError::InvalidDimension { outer: dim, inner: dim });
    }
    Ok(TruncatedOperator { entries: displacement(u.conj(), dim, dim), spec: weyl_spec(u) })
}

/// `C_{az+b}* = C_{K_b, āz}`.
///
/// Only meaningful for `|a| ≤ 1`, where `C_φ` is bounded.
pub fn adjoint_spec(phi: &AffineSymbol) -> OperatorSpec {
    OperatorSpec::new(EntireWeight::kernel(phi.b()), AffineSymbol::dilation(phi.a().conj()))
}

/// The product `first · second`, i.e.
/// `C_{ψ1,φ1} C_{ψ2,φ2} = C_{ψ1·(ψ2∘φ1), φ2∘φ1}`.
pub fn compose_specs(first: &OperatorSpec, second: &OperatorSpec) -> OperatorSpec {
    let weight = first.weight.mul(&second.weight.compose_affine(&first.symbol));
    OperatorSpec::new(weight, second.symbol.compose(&first.symbol))
}

/// `W_u C_{ψ,φ} W_u*` as a weighted composition operator.
///
/// The symbol becomes `az + u(1−a) + b` and the weight
/// `e^{−|u|²} e^{ūz} ψ(z−u) e^{−ū(az − au + b)}`.
pub fn weyl_conjugate(spec: &OperatorSpec, u: C64) -> OperatorSpec {
    let a = spec.symbol.a();
    let b = spec.symbol.b();
    let one = c64(1.0, 0.0);
    let uc = u.conj();
    let constant = cexp(-u.norm_sqr() * (one - a) - uc * b);
    let weight = spec.weight.shift(u).mul_exp(uc * (one - a)).scale(constant);
    let symbol = AffineSymbol::new(a, u * (one - a) + b);
    OperatorSpec::new(weight, symbol)
}
