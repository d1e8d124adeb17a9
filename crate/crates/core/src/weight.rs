//! Entire weights of the form `ψ(z) = γ · p(z) · e^{c̄z}`.
//!
//! `p` is a polynomial (monomial coefficients) and `e^{c̄z} = K_c(z)` is the
//! reproducing kernel at `c`. The class is closed under everything the
//! Weyl conjugation and operator products need: products, argument shifts,
//! affine substitution and multiplication by `e^{dz}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::scalar::{abs, c64, checked_cexp, exp, ln, powi, sqrt};
use crate::symbol::AffineSymbol;
use crate::vector::FockVector;
use crate::C64;

const ONE: C64 = c64(1.0, 0.0);
const ZERO: C64 = c64(0.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct EntireWeight {
    gamma: C64,
    poly: Vec<C64>,
    kernel: C64,
}

impl EntireWeight {
    /// `γ · (Σ poly[k] z^k) · K_c`. Trailing zero coefficients are dropped
    /// and a constant polynomial is folded into `γ`.
    pub fn new(gamma: C64, poly: Vec<C64>, kernel: C64) -> Self {
        let mut w = Self { gamma, poly, kernel };
        w.normalize();
        w
    }

    /// `ψ ≡ 1`.
    pub fn one() -> Self {
        Self::constant(ONE)
    }

    pub fn constant(gamma: C64) -> Self {
        Self::new(gamma, vec![ONE], ZERO)
    }

    /// `K_c(z) = e^{c̄z}`.
    pub fn kernel(c: C64) -> Self {
        Self::scaled_kernel(ONE, c)
    }

    pub fn scaled_kernel(gamma: C64, c: C64) -> Self {
        Self::new(gamma, vec![ONE], c)
    }

    /// `k_u = e^{−|u|²/2} K_u`.
    pub fn normalized_kernel(u: C64) -> Self {
        Self::scaled_kernel(c64(exp(-u.norm_sqr() / 2.0), 0.0), u)
    }

    pub fn polynomial(coeffs: Vec<C64>) -> Self {
        Self::new(ONE, coeffs, ZERO)
    }

    fn normalize(&mut self) {
        while self.poly.len() > 1 && *self.poly.last().unwrap() == ZERO {
            self.poly.pop();
        }
        if self.poly.is_empty() {
            self.poly.push(ZERO);
        }
        if self.poly.len() == 1 {
            self.gamma *= self.poly[0];
            self.poly[0] = ONE;
        }
        if self.gamma == ZERO {
            self.poly = vec![ONE];
            self.kernel = ZERO;
        }
    }

    pub fn gamma(&self) -> C64 {
        self.gamma
    }

    pub fn poly(&self) -> &[C64] {
        &self.poly
    }

    /// The kernel parameter `c` (not `c̄`).
    pub fn kernel_param(&self) -> C64 {
        self.kernel
    }

    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.gamma == ZERO
    }

    pub fn is_one(&self) -> bool {
        self.gamma == ONE && self.degree() == 0 && self.kernel == ZERO
    }

    /// `Some((γ, c))` when `ψ = γK_c`.
    pub fn as_scaled_kernel(&self) -> Option<(C64, C64)> {
        (self.degree() == 0).then_some((self.gamma, self.kernel))
    }

    fn poly_at(&self, z: C64) -> C64 {
        self.poly.iter().rev().fold(ZERO, |acc, p| acc * z + *p)
    }

    /// `ψ(z)`.
    pub fn eval(&self, z: C64) -> Result<C64> {
        let e = checked_cexp(self.kernel.conj() * z)?;
        Ok(self.gamma * self.poly_at(z) * e)
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::new(self.gamma * s, self.poly.clone(), self.kernel)
    }

    /// Pointwise product; kernel parameters add (`K_{c1}K_{c2} = K_{c1+c2}`).
    pub fn mul(&self, other: &EntireWeight) -> Self {
        let mut poly = vec![ZERO; self.poly.len() + other.poly.len() - 1];
        for (i, p) in self.poly.iter().enumerate() {
            for (j, q) in other.poly.iter().enumerate() {
                poly[i + j] += *p * *q;
            }
        }
        Self::new(self.gamma * other.gamma, poly, self.kernel + other.kernel)
    }

    /// Multiplies by `e^{dz}`, i.e. `c ↦ c + d̄`.
    pub fn mul_exp(&self, d: C64) -> Self {
        Self::new(self.gamma, self.poly.clone(), self.kernel + d.conj())
    }

    /// `z ↦ ψ(z − u)`.
    pub fn shift(&self, u: C64) -> Self {
        let gamma = self.gamma * crate::scalar::cexp(-self.kernel.conj() * u);
        Self::new(gamma, substitute(&self.poly, ONE, -u), self.kernel)
    }

    /// `z ↦ ψ(az + b)`.
    pub fn compose_affine(&self, phi: &AffineSymbol) -> Self {
        let cc = self.kernel.conj();
        let gamma = self.gamma * crate::scalar::cexp(cc * phi.b());
        // e^{c̄(az+b)} = e^{c̄b} K_{c·ā}
        let kernel = self.kernel * phi.a().conj();
        Self::new(gamma, substitute(&self.poly, phi.a(), phi.b()), kernel)
    }

    /// Taylor coefficients in the `e_n` basis, `0 ≤ n < dim`.
    ///
    /// Convolves `p` with `c̄ⁿ/n!` and rescales by `√n!`, using the
    /// recurrence `T_k(m+1) = T_k(m)·c̄·√(m+1)/(m+1−k)` for each monomial
    /// `z^k K_c` so nothing overflows.
    pub fn taylor(&self, dim: usize) -> FockVector {
        let cc = self.kernel.conj();
        let mut coeffs = vec![ZERO; dim];
        for (k, p) in self.poly.iter().enumerate() {
            if *p == ZERO || k >= dim {
                continue;
            }
            let mut t = c64(sqrt_factorial(k), 0.0);
            coeffs[k] += *p * t;
            for m in k..dim - 1 {
                t = t * cc * sqrt((m + 1) as f64) / ((m + 1 - k) as f64);
                coeffs[m + 1] += *p * t;
            }
        }
        for z in coeffs.iter_mut() {
            *z *= self.gamma;
        }
        FockVector::with_tail_bound(coeffs, self.taylor_tail_bound(dim))
    }

    /// Bound on `Σ_{n ≥ dim} |ψ_n|²` from the triangle inequality over the
    /// monomials and a geometric majorant of each `z^k K_c` tail.
    pub fn taylor_tail_bound(&self, dim: usize) -> f64 {
        let r2 = self.kernel.norm_sqr();
        let mut total = 0.0;
        for (k, p) in self.poly.iter().enumerate() {
            if *p == ZERO {
                continue;
            }
            let m0 = dim.saturating_sub(k);
            let first = if r2 == 0.0 {
                if m0 == 0 {
                    exp(libm::lgamma((k + 1) as f64))
                } else {
                    0.0
                }
            } else {
                let m = m0 as f64;
                exp(m * ln(r2) + libm::lgamma(m + k as f64 + 1.0) - 2.0 * libm::lgamma(m + 1.0))
            };
            if first == 0.0 {
                continue;
            }
            let ratio = r2 * (m0 + k + 1) as f64 / (((m0 + 1) * (m0 + 1)) as f64);
            if ratio >= 1.0 {
                return f64::INFINITY;
            }
            total += abs(*p) * sqrt(first / (1.0 - ratio));
        }
        let g = abs(self.gamma) * total;
        g * g
    }

    /// Applies the multiplication operator `f ↦ ψ·f` to a coefficient
    /// vector in the `e_n` basis, truncated to its length.
    ///
    /// Uses the creation operator `Z e_m = √(m+1) e_{m+1}`:
    /// `ψ·f = γ p(Z) exp(c̄Z) f`. `Z` only raises indices, so the
    /// truncated result is exact.
    pub fn apply(&self, f: &[C64]) -> Vec<C64> {
        let len = f.len();
        let mut out = f.to_vec();
        let cc = self.kernel.conj();
        if cc != ZERO && len > 1 {
            let mut term = f.to_vec();
            let min_steps = abs(cc) * sqrt(len as f64) + 1.0;
            for k in 1..len {
                raise(&mut term);
                let s = cc / (k as f64);
                let mut term_max: f64 = 0.0;
                let mut out_max: f64 = 0.0;
                for (o, t) in out.iter_mut().zip(term.iter_mut()) {
                    *t *= s;
                    *o += *t;
                    term_max = term_max.max(t.norm_sqr());
                    out_max = out_max.max(o.norm_sqr());
                }
                if term_max == 0.0 || ((k as f64) > min_steps && term_max <= 1e-36 * out_max) {
                    break;
                }
            }
        }
        if self.degree() > 0 {
            let base = out.clone();
            let mut acc: Vec<C64> = base.iter().map(|z| *z * self.poly[self.degree()]).collect();
            for p in self.poly[..self.degree()].iter().rev() {
                raise(&mut acc);
                for (a, b) in acc.iter_mut().zip(base.iter()) {
                    *a += *b * *p;
                }
            }
            out = acc;
        }
        if self.gamma != ONE {
            for z in out.iter_mut() {
                *z *= self.gamma;
            }
        }
        out
    }
}

/// In-place `v ↦ Zv` (truncated).
fn raise(v: &mut [C64]) {
    for m in (1..v.len()).rev() {
        v[m] = v[m - 1] * sqrt(m as f64);
    }
    if let Some(first) = v.first_mut() {
        *first = ZERO;
    }
}

fn sqrt_factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * sqrt(k as f64))
}

/// Monomial coefficients of `p(az + b)`.
fn substitute(poly: &[C64], a: C64, b: C64) -> Vec<C64> {
    let mut out = vec![ZERO; poly.len()];
    for (k, p) in poly.iter().enumerate() {
        if *p == ZERO {
            continue;
        }
        // (az+b)^k = Σ_j C(k,j) a^j b^{k−j} z^j
        let mut binom = 1.0;
        for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
            if j > 0 {
                binom = binom * ((k + 1 - j) as f64) / (j as f64);
            }
            *slot += *p * binom * powi(a, j as u64) * powi(b, (k - j) as u64);
        }
    }
    out
}

/// Free-function form of [`EntireWeight::eval`].
pub fn eval_weight(psi: &EntireWeight, z: C64) -> Result<C64> {
    psi.eval(z)
}

/// Free-function form of [`EntireWeight::taylor`].
pub fn weight_taylor(psi: &EntireWeight, dim: usize) -> FockVector {
    psi.taylor(dim)
}
