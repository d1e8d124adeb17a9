//! Decay of `g(r) = |ψ(re^{−iθ})|² e^{r²(|a|²−1)}`, `θ = arg a`.
//!
//! `g(r)` is `‖C* k_w‖²` along the ray `w = re^{−iθ}`; its decay to zero
//! shows that `C*` is not bounded below on normalized kernels, so the
//! operator cannot have closed range when `|a| < 1`.

use alloc::vec::Vec;

use crate::classify::KernelOperator;
use crate::error::{FockError, Result};
use crate::scalar::{abs, arg, cis, exp, ln, sqrt};
use crate::symbol::DiskPosition;

/// Level below which the witness counts as decayed.
pub const WITNESS_LEVEL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessRow {
    pub r: f64,
    pub g: f64,
    pub log_g: f64,
}

/// Shape of `log g(r) = −α r² + β r + 2 ln|γ|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessProfile {
    /// `1 − |a|²`.
    pub alpha: f64,
    /// `2 Re(c̄ e^{−iθ})`.
    pub beta: f64,
    pub log_gamma2: f64,
    /// `g` is strictly decreasing for `r` beyond this.
    pub peak_r: f64,
}

impl WitnessProfile {
    pub fn new(op: &KernelOperator, unit_circle_eps: f64) -> Result<Self> {
        if op.symbol.disk_position(unit_circle_eps) != DiskPosition::Interior {
            return Err(FockError::WitnessUndefined);
        }
        let g = abs(op.gamma);
        if g == 0.0 {
            return Err(FockError::ZeroWeight);
        }
        let a = op.symbol.a();
        let theta = if a.norm_sqr() == 0.0 { 0.0 } else { arg(a) };
        let alpha = 1.0 - a.norm_sqr();
        let beta = 2.0 * (op.c.conj() * cis(-theta)).re;
        Ok(Self { alpha, beta, log_gamma2: 2.0 * ln(g), peak_r: (beta / (2.0 * alpha)).max(0.0) })
    }

    pub fn log_g(&self, r: f64) -> f64 {
        -self.alpha * r * r + self.beta * r + self.log_gamma2
    }

    /// Smallest `r* ≥ 0` with `g(r) ≤ level` for every `r ≥ r*`.
    pub fn threshold(&self, level: f64) -> f64 {
        let delta = self.log_gamma2 - ln(level);
        let disc = self.beta * self.beta + 4.0 * self.alpha * delta;
        if disc < 0.0 {
            return 0.0;
        }
        ((self.beta + sqrt(disc)) / (2.0 * self.alpha)).max(0.0)
    }
}

/// `log g(r)` evaluated in closed form.
pub fn witness_log_g(op: &KernelOperator, r: f64) -> Result<f64> {
    Ok(WitnessProfile::new(op, crate::symbol::UNIT_CIRCLE_EPS)?.log_g(r))
}

/// Witness table over `r_grid`.
pub fn closed_range_witness(op: &KernelOperator, r_grid: &[f64]) -> Result<Vec<WitnessRow>> {
    let profile = WitnessProfile::new(op, crate::symbol::UNIT_CIRCLE_EPS)?;
    Ok(r_grid
        .iter()
        .map(|&r| {
            let log_g = profile.log_g(r);
            WitnessRow { r, g: exp(log_g), log_g }
        })
        .collect())
}
