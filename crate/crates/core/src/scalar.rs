//! Small complex/real helpers that work without `std`.

use crate::error::{FockError, Result};
use crate::C64;

/// Largest `x` with `exp(x)` finite.
pub const EXP_MAX: f64 = 709.782_712_893_384;

#[inline]
pub const fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn abs(z: C64) -> f64 {
    libm::hypot(z.re, z.im)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// `exp(x)` or an overflow error.
pub fn checked_exp(x: f64) -> Result<f64> {
    if x > EXP_MAX {
        Err(FockError::Overflow { exponent: x })
    } else {
        Ok(libm::exp(x))
    }
}

pub fn cexp(z: C64) -> C64 {
    let m = libm::exp(z.re);
    c64(m * libm::cos(z.im), m * libm::sin(z.im))
}

/// Complex exponential with the same overflow guard as [`checked_exp`].
pub fn checked_cexp(z: C64) -> Result<C64> {
    checked_exp(z.re)?;
    Ok(cexp(z))
}

/// Principal argument.
#[inline]
pub fn arg(z: C64) -> f64 {
    libm::atan2(z.im, z.re)
}

/// Unit complex number `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> C64 {
    c64(libm::cos(theta), libm::sin(theta))
}

/// `z^n` by binary exponentiation.
pub fn powi(z: C64, mut n: u64) -> C64 {
    let mut base = z;
    let mut acc = c64(1.0, 0.0);
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        base *= base;
        n >>= 1;
    }
    acc
}

#[inline]
pub fn close(z: C64, w: C64, eps: f64) -> bool {
    abs(z - w) <= eps
}

/// Largest entry modulus of a slice.
pub fn max_abs(v: &[C64]) -> f64 {
    v.iter().map(|z| abs(*z)).fold(0.0, f64::max)
}

pub fn norm2(v: &[C64]) -> f64 {
    sqrt(v.iter().map(|z| z.norm_sqr()).sum())
}
