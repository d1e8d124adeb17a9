//! Affine symbols `φ(z) = az + b`.
//!
//! These are the only symbols that give bounded composition operators on
//! the Fock space; boundedness itself (`|a| ≤ 1`) is checked by the
//! classifier, not here.

use crate::error::{FockError, Result};
use crate::scalar::{abs, c64, close};
use crate::C64;

/// Default tolerance for treating `|a|` as exactly 1.
pub const UNIT_CIRCLE_EPS: f64 = 1e-12;

/// Where the dilation coefficient `a` sits relative to the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiskPosition {
    Interior,
    UnitCircle,
    Exterior,
}

/// The map `z ↦ az + b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineSymbol {
    a: C64,
    b: C64,
}

impl AffineSymbol {
    pub const fn new(a: C64, b: C64) -> Self {
        Self { a, b }
    }

    pub const fn identity() -> Self {
        Self::new(c64(1.0, 0.0), c64(0.0, 0.0))
    }

    /// `z ↦ az`.
    pub const fn dilation(a: C64) -> Self {
        Self::new(a, c64(0.0, 0.0))
    }

    /// `z ↦ z + b`.
    pub const fn translation(b: C64) -> Self {
        Self::new(c64(1.0, 0.0), b)
    }

    pub const fn a(&self) -> C64 {
        self.a
    }

    pub const fn b(&self) -> C64 {
        self.b
    }

    #[inline]
    pub fn eval(&self, z: C64) -> C64 {
        self.a * z + self.b
    }

    /// `self ∘ inner`, i.e. `z ↦ self(inner(z))`.
    pub fn compose(&self, inner: &AffineSymbol) -> AffineSymbol {
        AffineSymbol::new(self.a * inner.a, self.a * inner.b + self.b)
    }

    /// The `n`-th iterate `φ ∘ … ∘ φ`; `iterate(0)` is the identity.
    ///
    /// Computed by repeated squaring of the map, which equals
    /// `(aⁿ, b(1 − aⁿ)/(1 − a))` but stays accurate as `a → 1`.
    pub fn iterate(&self, mut n: u64) -> AffineSymbol {
        let mut acc = AffineSymbol::identity();
        let mut base = *self;
        while n > 0 {
            if n & 1 == 1 {
                acc = base.compose(&acc);
            }
            base = base.compose(&base);
            n >>= 1;
        }
        acc
    }

    pub fn disk_position(&self, eps: f64) -> DiskPosition {
        let r = abs(self.a);
        if (r - 1.0).abs() <= eps {
            DiskPosition::UnitCircle
        } else if r < 1.0 {
            DiskPosition::Interior
        } else {
            DiskPosition::Exterior
        }
    }

    /// `a == 1` up to `eps`.
    pub fn is_unit_dilation(&self, eps: f64) -> bool {
        close(self.a, c64(1.0, 0.0), eps)
    }

    /// The finite fixed point `b/(1 − a)`.
    ///
    /// The identity map returns 0 by convention; a nontrivial translation
    /// has none.
    pub fn fixed_point(&self) -> Result<C64> {
        self.fixed_point_eps(0.0)
    }

    /// As [`fixed_point`](Self::fixed_point), treating `|a − 1| ≤ eps` as `a = 1`.
    pub fn fixed_point_eps(&self, eps: f64) -> Result<C64> {
        if self.is_unit_dilation(eps) {
            if self.b == c64(0.0, 0.0) {
                Ok(c64(0.0, 0.0))
            } else {
                Err(FockError::NoFiniteFixedPoint { b: self.b })
            }
        } else {
            Ok(self.b / (c64(1.0, 0.0) - self.a))
        }
    }
}

impl Default for AffineSymbol {
    fn default() -> Self {
        Self::identity()
    }
}

/// Free-function form of [`AffineSymbol::fixed_point`].
pub fn fixed_point(phi: &AffineSymbol) -> Result<C64> {
    phi.fixed_point()
}

/// Free-function form of [`AffineSymbol::iterate`].
pub fn iterate(phi: &AffineSymbol, n: u64) -> AffineSymbol {
    phi.iterate(n)
}
