//! Points of the real projective line, exactly and on the numeric circle.
//!
//! Canonical representatives make equality a field comparison: `(x/y : 1)`
//! when `y ≠ 0`, else `(1 : 0)`. The numeric chart is the homeomorphism
//! `ψ(x:y) = y/(x²+y²)·(x, y)` onto the circle of radius 1/2 centered at
//! `(0, 1/2)`; its compactness lets the branch tracker treat the point at
//! infinity like any other point.

use num_traits::{One, Zero};

use crate::forms::Matrix2;
use crate::rat::{rat_to_f64, Rat};
use crate::{Error, Result};

/// Canonical point of the projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjPoint {
    x: Rat,
    y: Rat,
}

impl ProjPoint {
    /// Canonicalizes an arbitrary nonzero representative.
    pub fn new(x: Rat, y: Rat) -> Result<Self> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroProjPoint);
        }
        if y.is_zero() {
            Ok(Self {
                x: Rat::one(),
                y: Rat::zero(),
            })
        } else {
            Ok(Self {
                x: x / y,
                y: Rat::one(),
            })
        }
    }

    /// `φ(x) = (x : 1)`.
    pub fn from_affine(x: Rat) -> Self {
        Self { x, y: Rat::one() }
    }

    /// The point `(1 : 0)`.
    pub fn infinity() -> Self {
        Self {
            x: Rat::one(),
            y: Rat::zero(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    /// The affine coordinate, when the point is not at infinity.
    pub fn to_affine(&self) -> Option<&Rat> {
        (!self.is_infinity()).then_some(&self.x)
    }

    pub fn coords(&self) -> (&Rat, &Rat) {
        (&self.x, &self.y)
    }

    /// `μ_A(x : y) = π(A·(x, y)ᵀ)`.
    pub fn moebius(&self, a: &Matrix2) -> ProjPoint {
        let (x, y) = a.apply(&self.x, &self.y);
        ProjPoint::new(x, y).expect("invertible matrix maps nonzero to nonzero")
    }

    /// Image under `ψ`, computed exactly and only then rounded.
    pub fn embed_circle(&self) -> NumProjPoint {
        if self.is_infinity() {
            return NumProjPoint { u: 0.0, v: 0.0 };
        }
        // canonical (x : 1): ψ = (x, 1)/(x² + 1)
        let denom = &self.x * &self.x + Rat::one();
        let u = &self.x / &denom;
        let v = denom.recip();
        NumProjPoint {
            u: rat_to_f64(&u),
            v: rat_to_f64(&v),
        }
    }
}

/// Floating image of a projective point on the `ψ` circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumProjPoint {
    pub u: f64,
    pub v: f64,
}

impl NumProjPoint {
    /// `ψ` applied to a floating affine coordinate.
    pub fn from_affine_f64(x: f64) -> Self {
        if !x.is_finite() {
            return Self { u: 0.0, v: 0.0 };
        }
        let denom = x * x + 1.0;
        // for very large x both coordinates underflow toward the image of ∞
        Self {
            u: x / denom,
            v: 1.0 / denom,
        }
    }

    pub fn infinity() -> Self {
        Self { u: 0.0, v: 0.0 }
    }
}

/// Euclidean distance in the `ψ` chart; bounded by the circle diameter 1.
pub fn chordal_distance(p: &NumProjPoint, q: &NumProjPoint) -> f64 {
    let du = p.u - q.u;
    let dv = p.v - q.v;
    (du * du + dv * dv).sqrt()
}
