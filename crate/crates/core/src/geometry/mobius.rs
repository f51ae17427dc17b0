use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{GeometryError, Model, Point};

/// Orientation-preserving isometry `z ↦ (az + b)/(cz + d)` of the upper half
/// plane, stored normalized to `ad - bc = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMobius")]
pub struct MobiusTransform {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

#[derive(Deserialize)]
struct RawMobius {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl TryFrom<RawMobius> for MobiusTransform {
    type Error = GeometryError;

    /// Already-normalized entries are kept bit for bit.
    fn try_from(raw: RawMobius) -> Result<Self, Self::Error> {
        let normalized = MobiusTransform::new(raw.a, raw.b, raw.c, raw.d)?;
        let kept = MobiusTransform {
            a: raw.a,
            b: raw.b,
            c: raw.c,
            d: raw.d,
        };
        if (kept.determinant() - 1.0).abs() <= 1e-12 {
            Ok(kept)
        } else {
            Ok(normalized)
        }
    }
}

impl MobiusTransform {
    pub const IDENTITY: MobiusTransform = MobiusTransform {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    /// Scales the matrix to unit determinant. Matrices with `ad - bc <= 0`
    /// do not preserve the upper half plane and are rejected.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self, GeometryError> {
        let det = a * d - b * c;
        if det <= 0.0 || !det.is_finite() {
            return Err(GeometryError::NonPositiveDeterminant(det));
        }
        let s = det.sqrt().recip();
        Ok(MobiusTransform {
            a: a * s,
            b: b * s,
            c: c * s,
            d: d * s,
        })
    }

    pub fn entries(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn determinant(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, z: Point) -> Result<Point, GeometryError> {
        if z.model() != Model::UpperHalfPlane {
            return Err(GeometryError::ModelMismatch);
        }
        let w = z.as_complex();
        let den = Complex64::new(self.c, 0.0) * w + self.d;
        if den.norm() == 0.0 {
            return Err(GeometryError::PoleAtPoint);
        }
        let image = (Complex64::new(self.a, 0.0) * w + self.b) / den;
        Point::from_complex(image, Model::UpperHalfPlane)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MobiusTransform) -> MobiusTransform {
        MobiusTransform {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn inverse(&self) -> MobiusTransform {
        MobiusTransform {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Entrywise comparison up to the sign ambiguity of PSL₂(ℝ).
    pub fn approx_eq(&self, other: &MobiusTransform, tol: f64) -> bool {
        let x = self.entries();
        let y = other.entries();
        let same = x.iter().zip(&y).all(|(u, v)| (u - v).abs() <= tol);
        let flipped = x.iter().zip(&y).all(|(u, v)| (u + v).abs() <= tol);
        same || flipped
    }
}

impl Mul for MobiusTransform {
    type Output = MobiusTransform;

    fn mul(self, rhs: MobiusTransform) -> MobiusTransform {
        self.compose(&rhs)
    }
}
