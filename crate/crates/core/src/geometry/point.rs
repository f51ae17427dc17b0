use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::GeometryError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    UpperHalfPlane,
    PoincareDisk,
}

/// A point of the hyperbolic plane in one of the two conformal models.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPoint")]
pub struct Point {
    x: f64,
    y: f64,
    model: Model,
}

#[derive(Deserialize)]
struct RawPoint {
    x: f64,
    y: f64,
    model: Model,
}

impl TryFrom<RawPoint> for Point {
    type Error = GeometryError;

    fn try_from(raw: RawPoint) -> Result<Self, Self::Error> {
        Point::new(raw.x, raw.y, raw.model)
    }
}

impl Point {
    pub fn new(x: f64, y: f64, model: Model) -> Result<Self, GeometryError> {
        let inside = match model {
            Model::UpperHalfPlane => x.is_finite() && y > 0.0 && y.is_finite(),
            Model::PoincareDisk => x * x + y * y < 1.0,
        };
        if !inside {
            return Err(GeometryError::InvalidPoint { x, y, model });
        }
        Ok(Point { x, y, model })
    }

    pub fn upper_half_plane(x: f64, y: f64) -> Result<Self, GeometryError> {
        Self::new(x, y, Model::UpperHalfPlane)
    }

    pub fn disk(x: f64, y: f64) -> Result<Self, GeometryError> {
        Self::new(x, y, Model::PoincareDisk)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub(crate) fn as_complex(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    pub(crate) fn from_complex(z: Complex64, model: Model) -> Result<Self, GeometryError> {
        Self::new(z.re, z.im, model)
    }

    /// Cayley transform `w = (z - i)/(z + i)` and its inverse.
    pub fn to_model(&self, model: Model) -> Result<Self, GeometryError> {
        let i = Complex64::i();
        let z = self.as_complex();
        match (self.model, model) {
            (a, b) if a == b => Ok(*self),
            (Model::UpperHalfPlane, Model::PoincareDisk) => Self::from_complex((z - i) / (z + i), model),
            _ => Self::from_complex(
                i * (Complex64::new(1.0, 0.0) + z) / (Complex64::new(1.0, 0.0) - z),
                model,
            ),
        }
    }
}

/// Hyperbolic distance, computed as `2·asinh(...)` for accuracy at short range.
pub fn hyperbolic_distance(a: Point, b: Point) -> Result<f64, GeometryError> {
    if a.model != b.model {
        return Err(GeometryError::ModelMismatch);
    }
    let delta = (a.as_complex() - b.as_complex()).norm();
    let scale = match a.model {
        Model::UpperHalfPlane => 2.0 * (a.y * b.y).sqrt(),
        Model::PoincareDisk => ((1.0 - a.as_complex().norm_sqr()) * (1.0 - b.as_complex().norm_sqr())).sqrt(),
    };
    Ok(2.0 * (delta / scale).asinh())
}
