use std::f64::consts::PI;

use super::{GeometryError, SchlafliSymbol};
use crate::Surface;

/// Gauss-Bonnet area `π - α - β - γ` of a geodesic triangle.
pub fn triangle_area(alpha: f64, beta: f64, gamma: f64) -> Result<f64, GeometryError> {
    for angle in [alpha, beta, gamma] {
        if angle.is_nan() || angle < 0.0 {
            return Err(GeometryError::NegativeAngle(angle));
        }
    }
    let sum = alpha + beta + gamma;
    if sum >= PI {
        return Err(GeometryError::AngleSumNotHyperbolic(sum));
    }
    Ok(PI - sum)
}

/// Area of one tile of the `{p,q}` tessellation, `π(pq - 2p - 2q)/q`.
pub fn polygon_area(sym: SchlafliSymbol) -> Result<f64, GeometryError> {
    sym.require_hyperbolic()?;
    Ok(PI * sym.excess() as f64 / f64::from(sym.q()))
}

/// The regular one-vertex fundamental polygon: `{4h,4h}` or `{2g,2g}`.
pub fn fundamental_polygon(surface: Surface) -> Result<SchlafliSymbol, GeometryError> {
    if !surface.is_hyperbolic() {
        return Err(GeometryError::NonHyperbolicSurface(surface));
    }
    let sides = surface.polygon_sides() as u32;
    SchlafliSymbol::new(sides, sides)
}

/// Side length of a `{p,q}` tile:
/// `cosh l = (cos²(π/q) + cos(2π/p)) / sin²(π/q)`.
pub fn edge_length(sym: SchlafliSymbol) -> Result<f64, GeometryError> {
    sym.require_hyperbolic()?;
    let (p, q) = (f64::from(sym.p()), f64::from(sym.q()));
    let s = (PI / q).sin();
    let c = (PI / q).cos();
    Ok(((c * c + (2.0 * PI / p).cos()) / (s * s)).acosh())
}

/// Distance from the center of a `{p,q}` tile to the midpoint of a side,
/// `cosh r = cos(π/q) / sin(π/p)`.
pub fn inradius(sym: SchlafliSymbol) -> Result<f64, GeometryError> {
    sym.require_hyperbolic()?;
    let (p, q) = (f64::from(sym.p()), f64::from(sym.q()));
    Ok(((PI / q).cos() / (PI / p).sin()).acosh())
}

/// Distance from the center of a `{p,q}` tile to a corner,
/// `cosh R = cot(π/p) cot(π/q)`.
pub fn circumradius(sym: SchlafliSymbol) -> Result<f64, GeometryError> {
    sym.require_hyperbolic()?;
    let (p, q) = (f64::from(sym.p()), f64::from(sym.q()));
    Ok((1.0 / ((PI / p).tan() * (PI / q).tan())).acosh())
}

/// Distance between opposite sides of the regular `{N,N}` polygon,
/// `2·arccosh(cot(π/N))`, i.e. twice its inradius.
pub fn opposite_edge_distance(n_gon: usize) -> Result<f64, GeometryError> {
    if n_gon % 2 == 1 {
        return Err(GeometryError::OddEdgeCount(n_gon));
    }
    if n_gon < 6 {
        return Err(GeometryError::DegeneratePolygon(n_gon));
    }
    let cot = 1.0 / (PI / n_gon as f64).tan();
    Ok(2.0 * cot.acosh())
}
