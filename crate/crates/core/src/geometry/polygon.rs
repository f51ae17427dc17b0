use std::f64::consts::PI;

use num_complex::Complex64;

use super::{circumradius, GeometryError, Model, Point, SchlafliSymbol};

/// Corners of the regular `{p,q}` tile centered at the origin of the Poincaré
/// disk, counterclockwise from the positive real axis.
pub fn regular_polygon_vertices(sym: SchlafliSymbol) -> Result<Vec<Point>, GeometryError> {
    let radius = (circumradius(sym)? / 2.0).tanh();
    let p = sym.p();
    (0..p)
        .map(|k| {
            let theta = 2.0 * PI * f64::from(k) / f64::from(p);
            Point::disk(radius * theta.cos(), radius * theta.sin())
        })
        .collect()
}

/// Angle at `vertex` between the geodesics towards `a` and `b` (disk model).
///
/// The disk automorphism sending `vertex` to the origin straightens both
/// geodesics into radii, so the angle is read off as an argument difference.
pub fn angle_at(vertex: Point, a: Point, b: Point) -> Result<f64, GeometryError> {
    if [vertex.model(), a.model(), b.model()]
        .iter()
        .any(|m| *m != Model::PoincareDisk)
    {
        return Err(GeometryError::ModelMismatch);
    }
    let v = vertex.as_complex();
    let to_origin = |z: Complex64| (z - v) / (Complex64::new(1.0, 0.0) - v.conj() * z);
    let (wa, wb) = (to_origin(a.as_complex()), to_origin(b.as_complex()));
    Ok((wa / wb).arg().abs())
}
