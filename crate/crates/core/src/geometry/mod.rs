//! Hyperbolic-plane kernel.
//!
//! Closed-form quantities (areas, edge lengths, opposite-edge distances) live
//! in [`measure`]; points, distances and isometries in [`point`] and
//! [`mobius`]; explicit regular polygons in the Poincaré disk in [`polygon`];
//! and edge-pairing combinatorics in [`pairing`].

use thiserror::Error;

mod measure;
mod mobius;
mod pairing;
mod point;
mod polygon;
mod schlafli;

pub use measure::{
    circumradius, edge_length, fundamental_polygon, inradius, opposite_edge_distance, polygon_area, triangle_area,
};
pub use mobius::MobiusTransform;
pub use pairing::{opposite_edge_pairing, vertex_cycles, EdgePair, EdgePairing, Gluing};
pub use point::{hyperbolic_distance, Model, Point};
pub use polygon::{angle_at, regular_polygon_vertices};
pub use schlafli::{Curvature, SchlafliSymbol, MAX_SIDES};

use crate::Surface;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("Schläfli symbol {{{p}, {q}}} needs p >= 3 and q >= 3")]
    InvalidSymbol { p: u32, q: u32 },
    #[error("Schläfli symbol {{{p}, {q}}} exceeds the limit of {max} sides", max = schlafli::MAX_SIDES)]
    SymbolTooLarge { p: u32, q: u32 },
    #[error("cannot parse Schläfli symbol from {0:?}")]
    ParseSymbol(String),
    #[error("surface genus must be positive, got {0}")]
    InvalidGenus(u32),
    #[error("angles must be non-negative, got {0}")]
    NegativeAngle(f64),
    #[error("angle sum {0} is not below π, so the triangle is not hyperbolic")]
    AngleSumNotHyperbolic(f64),
    #[error("{0} does not tessellate the hyperbolic plane")]
    NotHyperbolic(SchlafliSymbol),
    #[error("the {0} carries no hyperbolic metric")]
    NonHyperbolicSurface(Surface),
    #[error("a {0}-gon has no positive opposite-edge distance")]
    DegeneratePolygon(usize),
    #[error("edge pairings need an even number of edges, got {0}")]
    OddEdgeCount(usize),
    #[error("invalid edge pairing: {0}")]
    InvalidPairing(String),
    #[error("point ({x}, {y}) lies outside the {model:?} model")]
    InvalidPoint { x: f64, y: f64, model: Model },
    #[error("points belong to different models")]
    ModelMismatch,
    #[error("Möbius matrix has non-positive determinant {0}")]
    NonPositiveDeterminant(f64),
    #[error("the transform sends the point to the ideal boundary")]
    PoleAtPoint,
}
