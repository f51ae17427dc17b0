//! Asymmetric surface codes on `{p,q}`-tessellated closed surfaces.
//!
//! The crate is split along the lines of the computation:
//!
//! * [`geometry`] holds the hyperbolic-plane kernel: Gauss-Bonnet areas, edge
//!   lengths of regular tessellations, Möbius isometries of the upper half
//!   plane, and the combinatorics of fundamental-polygon edge pairings.
//! * [`design`] turns a surface and a Schläfli symbol into a code record
//!   `[[n, k, d_z/d_x]]`, enumerates admissible tessellations and checks the
//!   orientable / non-orientable comparison results as executable properties.
//! * [`oracle`] builds small cell complexes, derives CSS parity-check matrices
//!   over GF(2) and computes `k` and exact distances independently of the
//!   closed-form formulas.
//! * [`verify`] bundles the three into pass/fail reports.

pub mod design;
pub mod geometry;
pub mod oracle;
mod surface;
pub mod verify;

pub use design::{aqsc_parameters, face_count, is_admissible, CodeParameters, DesignError};
pub use geometry::{GeometryError, SchlafliSymbol};
pub use surface::{Orientability, Surface};
