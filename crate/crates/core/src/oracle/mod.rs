//! Exact small-instance verification over GF(2).
//!
//! A [`SurfaceComplex`] is a closed surface cut into vertices, edges and
//! faces, with loops and repeated boundary edges allowed. Qubits sit on
//! edges; vertices carry X-type checks and faces Z-type checks, both read
//! mod 2. The logical count and the two distances are then computed without
//! reference to any closed-form formula.

use thiserror::Error;

mod builders;
mod complex;
mod confirm;
mod css;
mod distance;
mod format;
mod gf2;

pub use builders::{build_klein, build_polygon_code, build_projective, build_toric};
pub use complex::SurfaceComplex;
pub use confirm::confirm_record;
pub use css::{css_from_complex, logical_count, CssCode};
pub use distance::{
    brute_force_distances, cycle_distances, exhaustive_distances, DistanceMethod, Distances, EXHAUSTIVE_MAX_QUBITS,
};
pub use format::{parse_complex, write_complex, ParseError, ParseErrorKind};
pub use gf2::{gf2_rank, BinaryMatrix, RowSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("edge {edge} appears {count} times in face boundaries, expected 2")]
    NotClosedSurface { edge: usize, count: usize },
    #[error("boundary of face {0} is not a cycle mod 2")]
    OpenBoundary(usize),
    #[error("{0} refers to a cell that does not exist")]
    DanglingReference(String),
    #[error("code encodes no logical qubits")]
    NoLogicals,
    #[error("{0} qubits is too many for exhaustive search (limit {EXHAUSTIVE_MAX_QUBITS})")]
    TooManyQubits(usize),
    #[error("lattice size must be at least 2, got {0}")]
    LatticeTooSmall(usize),
    #[error("formula gives {formula}, explicit complex gives {oracle}")]
    RecordMismatch { formula: String, oracle: String },
}
