//! Code-parameter design: from a surface and a `{p,q}` tessellation to an
//! asymmetric surface-code record `[[n, k, d_z/d_x]]`.
//!
//! Integer quantities (faces, vertices, qubits, logical qubits) are computed
//! in exact rational arithmetic from the Euler characteristic; distances are
//! formula-derived estimates `⌈d_h / l⌉` unless an oracle confirms them.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{GeometryError, SchlafliSymbol};
use crate::Surface;

mod enumerate;
mod families;
mod figures;
mod params;
pub mod published;
mod theorems;

pub use enumerate::enumerate_admissible;
pub use families::{table5_closed_forms, ClosedForm, FamilyValues, TABLE5_FAMILIES};
pub use figures::{asymmetry_curve, rate_series, AsymmetryCurve, AsymmetryPoint, RatePoint};
pub use params::{
    admissibility, aqsc_parameters, face_count, is_admissible, CodeParameters, Provenance, TessellationCounts,
};
pub use theorems::{rate_ratio, theorem41_check, RateComparison};

pub type Rational = Ratio<i64>;

/// Why a `(surface, {p,q})` pair cannot carry a regular tessellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Inadmissible {
    SurfaceNotHyperbolic,
    SymbolNotHyperbolic,
    /// Area quotient is not an integer.
    FractionalFaces,
    /// `V = p·n_f/q` is not an integer.
    FractionalVertices,
}

impl Inadmissible {
    pub fn code(&self) -> &'static str {
        match self {
            Inadmissible::SurfaceNotHyperbolic | Inadmissible::SymbolNotHyperbolic => "NotHyperbolic",
            Inadmissible::FractionalFaces => "FractionalFaceCount",
            Inadmissible::FractionalVertices => "FractionalVertexCount",
        }
    }
}

impl std::fmt::Display for Inadmissible {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            Inadmissible::SurfaceNotHyperbolic => "surface is not hyperbolic",
            Inadmissible::SymbolNotHyperbolic => "tessellation is not hyperbolic",
            Inadmissible::FractionalFaces => "face count is not an integer",
            Inadmissible::FractionalVertices => "vertex count is not an integer",
        };
        f.write_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DesignError {
    #[error("the {0} is not hyperbolic")]
    SurfaceNotHyperbolic(Surface),
    #[error("{0} is not a hyperbolic tessellation")]
    SymbolNotHyperbolic(SchlafliSymbol),
    #[error("{symbol} does not tile the {surface}: {reason}")]
    NotAdmissible {
        surface: Surface,
        symbol: SchlafliSymbol,
        reason: Inadmissible,
    },
    #[error("{0} has no closed form")]
    UnsupportedSymbol(SchlafliSymbol),
    #[error("genus {0} is degenerate here; need g >= 3")]
    DegenerateGenus(u32),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
