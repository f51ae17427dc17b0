use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{DesignError, Inadmissible, Rational};
use crate::geometry::{edge_length, opposite_edge_distance, SchlafliSymbol};
use crate::Surface;

/// Where the distances in a record come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// `⌈d_h / l⌉`; a lower-bound style estimate.
    Formula,
    /// Confirmed by exact distance computation on an explicit complex.
    Oracle,
}

/// Cell counts of a tessellation with `qV = 2E = pF`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TessellationCounts {
    pub faces: u64,
    pub edges: u64,
    pub vertices: u64,
}

/// `n_f = -2qχ / (pq - 2p - 2q)`, exactly.
///
/// This is the area quotient `μ(P′)/μ(P)` rewritten through Gauss-Bonnet,
/// since the fundamental polygon has area `-2πχ`.
pub fn face_count(surface: Surface, sym: SchlafliSymbol) -> Result<Rational, DesignError> {
    if !surface.is_hyperbolic() {
        return Err(DesignError::SurfaceNotHyperbolic(surface));
    }
    if !sym.is_hyperbolic() {
        return Err(DesignError::SymbolNotHyperbolic(sym));
    }
    let q = i64::from(sym.q());
    Ok(Rational::new(-2 * q * surface.euler_characteristic(), sym.excess()))
}

pub fn admissibility(surface: Surface, sym: SchlafliSymbol) -> Result<TessellationCounts, Inadmissible> {
    let faces = match face_count(surface, sym) {
        Ok(f) => f,
        Err(DesignError::SurfaceNotHyperbolic(_)) => return Err(Inadmissible::SurfaceNotHyperbolic),
        Err(_) => return Err(Inadmissible::SymbolNotHyperbolic),
    };
    if !faces.is_integer() || faces <= Rational::zero() {
        return Err(Inadmissible::FractionalFaces);
    }
    let (p, q) = (i64::from(sym.p()), i64::from(sym.q()));
    let vertices = faces * p / q;
    if !vertices.is_integer() {
        return Err(Inadmissible::FractionalVertices);
    }
    let edges = faces * p / 2;
    // χ is an integer, so integral F and V force integral E.
    debug_assert!(edges.is_integer());
    debug_assert_eq!(
        vertices - edges + faces,
        Rational::from_integer(surface.euler_characteristic())
    );
    Ok(TessellationCounts {
        faces: faces.to_integer() as u64,
        edges: edges.to_integer() as u64,
        vertices: vertices.to_integer() as u64,
    })
}

pub fn is_admissible(surface: Surface, sym: SchlafliSymbol) -> bool {
    admissibility(surface, sym).is_ok()
}

/// Full asymmetric surface-code record for a `{p,q}` tessellation of a
/// surface.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeParameters {
    pub surface: Surface,
    pub symbol: SchlafliSymbol,
    pub n_f: u64,
    pub vertices: u64,
    /// Physical qubits, one per edge.
    pub n: u64,
    /// Logical qubits, `2 - χ`.
    pub k: u64,
    /// Distance between opposite sides of the fundamental polygon.
    pub d_h: f64,
    pub l_pq: f64,
    pub l_qp: f64,
    pub d_x: u32,
    pub d_z: u32,
    pub provenance: Provenance,
}

impl CodeParameters {
    pub fn d(&self) -> u32 {
        self.d_x.min(self.d_z)
    }

    pub fn rate(&self) -> Rational {
        Rational::new(self.k as i64, self.n as i64)
    }

    /// `[[n, k, d_z/d_x]]`.
    pub fn notation(&self) -> String {
        format!("[[{}, {}, {}/{}]]", self.n, self.k, self.d_z, self.d_x)
    }
}

impl fmt::Display for CodeParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on the {}: {}", self.symbol, self.surface, self.notation())
    }
}

/// Slack below an integer that still counts as that integer when ceiling a
/// length ratio. `{N,N}` tiles of their own surface have ratio exactly one.
const CEIL_SLACK: f64 = 1e-9;

fn ceil_ratio(length: f64, unit: f64) -> u32 {
    ((length / unit) - CEIL_SLACK).ceil() as u32
}

pub fn aqsc_parameters(surface: Surface, sym: SchlafliSymbol) -> Result<CodeParameters, DesignError> {
    let counts = admissibility(surface, sym).map_err(|reason| DesignError::NotAdmissible {
        surface,
        symbol: sym,
        reason,
    })?;
    let d_h = opposite_edge_distance(surface.polygon_sides())?;
    let l_pq = edge_length(sym)?;
    let l_qp = edge_length(sym.dual())?;
    let k = surface.first_betti_number_mod2();
    debug_assert!(
        Rational::from_integer(counts.edges as i64) * 2
            == Rational::from_integer(counts.faces as i64) * i64::from(sym.p())
    );
    Ok(CodeParameters {
        surface,
        symbol: sym,
        n_f: counts.faces,
        vertices: counts.vertices,
        n: counts.edges,
        k,
        d_h,
        l_pq,
        l_qp,
        d_x: ceil_ratio(d_h, l_pq),
        d_z: ceil_ratio(d_h, l_qp),
        provenance: Provenance::Formula,
    })
}
