use serde::Serialize;

use super::{aqsc_parameters, DesignError, Rational};
use crate::geometry::SchlafliSymbol;
use crate::Surface;

/// Encoding rates of the same `{p,q}` tessellation on the orientable (`r1`)
/// and non-orientable (`r2`) surfaces of genus `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RateComparison {
    pub r1: Rational,
    pub r2: Rational,
    pub ratio: Rational,
}

/// `r1 = g·e / (pq(g-1))`, `r2 = g·e / (pq(g-2))` with `e = pq - 2p - 2q`.
pub fn rate_ratio(g: u32, sym: SchlafliSymbol) -> Result<RateComparison, DesignError> {
    if g <= 2 {
        return Err(DesignError::DegenerateGenus(g));
    }
    if !sym.is_hyperbolic() {
        return Err(DesignError::SymbolNotHyperbolic(sym));
    }
    let genus = i64::from(g);
    let pq = i64::from(sym.p()) * i64::from(sym.q());
    let e = sym.excess();
    let r1 = Rational::new(genus * e, pq * (genus - 1));
    let r2 = Rational::new(genus * e, pq * (genus - 2));
    Ok(RateComparison { r1, r2, ratio: r1 / r2 })
}

/// Compares the orientable genus-`h` record with the non-orientable
/// genus-`2h` record. Errors when `sym` does not tile the orientable side.
pub fn theorem41_check(h: u32, sym: SchlafliSymbol) -> Result<bool, DesignError> {
    let orientable = aqsc_parameters(Surface::orientable(h)?, sym)?;
    let Ok(other) = aqsc_parameters(Surface::non_orientable(2 * h)?, sym) else {
        return Ok(false);
    };
    Ok(orientable.n_f == other.n_f
        && orientable.n == other.n
        && orientable.k == other.k
        && orientable.d_x == other.d_x
        && orientable.d_z == other.d_z)
}
