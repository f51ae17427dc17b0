use serde::Serialize;

use super::{aqsc_parameters, rate_ratio, DesignError, Inadmissible, Rational};
use crate::geometry::SchlafliSymbol;
use crate::{Orientability, Surface};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AsymmetryPoint {
    pub genus: u32,
    pub d_z: u32,
    pub d_x: u32,
    /// `d_z - d_x`.
    pub gap: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AsymmetryCurve {
    pub symbol: SchlafliSymbol,
    pub points: Vec<AsymmetryPoint>,
    /// Genera the symbol does not tile, with the reason.
    pub skipped: Vec<(u32, Inadmissible)>,
}

impl AsymmetryCurve {
    pub fn is_nondecreasing(&self) -> bool {
        self.points.windows(2).all(|w| w[0].gap <= w[1].gap)
    }
}

pub fn asymmetry_curve(
    sym: SchlafliSymbol,
    genera: &[u32],
    orientability: Orientability,
) -> Result<AsymmetryCurve, DesignError> {
    let mut curve = AsymmetryCurve {
        symbol: sym,
        points: Vec::new(),
        skipped: Vec::new(),
    };
    for &genus in genera {
        match aqsc_parameters(Surface::new(genus, orientability)?, sym) {
            Ok(r) => curve.points.push(AsymmetryPoint {
                genus,
                d_z: r.d_z,
                d_x: r.d_x,
                gap: i64::from(r.d_z) - i64::from(r.d_x),
            }),
            Err(DesignError::NotAdmissible { reason, .. }) => curve.skipped.push((genus, reason)),
            Err(e) => return Err(e),
        }
    }
    Ok(curve)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RatePoint {
    pub symbol: SchlafliSymbol,
    pub genus: u32,
    pub r1: Rational,
    pub r2: Rational,
    pub ratio: Rational,
}

/// Orientable vs non-orientable rates for every `(family, genus)` pair.
pub fn rate_series(families: &[SchlafliSymbol], genera: &[u32]) -> Result<Vec<RatePoint>, DesignError> {
    let mut out = Vec::with_capacity(families.len() * genera.len());
    for &symbol in families {
        for &genus in genera {
            let cmp = rate_ratio(genus, symbol)?;
            out.push(RatePoint {
                symbol,
                genus,
                r1: cmp.r1,
                r2: cmp.r2,
                ratio: cmp.ratio,
            });
        }
    }
    Ok(out)
}
