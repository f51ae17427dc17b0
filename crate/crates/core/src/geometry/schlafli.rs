use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::GeometryError;

/// Largest `p` or `q` accepted; keeps every exact count within `i64`.
pub const MAX_SIDES: u32 = 4096;

/// Sign of the curvature of the space a `{p,q}` tessellation lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Curvature {
    Spherical,
    Euclidean,
    Hyperbolic,
}

/// Regular tessellation by `p`-gons with `q` of them around each vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSymbol", into = "RawSymbol")]
pub struct SchlafliSymbol {
    p: u32,
    q: u32,
}

#[derive(Serialize, Deserialize)]
struct RawSymbol {
    p: u32,
    q: u32,
}

impl TryFrom<RawSymbol> for SchlafliSymbol {
    type Error = GeometryError;

    fn try_from(raw: RawSymbol) -> Result<Self, Self::Error> {
        SchlafliSymbol::new(raw.p, raw.q)
    }
}

impl From<SchlafliSymbol> for RawSymbol {
    fn from(s: SchlafliSymbol) -> Self {
        RawSymbol { p: s.p, q: s.q }
    }
}

impl SchlafliSymbol {
    pub fn new(p: u32, q: u32) -> Result<Self, GeometryError> {
        if p < 3 || q < 3 {
            return Err(GeometryError::InvalidSymbol { p, q });
        }
        if p > MAX_SIDES || q > MAX_SIDES {
            return Err(GeometryError::SymbolTooLarge { p, q });
        }
        Ok(SchlafliSymbol { p, q })
    }

    /// Edges per face.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Faces per vertex.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// `{q,p}`.
    pub fn dual(&self) -> Self {
        SchlafliSymbol { p: self.q, q: self.p }
    }

    /// `pq - 2p - 2q`; positive exactly for hyperbolic tessellations.
    pub fn excess(&self) -> i64 {
        let (p, q) = (i64::from(self.p), i64::from(self.q));
        p * q - 2 * p - 2 * q
    }

    pub fn curvature(&self) -> Curvature {
        match self.excess() {
            e if e > 0 => Curvature::Hyperbolic,
            0 => Curvature::Euclidean,
            _ => Curvature::Spherical,
        }
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.curvature() == Curvature::Hyperbolic
    }

    pub(crate) fn require_hyperbolic(&self) -> Result<(), GeometryError> {
        if self.is_hyperbolic() {
            Ok(())
        } else {
            Err(GeometryError::NotHyperbolic(*self))
        }
    }
}

impl fmt::Display for SchlafliSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.p, self.q)
    }
}

/// Accepts `{p,q}`, `{p, q}` and bare `p,q`.
impl FromStr for SchlafliSymbol {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GeometryError::ParseSymbol(s.to_owned());
        let trimmed = s.trim();
        let inner = match trimmed.strip_prefix('{') {
            Some(rest) => rest.strip_suffix('}').ok_or_else(bad)?,
            None => trimmed,
        };
        let (p, q) = inner.split_once(',').ok_or_else(bad)?;
        let p = p.trim().parse::<u32>().map_err(|_| bad())?;
        let q = q.trim().parse::<u32>().map_err(|_| bad())?;
        SchlafliSymbol::new(p, q)
    }
}
