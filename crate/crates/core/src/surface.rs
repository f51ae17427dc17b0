use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geometry::GeometryError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientability {
    Orientable,
    NonOrientable,
}

/// A closed connected surface, classified by genus and orientability.
///
/// For orientable surfaces the genus counts handles (`h`), for non-orientable
/// ones it counts cross-caps (`g`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSurface", into = "RawSurface")]
pub struct Surface {
    genus: u32,
    orientability: Orientability,
}

#[derive(Serialize, Deserialize)]
struct RawSurface {
    genus: u32,
    orientability: Orientability,
}

impl TryFrom<RawSurface> for Surface {
    type Error = GeometryError;

    fn try_from(raw: RawSurface) -> Result<Self, Self::Error> {
        Surface::new(raw.genus, raw.orientability)
    }
}

impl From<Surface> for RawSurface {
    fn from(s: Surface) -> Self {
        RawSurface {
            genus: s.genus,
            orientability: s.orientability,
        }
    }
}

impl Surface {
    /// Genus must be positive; the sphere is not a useful code surface here.
    pub fn new(genus: u32, orientability: Orientability) -> Result<Self, GeometryError> {
        if genus == 0 {
            return Err(GeometryError::InvalidGenus(genus));
        }
        Ok(Surface { genus, orientability })
    }

    pub fn orientable(h: u32) -> Result<Self, GeometryError> {
        Self::new(h, Orientability::Orientable)
    }

    pub fn non_orientable(g: u32) -> Result<Self, GeometryError> {
        Self::new(g, Orientability::NonOrientable)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn orientability(&self) -> Orientability {
        self.orientability
    }

    pub fn is_orientable(&self) -> bool {
        self.orientability == Orientability::Orientable
    }

    /// `2 - 2h` for orientable surfaces, `2 - g` otherwise.
    pub fn euler_characteristic(&self) -> i64 {
        let genus = i64::from(self.genus);
        match self.orientability {
            Orientability::Orientable => 2 - 2 * genus,
            Orientability::NonOrientable => 2 - genus,
        }
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.euler_characteristic() < 0
    }

    /// Rank of the first GF(2) homology group, `2 - χ`.
    pub fn first_betti_number_mod2(&self) -> u64 {
        (2 - self.euler_characteristic()) as u64
    }

    /// Number of sides of the one-vertex fundamental polygon: `4h` or `2g`.
    pub fn polygon_sides(&self) -> usize {
        let genus = self.genus as usize;
        match self.orientability {
            Orientability::Orientable => 4 * genus,
            Orientability::NonOrientable => 2 * genus,
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.orientability {
            Orientability::Orientable => write!(f, "orientable genus {}", self.genus),
            Orientability::NonOrientable => write!(f, "non-orientable genus {}", self.genus),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(Surface::orientable(1).unwrap().euler_characteristic(), 0);
        assert_eq!(Surface::non_orientable(5).unwrap().euler_characteristic(), -3);
        assert_eq!(Surface::orientable(2).unwrap().euler_characteristic(), -2);
        assert_eq!(Surface::non_orientable(1).unwrap().euler_characteristic(), 1);
    }

    #[test]
    fn hyperbolicity_threshold() {
        assert!(!Surface::orientable(1).unwrap().is_hyperbolic());
        assert!(Surface::orientable(2).unwrap().is_hyperbolic());
        assert!(!Surface::non_orientable(2).unwrap().is_hyperbolic());
        assert!(Surface::non_orientable(3).unwrap().is_hyperbolic());
    }

    #[test]
    fn zero_genus_rejected() {
        assert!(Surface::orientable(0).is_err());
        assert!(serde_json::from_str::<Surface>(r#"{"genus":0,"orientability":"orientable"}"#).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let s = Surface::non_orientable(7).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"genus":7,"orientability":"non-orientable"}"#);
        assert_eq!(serde_json::from_str::<Surface>(&json).unwrap(), s);
    }
}
