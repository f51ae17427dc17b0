//! Side identifications of a polygon.
//!
//! Sides `s_1..s_N` and corners `c_1..c_N` are numbered counterclockwise from
//! one, with side `s_i` running from corner `c_i` to corner `c_{i+1}`.
//! A pair of sides is glued either as `a … a⁻¹` ([`Gluing::Preserving`],
//! start meets end) or as `a … a` ([`Gluing::Reversing`], start meets start).

use serde::{Deserialize, Serialize};

use super::GeometryError;
use crate::Orientability;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gluing {
    Preserving,
    Reversing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgePair {
    pub first: usize,
    pub second: usize,
    pub gluing: Gluing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPairing")]
pub struct EdgePairing {
    n_edges: usize,
    pairs: Vec<EdgePair>,
    #[serde(skip)]
    partner: Vec<(usize, Gluing)>,
}

#[derive(Deserialize)]
struct RawPairing {
    n_edges: usize,
    pairs: Vec<EdgePair>,
}

impl TryFrom<RawPairing> for EdgePairing {
    type Error = GeometryError;

    fn try_from(raw: RawPairing) -> Result<Self, Self::Error> {
        EdgePairing::new(raw.n_edges, raw.pairs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    Start,
    Finish,
}

impl EdgePairing {
    /// Validates that `pairs` is a perfect matching on `1..=n_edges`.
    pub fn new(n_edges: usize, pairs: Vec<EdgePair>) -> Result<Self, GeometryError> {
        if n_edges % 2 == 1 {
            return Err(GeometryError::OddEdgeCount(n_edges));
        }
        if n_edges == 0 {
            return Err(GeometryError::InvalidPairing("polygon has no sides".into()));
        }
        if pairs.len().checked_mul(2) != Some(n_edges) {
            return Err(GeometryError::InvalidPairing("some sides are unpaired".into()));
        }
        let mut partner = vec![(0, Gluing::Preserving); n_edges + 1];
        for pair in &pairs {
            for side in [pair.first, pair.second] {
                if side == 0 || side > n_edges {
                    return Err(GeometryError::InvalidPairing(format!("side {side} out of range")));
                }
                if partner[side].0 != 0 {
                    return Err(GeometryError::InvalidPairing(format!("side {side} paired twice")));
                }
            }
            if pair.first == pair.second {
                return Err(GeometryError::InvalidPairing(format!(
                    "side {} paired with itself",
                    pair.first
                )));
            }
            partner[pair.first] = (pair.second, pair.gluing);
            partner[pair.second] = (pair.first, pair.gluing);
        }
        Ok(EdgePairing {
            n_edges,
            pairs,
            partner,
        })
    }

    /// `a_1 a_1 a_2 a_2 … a_g a_g`.
    pub fn crosscap_word(g: usize) -> Result<Self, GeometryError> {
        let pairs = (0..g)
            .map(|i| EdgePair {
                first: 2 * i + 1,
                second: 2 * i + 2,
                gluing: Gluing::Reversing,
            })
            .collect();
        Self::new(2 * g, pairs)
    }

    /// `a_1 b_1 a_1⁻¹ b_1⁻¹ … a_h b_h a_h⁻¹ b_h⁻¹`.
    pub fn commutator_word(h: usize) -> Result<Self, GeometryError> {
        let pairs = (0..h)
            .flat_map(|j| {
                let o = 4 * j;
                [
                    EdgePair {
                        first: o + 1,
                        second: o + 3,
                        gluing: Gluing::Preserving,
                    },
                    EdgePair {
                        first: o + 2,
                        second: o + 4,
                        gluing: Gluing::Preserving,
                    },
                ]
            })
            .collect();
        Self::new(4 * h, pairs)
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    pub fn pairs(&self) -> &[EdgePair] {
        &self.pairs
    }

    /// Side glued to `side`, with the gluing type.
    pub fn partner(&self, side: usize) -> (usize, Gluing) {
        self.partner[side]
    }

    /// A single polygon glues to an orientable surface iff every letter
    /// occurs once with each exponent.
    pub fn is_orientable(&self) -> bool {
        self.pairs.iter().all(|p| p.gluing == Gluing::Preserving)
    }

    /// `V - E + F` of the quotient, with one face.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_cycles().len() as i64 - self.pairs.len() as i64 + 1
    }

    fn start(&self, side: usize) -> usize {
        side
    }

    fn finish(&self, side: usize) -> usize {
        side % self.n_edges + 1
    }

    fn previous(&self, corner: usize) -> usize {
        (corner + self.n_edges - 2) % self.n_edges + 1
    }

    /// Orbits of corners under the identifications, found by walking around
    /// each quotient vertex. Every cycle starts at its least corner; cycles are
    /// ordered by that corner.
    pub fn vertex_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n_edges;
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for first in 1..=n {
            if seen[first] {
                continue;
            }
            let mut cycle = Vec::new();
            // About to cross `side` at `corner`, which is its `end`.
            let initial = (first, first, End::Start);
            let mut state = initial;
            loop {
                let (corner, side, end) = state;
                if !seen[corner] {
                    seen[corner] = true;
                    cycle.push(corner);
                }
                let (other, gluing) = self.partner[side];
                let arrive = match (gluing, end) {
                    (Gluing::Reversing, e) => e,
                    (Gluing::Preserving, End::Start) => End::Finish,
                    (Gluing::Preserving, End::Finish) => End::Start,
                };
                state = match arrive {
                    End::Start => {
                        let c = self.start(other);
                        (c, self.previous(c), End::Finish)
                    }
                    End::Finish => {
                        let c = self.finish(other);
                        (c, c, End::Start)
                    }
                };
                if state == initial {
                    break;
                }
            }
            cycles.push(cycle);
        }
        cycles
    }
}

/// Pairs side `i` with side `i + N/2`.
///
/// Orientable polygons glue every pair as `a … a⁻¹`. For the non-orientable
/// convention the first pair is glued as `a … a` and the rest as `a … a⁻¹`:
/// that is the choice giving a single vertex cycle and Euler characteristic
/// `2 - N/2`. Reversing every pair instead is the antipodal map and always
/// yields the projective plane.
pub fn opposite_edge_pairing(n_edges: usize, orientability: Orientability) -> Result<EdgePairing, GeometryError> {
    if n_edges % 2 == 1 {
        return Err(GeometryError::OddEdgeCount(n_edges));
    }
    let half = n_edges / 2;
    let pairs = (1..=half)
        .map(|i| {
            let gluing = match orientability {
                Orientability::NonOrientable if i == 1 => Gluing::Reversing,
                _ => Gluing::Preserving,
            };
            EdgePair {
                first: i,
                second: i + half,
                gluing,
            }
        })
        .collect();
    EdgePairing::new(n_edges, pairs)
}

pub fn vertex_cycles(pairing: &EdgePairing) -> Vec<Vec<usize>> {
    pairing.vertex_cycles()
}
