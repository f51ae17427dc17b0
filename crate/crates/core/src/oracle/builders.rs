//! Explicit complexes: square lattices on the torus, Klein bottle and
//! projective plane, and single-face fundamental-polygon complexes.
//!
//! The lattices start from the grid points `(x, y)`, `0 <= x, y <= l`, of an
//! `l × l` square and glue opposite sides:
//!
//! * left/right: `(l, y) ~ (0, y)`, or `(l, y) ~ (0, l - y)` when twisted;
//! * bottom/top: `(x, l) ~ (x, 0)`, or `(x, l) ~ (l - x, 0)` when twisted.
//!
//! No twist gives the torus, one twist (left/right) the Klein bottle, and two
//! twists the antipodal gluing of the projective plane.

use std::collections::BTreeMap;

use super::{OracleError, SurfaceComplex};
use crate::geometry::opposite_edge_pairing;
use crate::Surface;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum GridEdge {
    /// From `(x, y)` to `(x + 1, y)`.
    Horizontal(usize, usize),
    /// From `(x, y)` to `(x, y + 1)`.
    Vertical(usize, usize),
}

fn glued_square(l: usize, twist_sides: bool, twist_ends: bool) -> Result<SurfaceComplex, OracleError> {
    if l < 2 {
        return Err(OracleError::LatticeTooSmall(l));
    }
    let side = l + 1;
    let point = |x: usize, y: usize| y * side + x;

    let mut points = UnionFind::new(side * side);
    for y in 0..=l {
        let image = if twist_sides { l - y } else { y };
        points.union(point(l, y), point(0, image));
    }
    for x in 0..=l {
        let image = if twist_ends { l - x } else { x };
        points.union(point(x, l), point(image, 0));
    }

    // Representative of each edge class: edges on the top row and right
    // column are sent to their images on the bottom row and left column.
    let canonical = |e: GridEdge| match e {
        GridEdge::Horizontal(x, y) if y == l => GridEdge::Horizontal(if twist_ends { l - 1 - x } else { x }, 0),
        GridEdge::Vertical(x, y) if x == l => GridEdge::Vertical(0, if twist_sides { l - 1 - y } else { y }),
        other => other,
    };
    let ends = |e: GridEdge| match e {
        GridEdge::Horizontal(x, y) => (point(x, y), point(x + 1, y)),
        GridEdge::Vertical(x, y) => (point(x, y), point(x, y + 1)),
    };

    let mut vertex_ids = BTreeMap::new();
    for y in 0..=l {
        for x in 0..=l {
            let root = points.find(point(x, y));
            let next = vertex_ids.len();
            vertex_ids.entry(root).or_insert(next);
        }
    }

    let mut edge_ids: BTreeMap<GridEdge, usize> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut faces = Vec::with_capacity(l * l);
    for y in 0..l {
        for x in 0..l {
            let sides = [
                GridEdge::Horizontal(x, y),
                GridEdge::Vertical(x + 1, y),
                GridEdge::Horizontal(x, y + 1),
                GridEdge::Vertical(x, y),
            ];
            let mut boundary = Vec::with_capacity(4);
            for s in sides {
                let c = canonical(s);
                let id = *edge_ids.entry(c).or_insert_with(|| {
                    let (a, b) = ends(c);
                    edges.push([vertex_ids[&points.find(a)], vertex_ids[&points.find(b)]]);
                    edges.len() - 1
                });
                boundary.push(id);
            }
            faces.push(boundary);
        }
    }
    SurfaceComplex::new(vertex_ids.len(), edges, faces)
}

/// `l × l` square lattice on the torus: `V = l²`, `E = 2l²`, `F = l²`.
pub fn build_toric(l: usize) -> Result<SurfaceComplex, OracleError> {
    glued_square(l, false, false)
}

/// `l × l` square lattice on the Klein bottle.
pub fn build_klein(l: usize) -> Result<SurfaceComplex, OracleError> {
    glued_square(l, true, false)
}

/// `l × l` square lattice on the projective plane.
pub fn build_projective(l: usize) -> Result<SurfaceComplex, OracleError> {
    glued_square(l, true, true)
}

/// The fundamental polygon as a one-face complex: the `4h`-gon or `2g`-gon
/// with opposite sides identified. Edge `i` of the complex is the `i`-th
/// side pair; vertices are the vertex cycles.
pub fn build_polygon_code(surface: Surface) -> SurfaceComplex {
    let pairing = opposite_edge_pairing(surface.polygon_sides(), surface.orientability())
        .expect("polygon side counts are even and positive");
    let n = pairing.n_edges();
    let mut vertex_of = vec![0; n + 1];
    for (id, cycle) in pairing.vertex_cycles().iter().enumerate() {
        for &corner in cycle {
            vertex_of[corner] = id;
        }
    }
    let n_vertices = pairing.vertex_cycles().len();
    let mut edge_of_side = vec![0; n + 1];
    let mut edges = Vec::with_capacity(n / 2);
    for (id, pair) in pairing.pairs().iter().enumerate() {
        edge_of_side[pair.first] = id;
        edge_of_side[pair.second] = id;
        edges.push([vertex_of[pair.first], vertex_of[pair.first % n + 1]]);
    }
    let boundary = (1..=n).map(|side| edge_of_side[side]).collect();
    SurfaceComplex::new(n_vertices, edges, vec![boundary]).expect("ids are in range by construction")
}
