use super::OracleError;
use crate::geometry::SchlafliSymbol;

/// Combinatorial closed surface: vertices, edges with two endpoints (loops
/// allowed), and faces given by their boundary edges with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceComplex {
    n_vertices: usize,
    edges: Vec<[usize; 2]>,
    faces: Vec<Vec<usize>>,
}

impl SurfaceComplex {
    /// Checks that every reference points at an existing cell. Closedness is
    /// a separate check, see [`SurfaceComplex::check_closed`].
    pub fn new(n_vertices: usize, edges: Vec<[usize; 2]>, faces: Vec<Vec<usize>>) -> Result<Self, OracleError> {
        for (e, ends) in edges.iter().enumerate() {
            if ends.iter().any(|&v| v >= n_vertices) {
                return Err(OracleError::DanglingReference(format!("edge {e}")));
            }
        }
        for (f, boundary) in faces.iter().enumerate() {
            if boundary.is_empty() || boundary.iter().any(|&e| e >= edges.len()) {
                return Err(OracleError::DanglingReference(format!("face {f}")));
            }
        }
        Ok(SurfaceComplex {
            n_vertices,
            edges,
            faces,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.n_vertices as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Number of face-boundary occurrences of each edge.
    pub fn edge_multiplicities(&self) -> Vec<usize> {
        let mut count = vec![0; self.edges.len()];
        for boundary in &self.faces {
            for &e in boundary {
                count[e] += 1;
            }
        }
        count
    }

    /// Every edge borders faces exactly twice and every face boundary is a
    /// cycle mod 2.
    pub fn check_closed(&self) -> Result<(), OracleError> {
        if let Some((edge, &count)) = self.edge_multiplicities().iter().enumerate().find(|(_, c)| **c != 2) {
            return Err(OracleError::NotClosedSurface { edge, count });
        }
        let mut parity = vec![false; self.n_vertices];
        for (f, boundary) in self.faces.iter().enumerate() {
            for &e in boundary {
                for v in self.edges[e] {
                    parity[v] ^= true;
                }
            }
            if parity.iter().any(|&odd| odd) {
                return Err(OracleError::OpenBoundary(f));
            }
        }
        Ok(())
    }

    /// Edge-ends at each vertex; a loop counts twice.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut degree = vec![0; self.n_vertices];
        for [u, v] in &self.edges {
            degree[*u] += 1;
            degree[*v] += 1;
        }
        degree
    }

    /// The two face incidences of each edge (equal for an edge that appears
    /// twice on one face). Requires a closed complex.
    pub(crate) fn dual_edges(&self) -> Vec<[usize; 2]> {
        let mut sides: Vec<Vec<usize>> = vec![Vec::with_capacity(2); self.edges.len()];
        for (f, boundary) in self.faces.iter().enumerate() {
            for &e in boundary {
                sides[e].push(f);
            }
        }
        sides.into_iter().map(|s| [s[0], s[1]]).collect()
    }

    /// All faces `p`-sided, all vertices of degree `q`, and `qV = 2E = pF`.
    pub fn verify_regularity(&self, sym: SchlafliSymbol) -> bool {
        let (p, q) = (sym.p() as usize, sym.q() as usize);
        self.faces.iter().all(|f| f.len() == p)
            && self.vertex_degrees().iter().all(|&d| d == q)
            && q * self.n_vertices == 2 * self.edges.len()
            && 2 * self.edges.len() == p * self.faces.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two triangles glued along their boundary: a sphere.
    fn sphere() -> SurfaceComplex {
        SurfaceComplex::new(3, vec![[0, 1], [1, 2], [2, 0]], vec![vec![0, 1, 2], vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn sphere_is_closed() {
        let s = sphere();
        assert_eq!(s.euler_characteristic(), 2);
        s.check_closed().unwrap();
        assert_eq!(s.vertex_degrees(), vec![2, 2, 2]);
        assert!(!s.verify_regularity(SchlafliSymbol::new(3, 3).unwrap()));
    }

    #[test]
    fn dangling_references() {
        assert!(SurfaceComplex::new(1, vec![[0, 1]], vec![]).is_err());
        assert!(SurfaceComplex::new(2, vec![[0, 1]], vec![vec![3]]).is_err());
        assert!(SurfaceComplex::new(2, vec![[0, 1]], vec![vec![]]).is_err());
    }

    #[test]
    fn open_and_unclosed() {
        let once = SurfaceComplex::new(3, vec![[0, 1], [1, 2], [2, 0]], vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(
            once.check_closed(),
            Err(OracleError::NotClosedSurface { edge: 0, count: 1 })
        );
        let path = SurfaceComplex::new(3, vec![[0, 1], [1, 2]], vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(path.check_closed(), Err(OracleError::OpenBoundary(0)));
    }
}
