//! Exact code distances.
//!
//! `d_x` is the least weight of a vector in `ker H_x` outside the row space
//! of `H_z`, i.e. a homologically nontrivial cycle of the primal graph;
//! `d_z` is the same with the roles of `H_x` and `H_z` swapped, a nontrivial
//! cycle of the dual graph.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::gf2::words_for;
use super::{css_from_complex, BinaryMatrix, CssCode, OracleError, RowSpace, SurfaceComplex};

/// Largest `n` accepted by [`exhaustive_distances`].
pub const EXHAUSTIVE_MAX_QUBITS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMethod {
    Exhaustive,
    Cycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distances {
    pub d_x: usize,
    pub d_z: usize,
    pub method: DistanceMethod,
}

fn to_words(mask: u64, n: usize) -> Vec<u64> {
    let mut v = vec![0; words_for(n)];
    if !v.is_empty() {
        v[0] = mask;
    }
    v
}

/// Least weight in `ker checks` outside `span(stabilisers)`, by weight order.
fn min_nontrivial_by_weight(n: usize, checks: &BinaryMatrix, stabilisers: &RowSpace) -> Option<usize> {
    for weight in 1..=n {
        let mut mask: u64 = (1 << weight) - 1;
        let limit: u64 = 1 << n;
        while mask < limit {
            let v = to_words(mask, n);
            if checks.annihilates(&v) && !stabilisers.contains(&v) {
                return Some(weight);
            }
            // Next mask with the same popcount.
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }
    None
}

fn require_logicals(code: &CssCode) -> Result<(), OracleError> {
    if code.logical_count() == 0 {
        Err(OracleError::NoLogicals)
    } else {
        Ok(())
    }
}

/// Enumerates vectors in order of weight. Limited to
/// [`EXHAUSTIVE_MAX_QUBITS`] qubits.
pub fn exhaustive_distances(code: &CssCode) -> Result<Distances, OracleError> {
    if code.n > EXHAUSTIVE_MAX_QUBITS {
        return Err(OracleError::TooManyQubits(code.n));
    }
    require_logicals(code)?;
    let d_x = min_nontrivial_by_weight(code.n, &code.h_x, &RowSpace::new(&code.h_z));
    let d_z = min_nontrivial_by_weight(code.n, &code.h_z, &RowSpace::new(&code.h_x));
    match (d_x, d_z) {
        (Some(d_x), Some(d_z)) => Ok(Distances {
            d_x,
            d_z,
            method: DistanceMethod::Exhaustive,
        }),
        _ => Err(OracleError::NoLogicals),
    }
}

/// Graph with edge ids; `ends[e]` are the two endpoints of edge `e`.
struct Graph {
    adjacency: Vec<Vec<(usize, usize)>>,
    ends: Vec<[usize; 2]>,
}

impl Graph {
    fn new(n_nodes: usize, ends: Vec<[usize; 2]>) -> Self {
        let mut adjacency = vec![Vec::new(); n_nodes];
        for (e, &[u, v]) in ends.iter().enumerate() {
            adjacency[u].push((v, e));
            if u != v {
                adjacency[v].push((u, e));
            }
        }
        Graph { adjacency, ends }
    }

    /// BFS from `root`: depth and the tree edge leading to each node.
    fn bfs(&self, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
        let mut depth = vec![usize::MAX; self.adjacency.len()];
        let mut parent = vec![None; self.adjacency.len()];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, e) in &self.adjacency[u] {
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    parent[v] = Some(e);
                    queue.push_back(v);
                }
            }
        }
        (depth, parent)
    }

    fn walk_to_root(&self, mut node: usize, parent: &[Option<usize>], v: &mut [u64]) {
        while let Some(e) = parent[node] {
            v[e / 64] ^= 1 << (e % 64);
            let [a, b] = self.ends[e];
            node = if a == node { b } else { a };
        }
    }

    /// Least weight of a cycle outside `trivial`, searched over the
    /// candidates `P(r, u) + e + P(v, r)` for every root `r` and edge `e`.
    fn min_nontrivial_cycle(&self, trivial: &RowSpace) -> Option<usize> {
        let n_edges = self.ends.len();
        let trees: Vec<_> = (0..self.adjacency.len()).map(|r| self.bfs(r)).collect();
        let mut candidates = Vec::new();
        for (r, (depth, _)) in trees.iter().enumerate() {
            for (e, &[u, v]) in self.ends.iter().enumerate() {
                if depth[u] != usize::MAX {
                    candidates.push((depth[u] + depth[v] + 1, r, e));
                }
            }
        }
        candidates.sort_unstable();
        let mut vector = vec![0u64; words_for(n_edges)];
        for (_, r, e) in candidates {
            vector.iter_mut().for_each(|w| *w = 0);
            let [u, v] = self.ends[e];
            let parent = &trees[r].1;
            self.walk_to_root(u, parent, &mut vector);
            self.walk_to_root(v, parent, &mut vector);
            vector[e / 64] ^= 1 << (e % 64);
            if !trivial.contains(&vector) {
                return Some(vector.iter().map(|w| w.count_ones() as usize).sum());
            }
        }
        None
    }
}

/// Shortest nontrivial cycles of the primal graph (`d_x`) and of the dual
/// graph (`d_z`).
pub fn cycle_distances(complex: &SurfaceComplex) -> Result<Distances, OracleError> {
    let code = css_from_complex(complex)?;
    require_logicals(&code)?;
    let primal = Graph::new(complex.n_vertices(), complex.edges().to_vec());
    let dual = Graph::new(complex.n_faces(), complex.dual_edges());
    let d_x = primal.min_nontrivial_cycle(&RowSpace::new(&code.h_z));
    let d_z = dual.min_nontrivial_cycle(&RowSpace::new(&code.h_x));
    match (d_x, d_z) {
        (Some(d_x), Some(d_z)) => Ok(Distances {
            d_x,
            d_z,
            method: DistanceMethod::Cycle,
        }),
        _ => Err(OracleError::NoLogicals),
    }
}

/// Exhaustive search when the code is small enough, the cycle search
/// otherwise.
pub fn brute_force_distances(complex: &SurfaceComplex) -> Result<Distances, OracleError> {
    let code = css_from_complex(complex)?;
    if code.n <= EXHAUSTIVE_MAX_QUBITS {
        exhaustive_distances(&code)
    } else {
        cycle_distances(complex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{build_klein, build_polygon_code, build_projective, build_toric};
    use crate::Surface;

    /// Every vector, no ordering tricks.
    fn naive(n: usize, checks: &BinaryMatrix, stabilisers: &BinaryMatrix) -> usize {
        let span = RowSpace::new(stabilisers);
        (1u64..1 << n)
            .filter(|&m| {
                let v = to_words(m, n);
                checks.annihilates(&v) && !span.contains(&v)
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn small_complexes() -> Vec<SurfaceComplex> {
        let mut out = vec![
            build_toric(2).unwrap(),
            build_toric(3).unwrap(),
            build_klein(2).unwrap(),
        ];
        out.push(build_klein(3).unwrap());
        out.push(build_projective(2).unwrap());
        out.push(build_projective(3).unwrap());
        for genus in 1..=5 {
            out.push(build_polygon_code(Surface::orientable(genus).unwrap()));
            out.push(build_polygon_code(Surface::non_orientable(genus).unwrap()));
        }
        out
    }

    #[test]
    fn toric_distance_equals_lattice_size() {
        for l in 2..=4 {
            let c = build_toric(l).unwrap();
            let code = css_from_complex(&c).unwrap();
            assert_eq!(code.n, 2 * l * l);
            let d = cycle_distances(&c).unwrap();
            assert_eq!((d.d_x, d.d_z), (l, l));
            if code.n <= EXHAUSTIVE_MAX_QUBITS {
                let e = exhaustive_distances(&code).unwrap();
                assert_eq!((e.d_x, e.d_z), (l, l));
            }
        }
        for l in 5..=8 {
            let d = cycle_distances(&build_toric(l).unwrap()).unwrap();
            assert_eq!((d.d_x, d.d_z), (l, l));
        }
    }

    #[test]
    fn methods_agree_on_small_codes() {
        for c in small_complexes() {
            let code = css_from_complex(&c).unwrap();
            if code.n > 20 {
                continue;
            }
            let e = exhaustive_distances(&code).unwrap();
            let y = cycle_distances(&c).unwrap();
            assert_eq!((e.d_x, e.d_z), (y.d_x, y.d_z), "{c:?}");
            if code.n <= 18 {
                assert_eq!(e.d_x, naive(code.n, &code.h_x, &code.h_z));
                assert_eq!(e.d_z, naive(code.n, &code.h_z, &code.h_x));
            }
        }
    }

    #[test]
    fn polygon_codes_have_unit_distance() {
        for genus in 1..=8 {
            for s in [
                Surface::orientable(genus).unwrap(),
                Surface::non_orientable(genus).unwrap(),
            ] {
                let d = brute_force_distances(&build_polygon_code(s)).unwrap();
                assert_eq!((d.d_x, d.d_z), (1, 1));
            }
        }
    }

    /// A nontrivial loop runs from `(x, 0)` to `(l - x, l)`, length
    /// `l + |l - 2x|`. Primal loops have integer `x`, dual loops half-integer.
    #[test]
    fn projective_plane_distances() {
        for l in 2..=7 {
            let c = build_projective(l).unwrap();
            let d = cycle_distances(&c).unwrap();
            assert_eq!((d.d_x, d.d_z), (l + l % 2, l + 1 - l % 2), "l = {l}");
            let code = css_from_complex(&c).unwrap();
            if code.n <= 18 {
                let e = exhaustive_distances(&code).unwrap();
                assert_eq!((e.d_x, e.d_z), (d.d_x, d.d_z));
            }
        }
    }

    #[test]
    fn limits() {
        let big = css_from_complex(&build_toric(4).unwrap()).unwrap();
        assert_eq!(exhaustive_distances(&big), Err(OracleError::TooManyQubits(32)));
        let sphere = SurfaceComplex::new(3, vec![[0, 1], [1, 2], [2, 0]], vec![vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert_eq!(brute_force_distances(&sphere), Err(OracleError::NoLogicals));
    }
}
