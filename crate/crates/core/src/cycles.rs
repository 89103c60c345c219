//! Exhaustive simple-cycle enumeration, used as an oracle by the
//! recognition and orientation checks. Backtracking search, bounded.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex bound for cycle enumeration.
pub const DEFAULT_CYCLE_BOUND: usize = 20;

/// A simple cycle, stored in canonical form: the smallest vertex comes
/// first and of the two directions the one with the smaller second vertex
/// is kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Canonicalizes a closed vertex sequence (without repeated first
    /// vertex). Panics if the sequence is not a cycle of `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Cycle {
        let k = vertices.len();
        assert!(k >= 3, "a cycle has at least 3 vertices");
        let mut seen = vec![false; g.n()];
        for i in 0..k {
            assert!(!seen[vertices[i]], "cycle vertices must be distinct");
            seen[vertices[i]] = true;
            assert!(
                g.has_edge(vertices[i], vertices[(i + 1) % k]),
                "consecutive cycle vertices must be adjacent"
            );
        }
        let min_pos = (0..k).min_by_key(|&i| vertices[i]).unwrap();
        let forward: Vec<usize> = (0..k).map(|i| vertices[(min_pos + i) % k]).collect();
        let backward: Vec<usize> = (0..k).map(|i| vertices[(min_pos + k - i) % k]).collect();
        let canon = if forward[1] <= backward[1] {
            forward
        } else {
            backward
        };
        Cycle { vertices: canon }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of vertices, which equals the number of edges.
    #[allow(clippy::len_without_is_empty)] // a cycle has at least 3 vertices
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Edge ids along the cycle, following the stored vertex order.
    pub fn edge_ids(&self, g: &Graph) -> Vec<usize> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| {
                g.edge_id(self.vertices[i], self.vertices[(i + 1) % k])
                    .expect("cycle edge")
            })
            .collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// Every simple cycle of `g`, canonicalized and sorted, with the default
/// size bound.
pub fn enumerate_cycles(g: &Graph) -> Result<Vec<Cycle>> {
    enumerate_cycles_with_bound(g, DEFAULT_CYCLE_BOUND)
}

/// Backtracking enumeration anchored at the smallest cycle vertex: paths
/// grow only through larger vertices, and each cycle is emitted in the
/// direction with the smaller second vertex, so it appears exactly once.
pub fn enumerate_cycles_with_bound(g: &Graph, bound: usize) -> Result<Vec<Cycle>> {
    if g.n() > bound {
        return Err(Error::TooLargeForOracle { n: g.n(), bound });
    }
    let mut cycles = Vec::new();
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::new();
    for start in 0..g.n() {
        on_path[start] = true;
        path.push(start);
        dfs_cycles(g, start, &mut path, &mut on_path, &mut cycles);
        path.pop();
        on_path[start] = false;
    }
    cycles.sort();
    Ok(cycles)
}

fn dfs_cycles(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    out: &mut Vec<Cycle>,
) {
    let v = *path.last().unwrap();
    for &(w, _) in g.neighbors(v) {
        if w == start {
            if path.len() >= 3 && path[1] < path[path.len() - 1] {
                out.push(Cycle {
                    vertices: path.clone(),
                });
            }
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            dfs_cycles(g, start, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}
