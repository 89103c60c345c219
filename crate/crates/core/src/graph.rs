//! Undirected simple graphs with stable vertex and edge ids, plus
//! bipartiteness and block (2-connected component) decompositions.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// An undirected simple graph. Vertices are `0..n`, edge ids are the
/// positions in the edge list and never change after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl Graph {
    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edge endpoints as stored, always `(min, max)`.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` as `(neighbor, edge id)`, sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edge_index.get(&key).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Subgraph induced by an edge set. Vertices are renumbered densely in
    /// ascending order of their original ids; returns the subgraph together
    /// with `vertex_map` (local -> original) and `edge_map` (local -> original).
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> (Graph, Vec<usize>, Vec<usize>) {
        let mut verts: Vec<usize> = edge_ids
            .iter()
            .flat_map(|&e| {
                let (a, b) = self.edges[e];
                [a, b]
            })
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let local: HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edge_ids = edge_ids.to_vec();
        edge_ids.sort_unstable();
        let pairs: Vec<(usize, usize)> = edge_ids
            .iter()
            .map(|&e| {
                let (a, b) = self.edges[e];
                (local[&a], local[&b])
            })
            .collect();
        let g = build_graph(verts.len(), &pairs).expect("subgraph of a simple graph is simple");
        (g, verts, edge_ids)
    }

    /// True if the graph is connected and stays connected after deleting any
    /// single vertex. Small-graph check used to validate block decompositions.
    pub fn is_2connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        for skip in 0..self.n {
            let start = if skip == 0 { 1 } else { 0 };
            let mut seen = vec![false; self.n];
            seen[start] = true;
            let mut stack = vec![start];
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &(w, _) in &self.adj[v] {
                    if w != skip && !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            if count != self.n - 1 {
                return false;
            }
        }
        true
    }
}

/// Connected components as ascending vertex lists, ordered by smallest
/// vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Build a graph from a vertex count and an edge list, rejecting loops,
/// duplicates and out-of-range endpoints. Edge ids follow list order.
pub fn build_graph(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
    let mut edges = Vec::with_capacity(edge_list.len());
    let mut edge_index = HashMap::new();
    for &(u, v) in edge_list {
        if u >= n {
            return Err(Error::VertexOutOfRange(u, n));
        }
        if v >= n {
            return Err(Error::VertexOutOfRange(v, n));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if edge_index.insert(key, edges.len()).is_some() {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        edges.push(key);
    }
    let mut adj = vec![Vec::new(); n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph {
        n,
        edges,
        adj,
        edge_index,
    })
}

/// A two-coloring certifying bipartiteness. Side 0 holds the smallest
/// vertex of each connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    side: Vec<u8>,
}

impl Coloring {
    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }

    /// Vertices on side 0, ascending.
    pub fn part_u(&self) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == 0).collect()
    }

    /// Vertices on side 1, ascending.
    pub fn part_v(&self) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == 1).collect()
    }
}

/// Two-colors the graph, or reports an odd cycle as witness.
pub fn bipartition(g: &Graph) -> Result<Coloring> {
    let mut side: Vec<i8> = vec![-1; g.n()];
    let mut parent: Vec<usize> = (0..g.n()).collect();
    for start in 0..g.n() {
        if side[start] >= 0 {
            continue;
        }
        side[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in g.neighbors(v) {
                if side[w] < 0 {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return Err(Error::NotBipartite(odd_cycle_witness(&parent, v, w)));
                }
            }
        }
    }
    Ok(Coloring {
        side: side.into_iter().map(|s| s as u8).collect(),
    })
}

/// Joins the BFS-tree paths of `v` and `w` at their lowest common ancestor;
/// together with the edge `vw` this closes an odd cycle.
fn odd_cycle_witness(parent: &[usize], v: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != x {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pv = path_to_root(v);
    let pw = path_to_root(w);
    let mut i = pv.len();
    let mut j = pw.len();
    while i > 0 && j > 0 && pv[i - 1] == pw[j - 1] {
        i -= 1;
        j -= 1;
    }
    // pv[..=i] is v..lca, pw[..j] is w..(below lca)
    let mut cycle = pv[..=i].to_vec();
    cycle.extend(pw[..j].iter().rev());
    cycle
}

/// Blocks (maximal 2-connected subgraphs or bridge edges) of a connected
/// graph, each given as a sorted edge-id list, ordered by smallest edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

/// Lowpoint block decomposition of a connected graph.
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut block_list: Vec<Vec<usize>> = Vec::new();
    if n == 0 {
        return Ok(BlockDecomposition {
            blocks: block_list,
            cut_vertices: vec![],
        });
    }

    // Iterative DFS from vertex 0 over neighbor lists (already sorted),
    // so discovery order and block contents are reproducible.
    let mut timer = 0usize;
    let mut stack: Vec<(usize, usize, usize)> = Vec::new(); // (vertex, parent edge, next adj index)
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    stack.push((0, usize::MAX, 0));
    let mut root_children = 0usize;
    while let Some(&mut (v, pe, ref mut idx)) = stack.last_mut() {
        if *idx < g.degree(v) {
            let (w, e) = g.neighbors(v)[*idx];
            *idx += 1;
            if e == pe {
                continue;
            }
            if disc[w] == usize::MAX {
                if v == 0 {
                    root_children += 1;
                }
                edge_stack.push(e);
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, e, 0));
            } else if disc[w] < disc[v] {
                edge_stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&mut (u, _, _)) = stack.last_mut() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    // u separates the subtree at v; pop one block.
                    if u != 0 || root_children > 1 {
                        is_cut[u] = true;
                    }
                    let pe_uv = g
                        .edge_id(u, v)
                        .expect("tree edge exists");
                    let mut blk = Vec::new();
                    while let Some(&e) = edge_stack.last() {
                        blk.push(e);
                        edge_stack.pop();
                        if e == pe_uv {
                            break;
                        }
                    }
                    blk.sort_unstable();
                    block_list.push(blk);
                }
            }
        }
    }
    // Root cut status needs the final child count.
    is_cut[0] = root_children > 1;
    block_list.sort_by_key(|b| b[0]);
    let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
    Ok(BlockDecomposition {
        blocks: block_list,
        cut_vertices,
    })
}
