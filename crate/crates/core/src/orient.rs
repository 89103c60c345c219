//! Edge orientations in which cycles are oddly oriented.
//!
//! The core routine orients a spanning tree first and then fixes the
//! remaining edges one interior face at a time, so that every interior
//! face boundary carries an odd number of edges co-directed with its face
//! walk. Interior faces are peeled in reverse BFS order of the dual tree
//! rooted at the outer face, which guarantees each face has exactly one
//! undecided edge when its turn comes. Applied per 2-connected block this
//! makes every cycle of a bipartite graph without even subdivisions of
//! K_2,3 oddly oriented; applied globally it only guarantees a Pfaffian
//! orientation.

use crate::cycles::{enumerate_cycles_with_bound, Cycle, DEFAULT_CYCLE_BOUND};
use crate::error::{Error, Result};
use crate::graph::{bipartition, blocks, Graph};
use crate::matching::is_nice_cycle;
use crate::planar::{embed_planar, is_planar, validate_embedding, RotationEmbedding};
use crate::resonance::contains_no_even_k23;

/// A direction for every edge, stored as (tail, head) per edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    direction: Vec<(usize, usize)>,
}

impl Orientation {
    /// Wraps raw directions, checking that entry `e` orders the endpoints
    /// of edge `e`.
    pub fn new(g: &Graph, direction: Vec<(usize, usize)>) -> Result<Orientation> {
        if direction.len() != g.m() {
            return Err(Error::InvalidOrientation);
        }
        for (e, &(t, h)) in direction.iter().enumerate() {
            let (a, b) = g.edge(e);
            if (t, h) != (a, b) && (t, h) != (b, a) {
                return Err(Error::InvalidOrientation);
            }
        }
        Ok(Orientation { direction })
    }

    pub fn direction(&self, e: usize) -> (usize, usize) {
        self.direction[e]
    }

    pub fn directions(&self) -> &[(usize, usize)] {
        &self.direction
    }
}

/// Runs the face-parity orientation on one connected plane graph as a
/// whole. `orient_graph` is the per-block entry point; this global variant
/// exists because running it across cut vertices can leave cycles evenly
/// oriented even though the result is still Pfaffian.
pub fn orient_embedded(g: &Graph, emb: &RotationEmbedding) -> Result<Orientation> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !validate_embedding(g, emb) {
        return Err(Error::InvalidEmbedding);
    }
    let n = g.n();
    let m = g.m();
    if m == 0 {
        return Ok(Orientation { direction: vec![] });
    }

    // BFS spanning tree from vertex 0; tree edges point small -> large.
    let mut in_tree = vec![false; m];
    let mut seen = vec![false; n.max(1)];
    let mut direction: Vec<Option<(usize, usize)>> = vec![None; m];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                in_tree[e] = true;
                direction[e] = Some(g.edge(e));
                queue.push_back(w);
            }
        }
    }

    // Dual tree over faces, linked by non-tree edges, rooted at the outer
    // face. Every non-tree edge lies on a cycle, so it borders two distinct
    // faces and the cotree spans the dual.
    let faces = emb.faces();
    let mut faces_of_edge: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (fi, walk) in faces.iter().enumerate() {
        for d in walk {
            faces_of_edge[d.edge].push(fi);
        }
    }
    let outer = emb.outer_face();
    let mut parent_edge: Vec<Option<usize>> = vec![None; faces.len()];
    let mut order = vec![outer];
    let mut visited = vec![false; faces.len()];
    visited[outer] = true;
    let mut head = 0;
    while head < order.len() {
        let f = order[head];
        head += 1;
        for d in &faces[f] {
            if in_tree[d.edge] {
                continue;
            }
            for &f2 in &faces_of_edge[d.edge] {
                if !visited[f2] {
                    visited[f2] = true;
                    parent_edge[f2] = Some(d.edge);
                    order.push(f2);
                }
            }
        }
    }
    assert!(
        visited.iter().all(|&v| v),
        "cotree edges span the dual of a connected plane graph"
    );

    // Peel interior faces leaf-first; each has exactly one undecided edge.
    for &f in order.iter().skip(1).rev() {
        let fixed = parent_edge[f].expect("non-root face has a parent edge");
        let mut matches = 0usize;
        let mut fixed_traversal = None;
        for d in &faces[f] {
            let along = (d.tail(g), d.head(g));
            if d.edge == fixed {
                fixed_traversal = Some(along);
                continue;
            }
            let dir = direction[d.edge].expect("only the parent edge is undecided");
            if dir == along {
                matches += 1;
            }
        }
        let along = fixed_traversal.expect("parent edge lies on the face walk");
        direction[fixed] = Some(if matches % 2 == 0 {
            along
        } else {
            (along.1, along.0)
        });
    }

    let direction: Vec<(usize, usize)> = direction
        .into_iter()
        .map(|d| d.expect("every edge is a tree edge or some face's parent"))
        .collect();
    Ok(Orientation { direction })
}

/// Face-parity orientation of a 2-connected plane graph.
pub fn orient_block(b: &Graph, emb: &RotationEmbedding) -> Result<Orientation> {
    if !b.is_2connected() {
        return Err(Error::Not2Connected);
    }
    orient_embedded(b, emb)
}

/// Orientation of a connected plane bipartite graph without even
/// subdivisions of K_2,3 in which every cycle is oddly oriented: each
/// 2-connected block is oriented on its own embedding, cut edges point
/// small to large.
pub fn orient_graph(g: &Graph) -> Result<Orientation> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    bipartition(g)?;
    if !is_planar(g) {
        return Err(Error::NotPlanar(None));
    }
    let report = contains_no_even_k23(g)?;
    if !report.verdict {
        return Err(Error::ContainsEvenK23);
    }
    let mut direction: Vec<Option<(usize, usize)>> = vec![None; g.m()];
    for blk in &blocks(g)?.blocks {
        if blk.len() == 1 {
            direction[blk[0]] = Some(g.edge(blk[0]));
            continue;
        }
        let (bg, verts, edge_ids) = g.edge_subgraph(blk);
        let emb = embed_planar(&bg).expect("blocks of a planar graph are planar");
        let o = orient_block(&bg, &emb)?;
        for (le, &ge) in edge_ids.iter().enumerate() {
            let (t, h) = o.direction(le);
            direction[ge] = Some((verts[t], verts[h]));
        }
    }
    let direction = direction
        .into_iter()
        .map(|d| d.expect("blocks partition the edge set"))
        .collect();
    Ok(Orientation { direction })
}

/// True iff traversing the even cycle meets an odd number of co-directed
/// edges; the parity is the same for both traversal directions.
pub fn is_oddly_oriented(g: &Graph, o: &Orientation, c: &Cycle) -> Result<bool> {
    if c.len() % 2 != 0 {
        return Err(Error::OddLengthCycle);
    }
    let vs = c.vertices();
    let mut matches = 0usize;
    for i in 0..vs.len() {
        let (u, v) = (vs[i], vs[(i + 1) % vs.len()]);
        let e = g.edge_id(u, v).expect("cycle edge");
        if o.direction(e) == (u, v) {
            matches += 1;
        }
    }
    Ok(matches % 2 == 1)
}

/// Brute-force check that every cycle of the graph is oddly oriented.
pub fn verify_all_cycles_odd(g: &Graph, o: &Orientation) -> Result<bool> {
    verify_all_cycles_odd_with_bound(g, o, DEFAULT_CYCLE_BOUND)
}

pub fn verify_all_cycles_odd_with_bound(g: &Graph, o: &Orientation, bound: usize) -> Result<bool> {
    for c in enumerate_cycles_with_bound(g, bound)? {
        if !is_oddly_oriented(g, o, &c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Brute-force Pfaffian check: every even nice cycle is oddly oriented.
pub fn verify_pfaffian(g: &Graph, o: &Orientation) -> Result<bool> {
    verify_pfaffian_with_bound(g, o, DEFAULT_CYCLE_BOUND)
}

pub fn verify_pfaffian_with_bound(g: &Graph, o: &Orientation, bound: usize) -> Result<bool> {
    for c in enumerate_cycles_with_bound(g, bound)? {
        if c.len() % 2 == 0 && is_nice_cycle(g, &c) && !is_oddly_oriented(g, o, &c)? {
            return Ok(false);
        }
    }
    Ok(true)
}
