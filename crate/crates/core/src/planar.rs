//! Planarity testing and combinatorial plane embeddings.
//!
//! Embeddings are rotation systems: a cyclic order of incident edge ids at
//! each vertex. Faces are traced with the successor rule (enter `v` along
//! edge `e`, leave along the edge after `e` in the rotation at `v`), so the
//! face set is fully determined by the rotation. Each 2-connected block is
//! embedded with the incremental face-splitting method of Demoucron,
//! Malgrange and Pertuiset, and block embeddings are glued at cut vertices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{bipartition, blocks, build_graph, components, Graph};

/// One traversal of an edge inside a face walk; `forward` means from the
/// smaller to the larger endpoint as stored in the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectedEdge {
    pub edge: usize,
    pub forward: bool,
}

impl DirectedEdge {
    pub fn tail(&self, g: &Graph) -> usize {
        let (a, b) = g.edge(self.edge);
        if self.forward {
            a
        } else {
            b
        }
    }

    pub fn head(&self, g: &Graph) -> usize {
        let (a, b) = g.edge(self.edge);
        if self.forward {
            b
        } else {
            a
        }
    }
}

/// A combinatorial plane embedding: rotation per vertex plus the derived
/// face walks and a designated outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationEmbedding {
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<DirectedEdge>>,
    outer_face: usize,
}

impl RotationEmbedding {
    /// Builds an embedding from a user-supplied rotation system, checking
    /// that every rotation lists exactly the incident edges and that the
    /// traced faces satisfy Euler's relation on every component.
    pub fn from_rotation(g: &Graph, rotation: Vec<Vec<usize>>) -> Result<RotationEmbedding> {
        if !rotation_is_consistent(g, &rotation) {
            return Err(Error::InvalidEmbedding);
        }
        let faces = trace_faces(g, &rotation);
        if !euler_holds(g, &faces) {
            return Err(Error::InvalidEmbedding);
        }
        let outer_face = pick_outer_face(g, &faces);
        Ok(RotationEmbedding {
            rotation,
            faces,
            outer_face,
        })
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Vec<DirectedEdge>] {
        &self.faces
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Vertices visited by a face walk, in walk order (tails of the
    /// directed edges).
    pub fn face_vertices(&self, g: &Graph, face: usize) -> Vec<usize> {
        self.faces[face].iter().map(|d| d.tail(g)).collect()
    }
}

fn rotation_is_consistent(g: &Graph, rotation: &[Vec<usize>]) -> bool {
    if rotation.len() != g.n() {
        return false;
    }
    for v in 0..g.n() {
        let mut expected: Vec<usize> = g.neighbors(v).iter().map(|&(_, e)| e).collect();
        let mut got = rotation[v].clone();
        expected.sort_unstable();
        got.sort_unstable();
        if expected != got {
            return false;
        }
    }
    true
}

/// Traces all face walks of a rotation system. Directed edges are visited
/// in a pinned order (edge id ascending, forward side first), so face
/// indices are reproducible.
fn trace_faces(g: &Graph, rotation: &[Vec<usize>]) -> Vec<Vec<DirectedEdge>> {
    let m = g.m();
    let mut pos: Vec<HashMap<usize, usize>> = vec![HashMap::new(); g.n()];
    for v in 0..g.n() {
        for (i, &e) in rotation[v].iter().enumerate() {
            pos[v].insert(e, i);
        }
    }
    let next = |d: DirectedEdge| -> DirectedEdge {
        let h = d.head(g);
        let i = pos[h][&d.edge];
        let e2 = rotation[h][(i + 1) % rotation[h].len()];
        DirectedEdge {
            edge: e2,
            forward: g.edge(e2).0 == h,
        }
    };
    let idx = |d: DirectedEdge| 2 * d.edge + usize::from(!d.forward);
    let mut visited = vec![false; 2 * m];
    let mut faces = Vec::new();
    for e in 0..m {
        for forward in [true, false] {
            let start = DirectedEdge { edge: e, forward };
            if visited[idx(start)] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                visited[idx(d)] = true;
                walk.push(d);
                d = next(d);
                if d == start {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    faces
}

/// Euler's relation `n - m + f = 2` per connected component; isolated
/// vertices contribute a single implicit face.
fn euler_holds(g: &Graph, faces: &[Vec<DirectedEdge>]) -> bool {
    let comps = components(g);
    let mut comp_of = vec![0usize; g.n()];
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = i;
        }
    }
    let mut m_count = vec![0usize; comps.len()];
    for e in 0..g.m() {
        m_count[comp_of[g.edge(e).0]] += 1;
    }
    let mut f_count = vec![0usize; comps.len()];
    for walk in faces {
        if walk.is_empty() {
            return false;
        }
        f_count[comp_of[walk[0].tail(g)]] += 1;
    }
    for (i, comp) in comps.iter().enumerate() {
        let f = if m_count[i] == 0 { 1 } else { f_count[i] };
        if comp.len() + f != m_count[i] + 2 {
            return false;
        }
    }
    true
}

/// Outer face rule: longest walk, ties by smallest vertex on the walk,
/// then by smallest face index.
fn pick_outer_face(g: &Graph, faces: &[Vec<DirectedEdge>]) -> usize {
    let mut best = 0usize;
    let mut best_key = (0usize, usize::MAX);
    for (i, walk) in faces.iter().enumerate() {
        let min_v = walk.iter().map(|d| d.tail(g)).min().unwrap_or(usize::MAX);
        let key = (walk.len(), min_v);
        if i == 0 || key.0 > best_key.0 || (key.0 == best_key.0 && key.1 < best_key.1) {
            best = i;
            best_key = key;
        }
    }
    best
}

/// True iff `rotation` lists exactly the incident edges of every vertex and
/// the traced faces close up into a plane (per-component Euler) embedding.
pub fn validate_embedding(g: &Graph, emb: &RotationEmbedding) -> bool {
    rotation_is_consistent(g, emb.rotation())
        && euler_holds(g, &trace_faces(g, emb.rotation()))
}

/// A subdivision of K5 or K33 certifying non-planarity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    /// Internally disjoint paths between branch vertices, as vertex lists.
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// Embeds a planar graph in the plane, or reports non-planarity with a
/// best-effort Kuratowski witness. Disconnected input is embedded one
/// component per sphere.
pub fn embed_planar(g: &Graph) -> Result<RotationEmbedding> {
    match embed_rotation(g) {
        Some(rotation) => {
            let emb = RotationEmbedding::from_rotation(g, rotation)
                .expect("constructed rotation must validate");
            Ok(emb)
        }
        None => Err(Error::NotPlanar(extract_kuratowski(g))),
    }
}

/// True iff the graph is planar.
pub fn is_planar(g: &Graph) -> bool {
    embed_rotation(g).is_some()
}

/// A bipartite graph is outerplanar iff adding a vertex adjacent to all
/// others leaves it planar.
pub fn is_outerplanar_bipartite(g: &Graph) -> Result<bool> {
    bipartition(g)?;
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for v in 0..n {
        edges.push((v, n));
    }
    let apex = build_graph(n + 1, &edges).expect("apex graph is simple");
    Ok(is_planar(&apex))
}

/// Core planarity routine: returns a rotation system, or None if the graph
/// is not planar.
fn embed_rotation(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for comp in components(g) {
        if comp.len() == 1 {
            continue;
        }
        let comp_edges: Vec<usize> = (0..g.m())
            .filter(|&e| comp.binary_search(&g.edge(e).0).is_ok())
            .collect();
        let (cg, cg_verts, cg_edges) = g.edge_subgraph(&comp_edges);
        let dec = blocks(&cg).expect("component is connected");
        for blk in &dec.blocks {
            if blk.len() == 1 {
                let e = cg_edges[blk[0]];
                let (a, b) = g.edge(e);
                rotation[a].push(e);
                rotation[b].push(e);
                continue;
            }
            let (bg, bg_verts, bg_edges) = cg.edge_subgraph(blk);
            let local = embed_block(&bg)?;
            for (lv, rot) in local.into_iter().enumerate() {
                let v = cg_verts[bg_verts[lv]];
                for le in rot {
                    rotation[v].push(cg_edges[bg_edges[le]]);
                }
            }
        }
    }
    Some(rotation)
}

/// Demoucron-Malgrange-Pertuiset embedding of a 2-connected graph: start
/// from a cycle and repeatedly draw a path of some bridge through a face
/// containing all its attachments. Fails iff some bridge has no admissible
/// face. Faces are kept as simple vertex cycles, all walks consistently
/// oriented, and converted to a rotation at the end.
fn embed_block(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let start_cycle = first_cycle(g);
    let mut faces: Vec<Vec<usize>> = vec![
        start_cycle.clone(),
        start_cycle.iter().rev().copied().collect(),
    ];
    let mut in_v = vec![false; n];
    let mut in_e = vec![false; g.m()];
    for i in 0..start_cycle.len() {
        in_v[start_cycle[i]] = true;
        let e = g
            .edge_id(start_cycle[i], start_cycle[(i + 1) % start_cycle.len()])
            .unwrap();
        in_e[e] = true;
    }
    let mut remaining = g.m() - start_cycle.len();
    while remaining > 0 {
        let bridges = find_bridges(g, &in_v, &in_e);
        // Admissible faces per bridge; a bridge with none kills planarity,
        // a bridge with exactly one is forced and placed first.
        let mut choice: Option<(usize, usize)> = None; // (bridge, face)
        for (bi, br) in bridges.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&fi| br.attachments.iter().all(|a| faces[fi].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((bi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((bi, admissible[0]));
                    }
                }
            }
        }
        let (bi, fi) = choice.expect("edges remain, so some bridge exists");
        let path = bridge_path(g, &bridges[bi], &in_v);
        for w in path.windows(2) {
            in_e[g.edge_id(w[0], w[1]).unwrap()] = true;
            remaining -= 1;
        }
        for &v in &path[1..path.len() - 1] {
            in_v[v] = true;
        }
        split_face(&mut faces, fi, &path);
    }
    Some(faces_to_rotation(g, &faces))
}

/// First cycle met by a depth-first search from vertex 0, ascending
/// adjacency order.
fn first_cycle(g: &Graph) -> Vec<usize> {
    fn dfs(
        g: &Graph,
        v: usize,
        pe: usize,
        visited: &mut [bool],
        path: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        visited[v] = true;
        path.push(v);
        for &(w, e) in g.neighbors(v) {
            if e == pe {
                continue;
            }
            if let Some(pos) = path.iter().position(|&x| x == w) {
                return Some(path[pos..].to_vec());
            }
            if !visited[w] {
                if let Some(c) = dfs(g, w, e, visited, path) {
                    return Some(c);
                }
            }
        }
        path.pop();
        None
    }
    let mut visited = vec![false; g.n()];
    let mut path = Vec::new();
    dfs(g, 0, usize::MAX, &mut visited, &mut path)
        .expect("2-connected graph contains a cycle")
}

struct Bridge {
    /// Smallest edge id, used for deterministic ordering.
    key: usize,
    /// Component vertices (empty for a chord).
    inner: Vec<usize>,
    /// Attachment vertices on the embedded subgraph, ascending.
    attachments: Vec<usize>,
    /// The chord edge, when the bridge is a single edge.
    chord: Option<usize>,
}

fn find_bridges(g: &Graph, in_v: &[bool], in_e: &[bool]) -> Vec<Bridge> {
    let mut bridges = Vec::new();
    for e in 0..g.m() {
        let (a, b) = g.edge(e);
        if !in_e[e] && in_v[a] && in_v[b] {
            bridges.push(Bridge {
                key: e,
                inner: vec![],
                attachments: vec![a, b],
                chord: Some(e),
            });
        }
    }
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        if in_v[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if !in_v[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        let mut att = Vec::new();
        let mut key = usize::MAX;
        for &v in &comp {
            for &(w, e) in g.neighbors(v) {
                key = key.min(e);
                if in_v[w] {
                    att.push(w);
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        bridges.push(Bridge {
            key,
            inner: comp,
            attachments: att,
            chord: None,
        });
    }
    bridges.sort_by_key(|b| b.key);
    bridges
}

/// A path through the bridge between its two smallest attachments, interior
/// inside the bridge component. Chords are their own path.
fn bridge_path(g: &Graph, br: &Bridge, in_v: &[bool]) -> Vec<usize> {
    if let Some(_e) = br.chord {
        return vec![br.attachments[0], br.attachments[1]];
    }
    assert!(
        br.attachments.len() >= 2,
        "a bridge of a 2-connected graph has at least two attachments"
    );
    let a = br.attachments[0];
    let b = br.attachments[1];
    let allowed = |v: usize| !in_v[v] && br.inner.binary_search(&v).is_ok();
    // BFS from a through the component to b, ascending neighbors.
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for &(w, _) in g.neighbors(a) {
        if allowed(w) && !parent.contains_key(&w) {
            parent.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        if g.has_edge(v, b) {
            let mut path = vec![b, v];
            let mut cur = v;
            while cur != a {
                cur = parent[&cur];
                path.push(cur);
            }
            path.reverse();
            return path;
        }
        for &(w, _) in g.neighbors(v) {
            if allowed(w) && !parent.contains_key(&w) && w != a {
                parent.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("attachments of one bridge are connected through it")
}

/// Splits face `fi` along `path` (whose endpoints lie on the face) into two
/// faces, keeping both walks in the orientation of the original walk.
fn split_face(faces: &mut Vec<Vec<usize>>, fi: usize, path: &[usize]) {
    let walk = faces[fi].clone();
    let k = walk.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let ia = walk.iter().position(|&v| v == a).unwrap();
    let ib = walk.iter().position(|&v| v == b).unwrap();
    assert_ne!(ia, ib);
    let mut arc1 = Vec::new();
    let mut i = ia;
    loop {
        arc1.push(walk[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % k;
    }
    let mut arc2 = Vec::new();
    let mut i = ib;
    loop {
        arc2.push(walk[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % k;
    }
    let interior = &path[1..path.len() - 1];
    let mut f1 = arc1;
    f1.extend(interior.iter().rev());
    let mut f2 = arc2;
    f2.extend(interior.iter());
    faces[fi] = f1;
    faces.push(f2);
}

/// Reads the rotation off the face set: consecutive walk edges `(u,v)(v,w)`
/// say that at `v` the successor of edge `uv` is edge `vw`; chaining from
/// the smallest incident edge yields the cyclic order.
fn faces_to_rotation(g: &Graph, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); g.n()];
    for walk in faces {
        let k = walk.len();
        for i in 0..k {
            let u = walk[i];
            let v = walk[(i + 1) % k];
            let w = walk[(i + 2) % k];
            let e_in = g.edge_id(u, v).unwrap();
            let e_out = g.edge_id(v, w).unwrap();
            succ[v].insert(e_in, e_out);
        }
    }
    (0..g.n())
        .map(|v| {
            if g.degree(v) == 0 {
                return Vec::new();
            }
            let first = g.neighbors(v).iter().map(|&(_, e)| e).min().unwrap();
            let mut rot = vec![first];
            let mut cur = succ[v][&first];
            while cur != first {
                rot.push(cur);
                cur = succ[v][&cur];
            }
            assert_eq!(rot.len(), g.degree(v), "face permutation must be cyclic");
            rot
        })
        .collect()
}

/// Best-effort Kuratowski witness: greedily deletes removable edges, then
/// reads the subdivision off the edge-minimal non-planar subgraph. Skipped
/// for large inputs.
fn extract_kuratowski(g: &Graph) -> Option<KuratowskiWitness> {
    if g.m() > 60 {
        return None;
    }
    let mut keep: Vec<usize> = (0..g.m()).collect();
    for e in 0..g.m() {
        let candidate: Vec<usize> = keep.iter().copied().filter(|&x| x != e).collect();
        if candidate.len() < keep.len() {
            let (sub, _, _) = g.edge_subgraph(&candidate);
            if !is_planar(&sub) {
                keep = candidate;
            }
        }
    }
    let (sub, verts, _) = g.edge_subgraph(&keep);
    let branch: Vec<usize> = (0..sub.n()).filter(|&v| sub.degree(v) >= 3).collect();
    let deg3 = branch.iter().filter(|&&v| sub.degree(v) == 3).count();
    let deg4 = branch.iter().filter(|&&v| sub.degree(v) == 4).count();
    let kind = match (branch.len(), deg3, deg4) {
        (6, 6, 0) => KuratowskiKind::K33,
        (5, 0, 5) => KuratowskiKind::K5,
        _ => return None,
    };
    let mut paths: Vec<Vec<usize>> = Vec::new();
    for &s in &branch {
        for &(first, _) in sub.neighbors(s) {
            let mut path = vec![s, first];
            let (mut prev, mut cur) = (s, first);
            while sub.degree(cur) == 2 {
                let &(next, _) = sub
                    .neighbors(cur)
                    .iter()
                    .find(|&&(w, _)| w != prev)
                    .unwrap();
                prev = cur;
                cur = next;
                path.push(cur);
            }
            if path[0] < *path.last().unwrap() {
                paths.push(path.iter().map(|&v| verts[v]).collect());
            }
        }
    }
    paths.sort();
    Some(KuratowskiWitness {
        kind,
        branch_vertices: branch.iter().map(|&v| verts[v]).collect(),
        paths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_complete_bipartite, gen_cube, gen_cycle, gen_theta};

    #[test]
    fn c6_embeds_with_two_faces() {
        let g = gen_cycle(6);
        let emb = embed_planar(&g).unwrap();
        assert_eq!(emb.face_count(), 2);
        assert!(validate_embedding(&g, &emb));
    }

    #[test]
    fn cube_embeds_with_six_quadrilateral_faces() {
        let g = gen_cube();
        let emb = embed_planar(&g).unwrap();
        assert_eq!(emb.face_count(), 6);
        assert!(emb.faces().iter().all(|f| f.len() == 4));
        assert!(validate_embedding(&g, &emb));
    }

    #[test]
    fn k33_is_not_planar() {
        let g = gen_complete_bipartite(3, 3);
        match embed_planar(&g) {
            Err(Error::NotPlanar(witness)) => {
                let w = witness.expect("small graph yields a witness");
                assert_eq!(w.kind, KuratowskiKind::K33);
                assert_eq!(w.branch_vertices.len(), 6);
                assert_eq!(w.paths.len(), 9);
            }
            other => panic!("expected NotPlanar, got {other:?}"),
        }
    }

    #[test]
    fn k5_witness_detected() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                edges.push((u, v));
            }
        }
        let g = build_graph(5, &edges).unwrap();
        match embed_planar(&g) {
            Err(Error::NotPlanar(Some(w))) => assert_eq!(w.kind, KuratowskiKind::K5),
            other => panic!("expected K5 witness, got {other:?}"),
        }
    }

    #[test]
    fn corrupted_rotation_fails_validation() {
        let g = gen_cube();
        let emb = embed_planar(&g).unwrap();
        let mut rot = emb.rotation().to_vec();
        rot[0].swap(0, 1);
        // Swapping two edges at a degree-3 vertex changes the face structure
        // and breaks Euler's relation.
        assert!(RotationEmbedding::from_rotation(&g, rot).is_err());
    }

    #[test]
    fn cut_vertex_graph_embeds() {
        // Two squares sharing a vertex plus a pendant edge.
        let g = build_graph(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (0, 4),
                (4, 5),
                (5, 6),
                (0, 6),
                (2, 7),
            ],
        )
        .unwrap();
        let emb = embed_planar(&g).unwrap();
        assert!(validate_embedding(&g, &emb));
        assert_eq!(emb.face_count(), 3);
    }

    #[test]
    fn disconnected_graph_embeds_per_component() {
        let g = build_graph(8, &[(0, 1), (1, 2), (2, 0), (4, 5), (5, 6), (6, 7), (7, 4)]).unwrap();
        let emb = embed_planar(&g).unwrap();
        assert!(validate_embedding(&g, &emb));
        // Triangle: 2 faces, square: 2 faces, isolated vertex: implicit.
        assert_eq!(emb.face_count(), 4);
    }

    #[test]
    fn outerplanarity_on_small_graphs() {
        assert!(is_outerplanar_bipartite(&gen_cycle(6)).unwrap());
        assert!(!is_outerplanar_bipartite(&gen_theta(2, 2, 2).unwrap()).unwrap());
        assert!(!is_outerplanar_bipartite(&gen_cube()).unwrap());
        assert!(matches!(
            is_outerplanar_bipartite(&gen_cycle(5)),
            Err(Error::NotBipartite(_))
        ));
    }

    #[test]
    fn outer_face_is_longest() {
        let g = gen_theta(2, 2, 4).unwrap();
        let emb = embed_planar(&g).unwrap();
        let outer_len = emb.faces()[emb.outer_face()].len();
        assert!(emb.faces().iter().all(|f| f.len() <= outer_len));
    }
}
