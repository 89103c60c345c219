//! Deterministic constructors for the graph families used throughout the
//! toolkit: cycles, paths, theta graphs, the two closed-form families, the
//! cube, complete bipartite graphs and catacondensed hexagonal systems.
//! All vertex numberings are pinned so fixtures can reference ids.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};

/// A parsed family request, as accepted by the CLI `generate` verb.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Theta(usize, usize, usize),
    G1(usize),
    G2(usize),
    HexChain(usize, Vec<Turn>),
    HexBranched,
    Cube,
    CompleteBipartite(usize, usize),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Cycle(k) => {
                if *k < 3 {
                    return Err(Error::InvalidLengths);
                }
                Ok(gen_cycle(*k))
            }
            FamilySpec::Path(k) => Ok(gen_path(*k)),
            FamilySpec::Theta(l1, l2, l3) => gen_theta(*l1, *l2, *l3),
            FamilySpec::G1(s) => {
                if *s < 2 {
                    return Err(Error::InvalidLengths);
                }
                Ok(gen_g1(*s))
            }
            FamilySpec::G2(r) => {
                if *r < 1 {
                    return Err(Error::InvalidLengths);
                }
                Ok(gen_g2(*r))
            }
            FamilySpec::HexChain(h, turns) => gen_hex_chain(*h, turns),
            FamilySpec::HexBranched => Ok(gen_hex_branched()),
            FamilySpec::Cube => Ok(gen_cube()),
            FamilySpec::CompleteBipartite(a, b) => Ok(gen_complete_bipartite(*a, *b)),
        }
    }
}

/// Cycle on `k >= 3` vertices, edges `(i, i+1)` and `(k-1, 0)`.
pub fn gen_cycle(k: usize) -> Graph {
    assert!(k >= 3);
    let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    build_graph(k, &edges).unwrap()
}

/// Path on `k` vertices.
pub fn gen_path(k: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    build_graph(k, &edges).unwrap()
}

/// Complete bipartite graph K_{a,b}: part 0..a, part a..a+b.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    build_graph(a + b, &edges).unwrap()
}

/// The 3-cube: vertices are the binary words of length 3, edges flip a bit.
pub fn gen_cube() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in 0..3 {
            let u = v ^ (1 << bit);
            if u > v {
                edges.push((v, u));
            }
        }
    }
    build_graph(8, &edges).unwrap()
}

/// Theta graph: hubs 0 and 1 joined by three internally disjoint paths of
/// the given edge lengths. At most one length may be 1, and
/// interior vertices are numbered path by path.
pub fn gen_theta(l1: usize, l2: usize, l3: usize) -> Result<Graph> {
    let lens = [l1, l2, l3];
    if lens.contains(&0) || lens.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(Error::InvalidLengths);
    }
    let n = 2 + lens.iter().map(|&l| l - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &l in &lens {
        if l == 1 {
            edges.push((0, 1));
            continue;
        }
        let mut prev = 0;
        for _ in 0..(l - 1) {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    build_graph(n, &edges)
}

/// `s` internally disjoint paths of length three joining hubs 0 and 1;
/// the interiors of path `i` are `2+2i` (hub-0 side) and `3+2i`.
pub fn gen_g1(s: usize) -> Graph {
    assert!(s >= 2);
    let mut edges = Vec::with_capacity(3 * s);
    for i in 0..s {
        let a = 2 + 2 * i;
        let b = 3 + 2 * i;
        edges.push((0, a));
        edges.push((a, b));
        edges.push((b, 1));
    }
    build_graph(2 * s + 2, &edges).unwrap()
}

/// Two star centers 0 and 1 joined by an edge; leaf pairs `u_i = 2+4i`,
/// `v_i = 3+4i` hang off the centers, each pair joined directly and by a
/// path of length three through `4+4i` and `5+4i`.
pub fn gen_g2(r: usize) -> Graph {
    assert!(r >= 1);
    let mut edges = vec![(0, 1)];
    for i in 0..r {
        let (u, v, p, q) = (2 + 4 * i, 3 + 4 * i, 4 + 4 * i, 5 + 4 * i);
        edges.push((0, u));
        edges.push((1, v));
        edges.push((u, v));
        edges.push((u, p));
        edges.push((p, q));
        edges.push((q, v));
    }
    build_graph(4 * r + 2, &edges).unwrap()
}

/// Turn taken by a hexagonal chain relative to its previous fusion
/// direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Turn {
    Left,
    Straight,
    Right,
}

// Hexagon centers live on an integer lattice where the corner offsets below
// make fused hexagons share exact corner coordinates. The six fusion
// directions are listed counterclockwise.
const CORNERS: [(i64, i64); 6] = [(2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1)];
const DIRS: [(i64, i64); 6] = [(3, 1), (0, 2), (-3, 1), (-3, -1), (0, -2), (3, -1)];

/// Catacondensed chain of `h` hexagons; `turns` steers hexagons 3..h and
/// must have `h - 2` entries (empty for `h <= 2`).
pub fn gen_hex_chain(h: usize, turns: &[Turn]) -> Result<Graph> {
    if h == 0 || turns.len() != h.saturating_sub(2) {
        return Err(Error::InvalidCode);
    }
    let mut centers = vec![(0i64, 0i64)];
    let mut dir = 0usize;
    for i in 1..h {
        if i >= 2 {
            dir = match turns[i - 2] {
                Turn::Left => (dir + 1) % 6,
                Turn::Straight => dir,
                Turn::Right => (dir + 5) % 6,
            };
        }
        let prev = centers[i - 1];
        centers.push((prev.0 + DIRS[dir].0, prev.1 + DIRS[dir].1));
    }
    hexagons_to_graph(&centers, h)
}

/// The branched catacondensed system of four hexagons: one central hexagon
/// fused to three others on alternating sides.
pub fn gen_hex_branched() -> Graph {
    let centers = vec![(0, 0), DIRS[0], DIRS[2], DIRS[4]];
    hexagons_to_graph(&centers, 4).expect("branched system does not overlap")
}

fn hexagons_to_graph(centers: &[(i64, i64)], h: usize) -> Result<Graph> {
    let mut coord_id: HashMap<(i64, i64), usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen_edges: HashMap<(usize, usize), ()> = HashMap::new();
    for &(cx, cy) in centers {
        let ids: Vec<usize> = CORNERS
            .iter()
            .map(|&(dx, dy)| {
                let len = coord_id.len();
                *coord_id.entry((cx + dx, cy + dy)).or_insert(len)
            })
            .collect();
        for k in 0..6 {
            let (a, b) = (ids[k], ids[(k + 1) % 6]);
            let key = (a.min(b), a.max(b));
            if seen_edges.insert(key, ()).is_none() {
                edges.push(key);
            }
        }
    }
    // A catacondensed system of h hexagons has exactly 4h+2 vertices and
    // 5h+1 edges; anything else means overlapping or improperly fused cells.
    if coord_id.len() != 4 * h + 2 || edges.len() != 5 * h + 1 {
        return Err(Error::OverlapDetected);
    }
    build_graph(coord_id.len(), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bipartition;
    use crate::matching::count_perfect_matchings;

    #[test]
    fn g1_counts() {
        let g = gen_g1(2);
        assert_eq!((g.n(), g.m()), (6, 6)); // two length-3 paths form a hexagon
        let g = gen_g1(3);
        assert_eq!((g.n(), g.m()), (8, 9));
        let c = bipartition(&g).unwrap();
        assert_eq!(c.part_u().len(), c.part_v().len());
        assert_eq!(count_perfect_matchings(&gen_g1(4)), 4);
    }

    #[test]
    fn g2_counts() {
        let g = gen_g2(1);
        assert_eq!((g.n(), g.m()), (6, 7));
        let g = gen_g2(2);
        assert_eq!((g.n(), g.m()), (10, 13));
        let c = bipartition(&g).unwrap();
        assert_eq!(c.part_u().len(), c.part_v().len());
        assert_eq!(count_perfect_matchings(&gen_g2(1)), 3);
    }

    #[test]
    fn theta_families() {
        let k23 = gen_theta(2, 2, 2).unwrap();
        assert_eq!((k23.n(), k23.m()), (5, 6));
        assert!(gen_theta(1, 1, 3).is_err());
        assert!(gen_theta(0, 2, 2).is_err());
        let t = gen_theta(1, 3, 3).unwrap();
        assert_eq!((t.n(), t.m()), (6, 7));
    }

    #[test]
    fn hex_chain_counts() {
        let one = gen_hex_chain(1, &[]).unwrap();
        assert_eq!((one.n(), one.m()), (6, 6));
        let linear = gen_hex_chain(4, &[Turn::Straight, Turn::Straight]).unwrap();
        assert_eq!((linear.n(), linear.m()), (18, 21));
        assert_eq!(count_perfect_matchings(&linear), 5);
        let zigzag = gen_hex_chain(4, &[Turn::Left, Turn::Right]).unwrap();
        assert_eq!((zigzag.n(), zigzag.m()), (18, 21));
        bipartition(&zigzag).unwrap();
    }

    #[test]
    fn hex_branched_counts() {
        let g = gen_hex_branched();
        assert_eq!((g.n(), g.m()), (18, 21));
        assert_eq!(count_perfect_matchings(&g), 9);
        bipartition(&g).unwrap();
    }

    #[test]
    fn hex_chain_detects_overlap() {
        // Six hexagons turning left close a ring: the sixth overlaps the first.
        let turns = [Turn::Left, Turn::Left, Turn::Left, Turn::Left];
        assert_eq!(gen_hex_chain(6, &turns), Err(Error::OverlapDetected));
    }

    #[test]
    fn hex_chain_code_length_is_checked() {
        assert_eq!(gen_hex_chain(3, &[]), Err(Error::InvalidCode));
        assert_eq!(gen_hex_chain(0, &[]), Err(Error::InvalidCode));
    }
}
