//! Shared corpus builders for the integration suites. Everything is
//! seeded, so test inputs are bit-stable across runs.
#![allow(dead_code)] // each test target uses a different subset

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use permpoly_core::{
    build_graph, gen_cube, gen_cycle, gen_g1, gen_g2, gen_hex_branched, gen_hex_chain, gen_theta,
    is_planar, Graph, Orientation, Turn,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random 2-connected planar bipartite graph on at most `max_n` vertices:
/// an even cycle plus a few parity-respecting open ears, rejecting
/// non-planar outcomes.
pub fn random_2conn_planar_bipartite(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let base = [4usize, 6, 8][rng.random_range(0..3)];
        if base > max_n {
            continue;
        }
        let mut n = base;
        let mut edges: Vec<(usize, usize)> = (0..base)
            .map(|i| (i.min((i + 1) % base), i.max((i + 1) % base)))
            .collect();
        let mut color: Vec<u8> = (0..base).map(|v| (v % 2) as u8).collect();
        for _ in 0..rng.random_range(0..=3) {
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            if u == v {
                continue;
            }
            // Ears between same-colored endpoints must be even, between
            // different colors odd, to stay bipartite.
            let len = if color[u] == color[v] {
                [2usize, 4][rng.random_range(0..2)]
            } else {
                [1usize, 3][rng.random_range(0..2)]
            };
            if n + len - 1 > max_n {
                continue;
            }
            if len == 1 {
                let key = (u.min(v), u.max(v));
                if edges.contains(&key) {
                    continue;
                }
                edges.push(key);
            } else {
                let mut prev = u;
                let mut c = color[u];
                for k in 0..(len - 1) {
                    let w = n + k;
                    edges.push((prev.min(w), prev.max(w)));
                    c ^= 1;
                    color.push(c);
                    prev = w;
                }
                edges.push((prev.min(v), prev.max(v)));
                n += len - 1;
            }
        }
        let g = build_graph(n, &edges).expect("ear construction stays simple");
        if is_planar(&g) {
            return g;
        }
    }
}

/// Random bipartite graph (not necessarily planar or connected).
pub fn random_bipartite(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let a = rng.random_range(2..=(max_n / 2));
    let b = rng.random_range(2..=(max_n - a).min(max_n / 2).max(2));
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            if rng.random_bool(0.5) {
                edges.push((u, a + v));
            }
        }
    }
    build_graph(a + b, &edges).unwrap()
}

pub fn random_orientation(rng: &mut ChaCha8Rng, g: &Graph) -> Orientation {
    let dirs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| if rng.random_bool(0.5) { (a, b) } else { (b, a) })
        .collect();
    Orientation::new(g, dirs).unwrap()
}

/// All bipartite theta graphs with path lengths at most `max_len`
/// (parities must agree for bipartiteness, at most one length-1 path).
pub fn bipartite_thetas(max_len: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for l1 in 1..=max_len {
        for l2 in l1..=max_len {
            for l3 in l2..=max_len {
                let lens = [l1, l2, l3];
                if lens.iter().filter(|&&l| l == 1).count() > 1 {
                    continue;
                }
                if l1 % 2 != l2 % 2 || l2 % 2 != l3 % 2 {
                    continue;
                }
                out.push((
                    format!("theta({l1},{l2},{l3})"),
                    gen_theta(l1, l2, l3).unwrap(),
                ));
            }
        }
    }
    out
}

/// All catacondensed chains with up to `max_h` hexagons, plus the branched
/// four-hexagon system.
pub fn hex_family(max_h: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let turn_name = |t: &Turn| match t {
        Turn::Left => 'L',
        Turn::Straight => 'S',
        Turn::Right => 'R',
    };
    let mut stack: Vec<Vec<Turn>> = vec![vec![]];
    while let Some(turns) = stack.pop() {
        let h = turns.len() + 2;
        if h <= max_h {
            if let Ok(g) = gen_hex_chain(h, &turns) {
                let code: String = turns.iter().map(turn_name).collect();
                out.push((format!("hex_chain({h},{code})"), g));
            }
            for t in [Turn::Left, Turn::Straight, Turn::Right] {
                let mut next = turns.clone();
                next.push(t);
                stack.push(next);
            }
        }
    }
    out.push(("hex_chain(1)".into(), gen_hex_chain(1, &[]).unwrap()));
    out.push(("hex_branched".into(), gen_hex_branched()));
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// The corpus shared by the recognition and orientation acceptance
/// criteria: named families plus `random_count` seeded random samples.
pub fn recognition_corpus(random_count: usize) -> Vec<(String, Graph)> {
    let mut corpus = bipartite_thetas(5);
    corpus.push(("cube".into(), gen_cube()));
    for s in 2..=4 {
        corpus.push((format!("g1({s})"), gen_g1(s)));
    }
    for r in 1..=3 {
        corpus.push((format!("g2({r})"), gen_g2(r)));
    }
    corpus.extend(hex_family(4));
    corpus.push(("cycle(4)".into(), gen_cycle(4)));
    corpus.push(("cycle(6)".into(), gen_cycle(6)));
    let mut r = rng(0x5eed_c0de);
    for i in 0..random_count {
        corpus.push((
            format!("random({i})"),
            random_2conn_planar_bipartite(&mut r, 12),
        ));
    }
    corpus
}
