//! Exact perfect-matching counts by recursive elimination with memoization
//! on the set of unmatched vertices. Desk scale: n up to about 30.

use std::collections::HashMap;

use crate::cycles::Cycle;
use crate::graph::Graph;

/// Number of perfect matchings of `g`. Zero when the vertex count is odd.
pub fn count_perfect_matchings(g: &Graph) -> u128 {
    assert!(g.n() <= 64, "matching oracle is limited to 64 vertices");
    let full: u64 = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let mut memo = HashMap::new();
    count_on_mask(g, full, &mut memo)
}

/// Number of perfect matchings of the subgraph induced by the vertices in
/// `mask`. The empty set counts as matched.
pub fn count_matchings_on_mask(g: &Graph, mask: u64) -> u128 {
    assert!(g.n() <= 64);
    let mut memo = HashMap::new();
    count_on_mask(g, mask, &mut memo)
}

fn count_on_mask(g: &Graph, mask: u64, memo: &mut HashMap<u64, u128>) -> u128 {
    if mask == 0 {
        return 1;
    }
    if let Some(&c) = memo.get(&mask) {
        return c;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << v);
    let mut total = 0u128;
    for &(w, _) in g.neighbors(v) {
        if rest & (1u64 << w) != 0 {
            total += count_on_mask(g, rest & !(1u64 << w), memo);
        }
    }
    memo.insert(mask, total);
    total
}

/// True iff `g - V(c)` has a perfect matching (an empty remainder counts).
pub fn is_nice_cycle(g: &Graph, c: &Cycle) -> bool {
    let mut mask: u64 = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    for &v in c.vertices() {
        mask &= !(1u64 << v);
    }
    count_matchings_on_mask(g, mask) > 0
}
