//! Seeded instance generators. All randomness comes from `ChaCha8Rng`
//! seeded with `seed_from_u64`, so instances reproduce across platforms.

use rand::seq::{IteratorRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::problems::hardness::TwoCnf;
use crate::tgraph::{TemporalGraph, Time, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each pair `u < v` becomes an edge with probability `p`; an edge gets
/// between 1 and `max_times` distinct timesteps from `1..=lifetime`.
pub fn gen_random(n: usize, lifetime: Time, p: f64, max_times: usize, seed: u64) -> TemporalGraph {
    let mut r = rng(seed);
    let mut triples = Vec::new();
    if lifetime > 0 && max_times > 0 {
        for u in 0..n {
            for v in u + 1..n {
                if !r.gen_bool(p.clamp(0.0, 1.0)) {
                    continue;
                }
                let count = r.gen_range(1..=max_times.min(lifetime));
                for t in (1..=lifetime).choose_multiple(&mut r, count) {
                    triples.push((u, v, t));
                }
            }
        }
    }
    TemporalGraph::new(n, triples).expect("generated edges are valid")
}

/// Shape of a random ordered temporal tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeShape {
    pub n: usize,
    pub max_children: usize,
    /// Most timesteps per edge.
    pub max_times: usize,
    pub lifetime_cap: Time,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("the ordering needs lifetime {needed} but the cap is {cap}")]
    Infeasible { needed: Time, cap: Time },
    #[error("a tree with {n} vertices cannot have at most {max_children} children per vertex")]
    BadShape { n: usize, max_children: usize },
}

/// A random tree rooted at 0 in which the edges at each vertex are active
/// strictly before every other edge of its subtree.
pub fn gen_ordered_tree(shape: TreeShape, seed: u64) -> Result<TemporalGraph, GenError> {
    let TreeShape { n, max_children, max_times, lifetime_cap } = shape;
    if n > 1 && max_children == 0 {
        return Err(GenError::BadShape { n, max_children });
    }
    let mut r = rng(seed);
    let mut children: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in 1..n {
        let open: Vec<Vertex> = (0..v).filter(|&p| children[p].len() < max_children).collect();
        let &p = open.choose(&mut r).expect("some vertex has room");
        children[p].push(v);
    }
    let mut triples = Vec::new();
    // Iterative form of: assign(v, lo) picks times >= lo for v's child
    // edges, then recurses into every child with lo = (latest of those) + 1.
    let mut stack = vec![(0usize, 1usize)];
    while let Some((v, lo)) = stack.pop() {
        if children[v].is_empty() {
            continue;
        }
        let window = r.gen_range(1..=max_times.max(1) + 1);
        let mut latest = lo;
        for &c in &children[v] {
            let count = r.gen_range(1..=max_times.max(1).min(window));
            for t in (lo..lo + window).choose_multiple(&mut r, count) {
                latest = latest.max(t);
                triples.push((v, c, t));
            }
        }
        for &c in &children[v] {
            stack.push((c, latest + 1));
        }
    }
    let g = TemporalGraph::new(n, triples).expect("tree edges are distinct");
    if g.lifetime() > lifetime_cap {
        return Err(GenError::Infeasible { needed: g.lifetime(), cap: lifetime_cap });
    }
    Ok(g)
}

/// `max_t max_v deg(G'_t, v) + 1`, where `G'` fills every gap between the
/// first and last activation of each edge. 1 for edgeless graphs.
pub fn ordered_tree_formula(g: &TemporalGraph) -> usize {
    let mut span = std::collections::BTreeMap::new();
    for e in g.time_edges() {
        let s = span.entry((e.u, e.v)).or_insert((e.t, e.t));
        s.0 = s.0.min(e.t);
        s.1 = s.1.max(e.t);
    }
    let mut best = 0;
    for t in 1..=g.lifetime() {
        let mut deg = vec![0usize; g.n()];
        for (&(u, v), &(a, b)) in &span {
            if a <= t && t <= b {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        best = best.max(deg.into_iter().max().unwrap_or(0));
    }
    best + 1
}

/// Path `0-1-…-(n-1)` with edge `(i, i+1)` at time `i+1`, and the last
/// edge also at time `n`, so the lifetime is `n`. TIM width 2.
pub fn gen_width2_path(n: usize) -> TemporalGraph {
    assert!(n >= 2, "a path needs two vertices");
    let mut triples: Vec<(Vertex, Vertex, Time)> = (0..n - 1).map(|i| (i, i + 1, i + 1)).collect();
    triples.push((n - 2, n - 1, n));
    TemporalGraph::new(n, triples).expect("path edges are valid")
}

/// `clauses` random clauses over `vars >= 2` variables, each on two
/// distinct variables with random signs.
pub fn random_two_cnf(vars: usize, clauses: usize, seed: u64) -> TwoCnf {
    assert!(vars >= 2, "two distinct variables per clause");
    let mut r = rng(seed);
    let list = (0..clauses)
        .map(|_| {
            let pair = (1..=vars as i32).choose_multiple(&mut r, 2);
            let sign = |r: &mut ChaCha8Rng| if r.gen_bool(0.5) { 1 } else { -1 };
            (pair[0] * sign(&mut r), pair[1] * sign(&mut r))
        })
        .collect();
    TwoCnf { vars, clauses: list }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_extremes() {
        assert!(gen_random(6, 4, 0.0, 2, 1).is_edgeless());
        let full = gen_random(6, 4, 1.0, 1, 1);
        assert_eq!(full.time_edges().len(), 15);
        assert_eq!(full.underlying().edges.len(), 15);
    }

    #[test]
    fn deterministic() {
        assert_eq!(gen_random(8, 5, 0.4, 2, 9), gen_random(8, 5, 0.4, 2, 9));
        assert_eq!(random_two_cnf(4, 5, 3), random_two_cnf(4, 5, 3));
    }

    #[test]
    fn ordered_tree_is_a_tree() {
        let shape = TreeShape { n: 12, max_children: 3, max_times: 2, lifetime_cap: 100 };
        let g = gen_ordered_tree(shape, 5).unwrap();
        assert_eq!(g.underlying().edges.len(), 11);
        assert_eq!(g.underlying().components().len(), 1);
    }

    #[test]
    fn infeasible_cap() {
        let shape = TreeShape { n: 10, max_children: 1, max_times: 1, lifetime_cap: 3 };
        assert!(matches!(gen_ordered_tree(shape, 0), Err(GenError::Infeasible { .. })));
    }

    #[test]
    fn formula_on_paths() {
        assert_eq!(ordered_tree_formula(&gen_width2_path(5)), 2);
        let star = TemporalGraph::new(4, [(0, 1, 1), (0, 2, 2), (0, 3, 3)]).unwrap();
        assert_eq!(ordered_tree_formula(&star), 2);
    }
}
