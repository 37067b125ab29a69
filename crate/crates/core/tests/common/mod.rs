//! Shared suites and independent reference computations for the
//! integration tests. Nothing here uses the decomposition or engine code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use timwidth::generate::gen_random;
use timwidth::tgraph::{TemporalGraph, Time, Vertex};

/// Small random instance number `i` of a 200-instance suite: `n` in 2..=7,
/// lifetime in 1..=5.
pub fn suite_graph(i: u64, density: f64) -> TemporalGraph {
    let n = 2 + (i % 6) as usize;
    let lifetime = 1 + ((i / 6) % 5) as usize;
    gen_random(n, lifetime, density, 2, 1_000 + i)
}

/// Components by repeated flooding over an adjacency matrix.
pub fn flood_components(n: usize, edges: &[(Vertex, Vertex)]) -> BTreeSet<BTreeSet<Vertex>> {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut seen = vec![false; n];
    let mut out = BTreeSet::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = BTreeSet::from([s]);
        seen[s] = true;
        let mut frontier = vec![s];
        while let Some(x) = frontier.pop() {
            for y in 0..n {
                if adj[x][y] && !seen[y] {
                    seen[y] = true;
                    comp.insert(y);
                    frontier.push(y);
                }
            }
        }
        out.insert(comp);
    }
    out
}

/// `F_t` by scanning every time-edge for each vertex.
pub fn interval_bag(g: &TemporalGraph, t: Time) -> BTreeSet<Vertex> {
    (0..g.n())
        .filter(|&v| {
            let times: Vec<Time> = g.time_edges().iter().filter(|e| e.u == v || e.v == v).map(|e| e.t).collect();
            !times.is_empty() && *times.iter().min().unwrap() <= t && t <= *times.iter().max().unwrap()
        })
        .collect()
}

/// Every temporal graph on `n` vertices with lifetime at most `lifetime`:
/// each pair gets any subset of timesteps. Only sensible for tiny sizes.
pub fn all_graphs(n: usize, lifetime: Time) -> Vec<TemporalGraph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let slots: Vec<(Vertex, Vertex, Time)> =
        pairs.iter().flat_map(|&(u, v)| (1..=lifetime).map(move |t| (u, v, t))).collect();
    assert!(slots.len() <= 20, "too many graphs");
    (0u32..1 << slots.len())
        .map(|mask| {
            let chosen = slots.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s);
            TemporalGraph::new(n, chosen).unwrap()
        })
        .collect()
}

/// All set partitions of `items`, as lists of sorted blocks.
pub fn partitions(items: &[Vertex]) -> Vec<Vec<Vec<Vertex>>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for p in partitions(rest) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].insert(0, first);
            out.push(q);
        }
        let mut q = p.clone();
        q.insert(0, vec![first]);
        out.push(q);
    }
    out
}

/// Bags at one time: partitions in which every snapshot edge lies inside a block.
fn admissible_layers(g: &TemporalGraph, t: Time) -> Vec<Vec<Vec<Vertex>>> {
    let all: Vec<Vertex> = (0..g.n()).collect();
    partitions(&all)
        .into_iter()
        .filter(|p| {
            g.time_edges()
                .iter()
                .filter(|e| e.t == t)
                .all(|e| p.iter().any(|b| b.contains(&e.u) && b.contains(&e.v)))
        })
        .collect()
}

/// Whether consecutive layers, joined on shared vertices, form a forest.
fn layers_acyclic(layers: &[&Vec<Vec<Vertex>>]) -> bool {
    let mut ids = Vec::new();
    let mut count = 0;
    for layer in layers {
        ids.push(count);
        count += layer.len();
    }
    let mut parent: Vec<usize> = (0..count).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }
    for t in 1..layers.len() {
        for (i, a) in layers[t - 1].iter().enumerate() {
            for (j, b) in layers[t].iter().enumerate() {
                if a.iter().any(|v| b.contains(v)) {
                    let (x, y) = (root(&mut parent, ids[t - 1] + i), root(&mut parent, ids[t] + j));
                    if x == y {
                        return false;
                    }
                    parent[x] = y;
                }
            }
        }
    }
    true
}

/// Every valid decomposition, as one partition per timestep `1..=Λ`.
pub fn all_decompositions(g: &TemporalGraph) -> Vec<Vec<Vec<Vec<Vertex>>>> {
    let layers: Vec<Vec<Vec<Vec<Vertex>>>> = (1..=g.lifetime()).map(|t| admissible_layers(g, t)).collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; layers.len()];
    if layers.is_empty() {
        return out;
    }
    loop {
        let chosen: Vec<&Vec<Vec<Vertex>>> = pick.iter().zip(&layers).map(|(&i, l)| &l[i]).collect();
        if layers_acyclic(&chosen) {
            out.push(chosen.into_iter().cloned().collect());
        }
        let mut i = 0;
        loop {
            if i == pick.len() {
                return out;
            }
            pick[i] += 1;
            if pick[i] < layers[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Smallest width of any valid decomposition, by exhaustive search; 1 for
/// edgeless graphs.
pub fn brute_force_tim_width(g: &TemporalGraph) -> usize {
    all_decompositions(g)
        .iter()
        .map(|d| d.iter().flatten().map(Vec::len).max().unwrap_or(1))
        .min()
        .unwrap_or(1)
}

/// A relabelling-invariant key: the lexicographically least sorted edge
/// list over all vertex permutations.
pub fn canonical_key(g: &TemporalGraph) -> Vec<(Time, Vertex, Vertex)> {
    let n = g.n();
    let mut perm: Vec<Vertex> = (0..n).collect();
    let mut best: Option<Vec<(Time, Vertex, Vertex)>> = None;
    loop {
        let mut key: Vec<(Time, Vertex, Vertex)> = g
            .time_edges()
            .iter()
            .map(|e| {
                let (a, b) = (perm[e.u], perm[e.v]);
                (e.t, a.min(b), a.max(b))
            })
            .collect();
        key.sort_unstable();
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Earliest arrival time at every vertex from `source` (0 at the source),
/// by one pass over time-edges in time order. Ties within a timestep do
/// not chain because paths are strict.
pub fn earliest_arrival(g: &TemporalGraph, source: Vertex) -> Vec<Option<Time>> {
    let mut arrival = vec![None; g.n()];
    arrival[source] = Some(0);
    for t in 1..=g.lifetime() {
        let before = arrival.clone();
        for e in g.time_edges().iter().filter(|e| e.t == t) {
            for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                if before[a].is_some_and(|x| x < t) && arrival[b].is_none() {
                    arrival[b] = Some(t);
                }
            }
        }
    }
    arrival
}

/// A random vertex permutation, deterministic in `seed`.
pub fn shuffled(n: usize, seed: u64) -> Vec<Vertex> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut p: Vec<Vertex> = (0..n).collect();
    p.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    p
}

/// Proptest strategy: up to `max_n` vertices, timesteps up to `max_t`.
pub fn arb_graph(max_n: usize, max_t: Time) -> impl proptest::strategy::Strategy<Value = TemporalGraph> {
    use proptest::prelude::*;
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n, 1..=max_t), 0..=2 * n * max_t).prop_map(move |triples| {
            let mut seen = BTreeSet::new();
            let kept: Vec<_> = triples
                .into_iter()
                .filter(|&(u, v, t)| u != v && seen.insert((u.min(v), u.max(v), t)))
                .collect();
            TemporalGraph::new(n, kept).unwrap()
        })
    })
}
