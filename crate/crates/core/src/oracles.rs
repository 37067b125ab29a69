//! Brute-force ground truth. Nothing here calls the engines, the plugins or
//! the decomposition code.

use std::collections::HashMap;
use std::time::Instant;

use crate::tgraph::{TemporalGraph, TimeEdge, Vertex};

/// Some strict temporal path visits every vertex.
pub fn oracle_ham(g: &TemporalGraph) -> bool {
    oracle_ham_until(g, None).expect("no deadline")
}

/// As [`oracle_ham`], giving up with `None` once `deadline` passes.
pub fn oracle_ham_until(g: &TemporalGraph, deadline: Option<Instant>) -> Option<bool> {
    let n = g.n();
    if n <= 1 {
        return Some(true);
    }
    let edges = g.time_edges();
    let mut visited = vec![false; n];
    let mut steps = 0u64;
    for start in 0..n {
        visited[start] = true;
        let found = ham_dfs(edges, start, 0, 1, n, &mut visited, &mut steps, deadline)?;
        visited[start] = false;
        if found {
            return Some(true);
        }
    }
    Some(false)
}

#[allow(clippy::too_many_arguments)]
fn ham_dfs(
    edges: &[TimeEdge],
    at: Vertex,
    after: usize,
    count: usize,
    n: usize,
    visited: &mut [bool],
    steps: &mut u64,
    deadline: Option<Instant>,
) -> Option<bool> {
    if count == n {
        return Some(true);
    }
    *steps += 1;
    if *steps % 4096 == 0 && deadline.is_some_and(|d| Instant::now() > d) {
        return None;
    }
    for e in edges.iter().filter(|e| e.t > after && e.touches(at)) {
        let next = e.other(at);
        if visited[next] {
            continue;
        }
        visited[next] = true;
        let found = ham_dfs(edges, next, e.t, count + 1, n, visited, steps, deadline);
        visited[next] = false;
        if found != Some(false) {
            return found;
        }
    }
    Some(false)
}

/// Largest Δ-temporal matching, by branch and bound over the time-edges.
pub fn max_temporal_matching(g: &TemporalGraph, delta: usize) -> usize {
    let edges = g.time_edges();
    let compatible = |a: &TimeEdge, b: &TimeEdge| {
        let disjoint = a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
        disjoint || a.t.abs_diff(b.t) >= delta
    };
    fn go(
        edges: &[TimeEdge],
        i: usize,
        chosen: &mut Vec<usize>,
        best: &mut usize,
        ok: &dyn Fn(&TimeEdge, &TimeEdge) -> bool,
    ) {
        if chosen.len() + (edges.len() - i) <= *best {
            return;
        }
        if i == edges.len() {
            *best = chosen.len();
            return;
        }
        if chosen.iter().all(|&c| ok(&edges[c], &edges[i])) {
            chosen.push(i);
            go(edges, i + 1, chosen, best, ok);
            chosen.pop();
        }
        go(edges, i + 1, chosen, best, ok);
    }
    let mut best = 0;
    go(edges, 0, &mut Vec::new(), &mut best, &compatible);
    best
}

pub fn oracle_matching(g: &TemporalGraph, delta: usize, h: usize) -> bool {
    h == 0 || max_temporal_matching(g, delta) >= h
}

/// Vertices reachable from `source` by strict temporal paths using only
/// the time-edges with `alive[i]`, found by path search.
pub fn reachable_by_paths(g: &TemporalGraph, source: Vertex, alive: &[bool]) -> Vec<bool> {
    let edges = g.time_edges();
    let mut reached = vec![false; g.n()];
    reached[source] = true;
    let mut on_path = vec![false; g.n()];
    on_path[source] = true;
    // Best (earliest) arrival seen per vertex prunes repeated exploration;
    // a later arrival can never reach more.
    let mut best = vec![usize::MAX; g.n()];
    best[source] = 0;
    fn go(
        edges: &[TimeEdge],
        alive: &[bool],
        at: Vertex,
        after: usize,
        on_path: &mut [bool],
        reached: &mut [bool],
        best: &mut [usize],
    ) {
        for (i, e) in edges.iter().enumerate() {
            if !alive[i] || e.t <= after || !e.touches(at) {
                continue;
            }
            let next = e.other(at);
            if on_path[next] || best[next] <= e.t {
                continue;
            }
            best[next] = e.t;
            reached[next] = true;
            on_path[next] = true;
            go(edges, alive, next, e.t, on_path, reached, best);
            on_path[next] = false;
        }
    }
    go(edges, alive, source, 0, &mut on_path, &mut reached, &mut best);
    reached
}

/// Some deletion of at most `h` time-edges leaves at most `r` vertices
/// reachable from `source` (the source counts).
pub fn oracle_tred(g: &TemporalGraph, source: Vertex, r: usize, h: usize) -> bool {
    let m = g.time_edges().len();
    let mut alive = vec![true; m];
    fn go(g: &TemporalGraph, source: Vertex, r: usize, left: usize, from: usize, alive: &mut [bool]) -> bool {
        if reachable_by_paths(g, source, alive).iter().filter(|&&x| x).count() <= r {
            return true;
        }
        if left == 0 {
            return false;
        }
        for i in from..alive.len() {
            alive[i] = false;
            let ok = go(g, source, r, left - 1, i + 1, alive);
            alive[i] = true;
            if ok {
                return true;
            }
        }
        false
    }
    go(g, source, r, h.min(m), 0, &mut alive)
}

/// Rules for the firefighter game search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FireRules {
    /// Budget accrues one unit per step and may be spent at once; otherwise
    /// at most one defence per step, unused turns are lost.
    pub reserve: bool,
    /// Only vertices with an edge at the current step may be defended.
    pub active_only: bool,
}

impl Default for FireRules {
    fn default() -> Self {
        FireRules { reserve: true, active_only: true }
    }
}

/// Most vertices that can be kept from burning.
pub fn max_saved(g: &TemporalGraph, root: Vertex, rules: FireRules) -> usize {
    let n = g.n();
    assert!(n <= 128, "bitset search handles at most 128 vertices");
    let lifetime = g.lifetime();
    // live[t]: vertices with an edge at time >= t.
    let mut live = vec![0u128; lifetime + 2];
    for t in (1..=lifetime).rev() {
        let mut mask = live[t + 1];
        for e in g.edges_at(t) {
            mask |= 1 << e.u | 1 << e.v;
        }
        live[t] = mask;
    }
    let mut memo = HashMap::new();
    let burnt_later = fire_search(g, rules, &live, 1, 1u128 << root, 0, 0, &mut memo);
    n - 1 - burnt_later
}

pub fn oracle_firefighter(g: &TemporalGraph, root: Vertex, h: usize) -> bool {
    max_saved(g, root, FireRules::default()) >= h
}

type FireKey = (usize, u128, u128, usize);

/// Fewest vertices that still catch fire from time `t` on.
#[allow(clippy::too_many_arguments)]
fn fire_search(
    g: &TemporalGraph,
    rules: FireRules,
    live: &[u128],
    t: usize,
    burning: u128,
    defended: u128,
    budget: usize,
    memo: &mut HashMap<FireKey, usize>,
) -> usize {
    if t > g.lifetime() {
        return 0;
    }
    let mask = live[t];
    let budget = if rules.reserve { budget + 1 } else { 1 };
    let key = (t, burning & mask, defended & mask, budget.min(mask.count_ones() as usize));
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let edges = g.edges_at(t);
    let mut candidates: Vec<Vertex> = Vec::new();
    for v in 0..g.n() {
        let free = (burning | defended) >> v & 1 == 0;
        let active = edges.iter().any(|e| e.touches(v));
        let relevant = if rules.active_only { active } else { mask >> v & 1 == 1 };
        if free && relevant {
            candidates.push(v);
        }
    }
    let mut best = usize::MAX;
    let mut chosen = Vec::new();
    choose_defences(&candidates, 0, budget, &mut chosen, &mut |picked: &[Vertex]| {
        let mut def = defended;
        for &v in picked {
            def |= 1 << v;
        }
        let mut next = burning;
        for e in edges {
            if burning >> e.u & 1 == 1 && def >> e.v & 1 == 0 {
                next |= 1 << e.v;
            }
            if burning >> e.v & 1 == 1 && def >> e.u & 1 == 0 {
                next |= 1 << e.u;
            }
        }
        let fresh = (next & !burning).count_ones() as usize;
        let rest = fire_search(g, rules, live, t + 1, next, def, budget - picked.len(), memo);
        best = best.min(fresh + rest);
    });
    memo.insert(key, best);
    best
}

fn choose_defences(
    candidates: &[Vertex],
    from: usize,
    left: usize,
    chosen: &mut Vec<Vertex>,
    visit: &mut dyn FnMut(&[Vertex]),
) {
    visit(chosen);
    if left == 0 {
        return;
    }
    for i in from..candidates.len() {
        chosen.push(candidates[i]);
        choose_defences(candidates, i + 1, left - 1, chosen, visit);
        chosen.pop();
    }
}
