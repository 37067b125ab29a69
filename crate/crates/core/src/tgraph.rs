//! Temporal graph model: vertices `0..n`, time-edges `(u, v, t)` with `u < v`
//! and `t >= 1`, and the elementary queries built on them.

use std::collections::BTreeSet;

use thiserror::Error;

pub type Vertex = usize;
pub type Time = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("time-edge ({u}, {v}) uses timestep 0; timesteps start at 1")]
    ZeroTime { u: Vertex, v: Vertex },
    #[error("duplicate time-edge ({u}, {v}, {t})")]
    Duplicate { u: Vertex, v: Vertex, t: Time },
    #[error("timestep {t} outside 0..={lifetime}")]
    TimeOutOfRange { t: Time, lifetime: Time },
    #[error("({u}, {v}, {t}) is not a time-edge of the graph")]
    NotATimeEdge { u: Vertex, v: Vertex, t: Time },
}

/// A single time-edge, always stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TimeEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub t: Time,
}

impl TimeEdge {
    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Immutable temporal graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalGraph {
    n: usize,
    /// Sorted by `(t, u, v)`.
    edges: Vec<TimeEdge>,
    lifetime: Time,
    /// `by_time[t]` is the range of `edges` active at `t` (index 0 is empty).
    by_time: Vec<(usize, usize)>,
}

impl TemporalGraph {
    /// Builds a graph from `(u, v, t)` triples; endpoints may come in either order.
    pub fn new<I>(n: usize, triples: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Time)>,
    {
        let mut edges = Vec::new();
        let mut seen = BTreeSet::new();
        for (a, b, t) in triples {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if t == 0 {
                return Err(GraphError::ZeroTime { u, v });
            }
            let e = TimeEdge { u, v, t };
            if !seen.insert(e) {
                return Err(GraphError::Duplicate { u, v, t });
            }
            edges.push(e);
        }
        edges.sort_by_key(|e| (e.t, e.u, e.v));
        let lifetime = edges.last().map_or(0, |e| e.t);
        let mut by_time = vec![(0, 0); lifetime + 1];
        let mut i = 0;
        for (t, slot) in by_time.iter_mut().enumerate().skip(1) {
            let start = i;
            while i < edges.len() && edges[i].t == t {
                i += 1;
            }
            *slot = (start, i);
        }
        Ok(TemporalGraph { n, edges, lifetime, by_time })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Latest timestep carrying an edge, 0 when edgeless.
    pub fn lifetime(&self) -> Time {
        self.lifetime
    }

    /// All time-edges in canonical `(t, u, v)` order.
    pub fn time_edges(&self) -> &[TimeEdge] {
        &self.edges
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn has_time_edge(&self, a: Vertex, b: Vertex, t: Time) -> bool {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges_at(t).iter().any(|e| e.u == u && e.v == v)
    }

    /// Edges active at `t`; empty for `t = 0` or `t > Λ`.
    pub fn edges_at(&self, t: Time) -> &[TimeEdge] {
        match self.by_time.get(t) {
            Some(&(a, b)) => &self.edges[a..b],
            None => &[],
        }
    }

    pub fn snapshot(&self, t: Time) -> Result<Snapshot, GraphError> {
        self.check_time(t)?;
        Ok(Snapshot {
            t,
            n: self.n,
            edges: self.edges_at(t).iter().map(|e| (e.u, e.v)).collect(),
        })
    }

    /// Connected components of `G_t`, each sorted, ordered by smallest member.
    pub fn components_at(&self, t: Time) -> Result<Vec<TimedComponent>, GraphError> {
        self.check_time(t)?;
        Ok(component_lists(self.n, self.edges_at(t).iter().map(|e| (e.u, e.v)))
            .into_iter()
            .map(|vertices| TimedComponent { t, vertices })
            .collect())
    }

    /// Underlying graph of the time-edges at or before `t`.
    pub fn prefix_graph(&self, t: Time) -> Result<StaticGraph, GraphError> {
        self.check_window(t)?;
        Ok(StaticGraph::from_edges(
            self.n,
            self.edges.iter().filter(|e| e.t <= t).map(|e| (e.u, e.v)),
        ))
    }

    /// Underlying graph of the time-edges at or after `t`.
    pub fn suffix_graph(&self, t: Time) -> Result<StaticGraph, GraphError> {
        self.check_window(t)?;
        Ok(StaticGraph::from_edges(
            self.n,
            self.edges.iter().filter(|e| e.t >= t).map(|e| (e.u, e.v)),
        ))
    }

    pub fn underlying(&self) -> StaticGraph {
        StaticGraph::from_edges(self.n, self.edges.iter().map(|e| (e.u, e.v)))
    }

    /// Keeps the time-edges accepted by `keep`; vertex set and times are unchanged.
    pub fn filter_edges(&self, mut keep: impl FnMut(&TimeEdge) -> bool) -> TemporalGraph {
        let triples: Vec<_> = self.edges.iter().filter(|e| keep(e)).map(|e| (e.u, e.v, e.t)).collect();
        TemporalGraph::new(self.n, triples).expect("subset of a valid graph is valid")
    }

    /// Drops time-edges before `start` and shifts the rest so `start` becomes time 1.
    pub fn shift_to(&self, start: Time) -> TemporalGraph {
        assert!(start >= 1);
        let triples: Vec<_> = self
            .edges
            .iter()
            .filter(|e| e.t >= start)
            .map(|e| (e.u, e.v, e.t + 1 - start))
            .collect();
        TemporalGraph::new(self.n, triples).expect("shifted graph is valid")
    }

    /// Applies a vertex permutation `perm[old] = new`.
    pub fn relabel(&self, perm: &[Vertex]) -> TemporalGraph {
        let triples: Vec<_> = self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.t)).collect();
        TemporalGraph::new(self.n, triples).expect("relabelled graph is valid")
    }

    /// Strict temporal path check: consecutive edges share an endpoint, times
    /// strictly increase and no vertex is traversed twice.
    pub fn is_strict_temporal_path(&self, seq: &[((Vertex, Vertex), Time)]) -> Result<bool, GraphError> {
        for &((a, b), t) in seq {
            if !self.has_time_edge(a, b, t) {
                let (u, v) = if a < b { (a, b) } else { (b, a) };
                return Err(GraphError::NotATimeEdge { u, v, t });
            }
        }
        if seq.is_empty() {
            return Ok(true);
        }
        if seq.windows(2).any(|w| w[0].1 >= w[1].1) {
            return Ok(false);
        }
        // Orient the walk. With one edge either orientation works.
        let ((a, b), _) = seq[0];
        let candidates = if seq.len() == 1 { vec![a] } else { vec![a, b] };
        for start in candidates {
            let mut walk = vec![start];
            let mut cur = start;
            let mut ok = true;
            for &((x, y), _) in seq {
                let next = if x == cur {
                    y
                } else if y == cur {
                    x
                } else {
                    ok = false;
                    break;
                };
                walk.push(next);
                cur = next;
            }
            if ok {
                let distinct: BTreeSet<_> = walk.iter().collect();
                return Ok(distinct.len() == walk.len());
            }
        }
        Ok(false)
    }

    fn check_time(&self, t: Time) -> Result<(), GraphError> {
        if t > self.lifetime {
            return Err(GraphError::TimeOutOfRange { t, lifetime: self.lifetime });
        }
        Ok(())
    }

    fn check_window(&self, t: Time) -> Result<(), GraphError> {
        if t == 0 || t > self.lifetime {
            return Err(GraphError::TimeOutOfRange { t, lifetime: self.lifetime });
        }
        Ok(())
    }
}

/// Edges active at one timestep over the full vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snapshot {
    pub t: Time,
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Snapshot {
    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.contains(&key)
    }

    pub fn neighbours(&self, x: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.edges.iter().filter_map(move |&(u, v)| {
            if u == x {
                Some(v)
            } else if v == x {
                Some(u)
            } else {
                None
            }
        })
    }

    pub fn degree(&self, x: Vertex) -> usize {
        self.neighbours(x).count()
    }
}

/// One connected component of a snapshot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TimedComponent {
    pub t: Time,
    pub vertices: Vec<Vertex>,
}

/// Simple undirected graph with sorted, deduplicated edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticGraph {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl StaticGraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let set: BTreeSet<_> = edges.into_iter().map(|(a, b)| if a < b { (a, b) } else { (b, a) }).collect();
        StaticGraph { n, edges: set.into_iter().collect() }
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        component_lists(self.n, self.edges.iter().copied())
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// Components of the graph on `0..n` with the given edges, sorted and ordered
/// by smallest member.
pub fn component_lists(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Vec<Vec<Vertex>> {
    let mut ds = DisjointSets::new(n);
    for (u, v) in edges {
        ds.union(u, v);
    }
    let mut slot = vec![usize::MAX; n];
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    for v in 0..n {
        let r = ds.find(v);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push(Vec::new());
        }
        out[slot[r]].push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize, usize)]) -> TemporalGraph {
        TemporalGraph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn snapshot_basics() {
        let gr = g(2, &[(0, 1, 3)]);
        assert_eq!(gr.lifetime(), 3);
        assert_eq!(gr.snapshot(3).unwrap().edges, vec![(0, 1)]);
        assert!(gr.snapshot(1).unwrap().edges.is_empty());
        assert!(gr.snapshot(0).unwrap().edges.is_empty());
        assert!(matches!(gr.snapshot(4), Err(GraphError::TimeOutOfRange { .. })));
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(TemporalGraph::new(2, [(1, 1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(TemporalGraph::new(2, [(0, 1, 1), (1, 0, 1)]), Err(GraphError::Duplicate { .. })));
        assert!(matches!(TemporalGraph::new(2, [(0, 2, 1)]), Err(GraphError::VertexOutOfRange { .. })));
        assert!(matches!(TemporalGraph::new(2, [(0, 1, 0)]), Err(GraphError::ZeroTime { .. })));
        assert_eq!(TemporalGraph::new(3, []).unwrap().lifetime(), 0);
    }

    #[test]
    fn components_in_order() {
        let gr = g(4, &[(0, 1, 1), (2, 3, 1), (1, 2, 2)]);
        let c: Vec<_> = gr.components_at(1).unwrap().into_iter().map(|c| c.vertices).collect();
        assert_eq!(c, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(gr.components_at(0).unwrap().len(), 4);
    }

    #[test]
    fn prefix_and_suffix() {
        let gr = g(3, &[(0, 1, 1), (1, 2, 3)]);
        assert_eq!(gr.prefix_graph(2).unwrap().edges, vec![(0, 1)]);
        assert_eq!(gr.suffix_graph(2).unwrap().edges, vec![(1, 2)]);
        assert_eq!(gr.prefix_graph(3).unwrap(), gr.underlying());
        assert_eq!(gr.suffix_graph(1).unwrap(), gr.underlying());
        assert!(gr.prefix_graph(0).is_err());
    }

    #[test]
    fn strict_paths() {
        let gr = g(3, &[(0, 1, 1), (1, 2, 2), (0, 1, 2), (0, 2, 3)]);
        assert!(gr.is_strict_temporal_path(&[((0, 1), 1), ((1, 2), 2)]).unwrap());
        assert!(!gr.is_strict_temporal_path(&[((0, 1), 2), ((1, 2), 2)]).unwrap());
        assert!(!gr.is_strict_temporal_path(&[((0, 1), 1), ((1, 2), 2), ((2, 0), 3)]).unwrap());
        assert!(gr.is_strict_temporal_path(&[((1, 0), 1)]).unwrap());
        assert!(gr.is_strict_temporal_path(&[((2, 1), 5)]).is_err());
    }

    #[test]
    fn shift_drops_and_renumbers() {
        let gr = g(3, &[(0, 1, 1), (1, 2, 3)]);
        let s = gr.shift_to(2);
        assert_eq!(s.time_edges(), &[TimeEdge { u: 1, v: 2, t: 2 }]);
    }
}
