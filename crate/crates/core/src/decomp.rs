//! TIM decompositions: minimum-width construction, validation, rooting with
//! time-0 leaf copies, and the 2-step bags the component engine runs on.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use thiserror::Error;

use crate::tgraph::{component_lists, DisjointSets, TemporalGraph, Time, Vertex};
use crate::width::VimSequence;

/// A bag of vertices labelled with its timestep.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bag {
    pub time: Time,
    pub vertices: Vec<Vertex>,
}

/// Bags plus arcs `(i, j)` with `τ(j) = τ(i) + 1`. A forest when the
/// underlying graph is disconnected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimDecomposition {
    pub bags: Vec<Bag>,
    pub arcs: Vec<(usize, usize)>,
}

impl TimDecomposition {
    /// Largest bag; 1 for the empty decomposition of an edgeless graph.
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.vertices.len()).max().unwrap_or(1)
    }

    /// Arcs implied by the bags: consecutive times with a shared vertex.
    pub fn implied_arcs(bags: &[Bag]) -> Vec<(usize, usize)> {
        let mut at: BTreeMap<(Time, Vertex), usize> = BTreeMap::new();
        for (i, b) in bags.iter().enumerate() {
            for &v in &b.vertices {
                at.insert((b.time, v), i);
            }
        }
        let mut arcs = BTreeSet::new();
        for (i, b) in bags.iter().enumerate() {
            for &v in &b.vertices {
                if let Some(&j) = at.get(&(b.time + 1, v)) {
                    arcs.insert((i, j));
                }
            }
        }
        arcs.into_iter().collect()
    }

    /// Canonical form: bags sorted by `(time, smallest vertex)`, arcs recomputed.
    fn canonical(mut bags: Vec<Bag>) -> Self {
        for b in &mut bags {
            b.vertices.sort_unstable();
        }
        bags.sort_by(|a, b| (a.time, a.vertices.first()).cmp(&(b.time, b.vertices.first())));
        let arcs = Self::implied_arcs(&bags);
        TimDecomposition { bags, arcs }
    }

    /// Each `F_t` as one bag, every other vertex as a singleton.
    pub fn from_vim_sequence(g: &TemporalGraph, seq: &VimSequence) -> Self {
        let mut bags = Vec::new();
        for t in 1..=g.lifetime() {
            let f = &seq.bags[t];
            if !f.is_empty() {
                bags.push(Bag { time: t, vertices: f.clone() });
            }
            for v in (0..g.n()).filter(|v| f.binary_search(v).is_err()) {
                bags.push(Bag { time: t, vertices: vec![v] });
            }
        }
        Self::canonical(bags)
    }

    /// One bag holding every vertex at each time.
    pub fn trivial(g: &TemporalGraph) -> Self {
        let bags = (1..=g.lifetime()).map(|t| Bag { time: t, vertices: (0..g.n()).collect() }).collect();
        Self::canonical(bags)
    }

    /// Builds a decomposition from bags alone, deriving the arcs.
    pub fn from_bags(bags: Vec<Bag>) -> Self {
        Self::canonical(bags)
    }
}

/// Minimum-width TIM decomposition.
///
/// Starts from snapshot-component bags. Two kinds of merges follow:
///
/// - Forced: two vertices sharing a bag at times `a < b` must share one
///   at every time in between.
/// - Branching: each remaining cycle in the arc graph must lose at least
///   one pair of same-time bags that are both adjacent to a common bag on
///   the cycle. The search branches over those pairs with branch and bound
///   on the width.
///
/// The first descent takes the cheapest merge each time, so a valid answer
/// exists even if the search budget runs out.
pub fn compute_tim_decomposition(g: &TemporalGraph) -> TimDecomposition {
    compute_tim_decomposition_budget(g, SEARCH_BUDGET).0
}

/// Search states explored before [`compute_tim_decomposition`] settles for
/// the best decomposition found so far.
pub const SEARCH_BUDGET: usize = 200_000;

/// As [`compute_tim_decomposition`] with an explicit state budget. The flag
/// is true when the search finished, so the width is proven minimum.
pub fn compute_tim_decomposition_budget(g: &TemporalGraph, budget: usize) -> (TimDecomposition, bool) {
    let (n, lifetime) = (g.n(), g.lifetime());
    let mut start = Vec::with_capacity(lifetime);
    for t in 1..=lifetime {
        let mut row = vec![0; n];
        for comp in component_lists(n, g.edges_at(t).iter().map(|e| (e.u, e.v))) {
            let rep = *comp.iter().min().expect("components are non-empty");
            for v in comp {
                row[v] = rep;
            }
        }
        start.push(row);
    }
    let mut search = MergeSearch { n, best: None, seen: HashSet::new(), budget };
    search.run(start);
    let exhausted = search.budget == 0;
    let (_, rows) = search.best.expect("the first descent always reaches a forest");
    let mut bags = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut blocks: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
        for (v, &r) in row.iter().enumerate() {
            blocks.entry(r).or_default().push(v);
        }
        bags.extend(blocks.into_values().map(|vertices| Bag { time: i + 1, vertices }));
    }
    (TimDecomposition::canonical(bags), !exhausted)
}

/// `rows[i][v]`: smallest vertex in `v`'s bag at time `i + 1`.
type Rows = Vec<Vec<Vertex>>;

struct MergeSearch {
    n: usize,
    best: Option<(usize, Rows)>,
    seen: HashSet<Rows>,
    budget: usize,
}

impl MergeSearch {
    fn run(&mut self, mut rows: Rows) {
        close_intervals(&mut rows, self.n);
        let w = rows_width(&rows, self.n);
        if self.best.as_ref().is_some_and(|(b, _)| w >= *b) || self.budget == 0 {
            return;
        }
        if !self.seen.insert(rows.clone()) {
            return;
        }
        self.budget -= 1;
        let Some(mut pairs) = cycle_merges(&rows, self.n) else {
            self.best = Some((w, rows));
            return;
        };
        let size = |row: &[Vertex], r: Vertex| row.iter().filter(|&&x| x == r).count();
        pairs.sort_by_key(|&(i, a, b)| (size(&rows[i], a) + size(&rows[i], b), i, a, b));
        for (i, a, b) in pairs {
            let mut next = rows.clone();
            merge_blocks(&mut next[i], a, b);
            self.run(next);
        }
    }
}

fn merge_blocks(row: &mut [Vertex], a: Vertex, b: Vertex) {
    let (ra, rb) = (row[a], row[b]);
    let r = ra.min(rb);
    for x in row.iter_mut() {
        if *x == ra || *x == rb {
            *x = r;
        }
    }
}

fn rows_width(rows: &Rows, n: usize) -> usize {
    let mut best = 1;
    let mut count = vec![0; n];
    for row in rows {
        count.iter_mut().for_each(|c| *c = 0);
        for &r in row {
            count[r] += 1;
            best = best.max(count[r]);
        }
    }
    best
}

/// Makes the times at which each pair of vertices shares a bag contiguous.
fn close_intervals(rows: &mut Rows, n: usize) {
    loop {
        let mut changed = false;
        for u in 0..n {
            for v in u + 1..n {
                let mut together = rows.iter().enumerate().filter(|(_, r)| r[u] == r[v]).map(|(i, _)| i);
                let Some(first) = together.next() else { continue };
                let last = together.last().unwrap_or(first);
                for row in &mut rows[first..=last] {
                    if row[u] != row[v] {
                        merge_blocks(row, u, v);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// Some cycle in the arc graph, as the same-time bag pairs `(row, a, b)`
/// that sit on either side of a common bag along it. `None` for a forest.
fn cycle_merges(rows: &Rows, n: usize) -> Option<Vec<(usize, Vertex, Vertex)>> {
    let id = |i: usize, r: Vertex| i * n + r;
    let mut ds = DisjointSets::new(rows.len() * n);
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..rows.len().saturating_sub(1) {
        let arcs: BTreeSet<(usize, usize)> =
            (0..n).map(|v| (id(i, rows[i][v]), id(i + 1, rows[i + 1][v]))).collect();
        for (a, b) in arcs {
            if !ds.union(a, b) {
                let cycle = forest_path(&adj, a, b);
                let k = cycle.len();
                let mut pairs = BTreeSet::new();
                for j in 0..k {
                    let (p, q) = (cycle[(j + k - 1) % k], cycle[(j + 1) % k]);
                    if p / n == q / n && p != q {
                        pairs.insert((p / n, (p % n).min(q % n), (p % n).max(q % n)));
                    }
                }
                return Some(pairs.into_iter().collect());
            }
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
    }
    None
}

/// Path from `a` to `b` in a forest given by adjacency lists.
fn forest_path(adj: &HashMap<usize, Vec<usize>>, a: usize, b: usize) -> Vec<usize> {
    let mut parent: HashMap<usize, usize> = HashMap::from([(a, a)]);
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &y in adj.get(&x).into_iter().flatten() {
            if !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![b];
    while *path.last().unwrap() != a {
        path.push(parent[path.last().unwrap()]);
    }
    path
}

/// Snapshot-component bags, then every cycle in the arc graph is removed
/// by merging all same-time bags on it. Always valid but not always of
/// minimum width.
pub fn merge_all_decomposition(g: &TemporalGraph) -> TimDecomposition {
    let lifetime = g.lifetime();
    let n = g.n();
    // owner[t][v]: node id holding (v, t). Node ids are never reused; a merge
    // keeps the smaller id.
    let mut owner = vec![vec![usize::MAX; n]; lifetime + 1];
    let mut time_of = Vec::new();
    for t in 1..=lifetime {
        for comp in component_lists(n, g.edges_at(t).iter().map(|e| (e.u, e.v))) {
            let id = time_of.len();
            time_of.push(t);
            for v in comp {
                owner[t][v] = id;
            }
        }
    }
    while let Some(cycle) = find_cycle(&owner, time_of.len()) {
        let mut by_time: BTreeMap<Time, Vec<usize>> = BTreeMap::new();
        for id in cycle {
            by_time.entry(time_of[id]).or_default().push(id);
        }
        for (t, mut ids) in by_time {
            if ids.len() < 2 {
                continue;
            }
            ids.sort_unstable();
            let keep = ids[0];
            for slot in owner[t].iter_mut() {
                if ids[1..].contains(slot) {
                    *slot = keep;
                }
            }
        }
    }
    let mut bags: BTreeMap<usize, Bag> = BTreeMap::new();
    for (t, row) in owner.iter().enumerate().skip(1) {
        for (v, &id) in row.iter().enumerate() {
            bags.entry(id).or_insert_with(|| Bag { time: t, vertices: Vec::new() }).vertices.push(v);
        }
    }
    TimDecomposition::canonical(bags.into_values().collect())
}

/// Undirected cycle in the arc graph induced by `owner`, found by DFS from
/// the lowest node id.
fn find_cycle(owner: &[Vec<usize>], nodes: usize) -> Option<Vec<usize>> {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nodes];
    for w in owner.windows(2).skip(1) {
        for (&a, &b) in w[0].iter().zip(&w[1]) {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    let adj: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
    let mut parent = vec![usize::MAX; nodes];
    let mut seen = vec![false; nodes];
    for start in 0..nodes {
        if seen[start] || adj[start].is_empty() {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![(start, 0usize)];
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if *next == adj[u].len() {
                stack.pop();
                continue;
            }
            let w = adj[u][*next];
            *next += 1;
            if w == parent[u] {
                continue;
            }
            if seen[w] {
                let mut cycle = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return Some(cycle);
            }
            seen[w] = true;
            parent[w] = u;
            stack.push((w, 0));
        }
    }
    None
}

pub fn tim_width(g: &TemporalGraph) -> usize {
    compute_tim_decomposition(g).width()
}

/// First violated condition, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("bag {bag} is empty")]
    EmptyBag { bag: usize },
    #[error("bag {bag} has timestep {time} outside 1..={lifetime}")]
    BadTime { bag: usize, time: Time, lifetime: Time },
    #[error("bag {bag} names vertex {vertex} outside the graph")]
    BadVertex { bag: usize, vertex: Vertex },
    #[error("vertex {vertex} is in {count} bags at time {time}, expected exactly one")]
    VertexCoverage { vertex: Vertex, time: Time, count: usize },
    #[error("time-edge ({u}, {v}, {time}) is not inside a single bag")]
    TimeEdgeCoverage { u: Vertex, v: Vertex, time: Time },
    #[error("arc ({from}, {to}) is missing")]
    MissingArc { from: usize, to: usize },
    #[error("arc ({from}, {to}) should not exist")]
    SpuriousArc { from: usize, to: usize },
    #[error("arcs contain a cycle through ({from}, {to})")]
    Cycle { from: usize, to: usize },
    #[error("vertices {a} and {b} are connected in the graph but their bags lie in different trees")]
    Disconnected { a: Vertex, b: Vertex },
    #[error("{nodes} bags exceed n·Λ = {limit}")]
    TooManyNodes { nodes: usize, limit: usize },
}

/// Checks the three definitional conditions plus forest shape and node count.
pub fn validate_decomposition(g: &TemporalGraph, d: &TimDecomposition) -> Result<(), Violation> {
    let lifetime = g.lifetime();
    let mut holder: HashMap<(Vertex, Time), Vec<usize>> = HashMap::new();
    for (i, b) in d.bags.iter().enumerate() {
        if b.vertices.is_empty() {
            return Err(Violation::EmptyBag { bag: i });
        }
        if b.time == 0 || b.time > lifetime {
            return Err(Violation::BadTime { bag: i, time: b.time, lifetime });
        }
        for &v in &b.vertices {
            if v >= g.n() {
                return Err(Violation::BadVertex { bag: i, vertex: v });
            }
            holder.entry((v, b.time)).or_default().push(i);
        }
    }
    for t in 1..=lifetime {
        for v in 0..g.n() {
            let count = holder.get(&(v, t)).map_or(0, Vec::len);
            if count != 1 {
                return Err(Violation::VertexCoverage { vertex: v, time: t, count });
            }
        }
    }
    for e in g.time_edges() {
        if holder[&(e.u, e.t)] != holder[&(e.v, e.t)] {
            return Err(Violation::TimeEdgeCoverage { u: e.u, v: e.v, time: e.t });
        }
    }
    let expected: BTreeSet<_> = TimDecomposition::implied_arcs(&d.bags).into_iter().collect();
    let mut given = BTreeSet::new();
    for &(a, b) in &d.arcs {
        if !expected.contains(&(a, b)) || !given.insert((a, b)) {
            return Err(Violation::SpuriousArc { from: a, to: b });
        }
    }
    if let Some(&(a, b)) = expected.difference(&given).next() {
        return Err(Violation::MissingArc { from: a, to: b });
    }
    let mut ds = DisjointSets::new(d.bags.len());
    for &(a, b) in &d.arcs {
        if !ds.union(a, b) {
            return Err(Violation::Cycle { from: a, to: b });
        }
    }
    for e in g.time_edges() {
        let (x, y) = (holder[&(e.u, 1)][0], holder[&(e.v, 1)][0]);
        if ds.find(x) != ds.find(y) {
            return Err(Violation::Disconnected { a: e.u, b: e.v });
        }
    }
    let limit = g.n() * lifetime;
    if d.bags.len() > limit {
        return Err(Violation::TooManyNodes { nodes: d.bags.len(), limit });
    }
    Ok(())
}

/// A decomposition rooted per tree, with a time-0 leaf copy under every
/// time-1 bag. Copies occupy indices `original_count..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTimDecomposition {
    pub bags: Vec<Bag>,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    pub roots: Vec<usize>,
    pub original_count: usize,
}

impl RootedTimDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.vertices.len()).max().unwrap_or(1)
    }

    /// Children before parents, trees in root order.
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.bags.len());
        for &r in &self.roots {
            let mut stack = vec![(r, false)];
            while let Some((s, expanded)) = stack.pop() {
                if expanded {
                    out.push(s);
                } else {
                    stack.push((s, true));
                    for &c in self.children[s].iter().rev() {
                        stack.push((c, false));
                    }
                }
            }
        }
        out
    }

    /// Nodes of the tree rooted at `r`.
    pub fn subtree(&self, r: usize) -> Vec<usize> {
        let mut out = vec![r];
        let mut i = 0;
        while i < out.len() {
            out.extend(self.children[out[i]].iter().copied());
            i += 1;
        }
        out
    }
}

/// Trees of the arc graph, each a sorted list of bag ids, ordered by first id.
fn trees(d: &TimDecomposition) -> Vec<Vec<usize>> {
    component_lists(d.bags.len(), d.arcs.iter().copied())
}

/// Default root per tree: the latest bag holding the tree's lowest vertex.
pub fn default_roots(d: &TimDecomposition) -> Vec<usize> {
    trees(d)
        .into_iter()
        .map(|tree| {
            let low = tree.iter().flat_map(|&i| d.bags[i].vertices.iter().copied()).min().unwrap();
            *tree
                .iter()
                .filter(|&&i| d.bags[i].vertices.contains(&low))
                .max_by_key(|&&i| d.bags[i].time)
                .unwrap()
        })
        .collect()
}

pub fn root_and_augment(d: &TimDecomposition) -> RootedTimDecomposition {
    root_and_augment_at(d, &default_roots(d))
}

/// Roots each tree at the given node (one per tree, any order).
pub fn root_and_augment_at(d: &TimDecomposition, roots: &[usize]) -> RootedTimDecomposition {
    let m = d.bags.len();
    let mut adj = vec![Vec::new(); m];
    for &(a, b) in &d.arcs {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = vec![None; m];
    let mut children = vec![Vec::new(); m];
    let mut seen = vec![false; m];
    let mut ordered_roots = roots.to_vec();
    ordered_roots.sort_unstable();
    for &r in &ordered_roots {
        assert!(!seen[r], "two roots in one tree");
        seen[r] = true;
        let mut queue = vec![r];
        while let Some(u) = queue.pop() {
            let mut next: Vec<usize> = adj[u].iter().copied().filter(|&w| !seen[w]).collect();
            next.sort_unstable();
            for w in next {
                seen[w] = true;
                parent[w] = Some(u);
                children[u].push(w);
                queue.push(w);
            }
        }
    }
    assert!(seen.iter().all(|&s| s), "every tree needs a root");
    let mut bags = d.bags.clone();
    for i in 0..m {
        if d.bags[i].time == 1 {
            let copy = bags.len();
            bags.push(Bag { time: 0, vertices: d.bags[i].vertices.clone() });
            parent.push(Some(i));
            children.push(Vec::new());
            children[i].push(copy);
        }
    }
    for c in &mut children {
        c.sort_unstable();
    }
    RootedTimDecomposition { bags, parent, children, roots: ordered_roots, original_count: m }
}

/// A timed component as seen by the 2-step decomposition. Time-0
/// components are those of `G_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentInfo {
    pub time: Time,
    pub vertices: Vec<Vertex>,
    /// Node whose own bag holds the component.
    pub owner: usize,
    /// Node at which the transition into this component is checked
    /// (`None` at time 0).
    pub checked_at: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoStepNode {
    pub time: Time,
    /// Own pairs followed by children's own pairs, sorted.
    pub pairs: Vec<(Vertex, Time)>,
    /// Components held in the node's own bag.
    pub own: Vec<usize>,
    /// Own components followed by each child's own components.
    pub components: Vec<usize>,
    /// Components whose transition is checked at this node.
    pub tr_checks: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoStepDecomposition {
    pub rooted: RootedTimDecomposition,
    pub nodes: Vec<TwoStepNode>,
    pub components: Vec<ComponentInfo>,
    pub lifetime: Time,
}

impl TwoStepDecomposition {
    pub fn width(&self) -> usize {
        self.nodes.iter().map(|s| s.pairs.len()).max().unwrap_or(0)
    }
}

pub fn build_two_step(g: &TemporalGraph, rd: &RootedTimDecomposition) -> TwoStepDecomposition {
    let m = rd.bags.len();
    let mut components = Vec::new();
    let mut own = vec![Vec::new(); m];
    for s in 0..m {
        let bag = &rd.bags[s];
        let edge_time = bag.time.max(1);
        let local: HashMap<Vertex, usize> = bag.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = g
            .edges_at(edge_time)
            .iter()
            .filter_map(|e| Some((*local.get(&e.u)?, *local.get(&e.v)?)));
        for comp in component_lists(bag.vertices.len(), edges) {
            own[s].push(components.len());
            components.push(ComponentInfo {
                time: bag.time,
                vertices: comp.into_iter().map(|i| bag.vertices[i]).collect(),
                owner: s,
                checked_at: None,
            });
        }
    }
    for c in components.iter_mut().filter(|c| c.time >= 1) {
        let s = c.owner;
        let deferred = rd.parent[s].is_some_and(|p| {
            rd.bags[p].time + 1 == c.time && c.vertices.iter().any(|v| rd.bags[p].vertices.binary_search(v).is_ok())
        });
        c.checked_at = Some(if deferred { rd.parent[s].unwrap() } else { s });
    }
    let mut nodes: Vec<TwoStepNode> = (0..m)
        .map(|s| {
            let mut pairs: Vec<_> = rd.bags[s].vertices.iter().map(|&v| (v, rd.bags[s].time)).collect();
            let mut comps = own[s].clone();
            for &c in &rd.children[s] {
                pairs.extend(rd.bags[c].vertices.iter().map(|&v| (v, rd.bags[c].time)));
                comps.extend(own[c].iter().copied());
            }
            pairs.sort_unstable();
            TwoStepNode { time: rd.bags[s].time, pairs, own: own[s].clone(), components: comps, tr_checks: Vec::new() }
        })
        .collect();
    for (id, c) in components.iter().enumerate() {
        if let Some(s) = c.checked_at {
            nodes[s].tr_checks.push(id);
        }
    }
    TwoStepDecomposition { rooted: rd.clone(), nodes, components, lifetime: g.lifetime() }
}

/// Plain-text export: `node <id> time=<t> bag=<v,...>` and `arc <i> <j>`.
pub fn format_decomposition(d: &TimDecomposition) -> String {
    let mut out = String::new();
    for (i, b) in d.bags.iter().enumerate() {
        out.push_str(&format!("node {} time={} bag={}\n", i, b.time, join(&b.vertices)));
    }
    for &(a, b) in &d.arcs {
        out.push_str(&format!("arc {} {}\n", a, b));
    }
    out
}

/// Graphviz export of the arc structure.
pub fn format_dot(d: &TimDecomposition) -> String {
    let mut out = String::from("digraph tim {\n");
    for (i, b) in d.bags.iter().enumerate() {
        out.push_str(&format!("  n{} [label=\"t={} {{{}}}\"];\n", i, b.time, join(&b.vertices)));
    }
    for &(a, b) in &d.arcs {
        out.push_str(&format!("  n{} -> n{};\n", a, b));
    }
    out.push_str("}\n");
    out
}

pub fn format_two_step(ts: &TwoStepDecomposition) -> String {
    let mut out = String::new();
    for (i, s) in ts.nodes.iter().enumerate() {
        let pairs: Vec<String> = s.pairs.iter().map(|(v, t)| format!("{}@{}", v, t)).collect();
        out.push_str(&format!("node {} time={} pairs={}\n", i, s.time, pairs.join(",")));
    }
    for (i, p) in ts.rooted.parent.iter().enumerate() {
        if let Some(p) = p {
            out.push_str(&format!("child {} {}\n", p, i));
        }
    }
    out
}

fn join(vs: &[Vertex]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}
