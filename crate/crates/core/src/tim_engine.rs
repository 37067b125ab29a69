//! Realisable-profile dynamic program over a rooted 2-step TIM
//! decomposition, for component-exchangeable temporally uniform problems.
//!
//! Every timed component `C` is given a labelling and a `k`-vector (an
//! *option*). A node's profile fixes the options of the components in its
//! 2-step bag; the table maps each profile to the set of subtree totals it
//! can reach. Transitions into a component at time `t` are checked at the
//! lowest node whose scope holds all of that component's `t-1` pairs.

use std::cell::{OnceCell, RefCell};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::RangeInclusive;

use crate::decomp::{build_two_step, compute_tim_decomposition, root_and_augment, TwoStepDecomposition};
use crate::tgraph::{TemporalGraph, Time, Vertex};
use crate::vim_engine::{EngineError, Label};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Time 0, checked with `St`.
    Start,
    /// `1 <= t < Λ`, checked with `Val`.
    Valid,
    /// `t = Λ`, checked with `Fin`.
    Finish,
}

/// A timed component with its snapshot edges in local indices.
#[derive(Debug, Clone, Copy)]
pub struct ComponentView<'a> {
    pub time: Time,
    pub vertices: &'a [Vertex],
    pub edges: &'a [(usize, usize)],
}

impl ComponentView<'_> {
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == i {
                Some(b)
            } else if b == i {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i))
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

/// Problem definition for [`solve_component_exchangeable`]. Label slices are
/// aligned with `comp.vertices`.
pub trait TimPlugin {
    fn num_labels(&self) -> usize;
    fn arity(&self) -> usize;
    fn upper_bound(&self) -> Vec<i64>;
    /// Range of every vector entry; its largest magnitude is the bound `b`.
    fn vector_ranges(&self) -> Vec<RangeInclusive<i64>>;
    fn start(&self, comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool;
    fn valid(&self, comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool;
    fn finish(&self, comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool;
    fn transition(&self, comp: &ComponentView, prev: &[Label], next: &[Label]) -> bool;
    /// Labellings worth trying for `comp`. Without `prev` this must include
    /// every labelling the component can carry in some accepted solution;
    /// with `prev` it must include every accepted successor of `prev`.
    /// Realisable profiles are taken over this universe. `None` means all
    /// labellings.
    fn labellings(&self, _comp: &ComponentView, _role: Role, _prev: Option<&[Label]>) -> Option<Vec<Vec<Label>>> {
        None
    }
    /// Vectors worth testing for a labelled component. The default is the
    /// whole box; plugins whose vectors are determined by the labels
    /// override this.
    fn candidate_vectors(&self, _comp: &ComponentView, _labels: &[Label], _role: Role) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for r in self.vector_ranges() {
            out = out.into_iter().flat_map(|p| r.clone().map(move |x| [p.clone(), vec![x]].concat())).collect();
        }
        out
    }
    /// Coordinates that are never negative; totals above the bound there
    /// can be discarded.
    fn nonnegative(&self) -> Vec<bool> {
        vec![false; self.arity()]
    }
}

#[derive(Debug, Clone)]
pub struct TimConfig {
    /// Keep only componentwise-minimal totals per profile. Exact for the
    /// decision, but the stored profile sets are no longer complete.
    pub prune: bool,
    /// Cap on search steps at a single bag.
    pub cap: f64,
    /// Keep every node's table so profiles can be inspected.
    pub keep_tables: bool,
}

impl Default for TimConfig {
    fn default() -> Self {
        TimConfig { prune: true, cap: 5e8, keep_tables: false }
    }
}

#[derive(Debug, Clone, Default)]
pub struct TimStats {
    pub bags: usize,
    pub width: usize,
    pub two_step_width: usize,
    /// Profiles (profile, total pairs) stored per node.
    pub profile_counts: Vec<usize>,
}

impl TimStats {
    pub fn peak(&self) -> usize {
        self.profile_counts.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Debug, Clone)]
pub struct TimOutcome {
    pub accepted: bool,
    pub stats: TimStats,
}

/// A profile of one node: labels of its 2-step pairs, the vectors of its
/// components and one reachable total.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    pub labels: BTreeMap<(Vertex, Time), Label>,
    pub vectors: BTreeMap<(Time, Vec<Vertex>), Vec<i64>>,
    pub total: Vec<i64>,
}

/// Decides the instance with the default decomposition and root.
pub fn solve_component_exchangeable<P: TimPlugin + ?Sized>(
    plugin: &P,
    g: &TemporalGraph,
    cfg: &TimConfig,
) -> Result<TimOutcome, EngineError> {
    let rd = root_and_augment(&compute_tim_decomposition(g));
    let ts = build_two_step(g, &rd);
    let mut solver = TimSolver::new(plugin, g, &ts, cfg.clone())?;
    solver.run()?;
    Ok(TimOutcome { accepted: solver.decide(), stats: solver.stats() })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Opt {
    labels: Vec<Label>,
    vector: Vec<i64>,
}

/// A component with its options, generated on demand and interned so that
/// option indices stay stable.
#[derive(Debug)]
struct CompData {
    time: Time,
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    role: Role,
    options: RefCell<Vec<Opt>>,
    index: RefCell<HashMap<Opt, u32>>,
    all: OnceCell<Vec<u32>>,
}

impl CompData {
    fn view(&self) -> ComponentView<'_> {
        ComponentView { time: self.time, vertices: &self.vertices, edges: &self.edges }
    }
}

/// Totals reachable by one profile.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TotalSet {
    items: BTreeSet<Vec<i64>>,
}

impl TotalSet {
    pub fn iter(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.items.iter()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// Shared rules for inserting totals.
#[derive(Debug, Clone)]
struct Pruner {
    prune: bool,
    upper: Vec<i64>,
    nonneg: Vec<bool>,
}

impl Pruner {
    fn insert(&self, set: &mut TotalSet, total: Vec<i64>) {
        if !self.prune {
            set.items.insert(total);
            return;
        }
        if total.iter().zip(&self.upper).zip(&self.nonneg).any(|((x, u), &nn)| nn && x > u) {
            return;
        }
        if set.items.iter().any(|s| leq(s, &total)) {
            return;
        }
        set.items.retain(|s| !leq(&total, s));
        set.items.insert(total);
    }

    fn sumset(&self, sets: &[&TotalSet], offset: &[i64]) -> TotalSet {
        let mut acc = TotalSet::default();
        self.insert(&mut acc, offset.to_vec());
        for s in sets {
            let mut next = TotalSet::default();
            for a in acc.iter() {
                for b in s.iter() {
                    self.insert(&mut next, add(a, b));
                }
            }
            acc = next;
        }
        acc
    }
}

fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// True iff one total per child can be picked so that they sum to `target`.
/// Dynamic program over child prefixes and partial sums.
pub fn aggregate_child_totals(children: &[BTreeSet<Vec<i64>>], target: &[i64]) -> bool {
    let mut partial: BTreeSet<Vec<i64>> = BTreeSet::new();
    partial.insert(vec![0; target.len()]);
    for child in children {
        partial = partial.iter().flat_map(|p| child.iter().map(move |c| add(p, c))).collect();
        if partial.is_empty() {
            return false;
        }
    }
    partial.contains(target)
}

/// One child's profiles projected onto what its parent needs.
#[derive(Debug, Clone, Default)]
struct Projection {
    /// Components the projection fixes: the child's own components first,
    /// then the grandchild components its parent needs for deferred checks.
    comps: Vec<usize>,
    /// Option indices aligned with `comps`, with the totals reachable.
    groups: Vec<(Vec<u32>, TotalSet)>,
}

/// Post-order solver over a 2-step decomposition.
pub struct TimSolver<'a, P: TimPlugin + ?Sized> {
    plugin: &'a P,
    ts: &'a TwoStepDecomposition,
    cfg: TimConfig,
    pruner: Pruner,
    comps: Vec<CompData>,
    tables: Vec<Option<HashMap<Vec<u32>, TotalSet>>>,
    projections: Vec<Option<Projection>>,
    profile_counts: Vec<usize>,
    done: bool,
}

impl<'a, P: TimPlugin + ?Sized> TimSolver<'a, P> {
    pub fn new(plugin: &'a P, g: &TemporalGraph, ts: &'a TwoStepDecomposition, cfg: TimConfig) -> Result<Self, EngineError> {
        let lifetime = g.lifetime();
        let mut comps = Vec::with_capacity(ts.components.len());
        for info in &ts.components {
            let edge_time = info.time.max(1);
            let edges: Vec<(usize, usize)> = g
                .edges_at(edge_time)
                .iter()
                .filter_map(|e| {
                    Some((info.vertices.binary_search(&e.u).ok()?, info.vertices.binary_search(&e.v).ok()?))
                })
                .collect();
            let role = if info.time == 0 {
                Role::Start
            } else if info.time == lifetime {
                Role::Finish
            } else {
                Role::Valid
            };
            comps.push(CompData {
                time: info.time,
                vertices: info.vertices.clone(),
                edges,
                role,
                options: RefCell::default(),
                index: RefCell::default(),
                all: OnceCell::new(),
            });
        }
        let m = ts.nodes.len();
        let pruner = Pruner { prune: cfg.prune, upper: plugin.upper_bound(), nonneg: plugin.nonnegative() };
        Ok(TimSolver {
            plugin,
            ts,
            cfg,
            pruner,
            comps,
            tables: vec![None; m],
            projections: vec![None; m],
            profile_counts: vec![0; m],
            done: false,
        })
    }

    pub fn run(&mut self) -> Result<(), EngineError> {
        for s in self.ts.rooted.post_order() {
            self.process(s)?;
        }
        self.done = true;
        Ok(())
    }

    /// Totals reachable by each tree, combined and compared to the bound.
    pub fn decide(&self) -> bool {
        assert!(self.done);
        let k = self.plugin.arity();
        let per_tree: Vec<TotalSet> = self
            .ts
            .rooted
            .roots
            .iter()
            .map(|&r| {
                let mut all = TotalSet::default();
                for (_, totals) in &self.projections[r].as_ref().unwrap().groups {
                    for t in totals.iter() {
                        self.pruner.insert(&mut all, t.clone());
                    }
                }
                all
            })
            .collect();
        let refs: Vec<&TotalSet> = per_tree.iter().collect();
        let upper = self.plugin.upper_bound();
        self.pruner.sumset(&refs, &vec![0; k]).iter().any(|t| leq(t, &upper))
    }

    pub fn stats(&self) -> TimStats {
        TimStats {
            bags: self.ts.rooted.bags.len(),
            width: self.ts.rooted.width(),
            two_step_width: self.ts.width(),
            profile_counts: self.profile_counts.clone(),
        }
    }

    /// Realisable profiles of node `s`; needs `keep_tables`.
    pub fn profiles(&self, s: usize) -> BTreeSet<Profile> {
        let table = self.tables[s].as_ref().expect("tables are kept only with keep_tables");
        let node = &self.ts.nodes[s];
        let mut out = BTreeSet::new();
        for (key, totals) in table {
            let mut labels = BTreeMap::new();
            let mut vectors = BTreeMap::new();
            for (&c, &o) in node.components.iter().zip(key) {
                let comp = &self.comps[c];
                let opt = &comp.options.borrow()[o as usize];
                for (&v, &l) in comp.vertices.iter().zip(&opt.labels) {
                    labels.insert((v, comp.time), l);
                }
                vectors.insert((comp.time, comp.vertices.clone()), opt.vector.clone());
            }
            for t in totals.iter() {
                out.insert(Profile { labels: labels.clone(), vectors: vectors.clone(), total: t.clone() });
            }
        }
        out
    }

    fn process(&mut self, p: usize) -> Result<(), EngineError> {
        let ts = self.ts;
        let rooted = &ts.rooted;
        let node = &ts.nodes[p];
        let tp = node.time;
        let kids = &rooted.children[p];

        // Slots: children one step earlier, own components, children one step later.
        let mut slots: Vec<Slot> = Vec::new();
        for (i, &c) in kids.iter().enumerate() {
            if rooted.bags[c].time + 1 == tp {
                slots.push(Slot::Child(i));
            }
        }
        for &c in &node.own {
            slots.push(Slot::Own(c));
        }
        for (i, &c) in kids.iter().enumerate() {
            if rooted.bags[c].time == tp + 1 {
                slots.push(Slot::Child(i));
            }
        }
        debug_assert_eq!(slots.len(), kids.len() + node.own.len());

        // Which slot fixes each component in scope, and where each pair lives.
        let mut slot_of: HashMap<usize, usize> = HashMap::new();
        for (si, slot) in slots.iter().enumerate() {
            match *slot {
                Slot::Own(c) => {
                    slot_of.insert(c, si);
                }
                Slot::Child(i) => {
                    for &c in &self.projections[kids[i]].as_ref().unwrap().comps {
                        slot_of.insert(c, si);
                    }
                }
            }
        }
        let mut pair_at: HashMap<(Vertex, Time), (usize, usize)> = HashMap::new();
        for &c in slot_of.keys() {
            let comp = &self.comps[c];
            for (i, &v) in comp.vertices.iter().enumerate() {
                pair_at.insert((v, comp.time), (c, i));
            }
        }

        // Transition checks: own components are filtered when their slot is
        // filled; deferred child components are checked at the child slot.
        let mut own_prev: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        let mut slot_checks: Vec<Vec<(usize, Vec<(usize, usize)>)>> = vec![Vec::new(); slots.len()];
        for &c in &node.tr_checks {
            let comp = &self.comps[c];
            let prev: Vec<(usize, usize)> = comp
                .vertices
                .iter()
                .map(|&v| {
                    *pair_at
                        .get(&(v, comp.time - 1))
                        .unwrap_or_else(|| panic!("pair ({v}, {}) missing from the scope of node {p}", comp.time - 1))
                })
                .collect();
            let trigger = prev.iter().map(|&(d, _)| slot_of[&d]).chain([slot_of[&c]]).max().unwrap();
            match slots[trigger] {
                Slot::Own(o) if o == c => {
                    own_prev.insert(c, prev);
                }
                _ => slot_checks[trigger].push((c, prev)),
            }
        }

        let mut search = Search {
            slots,
            slot_checks,
            own_prev,
            filtered: HashMap::new(),
            assign: HashMap::new(),
            chosen: vec![usize::MAX; kids.len()],
            table: HashMap::new(),
            steps: 0.0,
        };
        self.descend(p, &mut search, 0)?;
        let table = search.table;

        self.profile_counts[p] = table.values().map(TotalSet::len).sum();
        let projection = self.project(p, &table);
        self.projections[p] = Some(projection);
        if self.cfg.keep_tables {
            self.tables[p] = Some(table);
        }
        for &c in kids {
            if !self.cfg.keep_tables {
                self.projections[c] = None;
            }
        }
        Ok(())
    }

    fn descend(&self, p: usize, st: &mut Search, depth: usize) -> Result<(), EngineError> {
        st.steps += 1.0;
        if st.steps > self.cfg.cap {
            return Err(EngineError::ProfileLimit { bag: p, required: st.steps, cap: self.cfg.cap });
        }
        let kids = &self.ts.rooted.children[p];
        if depth == st.slots.len() {
            self.record(p, st);
            return Ok(());
        }
        match st.slots[depth] {
            Slot::Own(c) => {
                let candidates: Vec<u32> = match st.own_prev.get(&c) {
                    None => self.all_options(c)?,
                    Some(prev) => {
                        let prev_labels = self.stitch(prev, &st.assign);
                        match st.filtered.get(&(c, prev_labels.clone())) {
                            Some(list) => list.clone(),
                            None => {
                                let list = self.successors(c, &prev_labels)?;
                                st.filtered.insert((c, prev_labels), list.clone());
                                list
                            }
                        }
                    }
                };
                for o in candidates {
                    st.assign.insert(c, o);
                    if self.checks_pass(st, depth) {
                        self.descend(p, st, depth + 1)?;
                    }
                }
                st.assign.remove(&c);
            }
            Slot::Child(i) => {
                let proj = self.projections[kids[i]].as_ref().unwrap();
                for (gi, (opts, _)) in proj.groups.iter().enumerate() {
                    for (&c, &o) in proj.comps.iter().zip(opts) {
                        st.assign.insert(c, o);
                    }
                    st.chosen[i] = gi;
                    if self.checks_pass(st, depth) {
                        self.descend(p, st, depth + 1)?;
                    }
                }
                for c in &proj.comps {
                    st.assign.remove(c);
                }
            }
        }
        Ok(())
    }

    fn checks_pass(&self, st: &Search, depth: usize) -> bool {
        st.slot_checks[depth].iter().all(|(c, prev)| {
            let comp = &self.comps[*c];
            let prev_labels = self.stitch(prev, &st.assign);
            let options = comp.options.borrow();
            self.plugin.transition(&comp.view(), &prev_labels, &options[st.assign[c] as usize].labels)
        })
    }

    fn stitch(&self, prev: &[(usize, usize)], assign: &HashMap<usize, u32>) -> Vec<Label> {
        prev.iter().map(|&(d, i)| self.comps[d].options.borrow()[assign[&d] as usize].labels[i]).collect()
    }

    /// Interns every option of component `c` with these labels.
    fn options_for(&self, c: usize, labels: &[Label]) -> Vec<u32> {
        let comp = &self.comps[c];
        let view = comp.view();
        let mut out = Vec::new();
        for vector in self.plugin.candidate_vectors(&view, labels, comp.role) {
            let ok = match comp.role {
                Role::Start => self.plugin.start(&view, labels, &vector),
                Role::Valid => self.plugin.valid(&view, labels, &vector),
                Role::Finish => self.plugin.finish(&view, labels, &vector),
            };
            if ok {
                let opt = Opt { labels: labels.to_vec(), vector };
                let mut index = comp.index.borrow_mut();
                let id = *index.entry(opt.clone()).or_insert_with(|| {
                    let mut options = comp.options.borrow_mut();
                    options.push(opt);
                    options.len() as u32 - 1
                });
                out.push(id);
            }
        }
        out
    }

    /// Every option of component `c`.
    fn all_options(&self, c: usize) -> Result<Vec<u32>, EngineError> {
        if let Some(all) = self.comps[c].all.get() {
            return Ok(all.clone());
        }
        let comp = &self.comps[c];
        let mut out = Vec::new();
        match self.plugin.labellings(&comp.view(), comp.role, None) {
            Some(list) => {
                for labels in list {
                    out.extend(self.options_for(c, &labels));
                }
            }
            None => {
                let x = self.plugin.num_labels();
                let required = (x as f64).powi(comp.vertices.len() as i32);
                if required > self.cfg.cap {
                    let bag = self.ts.components[c].owner;
                    return Err(EngineError::ProfileLimit { bag, required, cap: self.cfg.cap });
                }
                let mut labels = vec![0 as Label; comp.vertices.len()];
                loop {
                    out.extend(self.options_for(c, &labels));
                    if !bump(&mut labels, x) {
                        break;
                    }
                }
            }
        }
        let _ = comp.all.set(out.clone());
        Ok(out)
    }

    /// Options of component `c` reachable from `prev` in one step.
    fn successors(&self, c: usize, prev: &[Label]) -> Result<Vec<u32>, EngineError> {
        let comp = &self.comps[c];
        let view = comp.view();
        match self.plugin.labellings(&view, comp.role, Some(prev)) {
            Some(list) => Ok(list
                .into_iter()
                .filter(|next| self.plugin.transition(&view, prev, next))
                .flat_map(|next| self.options_for(c, &next))
                .collect()),
            None => {
                let all = self.all_options(c)?;
                let options = comp.options.borrow();
                Ok(all.into_iter().filter(|&o| self.plugin.transition(&view, prev, &options[o as usize].labels)).collect())
            }
        }
    }

    fn record(&self, p: usize, st: &mut Search) {
        let node = &self.ts.nodes[p];
        let kids = &self.ts.rooted.children[p];
        let key: Vec<u32> = node.components.iter().map(|c| st.assign[c]).collect();
        let mut own = vec![0i64; self.plugin.arity()];
        for c in &node.own {
            own = add(&own, &self.comps[*c].options.borrow()[st.assign[c] as usize].vector);
        }
        let sets: Vec<&TotalSet> = kids
            .iter()
            .enumerate()
            .map(|(i, &c)| &self.projections[c].as_ref().unwrap().groups[st.chosen[i]].1)
            .collect();
        let sums = self.pruner.sumset(&sets, &own);
        if sums.is_empty() {
            return;
        }
        let entry = st.table.entry(key).or_default();
        for t in sums.items {
            self.pruner.insert(entry, t);
        }
    }

    /// Groups node `p`'s table by what its parent needs to see.
    fn project(&self, p: usize, table: &HashMap<Vec<u32>, TotalSet>) -> Projection {
        let ts = self.ts;
        let node = &ts.nodes[p];
        let mut positions: Vec<usize> = (0..node.own.len()).collect();
        if let Some(parent) = ts.rooted.parent[p] {
            // Vertices of own components whose transition the parent checks.
            let deferred: BTreeSet<Vertex> = node
                .own
                .iter()
                .filter(|&&c| ts.components[c].checked_at == Some(parent))
                .flat_map(|&c| ts.components[c].vertices.iter().copied())
                .collect();
            for (pos, &c) in node.components.iter().enumerate().skip(node.own.len()) {
                let comp = &ts.components[c];
                if comp.time + 1 == node.time && comp.vertices.iter().any(|v| deferred.contains(v)) {
                    positions.push(pos);
                }
            }
        }
        let comps: Vec<usize> = positions.iter().map(|&i| node.components[i]).collect();
        let mut grouped: BTreeMap<Vec<u32>, TotalSet> = BTreeMap::new();
        for (key, totals) in table {
            let proj: Vec<u32> = positions.iter().map(|&i| key[i]).collect();
            let entry = grouped.entry(proj).or_default();
            for t in totals.iter() {
                self.pruner.insert(entry, t.clone());
            }
        }
        Projection { comps, groups: grouped.into_iter().collect() }
    }
}

#[derive(Debug, Clone, Copy)]
enum Slot {
    Own(usize),
    Child(usize),
}

struct Search {
    slots: Vec<Slot>,
    slot_checks: Vec<Vec<(usize, Vec<(usize, usize)>)>>,
    own_prev: HashMap<usize, Vec<(usize, usize)>>,
    filtered: HashMap<(usize, Vec<Label>), Vec<u32>>,
    assign: HashMap<usize, u32>,
    chosen: Vec<usize>,
    table: HashMap<Vec<u32>, TotalSet>,
    steps: f64,
}

fn bump(labels: &mut [Label], base: usize) -> bool {
    for l in labels.iter_mut() {
        *l += 1;
        if (*l as usize) < base {
            return true;
        }
        *l = 0;
    }
    false
}

/// Every combination of per-position label choices.
pub fn product_labellings(domains: &[Vec<Label>]) -> Vec<Vec<Label>> {
    let mut out = vec![Vec::with_capacity(domains.len())];
    for d in domains {
        out = out.into_iter().flat_map(|p| d.iter().map(move |&l| [p.clone(), vec![l]].concat())).collect();
    }
    out
}

/// Natural log of `|X|^{3φ²}(2b+1)^{3kφ²}(2Λnb+1)^k`, the per-bag profile bound.
pub fn ln_profile_bound(labels: usize, phi: usize, k: usize, b: i64, lifetime: usize, n: usize) -> f64 {
    let phi2 = (phi * phi) as f64;
    3.0 * phi2 * (labels as f64).ln()
        + 3.0 * k as f64 * phi2 * ((2 * b + 1) as f64).ln()
        + k as f64 * ((2 * lifetime as i64 * n as i64 * b + 1) as f64).ln()
}

/// Largest magnitude across the plugin's vector ranges.
pub fn vector_bound<P: TimPlugin + ?Sized>(plugin: &P) -> i64 {
    plugin.vector_ranges().iter().map(|r| r.start().abs().max(r.end().abs())).max().unwrap_or(0)
}
