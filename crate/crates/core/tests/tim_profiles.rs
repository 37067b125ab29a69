//! Realisable profiles of the component engine against a direct enumeration
//! of subtree configurations that uses only the plugin routines.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use proptest::prelude::*;
use timwidth::decomp::{build_two_step, compute_tim_decomposition, root_and_augment, TwoStepDecomposition};
use timwidth::generate::gen_random;
use timwidth::problems::hamiltonian::HamTim;
use timwidth::problems::matching::MatchingTim;
use timwidth::problems::tred::TredTim;
use timwidth::tgraph::{TemporalGraph, Time, Vertex};
use timwidth::tim_engine::{aggregate_child_totals, ComponentView, Profile, Role, TimConfig, TimPlugin, TimSolver};
use timwidth::vim_engine::Label;

struct Comp {
    time: Time,
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    role: Role,
}

impl Comp {
    fn view(&self) -> ComponentView<'_> {
        ComponentView { time: self.time, vertices: &self.vertices, edges: &self.edges }
    }
}

type Opt = (Vec<Label>, Vec<i64>);

/// Every labelling the plugin proposes (all of them by default) with each
/// vector the role routine accepts.
fn options<P: TimPlugin>(plugin: &P, c: &Comp) -> Vec<Opt> {
    let view = c.view();
    let labellings = plugin.labellings(&view, c.role, None).unwrap_or_else(|| {
        let x = plugin.num_labels() as Label;
        let mut all: Vec<Vec<Label>> = vec![Vec::new()];
        for _ in &c.vertices {
            all = all.into_iter().flat_map(|p| (0..x).map(move |l| [p.clone(), vec![l]].concat())).collect();
        }
        all
    });
    let mut out = Vec::new();
    for labels in labellings {
        for vector in plugin.candidate_vectors(&view, &labels, c.role) {
            let ok = match c.role {
                Role::Start => plugin.start(&view, &labels, &vector),
                Role::Valid => plugin.valid(&view, &labels, &vector),
                Role::Finish => plugin.finish(&view, &labels, &vector),
            };
            if ok {
                out.push((labels.clone(), vector));
            }
        }
    }
    out
}

fn comps_of(g: &TemporalGraph, ts: &TwoStepDecomposition) -> Vec<Comp> {
    ts.components
        .iter()
        .map(|info| {
            let edges = g
                .edges_at(info.time.max(1))
                .iter()
                .filter_map(|e| {
                    Some((info.vertices.binary_search(&e.u).ok()?, info.vertices.binary_search(&e.v).ok()?))
                })
                .collect();
            let role = match info.time {
                0 => Role::Start,
                t if t == g.lifetime() => Role::Finish,
                _ => Role::Valid,
            };
            Comp { time: info.time, vertices: info.vertices.clone(), edges, role }
        })
        .collect()
}

/// Profiles of node `s`: option choices for every component owned in its
/// subtree that pass all transition checks placed in the subtree, reported
/// on the node's own and children's components with the subtree total.
fn enumerate_profiles<P: TimPlugin>(plugin: &P, g: &TemporalGraph, ts: &TwoStepDecomposition, s: usize) -> BTreeSet<Profile> {
    let comps = comps_of(g, ts);
    let subtree: BTreeSet<usize> = ts.rooted.subtree(s).into_iter().collect();
    let mut members: Vec<usize> =
        (0..comps.len()).filter(|&c| subtree.contains(&ts.components[c].owner)).collect();
    members.sort_by_key(|&c| comps[c].time);
    let opts: HashMap<usize, Vec<Opt>> = members.iter().map(|&c| (c, options(plugin, &comps[c]))).collect();
    let checked: BTreeSet<usize> = members
        .iter()
        .copied()
        .filter(|&c| ts.components[c].checked_at.is_some_and(|k| subtree.contains(&k)))
        .collect();
    let mut out = BTreeSet::new();
    let mut chosen: Vec<usize> = Vec::new();
    walk(plugin, &comps, ts, s, &members, &opts, &checked, &mut chosen, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn walk<P: TimPlugin>(
    plugin: &P,
    comps: &[Comp],
    ts: &TwoStepDecomposition,
    s: usize,
    members: &[usize],
    opts: &HashMap<usize, Vec<Opt>>,
    checked: &BTreeSet<usize>,
    chosen: &mut Vec<usize>,
    out: &mut BTreeSet<Profile>,
) {
    let label_of = |chosen: &[usize], v: Vertex, t: Time| -> Label {
        for (i, &c) in members[..chosen.len()].iter().enumerate() {
            if comps[c].time == t {
                if let Some(pos) = comps[c].vertices.iter().position(|&w| w == v) {
                    return opts[&c][chosen[i]].0[pos];
                }
            }
        }
        panic!("pair ({v}, {t}) is not assigned");
    };
    if chosen.len() == members.len() {
        let node = &ts.nodes[s];
        let mut labels = BTreeMap::new();
        let mut vectors = BTreeMap::new();
        for &c in &node.components {
            let i = members.iter().position(|&m| m == c).unwrap();
            let (l, vec) = &opts[&c][chosen[i]];
            for (&v, &x) in comps[c].vertices.iter().zip(l) {
                labels.insert((v, comps[c].time), x);
            }
            vectors.insert((comps[c].time, comps[c].vertices.clone()), vec.clone());
        }
        let mut total = vec![0; plugin.arity()];
        for (i, &c) in members.iter().enumerate() {
            for (t, x) in total.iter_mut().zip(&opts[&c][chosen[i]].1) {
                *t += x;
            }
        }
        out.insert(Profile { labels, vectors, total });
        return;
    }
    let c = members[chosen.len()];
    for (o, (labels, _)) in opts[&c].iter().enumerate() {
        if checked.contains(&c) {
            let prev: Vec<Label> = comps[c].vertices.iter().map(|&v| label_of(chosen, v, comps[c].time - 1)).collect();
            if !plugin.transition(&comps[c].view(), &prev, labels) {
                continue;
            }
        }
        chosen.push(o);
        walk(plugin, comps, ts, s, members, opts, checked, chosen, out);
        chosen.pop();
    }
}

fn compare<P: TimPlugin>(plugin: &P, g: &TemporalGraph) {
    let rd = root_and_augment(&compute_tim_decomposition(g));
    let ts = build_two_step(g, &rd);
    let cfg = TimConfig { prune: false, keep_tables: true, ..TimConfig::default() };
    let mut solver = TimSolver::new(plugin, g, &ts, cfg).unwrap();
    solver.run().unwrap();
    for s in 0..ts.nodes.len() {
        assert_eq!(solver.profiles(s), enumerate_profiles(plugin, g, &ts, s), "node {} of {:?}", s, g);
    }
}

fn small_graphs(count: u64, density: f64) -> impl Iterator<Item = TemporalGraph> {
    (0..count).map(move |i| gen_random(2 + (i % 4) as usize, 1 + ((i / 4) % 3) as usize, density, 2, 77 + i))
}

#[test]
fn hamiltonian_profiles() {
    for g in small_graphs(120, 0.6).filter(|g| !g.is_edgeless()) {
        compare(&HamTim { lifetime: g.lifetime() }, &g);
    }
}

#[test]
fn reachability_profiles() {
    for (i, g) in small_graphs(120, 0.6).enumerate().filter(|(_, g)| !g.is_edgeless()) {
        let plugin = TredTim { source: i % g.n(), r: 1 + i % g.n(), h: i % 3, n: g.n() };
        compare(&plugin, &g);
    }
}

#[test]
fn matching_profiles() {
    for (i, g) in small_graphs(80, 0.6).enumerate().filter(|(_, g)| !g.is_edgeless()) {
        let plugin = MatchingTim { delta: 1 + i % 2, h: 1 + i % 3, n: g.n() };
        compare(&plugin, &g);
    }
}

fn cartesian(children: &[BTreeSet<Vec<i64>>], k: usize) -> BTreeSet<Vec<i64>> {
    let mut acc = BTreeSet::from([vec![0; k]]);
    for child in children {
        acc = acc.iter().flat_map(|a| child.iter().map(move |c| a.iter().zip(c).map(|(x, y)| x + y).collect())).collect();
    }
    acc
}

proptest! {
    #[test]
    fn aggregation_matches_cartesian_product(
        children in proptest::collection::vec(proptest::collection::btree_set(proptest::collection::vec(-3i64..4, 2), 0..4), 0..4),
        target in proptest::collection::vec(-8i64..9, 2),
    ) {
        let sums = cartesian(&children, 2);
        prop_assert_eq!(aggregate_child_totals(&children, &target), sums.contains(&target));
    }
}
