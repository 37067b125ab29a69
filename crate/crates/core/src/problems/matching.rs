//! Δ-temporal matching: time-edges pairwise disjoint or at least Δ apart.
//!
//! Labels are `(1,Δ,Δ)` for a vertex matched now, and `(0,a,b)` otherwise,
//! where `b` counts down the steps until the vertex may be matched again
//! and `a` tracks the steps since its last match, both clamped to `[Δ]`.

use std::ops::RangeInclusive;

use petgraph::graph::UnGraph;

use super::{Answer, SolveStats};
use crate::tgraph::TemporalGraph;
use crate::tim_engine::{product_labellings, solve_component_exchangeable, ComponentView, Role, TimConfig, TimPlugin};
use crate::vim_engine::{EngineError, Label};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingInstance {
    pub g: TemporalGraph,
    pub delta: usize,
    pub h: usize,
}

/// Decoded label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchLabel {
    Matched,
    Free { a: usize, b: usize },
}

#[derive(Debug, Clone)]
pub struct MatchingTim {
    pub delta: usize,
    pub h: usize,
    pub n: usize,
}

impl MatchingTim {
    pub fn encode(&self, l: MatchLabel) -> Label {
        match l {
            MatchLabel::Matched => 0,
            MatchLabel::Free { a, b } => (1 + (a - 1) * self.delta + (b - 1)) as Label,
        }
    }

    pub fn decode(&self, l: Label) -> MatchLabel {
        if l == 0 {
            MatchLabel::Matched
        } else {
            let i = l as usize - 1;
            MatchLabel::Free { a: i / self.delta + 1, b: i % self.delta + 1 }
        }
    }

    /// Whether one vertex may go from `prev` to `next` in one step.
    pub fn step_ok(&self, prev: MatchLabel, next: MatchLabel) -> bool {
        let d = self.delta;
        match (prev, next) {
            (MatchLabel::Matched, MatchLabel::Matched) => d == 1,
            (MatchLabel::Matched, free) => free == MatchLabel::Free { a: 1, b: (d - 1).max(1) },
            (MatchLabel::Free { b, .. }, MatchLabel::Matched) => b == 1,
            (MatchLabel::Free { a, b }, free) => free == MatchLabel::Free { a: (a + 1).min(d), b: (b - 1).max(1) },
        }
    }

    fn successors(&self, l: Label) -> Vec<Label> {
        (0..self.num_labels() as Label).filter(|&q| self.step_ok(self.decode(l), self.decode(q))).collect()
    }

    fn start_labels(&self) -> Vec<Label> {
        (1..=self.delta).map(|b| self.encode(MatchLabel::Free { a: 1, b })).collect()
    }

    /// Labels a vertex can carry at time `t`.
    pub fn reachable_labels(&self, t: usize) -> Vec<Label> {
        let mut set: std::collections::BTreeSet<Label> = self.start_labels().into_iter().collect();
        for _ in 0..t {
            set = set.iter().flat_map(|&l| self.successors(l)).collect();
        }
        set.into_iter().collect()
    }

    /// Size of a perfect matching on the matched vertices of `comp`, if any.
    fn perfect_matching(&self, comp: &ComponentView, labels: &[Label]) -> Option<i64> {
        let matched: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == 0).collect();
        if matched.len() % 2 == 1 {
            return None;
        }
        let size = matched.len() / 2;
        let found = if matched.len() < 12 {
            has_perfect_matching_small(&matched, &|a, b| comp.has_edge(a, b))
        } else {
            maximum_matching_size(&matched, &|a, b| comp.has_edge(a, b)) == size
        };
        found.then_some(size as i64)
    }
}

/// Exhaustive: pair the first free vertex with every partner in turn.
pub fn has_perfect_matching_small(vs: &[usize], edge: &dyn Fn(usize, usize) -> bool) -> bool {
    let Some((&first, rest)) = vs.split_first() else {
        return true;
    };
    (0..rest.len()).any(|j| {
        edge(first, rest[j]) && {
            let remaining: Vec<usize> = rest.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect();
            has_perfect_matching_small(&remaining, edge)
        }
    })
}

/// Maximum matching size on the induced graph, via petgraph's general matcher.
pub fn maximum_matching_size(vs: &[usize], edge: &dyn Fn(usize, usize) -> bool) -> usize {
    let mut g: UnGraph<(), ()> = UnGraph::new_undirected();
    let nodes: Vec<_> = vs.iter().map(|_| g.add_node(())).collect();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if edge(vs[i], vs[j]) {
                g.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    petgraph::algo::maximum_matching(&g).edges().count()
}

impl TimPlugin for MatchingTim {
    fn num_labels(&self) -> usize {
        self.delta * self.delta + 1
    }

    fn arity(&self) -> usize {
        1
    }

    fn upper_bound(&self) -> Vec<i64> {
        vec![-(self.h as i64)]
    }

    fn vector_ranges(&self) -> Vec<RangeInclusive<i64>> {
        vec![-(self.n as i64 / 2)..=0]
    }

    fn candidate_vectors(&self, comp: &ComponentView, labels: &[Label], role: Role) -> Vec<Vec<i64>> {
        match role {
            Role::Start => vec![vec![0]],
            _ => self.perfect_matching(comp, labels).map(|m| vec![vec![-m]]).unwrap_or_default(),
        }
    }

    fn start(&self, _comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool {
        vector == [0] && labels.iter().all(|&l| matches!(self.decode(l), MatchLabel::Free { a: 1, .. }))
    }

    fn valid(&self, comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool {
        self.perfect_matching(comp, labels).is_some_and(|m| vector == [-m])
    }

    fn finish(&self, comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool {
        self.valid(comp, labels, vector)
    }

    fn transition(&self, _comp: &ComponentView, prev: &[Label], next: &[Label]) -> bool {
        prev.iter().zip(next).all(|(&p, &q)| self.step_ok(self.decode(p), self.decode(q)))
    }

    fn labellings(&self, comp: &ComponentView, role: Role, prev: Option<&[Label]>) -> Option<Vec<Vec<Label>>> {
        let domains: Vec<Vec<Label>> = match (role, prev) {
            (Role::Start, _) => vec![self.start_labels(); comp.vertices.len()],
            (_, Some(prev)) => prev.iter().map(|&l| self.successors(l)).collect(),
            (_, None) => vec![self.reachable_labels(comp.time); comp.vertices.len()],
        };
        Some(product_labellings(&domains))
    }
}

pub fn solve_matching_tim(inst: &MatchingInstance, cfg: &TimConfig) -> Result<Answer, EngineError> {
    assert!(inst.delta >= 1, "Δ must be at least 1");
    if inst.h == 0 {
        return Ok(Answer::trivial(true));
    }
    if inst.g.is_edgeless() {
        return Ok(Answer::trivial(false));
    }
    let plugin = MatchingTim { delta: inst.delta, h: inst.h, n: inst.g.n() };
    let out = solve_component_exchangeable(&plugin, &inst.g, cfg)?;
    Ok(Answer { yes: out.accepted, stats: SolveStats::Tim(out.stats) })
}
