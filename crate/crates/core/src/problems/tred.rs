//! Temporal reachability edge deletion from a single source: delete at most
//! `h` time-edges so that at most `r` vertices are reachable.

use std::ops::RangeInclusive;

use super::{Answer, SolveStats};
use crate::tgraph::{TemporalGraph, Vertex};
use crate::tim_engine::{solve_component_exchangeable, ComponentView, Role, TimConfig, TimPlugin};
use crate::vim_engine::{EngineError, Label};

pub const REACHED: Label = 0;
pub const CURRENT: Label = 1;
pub const UNREACHED: Label = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TredInstance {
    pub g: TemporalGraph,
    pub source: Vertex,
    /// Reachability bound, counting the source.
    pub r: usize,
    /// Deletion budget.
    pub h: usize,
}

/// Vectors `(d, r')`: deletions forced at this component, vertices first
/// reached here.
#[derive(Debug, Clone)]
pub struct TredTim {
    pub source: Vertex,
    pub r: usize,
    pub h: usize,
    pub n: usize,
}

/// Edges of `comp` joining a reached vertex to an unreached one.
pub fn label_validity(comp: &ComponentView, labels: &[Label]) -> i64 {
    comp.edges
        .iter()
        .filter(|&&(a, b)| {
            (labels[a] == REACHED && labels[b] == UNREACHED) || (labels[b] == REACHED && labels[a] == UNREACHED)
        })
        .count() as i64
}

impl TredTim {
    fn vector_for(comp: &ComponentView, labels: &[Label]) -> Vec<i64> {
        vec![label_validity(comp, labels), labels.iter().filter(|&&l| l == CURRENT).count() as i64]
    }
}

impl TimPlugin for TredTim {
    fn num_labels(&self) -> usize {
        3
    }

    fn arity(&self) -> usize {
        2
    }

    fn upper_bound(&self) -> Vec<i64> {
        vec![self.h as i64, self.r as i64]
    }

    fn vector_ranges(&self) -> Vec<RangeInclusive<i64>> {
        let n = self.n as i64;
        vec![0..=n * n, 0..=n]
    }

    fn candidate_vectors(&self, comp: &ComponentView, labels: &[Label], role: Role) -> Vec<Vec<i64>> {
        match role {
            Role::Start => {
                let has_source = comp.position(self.source).is_some();
                vec![vec![0, has_source as i64]]
            }
            _ => vec![Self::vector_for(comp, labels)],
        }
    }

    fn start(&self, comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool {
        let has_source = comp.position(self.source).is_some();
        vector == [0, has_source as i64]
            && comp
                .vertices
                .iter()
                .zip(labels)
                .all(|(&v, &l)| l == if v == self.source { CURRENT } else { UNREACHED })
    }

    fn valid(&self, comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool {
        vector == Self::vector_for(comp, labels)
    }

    fn finish(&self, comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool {
        self.valid(comp, labels, vector)
    }

    fn transition(&self, comp: &ComponentView, prev: &[Label], next: &[Label]) -> bool {
        for i in 0..prev.len() {
            let reached = prev[i] == REACHED || prev[i] == CURRENT;
            if reached != (next[i] == REACHED) {
                return false;
            }
            if next[i] == CURRENT
                && (prev[i] != UNREACHED || !comp.neighbours(i).any(|j| next[j] == REACHED))
            {
                return false;
            }
        }
        true
    }

    fn nonnegative(&self) -> Vec<bool> {
        vec![true, true]
    }
}

pub fn solve_tred_tim(inst: &TredInstance, cfg: &TimConfig) -> Result<Answer, EngineError> {
    if inst.g.is_edgeless() {
        return Ok(Answer::trivial(inst.r >= 1));
    }
    let plugin = TredTim { source: inst.source, r: inst.r, h: inst.h, n: inst.g.n() };
    let out = solve_component_exchangeable(&plugin, &inst.g, cfg)?;
    Ok(Answer { yes: out.accepted, stats: SolveStats::Tim(out.stats) })
}
