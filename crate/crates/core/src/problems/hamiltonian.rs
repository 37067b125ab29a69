//! Temporal Hamiltonian path: a strict temporal path visiting every vertex.

use std::ops::RangeInclusive;

use super::{Answer, SolveStats};
use crate::tgraph::{Snapshot, TemporalGraph};
use crate::tim_engine::{solve_component_exchangeable, ComponentView, Role, TimConfig, TimPlugin};
use crate::vim_engine::{solve_locally_uniform, EngineError, KxState, Label, VimConfig, VimPlugin, VimStats};
use crate::width::VimSequence;

pub const VISITED: Label = 0;
pub const UNVISITED: Label = 1;
pub const CURRENT: Label = 2;

/// Shared move rule: either nothing changes, or one current vertex steps
/// along `edge` onto an unvisited vertex and becomes visited.
fn is_move(prev: &[Label], next: &[Label], edge: impl Fn(usize, usize) -> bool) -> bool {
    let from: Vec<usize> = (0..prev.len()).filter(|&i| prev[i] == CURRENT && next[i] != CURRENT).collect();
    let to: Vec<usize> = (0..prev.len()).filter(|&i| next[i] == CURRENT && prev[i] != CURRENT).collect();
    let (&[c1], &[c2]) = (from.as_slice(), to.as_slice()) else {
        return false;
    };
    if prev[c2] != UNVISITED || !edge(c1, c2) {
        return false;
    }
    // Visited after = visited before plus c1.
    (0..prev.len()).all(|i| (next[i] == VISITED) == (prev[i] == VISITED || i == c1))
}

/// VIM formulation with a single counter `h`, the number of vertices the
/// path has covered.
#[derive(Debug, Clone)]
pub struct HamVim {
    pub n: usize,
}

impl VimPlugin for HamVim {
    fn num_labels(&self) -> usize {
        3
    }

    fn unset(&self) -> Label {
        UNVISITED
    }

    fn counter_ranges(&self) -> Vec<RangeInclusive<i64>> {
        vec![1..=self.n as i64]
    }

    fn initial_states(&self, seq: &VimSequence) -> Vec<KxState> {
        seq.bags[0]
            .iter()
            .map(|&v| {
                let mut labels = vec![UNVISITED; self.n];
                labels[v] = CURRENT;
                KxState { labels, counters: vec![1] }
            })
            .collect()
    }

    fn transition(&self, prev: &KxState, next: &KxState, snapshot: &Snapshot) -> bool {
        if prev == next {
            return true;
        }
        next.counters[0] == prev.counters[0] + 1
            && is_move(&prev.labels, &next.labels, |a, b| snapshot.has_edge(a, b))
    }

    fn accept(&self, state: &KxState) -> bool {
        state.counters[0] == self.n as i64
    }

    fn counters_derived(&self) -> bool {
        true
    }

    fn derive_counters(&self, prev: &KxState, next: &[Label], _snapshot: &Snapshot) -> Vec<i64> {
        if prev.labels == next {
            prev.counters.clone()
        } else {
            vec![prev.counters[0] + 1]
        }
    }
}

/// VIM solve with the time-shift wrapper, so paths may start later than
/// time 1.
pub fn solve_ham_vim(g: &TemporalGraph, cfg: &VimConfig) -> Result<Answer, EngineError> {
    if g.n() <= 1 {
        return Ok(Answer::trivial(true));
    }
    if g.is_edgeless() {
        return Ok(Answer::trivial(false));
    }
    let plugin = HamVim { n: g.n() };
    let mut merged = VimStats::default();
    for start in 1..=g.lifetime() {
        let shifted = g.shift_to(start);
        if shifted.is_edgeless() {
            break;
        }
        let out = solve_locally_uniform(&plugin, &shifted, cfg)?;
        merged.width = merged.width.max(out.stats.width);
        if merged.table_sizes.len() < out.stats.table_sizes.len() {
            merged.table_sizes.resize(out.stats.table_sizes.len(), 0);
        }
        for (m, s) in merged.table_sizes.iter_mut().zip(&out.stats.table_sizes) {
            *m = (*m).max(*s);
        }
        if out.accepted {
            return Ok(Answer { yes: true, stats: SolveStats::Vim(merged) });
        }
    }
    Ok(Answer { yes: false, stats: SolveStats::Vim(merged) })
}

/// Component formulation: one counter per component counting current
/// vertices; the bound allows one current vertex in each of `s_0..s_Λ`.
#[derive(Debug, Clone)]
pub struct HamTim {
    pub lifetime: usize,
}

impl HamTim {
    fn currents(labels: &[Label]) -> i64 {
        labels.iter().filter(|&&l| l == CURRENT).count() as i64
    }

    fn counted(labels: &[Label], vector: &[i64]) -> bool {
        let p = Self::currents(labels);
        vector == [p] && p <= 1
    }
}

impl TimPlugin for HamTim {
    fn num_labels(&self) -> usize {
        3
    }

    fn arity(&self) -> usize {
        1
    }

    fn upper_bound(&self) -> Vec<i64> {
        vec![self.lifetime as i64 + 1]
    }

    fn vector_ranges(&self) -> Vec<RangeInclusive<i64>> {
        vec![0..=1]
    }

    fn candidate_vectors(&self, _comp: &ComponentView, labels: &[Label], _role: Role) -> Vec<Vec<i64>> {
        let p = Self::currents(labels);
        if p <= 1 {
            vec![vec![p]]
        } else {
            Vec::new()
        }
    }

    fn start(&self, _comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool {
        Self::counted(labels, vector) && labels.iter().all(|&l| l == CURRENT || l == UNVISITED)
    }

    fn valid(&self, _comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool {
        Self::counted(labels, vector)
    }

    fn finish(&self, _comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool {
        Self::counted(labels, vector) && labels.iter().all(|&l| l != UNVISITED)
    }

    fn transition(&self, comp: &ComponentView, prev: &[Label], next: &[Label]) -> bool {
        prev == next || is_move(prev, next, |a, b| comp.has_edge(a, b))
    }

    fn nonnegative(&self) -> Vec<bool> {
        vec![true]
    }
}

pub fn solve_ham_tim(g: &TemporalGraph, cfg: &TimConfig) -> Result<Answer, EngineError> {
    if g.n() <= 1 {
        return Ok(Answer::trivial(true));
    }
    if g.is_edgeless() {
        return Ok(Answer::trivial(false));
    }
    let out = solve_component_exchangeable(&HamTim { lifetime: g.lifetime() }, g, cfg)?;
    Ok(Answer { yes: out.accepted, stats: SolveStats::Tim(out.stats) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(labels: &[Label], h: i64) -> KxState {
        KxState { labels: labels.to_vec(), counters: vec![h] }
    }

    #[test]
    fn vim_transition_rules() {
        let p = HamVim { n: 2 };
        let snap = Snapshot { t: 1, n: 2, edges: vec![(0, 1)] };
        let a = st(&[CURRENT, UNVISITED], 1);
        assert!(p.transition(&a, &st(&[VISITED, CURRENT], 2), &snap));
        assert!(p.transition(&a, &a, &snap));
        assert!(!p.transition(&a, &st(&[VISITED, CURRENT], 1), &snap));
        let empty = Snapshot { t: 1, n: 2, edges: vec![] };
        assert!(!p.transition(&a, &st(&[VISITED, CURRENT], 2), &empty));
    }

    #[test]
    fn tim_routines() {
        let p = HamTim { lifetime: 1 };
        let verts = [0, 1];
        let edges = [(0, 1)];
        let c = ComponentView { time: 0, vertices: &verts, edges: &edges };
        assert!(p.start(&c, &[CURRENT, UNVISITED], &[1]));
        assert!(!p.start(&c, &[CURRENT, CURRENT], &[2]));
        assert!(p.transition(&c, &[CURRENT, UNVISITED], &[VISITED, CURRENT]));
        assert!(!p.transition(&c, &[CURRENT, VISITED], &[VISITED, CURRENT]));
    }

    #[test]
    fn small_solves() {
        let one_hop = TemporalGraph::new(2, [(0, 1, 1)]).unwrap();
        assert!(solve_ham_vim(&one_hop, &VimConfig::default()).unwrap().yes);
        assert!(solve_ham_tim(&one_hop, &TimConfig::default()).unwrap().yes);
        // Traversed as 2, 1, 0.
        let reversed = TemporalGraph::new(3, [(0, 1, 2), (1, 2, 1)]).unwrap();
        assert!(solve_ham_vim(&reversed, &VimConfig::default()).unwrap().yes);
        assert!(solve_ham_tim(&reversed, &TimConfig::default()).unwrap().yes);
        let plateau = TemporalGraph::new(3, [(0, 1, 1), (0, 2, 1)]).unwrap();
        assert!(!solve_ham_vim(&plateau, &VimConfig::default()).unwrap().yes);
        assert!(!solve_ham_tim(&plateau, &TimConfig::default()).unwrap().yes);
        let path = TemporalGraph::new(3, [(0, 1, 1), (1, 2, 2)]).unwrap();
        assert!(solve_ham_vim(&path, &VimConfig::default()).unwrap().yes);
        assert!(solve_ham_tim(&path, &TimConfig::default()).unwrap().yes);
    }
}
