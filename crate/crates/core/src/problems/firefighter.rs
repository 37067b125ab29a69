//! Temporal firefighter in its reserve form: one unit of budget accrues per
//! timestep and may be spent on several defences at once.

use std::ops::RangeInclusive;

use super::{Answer, SolveStats};
use crate::tgraph::{Snapshot, TemporalGraph, Time, Vertex};
use crate::tim_engine::{solve_component_exchangeable, ComponentView, Role, TimConfig, TimPlugin};
use crate::vim_engine::{solve_locally_uniform, EngineError, KxState, Label, VimConfig, VimPlugin};
use crate::width::VimSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirefighterInstance {
    pub g: TemporalGraph,
    pub root: Vertex,
    /// Vertices that must be saved.
    pub h: usize,
}

/// The instance with time shifted so the root's first edge is at time 1.
/// The `start - 1` budget units accrued before then are folded into
/// `initial_budget`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReserveInstance {
    pub g: TemporalGraph,
    pub root: Vertex,
    pub h: usize,
    pub initial_budget: i64,
}

impl FirefighterInstance {
    /// `None` when the root never has an edge, so the fire never spreads.
    pub fn normalize(&self) -> Option<ReserveInstance> {
        let start = self.g.time_edges().iter().find(|e| e.touches(self.root))?.t;
        Some(ReserveInstance {
            g: self.g.shift_to(start),
            root: self.root,
            h: self.h,
            initial_budget: start as i64,
        })
    }

    fn trivial(&self) -> bool {
        self.h < self.g.n()
    }
}

pub mod vim_labels {
    use crate::vim_engine::Label;
    pub const BURNT: Label = 0;
    pub const DEFENDED: Label = 1;
    pub const UNTOUCHED: Label = 2;
}

/// VIM formulation; counters are `(h', b)`: vertices burnt so far and the
/// budget available at the next step.
#[derive(Debug, Clone)]
pub struct FfVim {
    pub n: usize,
    pub root: Vertex,
    pub h: usize,
    pub initial_budget: i64,
    pub lifetime: Time,
}

impl FfVim {
    pub fn new(inst: &ReserveInstance) -> Self {
        FfVim {
            n: inst.g.n(),
            root: inst.root,
            h: inst.h,
            initial_budget: inst.initial_budget,
            lifetime: inst.g.lifetime(),
        }
    }

    /// `(|new defences|, burning after spread)` or `None` when the new
    /// labelling defends something it may not.
    fn step(&self, prev: &[Label], next: &[Label], snapshot: &Snapshot) -> Option<(i64, Vec<bool>)> {
        use vim_labels::*;
        let mut new_def = 0;
        for v in 0..self.n {
            if next[v] == DEFENDED && prev[v] != DEFENDED {
                if prev[v] != UNTOUCHED || snapshot.degree(v) == 0 {
                    return None;
                }
                new_def += 1;
            }
        }
        let mut burning: Vec<bool> = prev.iter().map(|&l| l == BURNT).collect();
        for &(a, b) in &snapshot.edges {
            if prev[a] == BURNT {
                burning[b] = true;
            }
            if prev[b] == BURNT {
                burning[a] = true;
            }
        }
        for v in 0..self.n {
            if next[v] == DEFENDED {
                burning[v] = false;
            }
        }
        Some((new_def, burning))
    }
}

impl VimPlugin for FfVim {
    fn num_labels(&self) -> usize {
        3
    }

    fn unset(&self) -> Label {
        vim_labels::UNTOUCHED
    }

    fn counter_ranges(&self) -> Vec<RangeInclusive<i64>> {
        vec![1..=self.n as i64, 1..=self.initial_budget + self.lifetime as i64]
    }

    fn initial_states(&self, _seq: &VimSequence) -> Vec<KxState> {
        let mut labels = vec![vim_labels::UNTOUCHED; self.n];
        labels[self.root] = vim_labels::BURNT;
        vec![KxState { labels, counters: vec![1, self.initial_budget] }]
    }

    fn transition(&self, prev: &KxState, next: &KxState, snapshot: &Snapshot) -> bool {
        use vim_labels::*;
        let Some((new_def, burning)) = self.step(&prev.labels, &next.labels, snapshot) else {
            return false;
        };
        let budget = prev.counters[1] - new_def + 1;
        if budget < 1 || next.counters[1] != budget {
            return false;
        }
        let mut newly_burnt = 0;
        for v in 0..self.n {
            if burning[v] != (next.labels[v] == BURNT) {
                return false;
            }
            if burning[v] && prev.labels[v] != BURNT {
                newly_burnt += 1;
            }
            // Untouched after = untouched before minus burnt and defended.
            let untouched = prev.labels[v] == UNTOUCHED && !burning[v] && next.labels[v] != DEFENDED;
            if untouched != (next.labels[v] == UNTOUCHED) {
                return false;
            }
        }
        next.counters[0] == prev.counters[0] + newly_burnt
    }

    fn accept(&self, state: &KxState) -> bool {
        self.n as i64 - state.counters[0] >= self.h as i64
    }

    fn counters_derived(&self) -> bool {
        true
    }

    fn derive_counters(&self, prev: &KxState, next: &[Label], snapshot: &Snapshot) -> Vec<i64> {
        let (new_def, burning) = self.step(&prev.labels, next, snapshot).unwrap_or((0, Vec::new()));
        let newly = burning
            .iter()
            .enumerate()
            .filter(|&(v, &b)| b && prev.labels[v] != vim_labels::BURNT)
            .count() as i64;
        vec![prev.counters[0] + newly, prev.counters[1] - new_def + 1]
    }
}

pub fn solve_ff_vim(inst: &FirefighterInstance, cfg: &VimConfig) -> Result<Answer, EngineError> {
    let Some(reserve) = inst.normalize() else {
        return Ok(Answer::trivial(inst.trivial()));
    };
    let out = solve_locally_uniform(&FfVim::new(&reserve), &reserve.g, cfg)?;
    Ok(Answer { yes: out.accepted, stats: SolveStats::Vim(out.stats) })
}

pub mod tim_labels {
    use crate::vim_engine::Label;
    pub const BURNING: Label = 0;
    pub const UNBURNT: Label = 1;
    pub const NEWDEF: Label = 2;
    pub const DEFENDED: Label = 3;
}

/// Component formulation with vectors `(s, d_1..d_Λ, d')`: `s` is minus the
/// vertices saved (at time Λ), `d_i` the defences made by time `i`.
#[derive(Debug, Clone)]
pub struct FfTim {
    pub n: usize,
    pub root: Vertex,
    pub h: usize,
    pub initial_budget: i64,
    pub lifetime: Time,
}

impl FfTim {
    pub fn new(inst: &ReserveInstance) -> Self {
        FfTim {
            n: inst.g.n(),
            root: inst.root,
            h: inst.h,
            initial_budget: inst.initial_budget,
            lifetime: inst.g.lifetime(),
        }
    }

    fn count(labels: &[Label], l: Label) -> i64 {
        labels.iter().filter(|&&x| x == l).count() as i64
    }

    /// The unique vector the routines accept for this labelling.
    fn vector_for(&self, time: Time, labels: &[Label], role: Role) -> Vec<i64> {
        let mut v = vec![0i64; self.lifetime + 2];
        if role == Role::Start {
            return v;
        }
        let newdef = Self::count(labels, tim_labels::NEWDEF);
        for (i, slot) in v.iter_mut().enumerate().take(self.lifetime + 1).skip(1) {
            if i >= time {
                *slot = newdef;
            }
        }
        v[self.lifetime + 1] = newdef;
        if role == Role::Finish {
            v[0] = -(labels.len() as i64 - Self::count(labels, tim_labels::BURNING));
        }
        v
    }
}

impl TimPlugin for FfTim {
    fn num_labels(&self) -> usize {
        4
    }

    fn arity(&self) -> usize {
        self.lifetime + 2
    }

    fn upper_bound(&self) -> Vec<i64> {
        let extra = self.initial_budget - 1;
        let mut u = vec![-(self.h as i64)];
        u.extend((1..=self.lifetime as i64).map(|i| i + extra));
        u.push(self.lifetime as i64 + extra);
        u
    }

    fn vector_ranges(&self) -> Vec<RangeInclusive<i64>> {
        let n = self.n as i64;
        let mut r = vec![-n..=0];
        r.extend(std::iter::repeat(0..=n).take(self.lifetime + 1));
        r
    }

    fn candidate_vectors(&self, comp: &ComponentView, labels: &[Label], role: Role) -> Vec<Vec<i64>> {
        vec![self.vector_for(comp.time, labels, role)]
    }

    fn start(&self, comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool {
        use tim_labels::*;
        vector.iter().all(|&x| x == 0)
            && comp
                .vertices
                .iter()
                .zip(labels)
                .all(|(&v, &l)| l == if v == self.root { BURNING } else { UNBURNT })
    }

    fn valid(&self, comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool {
        vector == self.vector_for(comp.time, labels, Role::Valid)
    }

    fn finish(&self, comp: &ComponentView, labels: &[Label], vector: &[i64]) -> bool {
        vector == self.vector_for(comp.time, labels, Role::Finish)
    }

    fn transition(&self, comp: &ComponentView, prev: &[Label], next: &[Label]) -> bool {
        use tim_labels::*;
        for i in 0..prev.len() {
            let defended = prev[i] == DEFENDED || prev[i] == NEWDEF;
            if defended != (next[i] == DEFENDED) {
                return false;
            }
            let spreads = prev[i] == BURNING
                || (comp.neighbours(i).any(|j| prev[j] == BURNING) && next[i] != DEFENDED && next[i] != NEWDEF);
            if spreads != (next[i] == BURNING) {
                return false;
            }
            if (next[i] == UNBURNT || next[i] == NEWDEF) && prev[i] != UNBURNT {
                return false;
            }
        }
        true
    }

    fn nonnegative(&self) -> Vec<bool> {
        let mut nn = vec![true; self.lifetime + 2];
        nn[0] = false;
        nn
    }
}

pub fn solve_ff_tim(inst: &FirefighterInstance, cfg: &TimConfig) -> Result<Answer, EngineError> {
    let Some(reserve) = inst.normalize() else {
        return Ok(Answer::trivial(inst.trivial()));
    };
    let out = solve_component_exchangeable(&FfTim::new(&reserve), &reserve.g, cfg)?;
    Ok(Answer { yes: out.accepted, stats: SolveStats::Tim(out.stats) })
}
