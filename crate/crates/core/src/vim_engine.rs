//! Dynamic program over the VIM sequence for locally temporally uniform
//! problems.
//!
//! A state labels every vertex and carries `k` counters. At time `t` only
//! the vertices of `F_t` may carry a label other than the plugin's `U`.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::tgraph::{Snapshot, TemporalGraph, Time, Vertex};
use crate::width::{vim_sequence, VimSequence};

pub type Label = u8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KxState {
    /// One label per vertex of the graph.
    pub labels: Vec<Label>,
    pub counters: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("state space at time {time} needs {required} candidates, above the cap of {cap}")]
    StateLimit { time: Time, required: f64, cap: f64 },
    #[error("profile space at bag {bag} needs {required} candidates, above the cap of {cap}")]
    ProfileLimit { bag: usize, required: f64, cap: f64 },
}

/// Problem definition for [`solve_locally_uniform`]. Implementations hold
/// their instance parameters and must be pure.
pub trait VimPlugin {
    fn num_labels(&self) -> usize;
    /// The label every vertex outside the current bag carries.
    fn unset(&self) -> Label;
    fn counter_ranges(&self) -> Vec<RangeInclusive<i64>>;
    fn initial_states(&self, seq: &VimSequence) -> Vec<KxState>;
    fn transition(&self, prev: &KxState, next: &KxState, snapshot: &Snapshot) -> bool;
    fn accept(&self, state: &KxState) -> bool;
    /// When true, [`VimPlugin::derive_counters`] gives the only counter
    /// values worth trying for a successor labelling.
    fn counters_derived(&self) -> bool {
        false
    }
    fn derive_counters(&self, _prev: &KxState, _next: &[Label], _snapshot: &Snapshot) -> Vec<i64> {
        unreachable!("plugin does not derive counters")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VimMode {
    /// Every state on `F_t` is paired with every kept predecessor.
    Exhaustive,
    /// Successors are generated from each predecessor by relabelling only
    /// the vertices active at `t`; isolated vertices keep their label, as
    /// the locality conditions require.
    Local,
}

#[derive(Debug, Clone)]
pub struct VimConfig {
    pub mode: VimMode,
    /// Cap on candidates examined at one timestep.
    pub cap: f64,
    /// Keep every table for inspection.
    pub keep_tables: bool,
}

impl Default for VimConfig {
    fn default() -> Self {
        VimConfig { mode: VimMode::Local, cap: 5e7, keep_tables: false }
    }
}

#[derive(Debug, Clone, Default)]
pub struct VimStats {
    /// `|S_t|` for `t = 0..=Λ`.
    pub table_sizes: Vec<usize>,
    pub width: usize,
}

impl VimStats {
    pub fn peak(&self) -> usize {
        self.table_sizes.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Debug, Clone)]
pub struct VimOutcome {
    pub accepted: bool,
    pub stats: VimStats,
    pub tables: Option<Vec<Vec<KxState>>>,
}

/// Runs the DP and reports whether some accepted state survives at `Λ`.
pub fn solve_locally_uniform<P: VimPlugin + ?Sized>(
    plugin: &P,
    g: &TemporalGraph,
    cfg: &VimConfig,
) -> Result<VimOutcome, EngineError> {
    let seq = vim_sequence(g);
    let lifetime = g.lifetime();
    let x = plugin.num_labels();
    let u = plugin.unset();
    let ranges = plugin.counter_ranges();
    let combos: f64 = ranges.iter().map(|r| (r.end() - r.start() + 1).max(0) as f64).product();

    let mut current: Vec<KxState> = dedup(plugin.initial_states(&seq));
    let mut stats = VimStats { table_sizes: vec![current.len()], width: seq.width };
    let mut tables = cfg.keep_tables.then(|| vec![current.clone()]);

    for t in 1..=lifetime {
        let snapshot = g.snapshot(t).expect("t within lifetime");
        let bag = &seq.bags[t];
        let mut in_bag = vec![false; g.n()];
        for &v in bag {
            in_bag[v] = true;
        }
        let restricted: Vec<KxState> = dedup(
            current
                .iter()
                .map(|s| KxState {
                    labels: s.labels.iter().enumerate().map(|(v, &l)| if in_bag[v] { l } else { u }).collect(),
                    counters: s.counters.clone(),
                })
                .collect(),
        );
        let mut next: HashSet<KxState> = HashSet::new();
        match cfg.mode {
            VimMode::Exhaustive => {
                let required = (x as f64).powi(bag.len() as i32) * combos;
                if required > cfg.cap {
                    return Err(EngineError::StateLimit { time: t, required, cap: cfg.cap });
                }
                for cand in enumerate_bag_states(bag, g.n(), x, u, &ranges) {
                    if restricted.iter().any(|r| plugin.transition(r, &cand, &snapshot)) {
                        next.insert(cand);
                    }
                }
            }
            VimMode::Local => {
                let active = &seq.active[t];
                let per = if plugin.counters_derived() { 1.0 } else { combos };
                let required = restricted.len() as f64 * (x as f64).powi(active.len() as i32) * per;
                if required > cfg.cap {
                    return Err(EngineError::StateLimit { time: t, required, cap: cfg.cap });
                }
                for r in &restricted {
                    let mut labels = r.labels.clone();
                    let mut digits = vec![0usize; active.len()];
                    loop {
                        for (i, &v) in active.iter().enumerate() {
                            labels[v] = digits[i] as Label;
                        }
                        if plugin.counters_derived() {
                            let counters = plugin.derive_counters(r, &labels, &snapshot);
                            let cand = KxState { labels: labels.clone(), counters };
                            if counters_in(&cand.counters, &ranges) && plugin.transition(r, &cand, &snapshot) {
                                next.insert(cand);
                            }
                        } else {
                            for counters in counter_tuples(&ranges) {
                                let cand = KxState { labels: labels.clone(), counters };
                                if plugin.transition(r, &cand, &snapshot) {
                                    next.insert(cand);
                                }
                            }
                        }
                        if !advance(&mut digits, x) {
                            break;
                        }
                    }
                }
            }
        }
        let mut kept: Vec<KxState> = next.into_iter().collect();
        kept.sort_unstable();
        stats.table_sizes.push(kept.len());
        if let Some(tables) = tables.as_mut() {
            tables.push(kept.clone());
        }
        current = kept;
        if current.is_empty() {
            // Nothing can recover; pad the statistics and stop.
            stats.table_sizes.resize(lifetime + 1, 0);
            if let Some(tables) = tables.as_mut() {
                tables.resize(lifetime + 1, Vec::new());
            }
            return Ok(VimOutcome { accepted: false, stats, tables });
        }
    }
    let accepted = current.iter().any(|s| plugin.accept(s));
    Ok(VimOutcome { accepted, stats, tables })
}

/// All states labelling `bag` freely, `U` elsewhere, counters over their
/// ranges. Deterministic order: counters vary slowest, then labels in vertex
/// order with the first bag vertex fastest.
pub fn enumerate_bag_states(
    bag: &[Vertex],
    n: usize,
    num_labels: usize,
    unset: Label,
    ranges: &[RangeInclusive<i64>],
) -> impl Iterator<Item = KxState> {
    let bag = bag.to_vec();
    let tuples: Vec<Vec<i64>> = counter_tuples(ranges).collect();
    tuples.into_iter().flat_map(move |counters| {
        let bag = bag.clone();
        let mut digits = vec![0usize; bag.len()];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let mut labels = vec![unset; n];
            for (i, &v) in bag.iter().enumerate() {
                labels[v] = digits[i] as Label;
            }
            done = !advance(&mut digits, num_labels);
            Some(KxState { labels, counters: counters.clone() })
        })
    })
}

/// Mixed-radix increment; false once every digit wrapped.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn counter_tuples(ranges: &[RangeInclusive<i64>]) -> impl Iterator<Item = Vec<i64>> {
    let ranges = ranges.to_vec();
    let mut cur: Option<Vec<i64>> = if ranges.iter().any(|r| r.is_empty()) {
        None
    } else {
        Some(ranges.iter().map(|r| *r.start()).collect())
    };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut carried = true;
        for (i, r) in ranges.iter().enumerate() {
            if next[i] < *r.end() {
                next[i] += 1;
                carried = false;
                break;
            }
            next[i] = *r.start();
        }
        cur = if carried { None } else { Some(next) };
        Some(out)
    })
}

fn counters_in(c: &[i64], ranges: &[RangeInclusive<i64>]) -> bool {
    c.iter().zip(ranges).all(|(v, r)| r.contains(v))
}

fn dedup(mut v: Vec<KxState>) -> Vec<KxState> {
    v.sort_unstable();
    v.dedup();
    v
}

/// `(2b+1)^k · |X|^ω`, the per-timestep table bound, as a float.
pub fn table_bound(b: i64, k: usize, labels: usize, omega: usize) -> f64 {
    ((2 * b + 1) as f64).powi(k as i32) * (labels as f64).powi(omega as i32)
}
