//! VIM sequence and the connected-VIM width variants.

use crate::tgraph::{component_lists, TemporalGraph, Time, Vertex};

/// Per-time bags `F_0..F_Λ` and active sets `A_0..A_Λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VimSequence {
    pub bags: Vec<Vec<Vertex>>,
    pub active: Vec<Vec<Vertex>>,
    pub width: usize,
}

impl VimSequence {
    pub fn lifetime(&self) -> Time {
        self.bags.len() - 1
    }
}

/// First and last incident time of every vertex, `None` for isolated vertices.
pub fn activity_intervals(g: &TemporalGraph) -> Vec<Option<(Time, Time)>> {
    let mut iv: Vec<Option<(Time, Time)>> = vec![None; g.n()];
    for e in g.time_edges() {
        for x in [e.u, e.v] {
            iv[x] = Some(match iv[x] {
                None => (e.t, e.t),
                Some((a, b)) => (a.min(e.t), b.max(e.t)),
            });
        }
    }
    iv
}

pub fn vim_sequence(g: &TemporalGraph) -> VimSequence {
    let lifetime = g.lifetime();
    let iv = activity_intervals(g);
    let mut bags = vec![Vec::new(); lifetime + 1];
    let mut active = vec![Vec::new(); lifetime + 1];
    for (v, span) in iv.iter().enumerate() {
        if let Some((a, b)) = *span {
            for bag in &mut bags[a..=b] {
                bag.push(v);
            }
        }
    }
    for (t, act) in active.iter_mut().enumerate().skip(1) {
        let mut a: Vec<_> = g.edges_at(t).iter().flat_map(|e| [e.u, e.v]).collect();
        a.sort_unstable();
        a.dedup();
        *act = a;
    }
    if lifetime >= 1 {
        bags[0] = bags[1].clone();
        active[0] = active[1].clone();
    }
    let width = bags.iter().map(Vec::len).max().unwrap_or(0).max(1);
    VimSequence { bags, active, width }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Components of the underlying graph of time-edges at or before `t`.
    AtOrBefore,
    /// Components of the underlying graph of time-edges at or after `t`.
    AtOrAfter,
}

/// A connected-VIM width with the bags that attain it, listed as `(t, bag)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectedVim {
    pub width: usize,
    pub bags: Vec<(Time, Vec<Vertex>)>,
}

pub fn connected_vim(g: &TemporalGraph, d: Direction) -> ConnectedVim {
    let lifetime = g.lifetime();
    if lifetime == 0 {
        return ConnectedVim { width: 1, bags: Vec::new() };
    }
    let seq = vim_sequence(g);
    let mut in_f = vec![false; g.n()];
    let mut bags = Vec::new();
    let mut width = 0;
    for t in 1..=lifetime {
        for &v in &seq.bags[t] {
            in_f[v] = true;
        }
        let edges = g.time_edges().iter().filter(|e| match d {
            Direction::AtOrBefore => e.t <= t,
            Direction::AtOrAfter => e.t >= t,
        });
        for comp in component_lists(g.n(), edges.map(|e| (e.u, e.v))) {
            let bag: Vec<_> = comp.into_iter().filter(|&v| in_f[v]).collect();
            if !bag.is_empty() {
                width = width.max(bag.len());
                bags.push((t, bag));
            }
        }
        for &v in &seq.bags[t] {
            in_f[v] = false;
        }
    }
    ConnectedVim { width: width.max(1), bags }
}

pub fn connected_vim_width(g: &TemporalGraph, d: Direction) -> usize {
    connected_vim(g, d).width
}

/// `min_t ψ_∼(t)`. The parts before and after the split are measured
/// against the bags `F_t` of `g` itself, not of the truncated graphs; with
/// the truncated graphs' own bags the bound `tim <= ψ_∼` can fail.
pub fn bidirectional_cvim_width(g: &TemporalGraph) -> usize {
    let lifetime = g.lifetime();
    if lifetime == 0 {
        return 1;
    }
    let seq = vim_sequence(g);
    (1..=lifetime)
        .map(|t| split_width(g, &seq, t))
        .min()
        .expect("lifetime >= 1")
}

/// `ψ_∼(t)` for one split time.
pub fn split_width(g: &TemporalGraph, seq: &VimSequence, t: Time) -> usize {
    let lifetime = g.lifetime();
    if t == 1 {
        return connected_vim_width(g, Direction::AtOrAfter);
    }
    if t == lifetime {
        return connected_vim_width(g, Direction::AtOrBefore);
    }
    let largest = |d: Direction, keep: &dyn Fn(Time) -> bool| {
        connected_vim(g, d).bags.iter().filter(|(s, _)| keep(*s)).map(|(_, b)| b.len()).max().unwrap_or(0)
    };
    largest(Direction::AtOrBefore, &|s| s < t)
        .max(largest(Direction::AtOrAfter, &|s| s > t))
        .max(seq.bags[t].len())
        .max(1)
}

/// All five widths in one go.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WidthReport {
    pub vim: usize,
    pub cvim_le: usize,
    pub cvim_ge: usize,
    pub cvim_bi: usize,
    pub tim: usize,
}

pub fn width_report(g: &TemporalGraph) -> WidthReport {
    WidthReport {
        vim: vim_sequence(g).width,
        cvim_le: connected_vim_width(g, Direction::AtOrBefore),
        cvim_ge: connected_vim_width(g, Direction::AtOrAfter),
        cvim_bi: bidirectional_cvim_width(g),
        tim: crate::decomp::tim_width(g),
    }
}

impl std::fmt::Display for WidthReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "vim={}, cvim_le={}, cvim_ge={}, cvim_bi={}, tim={}",
            self.vim, self.cvim_le, self.cvim_ge, self.cvim_bi, self.tim
        )
    }
}
