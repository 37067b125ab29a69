//! Problem plugins for both engines, with thin wrappers that handle the
//! degenerate edgeless case and instance normalisation.

pub mod firefighter;
pub mod hamiltonian;
pub mod hardness;
pub mod matching;
pub mod tred;

use crate::tim_engine::TimStats;
use crate::vim_engine::VimStats;

/// Statistics from whichever engine answered.
#[derive(Debug, Clone, Default)]
pub enum SolveStats {
    #[default]
    Trivial,
    Vim(VimStats),
    Tim(TimStats),
}

impl SolveStats {
    /// Largest table (VIM) or per-bag profile count (TIM).
    pub fn peak(&self) -> usize {
        match self {
            SolveStats::Trivial => 0,
            SolveStats::Vim(s) => s.peak(),
            SolveStats::Tim(s) => s.peak(),
        }
    }

    pub fn bags(&self) -> usize {
        match self {
            SolveStats::Trivial => 0,
            SolveStats::Vim(s) => s.table_sizes.len(),
            SolveStats::Tim(s) => s.bags,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Answer {
    pub yes: bool,
    pub stats: SolveStats,
}

impl Answer {
    fn trivial(yes: bool) -> Self {
        Answer { yes, stats: SolveStats::Trivial }
    }
}
