//! Max-2-SAT to temporal firefighter on depth-2 temporal trees.

use thiserror::Error;

use super::firefighter::FirefighterInstance;
use crate::tgraph::{TemporalGraph, Vertex};

/// A 2-CNF formula with DIMACS-style literals (`+i` / `-i`, `1 <= i <= vars`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCnf {
    pub vars: usize,
    pub clauses: Vec<(i32, i32)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("clause {clause} uses variable {var} outside 1..={vars}")]
    BadVariable { clause: usize, var: i32, vars: usize },
    #[error("clause {clause} does not use two distinct variables")]
    RepeatedVariable { clause: usize },
    #[error("target {k} exceeds the clause count {w}")]
    BadTarget { k: usize, w: usize },
}

impl TwoCnf {
    pub fn validate(&self) -> Result<(), CnfError> {
        for (j, &(a, b)) in self.clauses.iter().enumerate() {
            for l in [a, b] {
                if l == 0 || l.unsigned_abs() as usize > self.vars {
                    return Err(CnfError::BadVariable { clause: j, var: l, vars: self.vars });
                }
            }
            if a.abs() == b.abs() {
                return Err(CnfError::RepeatedVariable { clause: j });
            }
        }
        Ok(())
    }

    /// Clauses satisfied by `assignment` (bit `i-1` is variable `i`).
    pub fn satisfied(&self, assignment: u64) -> usize {
        let holds = |l: i32| ((assignment >> (l.unsigned_abs() - 1)) & 1 == 1) == (l > 0);
        self.clauses.iter().filter(|&&(a, b)| holds(a) || holds(b)).count()
    }

    /// Most clauses any assignment satisfies, by trying all of them.
    pub fn max_satisfiable(&self) -> usize {
        (0..1u64 << self.vars).map(|a| self.satisfied(a)).max().unwrap_or(0)
    }
}

/// Vertex numbering of the reduction.
#[derive(Debug, Clone, Copy)]
pub struct Layout {
    pub vars: usize,
    pub clauses: usize,
}

impl Layout {
    pub fn root(&self) -> Vertex {
        0
    }

    /// `b_{i,x}` for variable `i` in `1..=v`, truth value `x`.
    pub fn var(&self, i: usize, x: bool) -> Vertex {
        1 + 2 * (i - 1) + usize::from(!x)
    }

    /// Forcing leaf `d_{i,x,j}`, `j` in `1..=w`.
    pub fn forcing(&self, i: usize, x: bool, j: usize) -> Vertex {
        1 + 2 * self.vars + ((i - 1) * 2 + usize::from(!x)) * self.clauses + (j - 1)
    }

    /// Clause leaf `c_{j,i}` (`bar = false`) or `c̄_{j,i}` (`bar = true`);
    /// `slot` 0 or 1 picks the clause's first or second literal.
    pub fn clause(&self, j: usize, slot: usize, bar: bool) -> Vertex {
        1 + 2 * self.vars + 2 * self.vars * self.clauses + ((j - 1) * 2 + slot) * 2 + usize::from(bar)
    }

    pub fn vertex_count(&self) -> usize {
        1 + 2 * self.vars + 2 * self.clauses * self.vars + 4 * self.clauses
    }
}

/// Builds the reduction instance with target `h = v + 2wv + 3w + k`.
pub fn gen_firefighter_hardness(cnf: &TwoCnf, k: usize) -> Result<FirefighterInstance, CnfError> {
    cnf.validate()?;
    let (v, w) = (cnf.vars, cnf.clauses.len());
    if k > w {
        return Err(CnfError::BadTarget { k, w });
    }
    let lay = Layout { vars: v, clauses: w };
    let mut edges = Vec::new();
    for i in 1..=v {
        for x in [true, false] {
            edges.push((lay.root(), lay.var(i, x), i));
            for j in 1..=w {
                edges.push((lay.forcing(i, x, j), lay.var(i, x), v + (i - 1) * w + j));
            }
        }
    }
    for (jj, &(a, b)) in cnf.clauses.iter().enumerate() {
        let j = jj + 1;
        for (slot, lit) in [a, b].into_iter().enumerate() {
            let i = lit.unsigned_abs() as usize;
            let positive = lit > 0;
            edges.push((lay.clause(j, slot, false), lay.var(i, positive), v + w * v + j));
            edges.push((lay.clause(j, slot, true), lay.var(i, !positive), v + w * v + w + j));
        }
    }
    let g = TemporalGraph::new(lay.vertex_count(), edges).expect("construction is a simple temporal tree");
    Ok(FirefighterInstance { g, root: lay.root(), h: v + 2 * w * v + 3 * w + k })
}
