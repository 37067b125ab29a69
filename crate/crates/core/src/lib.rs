//! Temporal graphs, their interval-membership width parameters, and
//! dynamic-programming solvers parameterised by them.

pub mod decomp;
pub mod generate;
pub mod io;
pub mod oracles;
pub mod problems;
pub mod tgraph;
pub mod tim_engine;
pub mod vim_engine;
pub mod width;
