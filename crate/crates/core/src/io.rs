//! Text formats.
//!
//! Temporal graphs:
//!
//! ```text
//! # comment
//! tgraph <n> <lifetime>
//! root <v>        (optional)
//! source <v>      (optional)
//! e <u> <v> <t>
//! ```
//!
//! Emission is canonical: header, directives, then edges sorted by
//! `(t, u, v)` with `u < v`. The header lifetime must equal the largest
//! edge time (0 when there are no edges).

use thiserror::Error;

use crate::decomp::{Bag, TimDecomposition};
use crate::problems::hardness::TwoCnf;
use crate::tgraph::{GraphError, TemporalGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("missing header")]
    MissingHeader,
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

/// A parsed graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: TemporalGraph,
    pub root: Option<Vertex>,
    pub source: Option<Vertex>,
}

fn numbers(line: usize, fields: &[&str], want: usize, what: &str) -> Result<Vec<usize>, ParseError> {
    if fields.len() != want {
        return Err(syntax(line, format!("`{}` takes {} arguments", what, want)));
    }
    fields
        .iter()
        .map(|f| f.parse().map_err(|_| syntax(line, format!("`{}` is not a non-negative integer", f))))
        .collect()
}

/// Meaningful lines with their 1-based numbers: comments and blanks removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut root = None;
    let mut source = None;
    let mut edges: Vec<(usize, (Vertex, Vertex, usize))> = Vec::new();
    for (line, fields) in content_lines(text) {
        let (kw, args) = (fields[0], &fields[1..]);
        if header.is_none() && kw != "tgraph" {
            return Err(syntax(line, "expected `tgraph <n> <lifetime>` header"));
        }
        match kw {
            "tgraph" => {
                if header.is_some() {
                    return Err(syntax(line, "repeated header"));
                }
                let a = numbers(line, args, 2, kw)?;
                header = Some((line, a[0], a[1]));
            }
            "root" | "source" => {
                let a = numbers(line, args, 1, kw)?;
                let n = header.map_or(0, |h| h.1);
                if a[0] >= n {
                    return Err(ParseError::Graph { line, source: GraphError::VertexOutOfRange { vertex: a[0], n } });
                }
                let slot = if kw == "root" { &mut root } else { &mut source };
                if slot.replace(a[0]).is_some() {
                    return Err(syntax(line, format!("repeated `{}`", kw)));
                }
            }
            "e" => {
                let a = numbers(line, args, 3, kw)?;
                let lifetime = header.map_or(0, |h| h.2);
                if a[2] > lifetime {
                    return Err(ParseError::Graph {
                        line,
                        source: GraphError::TimeOutOfRange { t: a[2], lifetime },
                    });
                }
                edges.push((line, (a[0], a[1], a[2])));
            }
            other => return Err(syntax(line, format!("unknown directive `{}`", other))),
        }
    }
    let (hline, n, lifetime) = header.ok_or(ParseError::MissingHeader)?;
    // Validate edge by edge so errors point at the offending line.
    let mut seen = std::collections::BTreeSet::new();
    for &(line, (u, v, t)) in &edges {
        TemporalGraph::new(n, [(u, v, t)]).map_err(|source| ParseError::Graph { line, source })?;
        if !seen.insert((u.min(v), u.max(v), t)) {
            let (u, v) = (u.min(v), u.max(v));
            return Err(ParseError::Graph { line, source: GraphError::Duplicate { u, v, t } });
        }
    }
    let graph = TemporalGraph::new(n, edges.iter().map(|&(_, e)| e)).map_err(|source| ParseError::Graph { line: hline, source })?;
    if graph.lifetime() != lifetime {
        return Err(syntax(hline, format!("header lifetime {} but the last edge is at {}", lifetime, graph.lifetime())));
    }
    Ok(GraphFile { graph, root, source })
}

pub fn parse_temporal_graph(text: &str) -> Result<TemporalGraph, ParseError> {
    parse_graph_file(text).map(|f| f.graph)
}

pub fn emit_graph_file(f: &GraphFile) -> String {
    let g = &f.graph;
    let mut out = format!("tgraph {} {}\n", g.n(), g.lifetime());
    if let Some(r) = f.root {
        out.push_str(&format!("root {}\n", r));
    }
    if let Some(s) = f.source {
        out.push_str(&format!("source {}\n", s));
    }
    for e in g.time_edges() {
        out.push_str(&format!("e {} {} {}\n", e.u, e.v, e.t));
    }
    out
}

pub fn emit_temporal_graph(g: &TemporalGraph) -> String {
    emit_graph_file(&GraphFile { graph: g.clone(), root: None, source: None })
}

/// Reads the `node`/`arc` format written by [`crate::decomp::format_decomposition`].
/// Node ids must be `0, 1, 2, …` in order.
pub fn parse_decomposition(text: &str) -> Result<TimDecomposition, ParseError> {
    let mut bags = Vec::new();
    let mut arcs = Vec::new();
    for (line, fields) in content_lines(text) {
        match fields[0] {
            "node" => {
                if fields.len() != 4 {
                    return Err(syntax(line, "expected `node <id> time=<t> bag=<v,...>`"));
                }
                let id: usize = fields[1].parse().map_err(|_| syntax(line, "bad node id"))?;
                if id != bags.len() {
                    return Err(syntax(line, format!("node ids must be consecutive, expected {}", bags.len())));
                }
                let time = fields[2]
                    .strip_prefix("time=")
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| syntax(line, "bad `time=`"))?;
                let list = fields[3].strip_prefix("bag=").ok_or_else(|| syntax(line, "bad `bag=`"))?;
                let mut vertices = Vec::new();
                for part in list.split(',').filter(|s| !s.is_empty()) {
                    vertices.push(part.parse().map_err(|_| syntax(line, format!("bad vertex `{}`", part)))?);
                }
                vertices.sort_unstable();
                vertices.dedup();
                bags.push(Bag { time, vertices });
            }
            "arc" => {
                let a = numbers(line, &fields[1..], 2, "arc")?;
                arcs.push((a[0], a[1]));
            }
            other => return Err(syntax(line, format!("unknown directive `{}`", other))),
        }
    }
    for &(a, b) in &arcs {
        if a >= bags.len() || b >= bags.len() {
            return Err(syntax(0, format!("arc ({}, {}) names a missing node", a, b)));
        }
    }
    Ok(TimDecomposition { bags, arcs })
}

/// DIMACS CNF restricted to two literals per clause.
pub fn parse_two_cnf(text: &str) -> Result<TwoCnf, ParseError> {
    let mut vars = None;
    let mut declared = 0;
    let mut clauses = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.first() {
            None | Some(&"c") => continue,
            Some(&"p") => {
                if fields.len() != 4 || fields[1] != "cnf" {
                    return Err(syntax(line, "expected `p cnf <vars> <clauses>`"));
                }
                let a = numbers(line, &fields[2..], 2, "p cnf")?;
                vars = Some(a[0]);
                declared = a[1];
            }
            Some(_) => {
                if vars.is_none() {
                    return Err(syntax(line, "clause before `p cnf` line"));
                }
                let lits: Result<Vec<i32>, _> = fields.iter().map(|f| f.parse::<i32>()).collect();
                let lits = lits.map_err(|_| syntax(line, "bad literal"))?;
                match lits.as_slice() {
                    [a, b, 0] => clauses.push((*a, *b)),
                    _ => return Err(syntax(line, "each clause needs exactly two literals and a trailing 0")),
                }
            }
        }
    }
    let vars = vars.ok_or(ParseError::MissingHeader)?;
    if clauses.len() != declared {
        return Err(syntax(0, format!("declared {} clauses, found {}", declared, clauses.len())));
    }
    let cnf = TwoCnf { vars, clauses };
    cnf.validate().map_err(|e| syntax(0, e.to_string()))?;
    Ok(cnf)
}

pub fn emit_two_cnf(cnf: &TwoCnf) -> String {
    let mut out = format!("p cnf {} {}\n", cnf.vars, cnf.clauses.len());
    for &(a, b) in &cnf.clauses {
        out.push_str(&format!("{} {} 0\n", a, b));
    }
    out
}
