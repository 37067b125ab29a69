use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use timwidth::decomp::{build_two_step, compute_tim_decomposition, format_decomposition, format_dot, format_two_step, root_and_augment};
use timwidth::generate::{gen_ordered_tree, gen_random, gen_width2_path, random_two_cnf, TreeShape};
use timwidth::io::{emit_graph_file, emit_two_cnf, parse_graph_file, parse_two_cnf, GraphFile};
use timwidth::oracles::{oracle_firefighter, oracle_ham, oracle_matching, oracle_tred};
use timwidth::problems::firefighter::{solve_ff_tim, solve_ff_vim, FirefighterInstance};
use timwidth::problems::hamiltonian::{solve_ham_tim, solve_ham_vim};
use timwidth::problems::hardness::gen_firefighter_hardness;
use timwidth::problems::matching::{solve_matching_tim, MatchingInstance};
use timwidth::problems::tred::{solve_tred_tim, TredInstance};
use timwidth::problems::Answer;
use timwidth::tgraph::{TemporalGraph, Vertex};
use timwidth::tim_engine::TimConfig;
use timwidth::vim_engine::VimConfig;
use timwidth::width::width_report;

/// Width parameters, decompositions and solvers for temporal graphs.
#[derive(Parser)]
#[command(name = "timwidth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every width parameter of a graph.
    Widths { file: PathBuf },
    /// Print a minimum-width TIM decomposition.
    Decompose {
        file: PathBuf,
        /// Print the rooted two-step form instead.
        #[arg(long, conflicts_with = "dot")]
        two_step: bool,
        /// Print Graphviz instead of the text format.
        #[arg(long)]
        dot: bool,
    },
    /// Decide one problem on a graph.
    Solve {
        problem: Problem,
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Engine::Tim)]
        engine: Engine,
        #[command(flatten)]
        params: Params,
    },
    /// Write a generated instance to stdout.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Cross-check every engine against the exhaustive oracles.
    Verify {
        files: Vec<PathBuf>,
        /// Also check this many seeded random instances.
        #[arg(long, default_value_t = 0)]
        random: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a benchmark suite and write CSV.
    Bench {
        suite: Suite,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Problem {
    TemporalHamiltonianPath,
    TemporalFirefighter,
    Matching,
    Tred,
}

impl Problem {
    fn name(self) -> &'static str {
        match self {
            Problem::TemporalHamiltonianPath => "temporal-hamiltonian-path",
            Problem::TemporalFirefighter => "temporal-firefighter",
            Problem::Matching => "matching",
            Problem::Tred => "tred",
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Engine {
    Vim,
    Tim,
}

impl Engine {
    fn name(self) -> &'static str {
        match self {
            Engine::Vim => "vim",
            Engine::Tim => "tim",
        }
    }
}

#[derive(clap::Args, Clone, Default)]
struct Params {
    /// Target count: vertices saved, matching size or deletion budget.
    #[arg(long)]
    h: Option<usize>,
    /// Reachability bound, counting the source.
    #[arg(long)]
    r: Option<usize>,
    /// Matching gap.
    #[arg(long)]
    delta: Option<usize>,
    /// Fire origin; overrides the file's `root` directive.
    #[arg(long)]
    root: Option<Vertex>,
    /// Reachability source; overrides the file's `source` directive.
    #[arg(long)]
    source: Option<Vertex>,
}

#[derive(Subcommand)]
enum GenKind {
    /// Uniform random graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lifetime: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        max_times: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random tree whose edges at a vertex precede all edges below it.
    OrderedTree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_children: usize,
        #[arg(long, default_value_t = 1)]
        max_times: usize,
        #[arg(long, default_value_t = 1000)]
        lifetime_cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Path of width two whose underlying graph grows with n.
    Width2Path {
        #[arg(long)]
        n: usize,
    },
    /// Random 2-CNF formula in DIMACS form.
    Cnf {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        clauses: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Firefighter instance built from a 2-CNF file and a clause target.
    Hardness {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// Small seeded random graphs, every problem.
    Random,
    /// Width-two paths of growing size, Hamiltonian path.
    Paths,
    /// Ordered trees, every problem with the component engine.
    Trees,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Widths { file } => {
            println!("{}", width_report(&read_graph(&file)?.graph));
        }
        Command::Decompose { file, two_step, dot } => {
            let g = read_graph(&file)?.graph;
            let d = compute_tim_decomposition(&g);
            let text = if two_step {
                format_two_step(&build_two_step(&g, &root_and_augment(&d)))
            } else if dot {
                format_dot(&d)
            } else {
                format_decomposition(&d)
            };
            print!("{}", text);
        }
        Command::Solve { problem, file, engine, params } => {
            let f = read_graph(&file)?;
            if problem == Problem::TemporalFirefighter && engine == Engine::Tim {
                eprintln!("warning: firefighter stays hard at TIM width 3; the component engine is only tractable when the lifetime is bounded too");
            }
            let start = Instant::now();
            let answer = solve(problem, engine, &f, &params)?;
            let micros = start.elapsed().as_micros();
            println!("{}", if answer.yes { "yes" } else { "no" });
            println!("bags={} max_table={}", answer.stats.bags(), answer.stats.peak());
            eprintln!("micros={}", micros);
        }
        Command::Gen { kind } => print!("{}", generate(kind)?),
        Command::Verify { files, random, seed } => {
            let mut instances = Vec::new();
            for file in &files {
                instances.push((file.display().to_string(), read_graph(file)?));
            }
            for i in 0..random {
                let g = suite_graph(seed, i);
                instances.push((format!("random-{}", i), GraphFile { graph: g, root: None, source: None }));
            }
            if instances.is_empty() {
                bail!("nothing to verify: give files or --random N");
            }
            let mut agree = 0;
            for (name, f) in &instances {
                match cross_check(f) {
                    Ok(()) => agree += 1,
                    Err(e) => eprintln!("{}: {:#}", name, e),
                }
            }
            println!("{}/{} agree", agree, instances.len());
            if agree != instances.len() {
                bail!("{} instance(s) disagree", instances.len() - agree);
            }
        }
        Command::Bench { suite, out, seed } => {
            let csv = bench(suite, seed)?;
            match out {
                Some(path) => std::fs::write(&path, csv).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{}", csv),
            }
        }
    }
    Ok(())
}

fn read_graph(path: &Path) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph_file(&text).with_context(|| format!("parsing {}", path.display()))
}

fn need(value: Option<usize>, flag: &str, problem: Problem) -> Result<usize> {
    value.ok_or_else(|| anyhow!("{} needs --{}", problem.name(), flag))
}

fn vertex(flag: Option<Vertex>, directive: Option<Vertex>, name: &str, g: &TemporalGraph) -> Result<Vertex> {
    let v = flag.or(directive).ok_or_else(|| anyhow!("no {name}: pass --{name} or add a `{name}` line to the file"))?;
    if v >= g.n() {
        bail!("{} {} is not a vertex of a graph with {} vertices", name, v, g.n());
    }
    Ok(v)
}

fn solve(problem: Problem, engine: Engine, f: &GraphFile, p: &Params) -> Result<Answer> {
    let g = &f.graph;
    let vim = VimConfig::default();
    let tim = TimConfig::default();
    let answer = match (problem, engine) {
        (Problem::TemporalHamiltonianPath, Engine::Vim) => solve_ham_vim(g, &vim)?,
        (Problem::TemporalHamiltonianPath, Engine::Tim) => solve_ham_tim(g, &tim)?,
        (Problem::TemporalFirefighter, _) => {
            let inst = FirefighterInstance {
                g: g.clone(),
                root: vertex(p.root, f.root, "root", g)?,
                h: need(p.h, "h", problem)?,
            };
            match engine {
                Engine::Vim => solve_ff_vim(&inst, &vim)?,
                Engine::Tim => solve_ff_tim(&inst, &tim)?,
            }
        }
        (Problem::Matching, Engine::Tim) => solve_matching_tim(
            &MatchingInstance { g: g.clone(), delta: need(p.delta, "delta", problem)?, h: need(p.h, "h", problem)? },
            &tim,
        )?,
        (Problem::Tred, Engine::Tim) => solve_tred_tim(
            &TredInstance {
                g: g.clone(),
                source: vertex(p.source, f.source, "source", g)?,
                r: need(p.r, "r", problem)?,
                h: need(p.h, "h", problem)?,
            },
            &tim,
        )?,
        (Problem::Matching | Problem::Tred, Engine::Vim) => {
            bail!("{} has no vertex-interval engine; use --engine tim", problem.name())
        }
    };
    Ok(answer)
}

fn generate(kind: GenKind) -> Result<String> {
    let plain = |g| emit_graph_file(&GraphFile { graph: g, root: None, source: None });
    Ok(match kind {
        GenKind::Random { n, lifetime, p, max_times, seed } => {
            if !(0.0..=1.0).contains(&p) {
                bail!("--p must lie in [0, 1]");
            }
            plain(gen_random(n, lifetime, p, max_times, seed))
        }
        GenKind::OrderedTree { n, max_children, max_times, lifetime_cap, seed } => {
            plain(gen_ordered_tree(TreeShape { n, max_children, max_times, lifetime_cap }, seed)?)
        }
        GenKind::Width2Path { n } => plain(gen_width2_path(n)),
        GenKind::Cnf { vars, clauses, seed } => emit_two_cnf(&random_two_cnf(vars, clauses, seed)),
        GenKind::Hardness { cnf, k } => {
            let text = std::fs::read_to_string(&cnf).with_context(|| format!("reading {}", cnf.display()))?;
            let formula = parse_two_cnf(&text).with_context(|| format!("parsing {}", cnf.display()))?;
            let inst = gen_firefighter_hardness(&formula, k)?;
            let body = emit_graph_file(&GraphFile { graph: inst.g, root: Some(inst.root), source: None });
            format!("# solve with --h {}\n{}", inst.h, body)
        }
    })
}

/// Instance `i` of the seeded random suite: 2 to 7 vertices, lifetime 1 to 5.
fn suite_graph(seed: u64, i: u64) -> TemporalGraph {
    let n = 2 + (i % 6) as usize;
    let lifetime = 1 + ((i / 6) % 5) as usize;
    gen_random(n, lifetime, 0.5, 2, seed.wrapping_mul(1_000_003).wrapping_add(i))
}

/// Every engine on every problem against the oracles, at the low, middle
/// and high end of each parameter range.
fn cross_check(f: &GraphFile) -> Result<()> {
    let g = &f.graph;
    if g.n() == 0 {
        return Ok(());
    }
    let none = Params::default();
    let want = oracle_ham(g);
    for engine in [Engine::Vim, Engine::Tim] {
        let got = solve(Problem::TemporalHamiltonianPath, engine, f, &none)?.yes;
        if got != want {
            bail!("hamiltonian path ({}) says {}, oracle says {}", engine.name(), got, want);
        }
    }
    let root = f.root.unwrap_or(0);
    let source = f.source.unwrap_or(0);
    let spread = |lo: usize, hi: usize| -> Vec<usize> {
        let mut v = vec![lo, (lo + hi) / 2, hi];
        v.dedup();
        v
    };
    for h in spread(1, g.n() - 1) {
        let p = Params { h: Some(h), root: Some(root), source: Some(source), ..Params::default() };
        let want = oracle_firefighter(g, root, h);
        for engine in [Engine::Vim, Engine::Tim] {
            let got = solve(Problem::TemporalFirefighter, engine, f, &p)?.yes;
            if got != want {
                bail!("firefighter ({}, h={}) says {}, oracle says {}", engine.name(), h, got, want);
            }
        }
        for delta in 1..=2 {
            let got = solve(Problem::Matching, Engine::Tim, f, &Params { delta: Some(delta), ..p.clone() })?.yes;
            let want = oracle_matching(g, delta, h);
            if got != want {
                bail!("matching (delta={}, h={}) says {}, oracle says {}", delta, h, got, want);
            }
        }
        for r in spread(1, g.n()) {
            let got = solve(Problem::Tred, Engine::Tim, f, &Params { r: Some(r), ..p.clone() })?.yes;
            let want = oracle_tred(g, source, r, h);
            if got != want {
                bail!("tred (r={}, h={}) says {}, oracle says {}", r, h, got, want);
            }
        }
    }
    Ok(())
}

fn bench(suite: Suite, seed: u64) -> Result<String> {
    let graphs: Vec<TemporalGraph> = match suite {
        Suite::Random => (0..60).map(|i| suite_graph(seed, i)).collect(),
        Suite::Paths => [4, 8, 16, 32, 64, 128].into_iter().map(gen_width2_path).collect(),
        Suite::Trees => (0..20)
            .map(|i| {
                let shape = TreeShape { n: 4 + i as usize, max_children: 3, max_times: 1, lifetime_cap: 1000 };
                gen_ordered_tree(shape, seed.wrapping_add(i)).map_err(anyhow::Error::from)
            })
            .collect::<Result<_>>()?,
    };
    let mut csv = String::from("instance-id,n,lifetime,vim,tim,problem,engine,answer,micros,peak-table-entries\n");
    for (id, g) in graphs.iter().enumerate() {
        let w = width_report(g);
        let f = GraphFile { graph: g.clone(), root: None, source: None };
        let h = g.n() / 2;
        let base = Params { h: Some(h), root: Some(0), source: Some(0), ..Params::default() };
        let mut runs = vec![
            (Problem::TemporalHamiltonianPath, Engine::Vim, base.clone()),
            (Problem::TemporalHamiltonianPath, Engine::Tim, base.clone()),
        ];
        if !matches!(suite, Suite::Paths) {
            runs.extend([
                (Problem::TemporalFirefighter, Engine::Vim, base.clone()),
                (Problem::TemporalFirefighter, Engine::Tim, base.clone()),
                (Problem::Matching, Engine::Tim, Params { delta: Some(1), ..base.clone() }),
                (Problem::Tred, Engine::Tim, Params { r: Some(1 + g.n() / 2), ..base.clone() }),
            ]);
        }
        for (problem, engine, p) in runs {
            let start = Instant::now();
            let (answer, peak) = match solve(problem, engine, &f, &p) {
                Ok(a) => ((if a.yes { "yes" } else { "no" }).to_string(), a.stats.peak().to_string()),
                Err(e) => (format!("error: {}", e).replace(',', ";"), String::new()),
            };
            let micros = start.elapsed().as_micros();
            writeln!(
                csv,
                "{},{},{},{},{},{},{},{},{},{}",
                id,
                g.n(),
                g.lifetime(),
                w.vim,
                w.tim,
                problem.name(),
                engine.name(),
                answer,
                micros,
                peak
            )?;
        }
    }
    Ok(csv)
}
