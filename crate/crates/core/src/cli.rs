//! Command-line driver: `solve`, `verify`, `count` and `stats`.
//!
//! With `--output FILE` the full result is written there as JSON; otherwise
//! a human-readable summary goes to stdout. Exit codes:
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success                                   |
//! | 2    | unreadable or malformed graph / bad usage |
//! | 3    | memory or exhaustive-search cap exceeded  |
//! | 4    | solver verification failure               |
//! | 5    | counting-block mismatch in `verify`       |

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::circuit::{Circuit, ResourceStats};
use crate::graph::{self, CutAssignment, Graph, GraphError, ParseError};
use crate::layout::{self, LayoutMode, QubitLayout};
use crate::sim::{self, MeasurementHistogram, SimError};
use crate::solver::{self, Backend, CountError, RunTrace, SolveError, SolverConfig};
use crate::synth::{self, SynthesisConfig};
use crate::verify::{self, CountingCheck};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;
pub const EXIT_COUNTING: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "maxcut",
    version,
    about = "Exact max-cut by Grover search over synthesized counting circuits"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Run the descending-threshold search and report a maximum cut.
    Solve(CommonArgs),
    /// Check the counting block on every basis state (n <= 5).
    Verify(CommonArgs),
    /// Tabulate the number of assignments of each cut size.
    Count(CommonArgs),
    /// Report qubit and gate counts without simulating.
    Stats(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Compact,
    Faithful,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Dense,
    Sparse,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Graph file: "n m" header, then m lines "k p" (1-indexed).
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "compact")]
    mode: ModeArg,
    /// Number of measurement shots; 0 uses exact probabilities.
    #[arg(long, default_value_t = 0)]
    shots: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// First target cut size to try (defaults to m).
    #[arg(long = "t-start")]
    t_start: Option<usize>,
    /// Simulate target sizes with no solutions and disable the zero-iteration retry.
    #[arg(long = "strict-paper")]
    strict_paper: bool,
    /// Largest dense statevector, in qubits.
    #[arg(long = "memory-cap", default_value_t = sim::DEFAULT_MEMORY_CAP_QUBITS as u64, value_parser = clap::value_parser!(u64).range(1..))]
    memory_cap: u64,
    /// Write JSON output to this file instead of printing a summary.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Simulation backend.
    #[arg(long, value_enum, default_value = "dense")]
    backend: BackendArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Solve,
    Verify,
    Count,
    Stats,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub command: Command,
    pub graph_path: PathBuf,
    pub mode: LayoutMode,
    pub shots: usize,
    pub seed: u64,
    pub t_start: Option<usize>,
    pub strict_paper: bool,
    pub memory_cap_qubits: usize,
    pub output_path: Option<PathBuf>,
    pub backend: Backend,
}

impl CliConfig {
    pub fn new(command: Command, graph_path: impl Into<PathBuf>) -> Self {
        Self {
            command,
            graph_path: graph_path.into(),
            mode: LayoutMode::Compact,
            shots: 0,
            seed: 1,
            t_start: None,
            strict_paper: false,
            memory_cap_qubits: sim::DEFAULT_MEMORY_CAP_QUBITS,
            output_path: None,
            backend: Backend::Dense,
        }
    }

    fn from_args(command: Command, a: CommonArgs) -> Self {
        Self {
            command,
            graph_path: a.graph,
            mode: match a.mode {
                ModeArg::Compact => LayoutMode::Compact,
                ModeArg::Faithful => LayoutMode::Faithful,
            },
            shots: a.shots,
            seed: a.seed,
            t_start: a.t_start,
            strict_paper: a.strict_paper,
            memory_cap_qubits: a.memory_cap as usize,
            output_path: a.output,
            backend: match a.backend {
                BackendArg::Dense => Backend::Dense,
                BackendArg::Sparse => Backend::Sparse,
            },
        }
    }

    pub fn solver_config(&self) -> SolverConfig {
        SolverConfig {
            synthesis: SynthesisConfig {
                mode: self.mode,
                t_start: self.t_start,
                ..Default::default()
            },
            backend: self.backend,
            memory_cap_qubits: self.memory_cap_qubits,
            shots: self.shots,
            seed: self.seed,
            strict_paper: self.strict_paper,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) => EXIT_PARSE,
            CliError::Cap(_) => EXIT_CAP,
            CliError::Verification(_) => EXIT_VERIFICATION,
            CliError::Other(_) => EXIT_PARSE,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Sim(SimError::MemoryCap { .. }) => CliError::Cap(e.to_string()),
            SolveError::Count(CountError::Graph(GraphError::ExhaustiveCap { .. })) => {
                CliError::Cap(e.to_string())
            }
            SolveError::Verification { .. } | SolveError::Exhausted => {
                CliError::Verification(e.to_string())
            }
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Parse(p) => CliError::Parse(p),
            GraphError::ExhaustiveCap { .. } => CliError::Cap(e.to_string()),
            other => CliError::Other(other.to_string()),
        }
    }
}

/// Result of a subcommand: exit code plus the JSON and human renderings.
#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub exit_code: i32,
    pub json: serde_json::Value,
    pub human: String,
}

pub fn load_graph(path: &PathBuf) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    Ok(graph::parse_graph(&text)?)
}

#[derive(Serialize)]
struct GraphSummary<'a> {
    n: usize,
    m: usize,
    edges: &'a [(usize, usize)],
}

impl<'a> From<&'a Graph> for GraphSummary<'a> {
    fn from(g: &'a Graph) -> Self {
        Self {
            n: g.vertex_count(),
            m: g.edge_count(),
            edges: g.edges(),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SolveResources {
    qubit_count: Option<usize>,
    iteration: Option<ResourceStats>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SolveJson<'a> {
    command: Command,
    graph: GraphSummary<'a>,
    mode: LayoutMode,
    backend: Backend,
    trace: &'a RunTrace,
    max_cut_size: usize,
    witness: &'a CutAssignment,
    complement: CutAssignment,
    v1: Vec<usize>,
    v2: Vec<usize>,
    optimal_count: u64,
    success_probability: Option<f64>,
    resources: SolveResources,
    #[serde(skip_serializing_if = "Option::is_none")]
    histogram: Option<&'a MeasurementHistogram>,
}

fn vertex_set(vs: &[usize]) -> String {
    let names: Vec<String> = vs.iter().map(|v| format!("v{v}")).collect();
    format!("{{{}}}", names.join(","))
}

pub fn cmd_solve(config: &CliConfig) -> Result<CommandOutput, CliError> {
    let graph = load_graph(&config.graph_path)?;
    let solution = solver::solve_maxcut(&graph, &config.solver_config())?;
    let report = &solution.report;

    // Independent of the solver's own check.
    let size = graph::cut_size(&graph, &report.assignment)?;
    if size != report.size {
        return Err(CliError::Verification(format!(
            "witness {} has cut size {size}, solver reported {}",
            report.assignment, report.size
        )));
    }

    let accepted = solution.accepted_record();
    let qubit_count = (graph.edge_count() > 0).then(|| {
        QubitLayout::new(config.mode, graph.vertex_count(), graph.edge_count()).total_qubits()
    });
    let body = SolveJson {
        command: Command::Solve,
        graph: (&graph).into(),
        mode: config.mode,
        backend: config.backend,
        trace: &solution.trace,
        max_cut_size: report.size,
        witness: &report.assignment,
        complement: report.assignment.complement(),
        v1: report.assignment.v1(),
        v2: report.assignment.v2(),
        optimal_count: report.optimal_count,
        success_probability: accepted.map(|r| r.success_probability),
        resources: SolveResources {
            qubit_count,
            iteration: solution.iteration_stats.clone(),
        },
        histogram: solution.histogram.as_ref(),
    };

    let mut human = String::new();
    let _ = writeln!(
        human,
        "graph: n = {}, m = {}",
        graph.vertex_count(),
        graph.edge_count()
    );
    for r in &solution.trace.records {
        let _ = writeln!(
            human,
            "  t = {:<3} R = {:<6} iterations = {:<4} P(size t) = {:.6}{}{}{}",
            r.t,
            r.solutions,
            r.iterations,
            r.success_probability,
            r.shot_fraction
                .map(|f| format!("  shots = {f:.4}"))
                .unwrap_or_default(),
            if r.retry { "  (retry)" } else { "" },
            if !r.simulated {
                "  (skipped)"
            } else if r.accepted {
                "  accepted"
            } else {
                ""
            }
        );
    }
    let _ = writeln!(human, "max cut size: {}", report.size);
    let _ = writeln!(
        human,
        "witness: {} (V1 = {}, V2 = {}), complement {}",
        report.assignment,
        vertex_set(&body.v1),
        vertex_set(&body.v2),
        body.complement
    );
    if let Some(p) = body.success_probability {
        let _ = writeln!(human, "success probability: {p:.6}");
    }
    if let (Some(q), Some(stats)) = (qubit_count, &solution.iteration_stats) {
        let _ = writeln!(
            human,
            "qubits: {q} ({} layout), gates per iteration: {}",
            config.mode, stats.total_gates
        );
    }
    if let Some(h) = &solution.histogram {
        let _ = writeln!(human, "histogram ({} shots, seed {}):", h.shots, h.seed);
        human.push_str(&h.to_ascii(40));
    }

    Ok(CommandOutput {
        exit_code: EXIT_OK,
        json: serde_json::to_value(&body).expect("serializable"),
        human,
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct VerifyJson<'a> {
    command: Command,
    graph: GraphSummary<'a>,
    mode: LayoutMode,
    passed: bool,
    #[serde(flatten)]
    check: &'a CountingCheck,
}

/// Runs the basis sweep against an explicit block and renders the outcome.
pub fn verify_with_block(
    graph: &Graph,
    layout: &QubitLayout,
    block: &Circuit,
) -> Result<CommandOutput, CliError> {
    let check = verify::check_counting_block(graph, layout, block)
        .map_err(|e| CliError::Other(e.to_string()))?;
    Ok(render_verify(graph, layout.mode(), &check))
}

fn render_verify(graph: &Graph, mode: LayoutMode, check: &CountingCheck) -> CommandOutput {
    let passed = check.passed();
    let mut human = String::new();
    for f in &check.failures {
        let _ = writeln!(
            human,
            "FAIL x = {}: expected one-hot at {}, z row = {}",
            f.x, f.expected, f.row
        );
    }
    let ok = check.checked - check.failures.len() as u64;
    let _ = writeln!(
        human,
        "{} ({ok}/{} basis states)",
        if passed { "pass" } else { "fail" },
        check.checked
    );
    let body = VerifyJson {
        command: Command::Verify,
        graph: graph.into(),
        mode,
        passed,
        check,
    };
    CommandOutput {
        exit_code: if passed { EXIT_OK } else { EXIT_COUNTING },
        json: serde_json::to_value(&body).expect("serializable"),
        human,
    }
}

pub fn cmd_verify(config: &CliConfig) -> Result<CommandOutput, CliError> {
    let graph = load_graph(&config.graph_path)?;
    if graph.vertex_count() > verify::VERIFY_MAX_VERTICES {
        return Err(CliError::Cap(format!(
            "verify sweeps every basis state and accepts at most {} vertices (got {})",
            verify::VERIFY_MAX_VERTICES,
            graph.vertex_count()
        )));
    }
    if graph.edge_count() == 0 {
        let check = CountingCheck {
            checked: 0,
            failures: vec![],
        };
        return Ok(render_verify(&graph, config.mode, &check));
    }
    let layout = QubitLayout::new(config.mode, graph.vertex_count(), graph.edge_count());
    let block =
        synth::synth_counting_block(&graph, &layout).map_err(|e| CliError::Other(e.to_string()))?;
    verify_with_block(&graph, &layout, &block)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CountJson<'a> {
    command: Command,
    graph: GraphSummary<'a>,
    counts: BTreeMap<usize, u64>,
    max_cut_size: usize,
}

pub fn cmd_count(config: &CliConfig) -> Result<CommandOutput, CliError> {
    let graph = load_graph(&config.graph_path)?;
    let dist = graph::cut_size_distribution(&graph, graph::DEFAULT_EXHAUSTIVE_CAP)?;
    let max = dist.iter().rposition(|&c| c > 0).unwrap_or(0);
    let mut human = String::from("  t  count\n");
    for (t, c) in dist.iter().enumerate() {
        let flag = if t == max { "  <- max" } else { "" };
        let _ = writeln!(human, "{t:>3}  {c}{flag}");
    }
    let body = CountJson {
        command: Command::Count,
        graph: (&graph).into(),
        counts: dist.into_iter().enumerate().collect(),
        max_cut_size: max,
    };
    Ok(CommandOutput {
        exit_code: EXIT_OK,
        json: serde_json::to_value(&body).expect("serializable"),
        human,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Candidate {
    pub t: usize,
    #[serde(rename = "R")]
    pub solutions: u64,
    pub iterations: Option<usize>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PerIteration {
    faithful: ResourceStats,
    compact: ResourceStats,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct StatsJson<'a> {
    command: Command,
    graph: GraphSummary<'a>,
    faithful_qubits: Option<usize>,
    compact_qubits: Option<usize>,
    per_iteration: Option<PerIteration>,
    /// Empty when the graph is too large to count exhaustively.
    candidates: Vec<Candidate>,
}

pub fn cmd_stats(config: &CliConfig) -> Result<CommandOutput, CliError> {
    let graph = load_graph(&config.graph_path)?;
    Ok(stats_for(&graph))
}

/// The `stats` report for an in-memory graph.
pub fn stats_for(graph: &Graph) -> CommandOutput {
    let n = graph.vertex_count();
    let m = graph.edge_count();
    let per_iteration = (m > 0).then(|| {
        let stats = |mode| {
            let l = QubitLayout::new(mode, n, m);
            synth::synth_grover_iteration(graph, &l, m)
                .expect("layout built for this graph")
                .resource_stats()
        };
        PerIteration {
            faithful: stats(LayoutMode::Faithful),
            compact: stats(LayoutMode::Compact),
        }
    });
    let candidates: Vec<Candidate> =
        graph::cut_size_distribution(graph, graph::DEFAULT_EXHAUSTIVE_CAP)
            .map(|dist| {
                dist.into_iter()
                    .enumerate()
                    .rev()
                    .map(|(t, r)| Candidate {
                        t,
                        solutions: r,
                        iterations: synth::grover_iteration_count(n, r).ok(),
                    })
                    .collect()
            })
            .unwrap_or_default();
    let body = StatsJson {
        command: Command::Stats,
        graph: graph.into(),
        faithful_qubits: (m > 0).then(|| layout::faithful_qubits(n, m)),
        compact_qubits: (m > 0).then(|| layout::compact_qubits(n, m)),
        per_iteration,
        candidates,
    };

    let mut human = format!("graph: n = {n}, m = {m}\n");
    match (
        &body.faithful_qubits,
        &body.compact_qubits,
        &body.per_iteration,
    ) {
        (Some(f), Some(c), Some(per)) => {
            let _ = writeln!(
                human,
                "qubits: faithful {f}, compact {c}\ngates per Grover iteration: faithful {}, compact {}",
                per.faithful.total_gates, per.compact.total_gates
            );
        }
        _ => human.push_str("no edges: no circuit is needed\n"),
    }
    if !body.candidates.is_empty() {
        human.push_str("  t  R       iterations\n");
        for c in &body.candidates {
            let it = c
                .iterations
                .map_or_else(|| "-".to_string(), |k| k.to_string());
            let _ = writeln!(human, "{:>3}  {:<7} {it}", c.t, c.solutions);
        }
    }
    CommandOutput {
        exit_code: EXIT_OK,
        json: serde_json::to_value(&body).expect("serializable"),
        human,
    }
}

pub fn execute(config: &CliConfig) -> Result<CommandOutput, CliError> {
    match config.command {
        Command::Solve => cmd_solve(config),
        Command::Verify => cmd_verify(config),
        Command::Count => cmd_count(config),
        Command::Stats => cmd_stats(config),
    }
}

/// Parses arguments, runs the command, emits output and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    let config = match cli.command {
        CommandArgs::Solve(a) => CliConfig::from_args(Command::Solve, a),
        CommandArgs::Verify(a) => CliConfig::from_args(Command::Verify, a),
        CommandArgs::Count(a) => CliConfig::from_args(Command::Count, a),
        CommandArgs::Stats(a) => CliConfig::from_args(Command::Stats, a),
    };
    match execute(&config) {
        Ok(out) => {
            match &config.output_path {
                Some(path) => {
                    let text = serde_json::to_string_pretty(&out.json).expect("serializable");
                    if let Err(e) = fs::write(path, text + "\n") {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return EXIT_PARSE;
                    }
                }
                None => print!("{}", out.human),
            }
            out.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
