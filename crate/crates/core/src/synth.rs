//! Circuit synthesis for the Grover max-cut search.
//!
//! The counting block evaluates, for every edge, whether it crosses the cut
//! (`s1`) or not (`s2`), and feeds those bits into a one-hot counter: row
//! `z_{i,·}` holds a single 1 at the number of cut edges among the first
//! `i` edges. The oracle kicks a phase off `z_{m,t}`, the block is
//! uncomputed, and a diffusion step reflects the `x` register about the
//! uniform superposition.

use std::f64::consts::FRAC_PI_4;

use serde::Serialize;
use thiserror::Error;

use crate::circuit::{Circuit, CircuitError, Gate};
use crate::graph::Graph;
use crate::layout::{LayoutError, LayoutMode, QubitLayout};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error("graph has no edges; nothing to synthesize")]
    NoEdges,
    #[error("target cut size {t} out of range 0..={m}")]
    TargetOutOfRange { t: usize, m: usize },
    #[error("level {level} out of range 0..={row}")]
    LevelOutOfRange { row: usize, level: usize },
    #[error("layout built for n = {layout_n}, m = {layout_m} but graph has n = {n}, m = {m}")]
    LayoutMismatch {
        layout_n: usize,
        layout_m: usize,
        n: usize,
        m: usize,
    },
    #[error("iteration count is undefined for an empty solution set")]
    NoSolutions,
}

/// How many Grover iterations to run for a given solution count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum IterationRule {
    /// `floor((π/4)·sqrt(2^n / R))`.
    #[default]
    FloorSqrtRatio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SynthesisConfig {
    pub mode: LayoutMode,
    pub iteration_rule: IterationRule,
    /// First target size tried; `None` means `m`.
    pub t_start: Option<usize>,
}

impl SynthesisConfig {
    pub fn layout(&self, graph: &Graph) -> Result<QubitLayout, SynthError> {
        if graph.edge_count() == 0 {
            return Err(SynthError::NoEdges);
        }
        Ok(QubitLayout::new(
            self.mode,
            graph.vertex_count(),
            graph.edge_count(),
        ))
    }

    pub fn start(&self, m: usize) -> Result<usize, SynthError> {
        match self.t_start {
            Some(t) if t > m => Err(SynthError::TargetOutOfRange { t, m }),
            Some(t) => Ok(t),
            None => Ok(m),
        }
    }
}

/// Iteration plan for one target size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroverPlan {
    pub t: usize,
    #[serde(rename = "R")]
    pub solutions: u64,
    pub iterations: usize,
}

impl GroverPlan {
    pub fn new(
        n: usize,
        t: usize,
        solutions: u64,
        rule: IterationRule,
    ) -> Result<Self, SynthError> {
        let iterations = match rule {
            IterationRule::FloorSqrtRatio => grover_iteration_count(n, solutions)?,
        };
        Ok(Self {
            t,
            solutions,
            iterations,
        })
    }
}

/// `floor((π/4)·sqrt(2^n / R))`.
pub fn grover_iteration_count(n: usize, solutions: u64) -> Result<usize, SynthError> {
    if solutions == 0 {
        return Err(SynthError::NoSolutions);
    }
    let ratio = (n as f64).exp2() / solutions as f64;
    Ok((FRAC_PI_4 * ratio.sqrt()).floor() as usize)
}

fn x_pair(layout: &QubitLayout, edge: (usize, usize)) -> Result<(usize, usize), SynthError> {
    Ok((layout.x(edge.0)?, layout.x(edge.1)?))
}

fn push_all(c: &mut Circuit, gates: impl IntoIterator<Item = Gate>) -> Result<(), SynthError> {
    for g in gates {
        c.push(g)?;
    }
    Ok(())
}

/// `target ^= a ∧ b`, with each control optionally negated by X conjugation.
fn and_into(
    c: &mut Circuit,
    (a, negate_a): (usize, bool),
    (b, negate_b): (usize, bool),
    target: usize,
) -> Result<(), SynthError> {
    let flips: Vec<Gate> = [(a, negate_a), (b, negate_b)]
        .into_iter()
        .filter(|&(_, neg)| neg)
        .map(|(q, _)| Gate::x(q))
        .collect();
    push_all(c, flips.iter().cloned())?;
    c.push(Gate::toffoli(a, b, target)?)?;
    push_all(c, flips)
}

/// `target ^= ¬(¬a ∧ ¬b)`; with `target` starting at 1 this leaves `a ∨ b`.
fn or_into_set(c: &mut Circuit, a: usize, b: usize, target: usize) -> Result<(), SynthError> {
    and_into(c, (a, true), (b, true), target)
}

/// Crossing predicate for one edge: `s_{app,1} = (x_k ∧ ¬x_p) ∨ (¬x_k ∧ x_p)`.
///
/// Expects `r_{app,1}`, `r_{app,2}` clear and `s_{app,1}` set.
pub fn synth_eiiac(
    layout: &QubitLayout,
    edge: (usize, usize),
    app: usize,
) -> Result<Circuit, SynthError> {
    let (xk, xp) = x_pair(layout, edge)?;
    let r = layout.r(app)?;
    let s = layout.s(app)?;
    let mut c = Circuit::new(layout.total_qubits());
    and_into(&mut c, (xk, false), (xp, true), r[0])?;
    and_into(&mut c, (xk, true), (xp, false), r[1])?;
    or_into_set(&mut c, r[0], r[1], s[0])?;
    Ok(c)
}

/// Non-crossing predicate: `s_{app,2} = (¬x_k ∧ ¬x_p) ∨ (x_k ∧ x_p)`.
///
/// Expects `r_{app,3}`, `r_{app,4}` clear and `s_{app,2}` set.
pub fn synth_einiac(
    layout: &QubitLayout,
    edge: (usize, usize),
    app: usize,
) -> Result<Circuit, SynthError> {
    let (xk, xp) = x_pair(layout, edge)?;
    let r = layout.r(app)?;
    let s = layout.s(app)?;
    let mut c = Circuit::new(layout.total_qubits());
    and_into(&mut c, (xk, true), (xp, true), r[2])?;
    and_into(&mut c, (xk, false), (xp, false), r[3])?;
    or_into_set(&mut c, r[2], r[3], s[1])?;
    Ok(c)
}

/// Both predicates for `edge`, a caller-supplied update reading `s1`/`s2`,
/// and in compact mode the predicate uncompute.
fn with_predicates(
    layout: &QubitLayout,
    edge: (usize, usize),
    app: usize,
    update: impl FnOnce(&mut Circuit, [usize; 2]) -> Result<(), SynthError>,
) -> Result<Circuit, SynthError> {
    let crossing = synth_eiiac(layout, edge, app)?;
    let staying = synth_einiac(layout, edge, app)?;
    let mut c = Circuit::new(layout.total_qubits());
    c.extend_from(&crossing)?;
    c.extend_from(&staying)?;
    update(&mut c, layout.s(app)?)?;
    if layout.mode() == LayoutMode::Compact {
        c.extend_from(&staying.inverse())?;
        c.extend_from(&crossing.inverse())?;
    }
    Ok(c)
}

/// First-edge counter initialisation: `z_{1,1} = s1`, `z_{1,0} = s2`.
pub fn synth_cfe(layout: &QubitLayout, first_edge: (usize, usize)) -> Result<Circuit, SynthError> {
    let z11 = layout.z(1, 1)?;
    let z10 = layout.z(1, 0)?;
    with_predicates(layout, first_edge, 1, |c, [s1, s2]| {
        c.push(Gate::cnot(s1, z11)?)?;
        c.push(Gate::cnot(s2, z10)?)?;
        Ok(())
    })
}

/// Counter step for edge number `row + 1` at level `level`:
/// `z_{row+1,level+1} ^= s1 ∧ z_{row,level}` and
/// `z_{row+1,level} ^= s2 ∧ z_{row,level}`.
///
/// Targets may already hold a contribution from another level; XOR acts as
/// OR only while row `row` is one-hot.
pub fn synth_cse(
    layout: &QubitLayout,
    edge: (usize, usize),
    row: usize,
    level: usize,
    app: usize,
) -> Result<Circuit, SynthError> {
    if level > row {
        return Err(SynthError::LevelOutOfRange { row, level });
    }
    let source = layout.z(row, level)?;
    let up = layout.z(row + 1, level + 1)?;
    let same = layout.z(row + 1, level)?;
    with_predicates(layout, edge, app, |c, [s1, s2]| {
        c.push(Gate::toffoli(s1, source, up)?)?;
        c.push(Gate::toffoli(s2, source, same)?)?;
        Ok(())
    })
}

fn check_layout(graph: &Graph, layout: &QubitLayout) -> Result<(), SynthError> {
    if graph.edge_count() == 0 {
        return Err(SynthError::NoEdges);
    }
    if layout.vertex_count() != graph.vertex_count() || layout.edge_count() != graph.edge_count() {
        return Err(SynthError::LayoutMismatch {
            layout_n: layout.vertex_count(),
            layout_m: layout.edge_count(),
            n: graph.vertex_count(),
            m: graph.edge_count(),
        });
    }
    Ok(())
}

/// The full counting cascade: the first-edge block, then for edges
/// `2..=m` one counter step per level of the previous row, highest level
/// first. Leaves `z_{m,j} = 1` exactly when the cut has `j` edges.
pub fn synth_counting_block(graph: &Graph, layout: &QubitLayout) -> Result<Circuit, SynthError> {
    check_layout(graph, layout)?;
    let edges = graph.edges();
    let mut c = synth_cfe(layout, edges[0])?;
    let mut app = 1;
    for (row, &edge) in edges.iter().enumerate().skip(1) {
        for level in (0..=row).rev() {
            app += 1;
            c.extend_from(&synth_cse(layout, edge, row, level, app)?)?;
        }
    }
    debug_assert_eq!(app, crate::layout::application_count(graph.edge_count()));
    Ok(c)
}

/// Phase kickback onto `aux` (prepared in |−⟩) from `z_{m,t}`.
pub fn synth_oracle(layout: &QubitLayout, t: usize) -> Result<Circuit, SynthError> {
    let m = layout.edge_count();
    if t > m {
        return Err(SynthError::TargetOutOfRange { t, m });
    }
    let mut c = Circuit::new(layout.total_qubits());
    c.push(Gate::cnot(layout.z(m, t)?, layout.aux())?)?;
    Ok(c)
}

/// Reflection about the uniform superposition on the `x` register:
/// H, X on every `x`, a multi-controlled Z across them, then X, H again.
pub fn synth_diffusion(layout: &QubitLayout) -> Result<Circuit, SynthError> {
    let xs = layout.x_qubits();
    let mut c = Circuit::new(layout.total_qubits());
    push_all(&mut c, xs.iter().map(|&q| Gate::h(q)))?;
    push_all(&mut c, xs.iter().map(|&q| Gate::x(q)))?;
    c.push(Gate::mcz(xs[1..].to_vec(), xs[0])?)?;
    push_all(&mut c, xs.iter().map(|&q| Gate::x(q)))?;
    push_all(&mut c, xs.iter().map(|&q| Gate::h(q)))?;
    Ok(c)
}

/// Hadamards on `aux` and every `x`, taking ψ₀ to ψ₁.
pub fn synth_hadamard_layer(layout: &QubitLayout) -> Result<Circuit, SynthError> {
    let mut c = Circuit::new(layout.total_qubits());
    c.push(Gate::h(layout.aux()))?;
    push_all(&mut c, layout.x_qubits().iter().map(|&q| Gate::h(q)))?;
    Ok(c)
}

/// Counting block, oracle, uncompute, diffusion.
pub fn synth_grover_iteration(
    graph: &Graph,
    layout: &QubitLayout,
    t: usize,
) -> Result<Circuit, SynthError> {
    let block = synth_counting_block(graph, layout)?;
    let mut c = block.clone();
    c.extend_from(&synth_oracle(layout, t)?)?;
    c.extend_from(&block.inverse())?;
    c.extend_from(&synth_diffusion(layout)?)?;
    Ok(c)
}

/// Hadamard layer followed by `iterations` Grover iterations; applied to ψ₀.
pub fn synth_full_circuit(
    graph: &Graph,
    layout: &QubitLayout,
    t: usize,
    iterations: usize,
) -> Result<Circuit, SynthError> {
    let mut c = synth_hadamard_layer(layout)?;
    let step = synth_grover_iteration(graph, layout, t)?;
    for _ in 0..iterations {
        c.extend_from(&step)?;
    }
    Ok(c)
}
