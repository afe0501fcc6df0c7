//! Descending-threshold Grover search for a maximum cut.
//!
//! For each target size `t` from the start value down to 0 the solver asks
//! a [`SolutionCounter`] for the number `R` of assignments cutting exactly
//! `t` edges, runs `floor((π/4)·sqrt(2^n/R))` Grover iterations with the
//! oracle keyed on `z_{m,t}`, and accepts `t` once the probability of
//! measuring a size-`t` cut reaches 1/2. If more than half of all
//! assignments are solutions the planned single iteration overshoots, so the
//! target is retried with zero iterations unless `strict_paper` is set. The
//! witness is always re-checked classically before it is returned.

use serde::Serialize;
use thiserror::Error;

use crate::circuit::{Circuit, ResourceStats};
use crate::graph::{self, CutAssignment, CutReport, Graph, GraphError};
use crate::layout::QubitLayout;
use crate::sim::{
    self, MeasurementHistogram, QuantumState, SimError, SparseState, StateVector, XMarginal,
};
use crate::synth::{self, GroverPlan, SynthError, SynthesisConfig};

/// Slack on the 1/2 acceptance threshold. Some plans land on exactly 1/2
/// (e.g. `R = 2^(n-1)` after one iteration), which rounding can put a few
/// ulps below.
pub const ACCEPT_TOLERANCE: f64 = 1e-9;

/// Probability slack when grouping outcomes tied for the maximum.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0} is not available")]
    Unsupported(&'static str),
}

/// Source of `R`, the number of assignments with cut size exactly `t`.
pub trait SolutionCounter {
    fn count(&self, graph: &Graph, t: usize) -> Result<u64, CountError>;
}

/// Exhaustive classical count.
#[derive(Debug, Clone, Copy)]
pub struct BruteForceCounter {
    pub cap: usize,
}

impl Default for BruteForceCounter {
    fn default() -> Self {
        Self {
            cap: graph::DEFAULT_EXHAUSTIVE_CAP,
        }
    }
}

impl SolutionCounter for BruteForceCounter {
    fn count(&self, graph: &Graph, t: usize) -> Result<u64, CountError> {
        Ok(graph::count_cuts_of_size_capped(graph, t, self.cap)?)
    }
}

/// Placeholder for a quantum-counting estimate of `R`; always errors.
#[derive(Debug, Clone, Copy, Default)]
pub struct QuantumCountingStub;

impl SolutionCounter for QuantumCountingStub {
    fn count(&self, _graph: &Graph, _t: usize) -> Result<u64, CountError> {
        Err(CountError::Unsupported("quantum counting"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Full `2^Q` statevector, subject to the memory cap.
    #[default]
    Dense,
    /// Nonzero amplitudes only; no qubit cap.
    Sparse,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub synthesis: SynthesisConfig,
    pub backend: Backend,
    pub memory_cap_qubits: usize,
    /// 0 selects exact probabilities; otherwise acceptance uses this many
    /// sampled shots.
    pub shots: usize,
    pub seed: u64,
    /// Simulate targets with `R = 0` instead of skipping them, and never
    /// retry an overshooting target with zero iterations.
    pub strict_paper: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            synthesis: SynthesisConfig::default(),
            backend: Backend::Dense,
            memory_cap_qubits: sim::DEFAULT_MEMORY_CAP_QUBITS,
            shots: 0,
            seed: 1,
            strict_paper: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Synth(#[from] SynthError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(
        "verification failed at t = {t}: outcome {outcome} has cut size {size} \
         (circuit synthesis defect)"
    )]
    Verification {
        t: usize,
        outcome: String,
        size: usize,
    },
    #[error("no target size reached the acceptance threshold")]
    Exhausted,
}

/// Outcome of one target size.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunRecord {
    pub t: usize,
    #[serde(rename = "R")]
    pub solutions: u64,
    pub iterations: usize,
    /// Exact probability of measuring a cut of size `t`.
    pub success_probability: f64,
    pub accepted: bool,
    pub simulated: bool,
    /// Zero-iteration rerun after the planned count overshot (`R > 2^n/2`).
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub retry: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shot_fraction: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FinalRecord {
    pub max_cut_size: usize,
    pub witness: CutAssignment,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunTrace {
    pub records: Vec<RunRecord>,
    #[serde(rename = "final")]
    pub final_record: FinalRecord,
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub report: CutReport,
    pub trace: RunTrace,
    /// Marginal of the `x` register at the accepted target.
    pub marginal: Option<XMarginal>,
    pub histogram: Option<MeasurementHistogram>,
    /// Gate counts of one Grover iteration at the accepted target.
    pub iteration_stats: Option<ResourceStats>,
}

impl Solution {
    pub fn accepted_record(&self) -> Option<&RunRecord> {
        self.trace.records.iter().find(|r| r.accepted)
    }
}

pub fn solve_maxcut(graph: &Graph, config: &SolverConfig) -> Result<Solution, SolveError> {
    solve_maxcut_with(graph, config, &BruteForceCounter::default())
}

pub fn solve_maxcut_with(
    graph: &Graph,
    config: &SolverConfig,
    counter: &dyn SolutionCounter,
) -> Result<Solution, SolveError> {
    let n = graph.vertex_count();
    let m = graph.edge_count();
    if m == 0 {
        return Ok(trivial_solution(graph, counter)?);
    }
    let layout = config.synthesis.layout(graph)?;
    if config.backend == Backend::Dense && layout.total_qubits() > config.memory_cap_qubits {
        return Err(SimError::MemoryCap {
            required_qubits: layout.total_qubits(),
            cap_qubits: config.memory_cap_qubits,
            required_bytes: sim::dense_bytes(layout.total_qubits()),
        }
        .into());
    }
    let start = config.synthesis.start(m)?;
    let block = synth::synth_counting_block(graph, &layout)?;
    debug_assert_one_hot(graph, &layout, &block);

    let mut records = Vec::new();
    for t in (0..=start).rev() {
        let solutions = counter.count(graph, t)?;
        if solutions == 0 && !config.strict_paper {
            records.push(RunRecord {
                t,
                solutions,
                iterations: 0,
                success_probability: 0.0,
                accepted: false,
                simulated: false,
                retry: false,
                shot_fraction: None,
            });
            continue;
        }
        // With nothing to find, run as many iterations as a single solution would need.
        let plan = GroverPlan::new(n, t, solutions.max(1), config.synthesis.iteration_rule)?;
        let iteration = iteration_circuit(&block, &layout, t)?;
        let is_target = |x: u64| graph.cut_size_bits(x) == t;
        let mut attempts = vec![(plan.iterations, false)];
        // Above R = N/2 one iteration overshoots while the bare uniform state
        // already clears the threshold.
        if !config.strict_paper && plan.iterations > 0 && solutions > (1u64 << n) / 2 {
            attempts.push((0, true));
        }
        let mut outcome = None;
        for (iterations, retry) in attempts {
            let marginal = match config.backend {
                Backend::Dense => {
                    let mut sv = StateVector::init_state(&layout, config.memory_cap_qubits)?;
                    run_plan(&mut sv, &layout, &iteration, iterations)?
                }
                Backend::Sparse => {
                    let mut sv = SparseState::init_state(&layout);
                    run_plan(&mut sv, &layout, &iteration, iterations)?
                }
            };
            let success_probability = marginal.marked_probability(is_target);
            let (accepted, shot_fraction, histogram) = if config.shots > 0 {
                let hist = marginal.sample(config.shots, config.seed)?;
                let fraction = hist.count_where(is_target) as f64 / config.shots as f64;
                (fraction >= 0.5, Some(fraction), Some(hist))
            } else {
                (success_probability >= 0.5 - ACCEPT_TOLERANCE, None, None)
            };
            records.push(RunRecord {
                t,
                solutions,
                iterations,
                success_probability,
                accepted,
                simulated: true,
                retry,
                shot_fraction,
            });
            if accepted {
                outcome = Some((marginal, histogram));
                break;
            }
        }
        let Some((marginal, histogram)) = outcome else {
            continue;
        };

        let witness = match &histogram {
            Some(h) => h
                .ranked()
                .into_iter()
                .map(|(v, _)| v)
                .find(|&v| is_target(v))
                .ok_or(SolveError::Exhausted)?,
            None => pick_exact_witness(graph, &marginal, t)?,
        };
        let assignment = CutAssignment::from_value(n, witness);
        let size = graph::cut_size(graph, &assignment).expect("assignment sized to graph");
        if size != t {
            return Err(SolveError::Verification {
                t,
                outcome: assignment.to_string(),
                size,
            });
        }
        return Ok(Solution {
            report: CutReport {
                size,
                assignment: assignment.clone(),
                optimal_count: solutions,
            },
            trace: RunTrace {
                records,
                final_record: FinalRecord {
                    max_cut_size: size,
                    witness: assignment,
                    verified: true,
                },
            },
            marginal: Some(marginal),
            histogram,
            iteration_stats: Some(iteration.resource_stats()),
        });
    }
    Err(SolveError::Exhausted)
}

/// Highest-probability outcome, lowest value among ties, that has cut size
/// `t`. Fails if the most likely outcomes all have a different size.
fn pick_exact_witness(graph: &Graph, marginal: &XMarginal, t: usize) -> Result<u64, SolveError> {
    let top = marginal.top_values(TIE_TOLERANCE);
    top.iter()
        .copied()
        .find(|&v| graph.cut_size_bits(v) == t)
        .ok_or_else(|| SolveError::Verification {
            t,
            outcome: graph::display_bits(graph.vertex_count(), top[0]),
            size: graph.cut_size_bits(top[0]),
        })
}

fn iteration_circuit(
    block: &Circuit,
    layout: &QubitLayout,
    t: usize,
) -> Result<Circuit, SynthError> {
    let mut c = block.clone();
    c.extend_from(&synth::synth_oracle(layout, t)?)?;
    c.extend_from(&block.inverse())?;
    c.extend_from(&synth::synth_diffusion(layout)?)?;
    Ok(c)
}

/// ψ₀ → ψ₁, then `iterations` applications of `step`; returns the `x` marginal.
pub fn run_plan<S: QuantumState>(
    state: &mut S,
    layout: &QubitLayout,
    step: &Circuit,
    iterations: usize,
) -> Result<XMarginal, SimError> {
    sim::apply_hadamard_layer(state, layout);
    for _ in 0..iterations {
        state.apply_circuit(step)?;
    }
    Ok(state.x_register_marginal(layout))
}

fn trivial_solution(graph: &Graph, counter: &dyn SolutionCounter) -> Result<Solution, CountError> {
    let n = graph.vertex_count();
    let assignment = CutAssignment::from_value(n, 0);
    let optimal_count = counter.count(graph, 0)?;
    Ok(Solution {
        report: CutReport {
            size: 0,
            assignment: assignment.clone(),
            optimal_count,
        },
        trace: RunTrace {
            records: Vec::new(),
            final_record: FinalRecord {
                max_cut_size: 0,
                witness: assignment,
                verified: true,
            },
        },
        marginal: None,
        histogram: None,
        iteration_stats: None,
    })
}

/// The Toffoli updates OR into `z` targets by XOR, which is only correct
/// while every row is one-hot.
fn debug_assert_one_hot(graph: &Graph, layout: &QubitLayout, block: &Circuit) {
    if cfg!(debug_assertions) && graph.vertex_count() <= 10 {
        let check = crate::verify::check_counting_block(graph, layout, block)
            .expect("block matches layout width");
        debug_assert!(
            check.passed(),
            "counter rows not one-hot: {:?}",
            check.failures
        );
    }
}
