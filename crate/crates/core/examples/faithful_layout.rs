//! The faithful layout keeps one r/s set per predicate application. Its
//! 27 qubits exceed the default dense cap, so this runs on the sparse backend;
//! pass `dense` to use a 2 GiB statevector instead.

use maxcut_grover::graph::parse_graph;
use maxcut_grover::layout::LayoutMode;
use maxcut_grover::solver::{solve_maxcut, Backend, SolverConfig};
use maxcut_grover::synth::SynthesisConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dense = std::env::args().any(|a| a == "dense");
    let g = parse_graph("3 2\n1 2\n2 3")?;
    let mut marginals = Vec::new();
    for mode in [LayoutMode::Faithful, LayoutMode::Compact] {
        let cfg = SolverConfig {
            synthesis: SynthesisConfig {
                mode,
                ..Default::default()
            },
            backend: if dense {
                Backend::Dense
            } else {
                Backend::Sparse
            },
            memory_cap_qubits: 27,
            ..Default::default()
        };
        let s = solve_maxcut(&g, &cfg)?;
        let stats = s.iteration_stats.as_ref().expect("simulated");
        println!(
            "{mode}: {} qubits, {} gates per iteration, witness {}",
            stats.qubit_count, stats.total_gates, s.report.assignment
        );
        marginals.push(s.marginal.expect("simulated"));
    }
    let diff = marginals[0]
        .probabilities()
        .iter()
        .zip(marginals[1].probabilities())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    println!("largest marginal difference {diff:.2e}");
    Ok(())
}
