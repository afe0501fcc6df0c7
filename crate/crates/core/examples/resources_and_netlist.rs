//! Qubit and gate counts for both layouts, plus the start of a netlist.

use maxcut_grover::graph::parse_graph;
use maxcut_grover::layout::{LayoutMode, QubitLayout};
use maxcut_grover::synth::synth_grover_iteration;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_graph("4 4\n1 2\n2 3\n3 4\n4 1")?;
    for mode in [LayoutMode::Faithful, LayoutMode::Compact] {
        let l = QubitLayout::new(mode, g.vertex_count(), g.edge_count());
        let c = synth_grover_iteration(&g, &l, g.edge_count())?;
        let stats = c.resource_stats();
        println!(
            "{mode}: {} qubits, {} gates",
            stats.qubit_count, stats.total_gates
        );
        for (kind, count) in &stats.gate_count_by_kind {
            println!("  {kind:<8} {count}");
        }
        if mode == LayoutMode::Compact {
            for line in c.to_netlist().lines().take(8) {
                println!("  | {line}");
            }
        }
    }
    Ok(())
}
