//! Solve max-cut on the 3-vertex path and print the search trace.

use maxcut_grover::graph::parse_graph;
use maxcut_grover::solver::{solve_maxcut, SolverConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_graph("3 2\n1 2\n2 3")?;
    let s = solve_maxcut(&g, &SolverConfig::default())?;
    for r in &s.trace.records {
        println!(
            "t = {}  R = {}  iterations = {}  P = {:.6}  accepted = {}",
            r.t, r.solutions, r.iterations, r.success_probability, r.accepted
        );
    }
    let a = &s.report.assignment;
    println!("max cut {} with x = {a}", s.report.size);
    println!("V1 = {:?}, V2 = {:?}", a.v1(), a.v2());
    if let Some(m) = &s.marginal {
        for (bits, p) in m.to_map() {
            if p > 1e-9 {
                println!("  P({bits}) = {p:.6}");
            }
        }
    }
    Ok(())
}
