//! Sampled measurement of the x register with a fixed seed.

use maxcut_grover::graph::parse_graph;
use maxcut_grover::solver::{solve_maxcut, SolverConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_graph("4 3\n1 2\n2 3\n3 4")?;
    let cfg = SolverConfig {
        shots: 1024,
        seed: 42,
        ..Default::default()
    };
    let s = solve_maxcut(&g, &cfg)?;
    let h = s.histogram.as_ref().expect("shots requested");
    print!("{}", h.to_ascii(40));
    let rec = s.accepted_record().expect("solved");
    println!(
        "t = {}: {:.3} of shots verify (exact P = {:.6})",
        rec.t,
        rec.shot_fraction.unwrap_or_default(),
        rec.success_probability
    );
    println!("witness {}", s.report.assignment);
    Ok(())
}
