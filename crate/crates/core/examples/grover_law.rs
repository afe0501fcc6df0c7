//! Marked probability against the ideal sin²((2k+1)θ) curve.

use maxcut_grover::graph::{count_cuts_of_size, parse_graph};
use maxcut_grover::layout::QubitLayout;
use maxcut_grover::sim::{QuantumState, SparseState};
use maxcut_grover::synth::synth_full_circuit;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_graph("5 4\n1 2\n2 3\n3 4\n4 5")?;
    let n = g.vertex_count();
    let l = QubitLayout::compact(n, g.edge_count());
    for t in [4, 3] {
        let r = count_cuts_of_size(&g, t)?;
        let theta = (r as f64 / (1u64 << n) as f64).sqrt().asin();
        println!("t = {t}, R = {r}");
        for k in 0..5 {
            let mut s = SparseState::init_state(&l);
            s.apply_circuit(&synth_full_circuit(&g, &l, t, k)?)?;
            let p = s
                .x_register_marginal(&l)
                .marked_probability(|x| g.cut_size_bits(x) == t);
            let ideal = ((2 * k + 1) as f64 * theta).sin().powi(2);
            println!("  k = {k}  simulated {p:.9}  ideal {ideal:.9}");
        }
    }
    Ok(())
}
