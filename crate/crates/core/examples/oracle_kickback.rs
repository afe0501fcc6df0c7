//! The oracle flips the sign of exactly the size-t cuts. Seen classically,
//! block + oracle + inverse block flips the auxiliary qubit.

use maxcut_grover::graph::parse_graph;
use maxcut_grover::layout::QubitLayout;
use maxcut_grover::sim::{QuantumState, SparseState};
use maxcut_grover::synth::{synth_counting_block, synth_oracle};
use maxcut_grover::verify::initial_key;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_graph("3 2\n1 2\n2 3")?;
    let l = QubitLayout::compact(3, 2);
    let block = synth_counting_block(&g, &l)?;
    for t in 0..=2 {
        let mut c = block.clone();
        c.extend_from(&synth_oracle(&l, t)?)?;
        c.extend_from(&block.inverse())?;
        let mut marked = Vec::new();
        for x in 0..8 {
            let start = initial_key(&l, x);
            let mut s = SparseState::basis(l.total_qubits(), start.clone());
            s.apply_circuit(&c)?;
            let (end, _) = s.as_basis().expect("permutation circuit");
            if end.get(l.aux()) != start.get(l.aux()) {
                marked.push(format!("{x:03b}"));
            }
        }
        println!("t = {t}: marks {}", marked.join(", "));
    }
    Ok(())
}
