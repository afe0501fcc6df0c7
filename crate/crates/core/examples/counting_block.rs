//! Run the counting block on every basis state of a 4-vertex path and show
//! the one-hot counter rows it leaves behind.

use maxcut_grover::graph::parse_graph;
use maxcut_grover::layout::QubitLayout;
use maxcut_grover::synth::synth_counting_block;
use maxcut_grover::verify::counter_rows;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_graph("4 3\n1 2\n2 3\n3 4")?;
    let l = QubitLayout::compact(g.vertex_count(), g.edge_count());
    let block = synth_counting_block(&g, &l)?;
    println!("{} qubits, {} gates", l.total_qubits(), block.len());
    for x in 0..16 {
        let rows = counter_rows(&l, &block, x)?;
        let ones: Vec<String> = (1..=g.edge_count())
            .map(|i| rows.one_hot(i).map_or("?".into(), |j| j.to_string()))
            .collect();
        println!(
            "x = {:04b}  prefix cut sizes {}  (direct {})",
            x,
            ones.join(" "),
            g.cut_size_bits(x)
        );
    }
    Ok(())
}
