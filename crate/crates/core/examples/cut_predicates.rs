//! Edge predicates, cut sizes and the full size distribution of a triangle.

use maxcut_grover::graph::{
    brute_force_max_cut, cut_size, cut_size_distribution, edge_in_cut, edge_not_in_cut,
    parse_graph, CutAssignment, DEFAULT_EXHAUSTIVE_CAP,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("xk xp  in-cut  not-in-cut");
    for (xk, xp) in [(false, false), (false, true), (true, false), (true, true)] {
        println!(
            " {}  {}    {}       {}",
            u8::from(xk),
            u8::from(xp),
            u8::from(edge_in_cut(xk, xp)),
            u8::from(edge_not_in_cut(xk, xp))
        );
    }

    let g = parse_graph("3 3\n1 2\n2 3\n1 3")?;
    for x in 0..8 {
        let a = CutAssignment::from_value(3, x);
        println!("{a}  size {}", cut_size(&g, &a)?);
    }
    println!(
        "distribution {:?}",
        cut_size_distribution(&g, DEFAULT_EXHAUSTIVE_CAP)?
    );
    let best = brute_force_max_cut(&g)?;
    println!(
        "max cut {} ({} optimal assignments), e.g. {}",
        best.size, best.optimal_count, best.assignment
    );
    Ok(())
}
