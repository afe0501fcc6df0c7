//! Plug a different solution counter into the search. This one memoizes a
//! single exhaustive pass over the assignments.

use std::cell::OnceCell;

use maxcut_grover::graph::{cut_size_distribution, parse_graph, Graph};
use maxcut_grover::solver::{
    solve_maxcut_with, Backend, CountError, SolutionCounter, SolverConfig,
};

#[derive(Default)]
struct TableCounter {
    table: OnceCell<Vec<u64>>,
}

impl SolutionCounter for TableCounter {
    fn count(&self, graph: &Graph, t: usize) -> Result<u64, CountError> {
        if self.table.get().is_none() {
            let dist = cut_size_distribution(graph, 24)?;
            println!("  (tabulated {} sizes once)", dist.len());
            let _ = self.table.set(dist);
        }
        Ok(self.table.get().unwrap().get(t).copied().unwrap_or(0))
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_graph("4 5\n1 2\n2 3\n3 4\n4 1\n1 3")?;
    let cfg = SolverConfig {
        backend: Backend::Sparse,
        ..Default::default()
    };
    let s = solve_maxcut_with(&g, &cfg, &TableCounter::default())?;
    println!("max cut {} with {}", s.report.size, s.report.assignment);
    Ok(())
}
