//! Exact maximum cut by Grover search.
//!
//! The crate synthesizes reversible circuits that count, for every cut
//! assignment in superposition, how many edges cross the cut, keeps that
//! count in a one-hot register, and amplifies the assignments whose count
//! equals a target. Target sizes are tried from `m` downwards until one is
//! measured with probability at least 1/2; the resulting witness is checked
//! classically.
//!
//! * [`graph`]: graphs, cut predicates, exhaustive counting.
//! * [`circuit`] and [`layout`]: gate lists and register allocation.
//! * [`synth`]: predicate, counter, oracle and diffusion circuits.
//! * [`sim`]: dense and sparse statevector backends, shot sampling.
//! * [`solver`]: the descending-threshold search.
//! * [`verify`]: exhaustive basis-state checks of the counting block.
//! * [`cli`]: the `maxcut` command-line driver.
//!
//! ```
//! use maxcut_grover::graph::parse_graph;
//! use maxcut_grover::solver::{solve_maxcut, SolverConfig};
//!
//! let g = parse_graph("3 2\n1 2\n2 3").unwrap();
//! let solution = solve_maxcut(&g, &SolverConfig::default()).unwrap();
//! assert_eq!(solution.report.size, 2);
//! assert_eq!(solution.report.assignment.to_string(), "010");
//! ```

pub mod circuit;
pub mod cli;
pub mod graph;
pub mod layout;
pub mod sim;
pub mod solver;
pub mod synth;
pub mod verify;

pub use circuit::{Circuit, Gate, GateKind, ResourceStats};
pub use graph::{CutAssignment, CutReport, Graph};
pub use layout::{LayoutMode, QubitLayout};
pub use sim::{MeasurementHistogram, QuantumState, SparseState, StateVector};
pub use solver::{solve_maxcut, Backend, Solution, SolverConfig};
