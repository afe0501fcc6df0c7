//! Exhaustive basis-state checks of the counting block.
//!
//! The block contains no Hadamards, so each classical input maps to a
//! single classical output; it is evaluated with the sparse backend one
//! basis state at a time, which keeps wide faithful layouts cheap.

use serde::Serialize;

use crate::circuit::Circuit;
use crate::graph::{display_bits, Graph};
use crate::layout::QubitLayout;
use crate::sim::{BasisKey, QuantumState, SimError, SparseState};

/// Largest vertex count swept by [`check_counting_block`] from the CLI.
pub const VERIFY_MAX_VERTICES: usize = 5;

/// Counter rows after running the block on one `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterRows {
    pub x: u64,
    /// `rows[i - 1][j]` is the value of `z_{i,j}`.
    pub rows: Vec<Vec<bool>>,
}

impl CounterRows {
    /// Position of the single set bit of row `i`, if the row is one-hot.
    pub fn one_hot(&self, row: usize) -> Option<usize> {
        let r = &self.rows[row - 1];
        let mut set = r.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j);
        match (set.next(), set.next()) {
            (Some(j), None) => Some(j),
            _ => None,
        }
    }
}

/// ψ₀ with the `x` register loaded with `x` (bit `d - 1` = vertex `d`).
pub fn initial_key(layout: &QubitLayout, x: u64) -> BasisKey {
    let mut key = BasisKey::from_set(layout.total_qubits(), layout.initially_set());
    for (d, &q) in layout.x_qubits().iter().enumerate() {
        key.set(q, (x >> d) & 1 == 1);
    }
    key
}

/// Runs `block` on the classical input `x` and reads back every counter row.
///
/// Panics if `block` contains a Hadamard (the output would not be a single
/// basis state).
pub fn counter_rows(
    layout: &QubitLayout,
    block: &Circuit,
    x: u64,
) -> Result<CounterRows, SimError> {
    let mut state = SparseState::basis(layout.total_qubits(), initial_key(layout, x));
    state.apply_circuit(block)?;
    let (key, _) = state
        .as_basis()
        .expect("H-free circuit maps a basis state to a basis state");
    let rows = (1..=layout.edge_count())
        .map(|i| {
            layout
                .z_row(i)
                .expect("row in range")
                .iter()
                .map(|&q| key.get(q))
                .collect()
        })
        .collect();
    Ok(CounterRows { x, rows })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CountingFailure {
    pub x: String,
    pub expected: usize,
    /// Final counter row as a bitstring, `z_{m,0}` first.
    pub row: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CountingCheck {
    pub checked: u64,
    pub failures: Vec<CountingFailure>,
}

impl CountingCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for every `x`, that `z_{m,·}` is one-hot at the cut size of `x`.
pub fn check_counting_block(
    graph: &Graph,
    layout: &QubitLayout,
    block: &Circuit,
) -> Result<CountingCheck, SimError> {
    let n = graph.vertex_count();
    let m = graph.edge_count();
    let mut failures = Vec::new();
    for x in 0..(1u64 << n) {
        let rows = counter_rows(layout, block, x)?;
        let expected = graph.cut_size_bits(x);
        if rows.one_hot(m) != Some(expected) {
            failures.push(CountingFailure {
                x: display_bits(n, x),
                expected,
                row: rows.rows[m - 1]
                    .iter()
                    .map(|&b| if b { '1' } else { '0' })
                    .collect(),
            });
        }
    }
    Ok(CountingCheck {
        checked: 1 << n,
        failures,
    })
}
