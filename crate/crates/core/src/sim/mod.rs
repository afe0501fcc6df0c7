//! Statevector execution.
//!
//! Two backends implement [`QuantumState`]:
//!
//! * [`StateVector`] stores all `2^Q` amplitudes densely and is bounded by
//!   a qubit cap (default 26, i.e. 1 GiB of amplitudes).
//! * [`SparseState`] stores only nonzero amplitudes keyed by basis string.
//!   The max-cut circuits only ever superpose the `x` register and `aux`,
//!   every other qubit being a classical function of them, so the support
//!   stays at most `2^(n+1)` regardless of how many ancillas the layout
//!   allocates.
//!
//! Qubit `q` is bit `q` of the basis index. Strings shown to users are in
//! `x_n … x_1` order.
//!
//! Shot sampling draws from the `x`-register marginal with a ChaCha8 stream
//! (`rand_chacha::ChaCha8Rng::seed_from_u64`), which is reproducible across
//! platforms for a given seed.

mod dense;
mod sparse;

use std::collections::BTreeMap;

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::circuit::{Circuit, Gate};
use crate::graph::display_bits;
use crate::layout::QubitLayout;

pub use dense::StateVector;
pub use sparse::{BasisKey, SparseState};

/// Default largest dense register, in qubits.
pub const DEFAULT_MEMORY_CAP_QUBITS: usize = 26;

/// Bytes per complex amplitude.
pub const AMPLITUDE_BYTES: u128 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error(
        "state needs {required_qubits} qubits ({required_bytes} bytes) but the memory cap is \
         {cap_qubits}; rerun with a memory cap of at least {required_qubits}"
    )]
    MemoryCap {
        required_qubits: usize,
        cap_qubits: usize,
        required_bytes: u128,
    },
    #[error("circuit acts on {circuit} qubits but the state has {state}")]
    QubitCountMismatch { circuit: usize, state: usize },
    #[error("shot count must be at least 1")]
    NoShots,
}

/// Amplitude bytes needed for a dense register of `qubits` qubits.
pub fn dense_bytes(qubits: usize) -> u128 {
    AMPLITUDE_BYTES << qubits.min(100)
}

pub trait QuantumState {
    fn qubit_count(&self) -> usize;

    /// Applies a single gate. Indices are assumed valid; circuits validate
    /// them on construction.
    fn apply_gate(&mut self, gate: &Gate);

    fn norm_sqr(&self) -> f64;

    /// Probability of each `x` register value, summed over all ancillas.
    fn x_register_marginal(&self, layout: &QubitLayout) -> XMarginal;

    fn apply_circuit(&mut self, circuit: &Circuit) -> Result<(), SimError> {
        if circuit.qubit_count() != self.qubit_count() {
            return Err(SimError::QubitCountMismatch {
                circuit: circuit.qubit_count(),
                state: self.qubit_count(),
            });
        }
        for g in circuit.gates() {
            self.apply_gate(g);
        }
        Ok(())
    }
}

/// Puts `aux` and every `x` qubit into superposition.
pub fn apply_hadamard_layer<S: QuantumState>(state: &mut S, layout: &QubitLayout) {
    state.apply_gate(&Gate::h(layout.aux()));
    for &q in layout.x_qubits() {
        state.apply_gate(&Gate::h(q));
    }
}

/// Sum of marginal probability over `x` values accepted by `predicate`.
pub fn marked_probability<S: QuantumState>(
    state: &S,
    layout: &QubitLayout,
    predicate: impl Fn(u64) -> bool,
) -> f64 {
    state
        .x_register_marginal(layout)
        .marked_probability(predicate)
}

/// Shot histogram over the `x` register of `state`.
pub fn sample_shots<S: QuantumState>(
    state: &S,
    layout: &QubitLayout,
    shots: usize,
    seed: u64,
) -> Result<MeasurementHistogram, SimError> {
    state.x_register_marginal(layout).sample(shots, seed)
}

/// Distribution of the `x` register; index `v` holds `P(x = v)` where bit
/// `d - 1` of `v` is vertex `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct XMarginal {
    n: usize,
    probs: Vec<f64>,
}

impl XMarginal {
    pub fn new(n: usize, probs: Vec<f64>) -> Self {
        assert_eq!(probs.len(), 1 << n);
        Self { n, probs }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, value: u64) -> f64 {
        self.probs[value as usize]
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    pub fn marked_probability(&self, predicate: impl Fn(u64) -> bool) -> f64 {
        self.probs
            .iter()
            .enumerate()
            .filter(|&(v, _)| predicate(v as u64))
            .map(|(_, p)| p)
            .sum()
    }

    /// Values whose probability is within `tolerance` of the maximum,
    /// ascending.
    pub fn top_values(&self, tolerance: f64) -> Vec<u64> {
        let max = self.probs.iter().copied().fold(0.0, f64::max);
        (0..self.probs.len() as u64)
            .filter(|&v| self.probs[v as usize] >= max - tolerance)
            .collect()
    }

    /// Display-ordered bitstring → probability.
    pub fn to_map(&self) -> BTreeMap<String, f64> {
        self.probs
            .iter()
            .enumerate()
            .map(|(v, &p)| (display_bits(self.n, v as u64), p))
            .collect()
    }

    pub fn sample(&self, shots: usize, seed: u64) -> Result<MeasurementHistogram, SimError> {
        if shots == 0 {
            return Err(SimError::NoShots);
        }
        let dist = WeightedIndex::new(&self.probs).expect("marginal has positive mass");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut by_value: BTreeMap<u64, u64> = BTreeMap::new();
        for _ in 0..shots {
            *by_value.entry(dist.sample(&mut rng) as u64).or_default() += 1;
        }
        Ok(MeasurementHistogram {
            n: self.n,
            shots: shots as u64,
            seed,
            counts: by_value
                .into_iter()
                .map(|(v, c)| (display_bits(self.n, v), c))
                .collect(),
        })
    }
}

/// Shot counts keyed by display-ordered bitstring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeasurementHistogram {
    #[serde(skip)]
    n: usize,
    pub shots: u64,
    pub seed: u64,
    pub counts: BTreeMap<String, u64>,
}

impl MeasurementHistogram {
    pub fn count(&self, bits: &str) -> u64 {
        self.counts.get(bits).copied().unwrap_or(0)
    }

    /// Number of shots whose value (bit `d - 1` = vertex `d`) satisfies
    /// `predicate`.
    pub fn count_where(&self, predicate: impl Fn(u64) -> bool) -> u64 {
        self.counts
            .iter()
            .filter(|(bits, _)| predicate(parse_display(bits)))
            .map(|(_, &c)| c)
            .sum()
    }

    /// Outcome values sorted by count descending, then value ascending.
    pub fn ranked(&self) -> Vec<(u64, u64)> {
        let mut v: Vec<(u64, u64)> = self
            .counts
            .iter()
            .map(|(bits, &c)| (parse_display(bits), c))
            .collect();
        v.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        v
    }

    /// Horizontal bar chart, one row per observed outcome.
    pub fn to_ascii(&self, width: usize) -> String {
        let max = self.counts.values().copied().max().unwrap_or(1).max(1);
        let mut out = String::new();
        for (bits, &c) in &self.counts {
            let bar = (c as usize * width).div_ceil(max as usize);
            out.push_str(&format!(
                "{bits:>w$} | {} {c} ({:.3})\n",
                "#".repeat(bar),
                c as f64 / self.shots as f64,
                w = self.n.max(1)
            ));
        }
        out
    }
}

fn parse_display(bits: &str) -> u64 {
    bits.bytes()
        .fold(0, |acc, b| (acc << 1) | u64::from(b == b'1'))
}
