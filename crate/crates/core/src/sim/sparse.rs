use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use super::{QuantumState, XMarginal};
use crate::circuit::{Gate, GateKind};
use crate::layout::QubitLayout;

/// Basis string of arbitrary width; bit `q` is qubit `q`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKey(Vec<u64>);

impl BasisKey {
    pub fn zeros(qubits: usize) -> Self {
        Self(vec![0; qubits.div_ceil(64).max(1)])
    }

    pub fn from_set(qubits: usize, set: impl IntoIterator<Item = usize>) -> Self {
        let mut k = Self::zeros(qubits);
        for q in set {
            k.flip(q);
        }
        k
    }

    #[inline]
    pub fn get(&self, q: usize) -> bool {
        (self.0[q / 64] >> (q % 64)) & 1 == 1
    }

    #[inline]
    pub fn flip(&mut self, q: usize) {
        self.0[q / 64] ^= 1 << (q % 64);
    }

    #[inline]
    pub fn set(&mut self, q: usize, value: bool) {
        if self.get(q) != value {
            self.flip(q);
        }
    }

    fn all(&self, qs: &[usize]) -> bool {
        qs.iter().all(|&q| self.get(q))
    }
}

/// Sparse amplitude map. Entries with exactly zero amplitude are dropped.
#[derive(Debug, Clone)]
pub struct SparseState {
    qubits: usize,
    entries: Vec<(BasisKey, Complex64)>,
}

impl SparseState {
    pub fn basis(qubits: usize, key: BasisKey) -> Self {
        Self {
            qubits,
            entries: vec![(key, Complex64::new(1.0, 0.0))],
        }
    }

    /// ψ₀: `aux` and every `s` qubit set, everything else clear.
    pub fn init_state(layout: &QubitLayout) -> Self {
        let key = BasisKey::from_set(layout.total_qubits(), layout.initially_set());
        Self::basis(layout.total_qubits(), key)
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(BasisKey, Complex64)] {
        &self.entries
    }

    pub fn amplitude(&self, key: &BasisKey) -> Complex64 {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, a)| *a)
            .unwrap_or_default()
    }

    /// The only basis state present, if exactly one is.
    pub fn as_basis(&self) -> Option<(&BasisKey, Complex64)> {
        match self.entries.as_slice() {
            [(k, a)] => Some((k, *a)),
            _ => None,
        }
    }

    fn hadamard(&mut self, target: usize) {
        let mut pairs: BTreeMap<BasisKey, [Complex64; 2]> = BTreeMap::new();
        for (mut key, amp) in self.entries.drain(..) {
            let bit = usize::from(key.get(target));
            key.set(target, false);
            pairs.entry(key).or_default()[bit] += amp;
        }
        let s = FRAC_1_SQRT_2;
        for (key, [a, b]) in pairs {
            let plus = (a + b) * s;
            let minus = (a - b) * s;
            if plus.norm_sqr() != 0.0 {
                self.entries.push((key.clone(), plus));
            }
            if minus.norm_sqr() != 0.0 {
                let mut k1 = key;
                k1.flip(target);
                self.entries.push((k1, minus));
            }
        }
    }
}

impl QuantumState for SparseState {
    fn qubit_count(&self) -> usize {
        self.qubits
    }

    fn apply_gate(&mut self, gate: &Gate) {
        let target = gate.target();
        match gate.kind() {
            GateKind::X | GateKind::Cnot | GateKind::Toffoli | GateKind::Mcx => {
                for (key, _) in &mut self.entries {
                    if key.all(gate.controls()) {
                        key.flip(target);
                    }
                }
            }
            GateKind::Mcz => {
                for (key, amp) in &mut self.entries {
                    if key.get(target) && key.all(gate.controls()) {
                        *amp = -*amp;
                    }
                }
            }
            GateKind::H => self.hadamard(target),
        }
    }

    fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|(_, a)| a.norm_sqr()).sum()
    }

    fn x_register_marginal(&self, layout: &QubitLayout) -> XMarginal {
        let xs = layout.x_qubits();
        let mut probs = vec![0.0; 1 << xs.len()];
        for (key, amp) in &self.entries {
            let v = xs
                .iter()
                .enumerate()
                .fold(0usize, |v, (d, &q)| v | (usize::from(key.get(q)) << d));
            probs[v] += amp.norm_sqr();
        }
        XMarginal::new(xs.len(), probs)
    }
}
