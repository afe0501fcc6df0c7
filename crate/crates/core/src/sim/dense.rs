use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use super::{dense_bytes, QuantumState, SimError, XMarginal};
use crate::circuit::{Gate, GateKind};
use crate::layout::QubitLayout;

/// Dense `2^Q` amplitude vector.
///
/// Bare X gates are not applied to memory: they toggle a bit in `frame`,
/// and the amplitude of logical basis state `i` lives at `amps[i ^ frame]`.
/// Controlled gates read the frame to pick which physical pattern to act
/// on; a Hadamard on a framed qubit materialises that bit first.
#[derive(Debug, Clone)]
pub struct StateVector {
    qubits: usize,
    amps: Vec<Complex64>,
    frame: usize,
}

/// Inserts a zero bit at each position of `fixed` (ascending) into `i`.
#[inline]
fn deposit(mut i: usize, fixed: &[usize]) -> usize {
    for &b in fixed {
        let low = i & ((1 << b) - 1);
        i = ((i >> b) << (b + 1)) | low;
    }
    i
}

fn sorted_bits(controls: &[usize], target: usize) -> (Vec<usize>, usize) {
    let mut fixed: Vec<usize> = controls.iter().copied().chain([target]).collect();
    fixed.sort_unstable();
    let mask = fixed.iter().fold(0, |m, &b| m | (1 << b));
    (fixed, mask)
}

impl StateVector {
    /// Basis state `index` on `qubits` qubits, refusing registers above `cap`.
    pub fn basis(qubits: usize, index: usize, cap: usize) -> Result<Self, SimError> {
        if qubits > cap || qubits >= usize::BITS as usize - 1 {
            return Err(SimError::MemoryCap {
                required_qubits: qubits,
                cap_qubits: cap,
                required_bytes: dense_bytes(qubits),
            });
        }
        assert!(index < 1 << qubits, "basis index out of range");
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << qubits];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            qubits,
            amps,
            frame: 0,
        })
    }

    /// ψ₀: `aux` and every `s` qubit set, everything else clear.
    pub fn init_state(layout: &QubitLayout, cap: usize) -> Result<Self, SimError> {
        let index = layout.initially_set().fold(0, |acc, q| acc | (1 << q));
        Self::basis(layout.total_qubits(), index, cap)
    }

    /// Builds a state from explicit amplitudes (length must be a power of two).
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Self {
        assert!(amps.len().is_power_of_two());
        Self {
            qubits: amps.len().trailing_zeros() as usize,
            amps,
            frame: 0,
        }
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index ^ self.frame]
    }

    pub fn probability(&self, index: usize) -> f64 {
        self.amplitude(index).norm_sqr()
    }

    /// Amplitudes in logical index order.
    pub fn amplitudes(&self) -> Vec<Complex64> {
        (0..self.amps.len()).map(|i| self.amplitude(i)).collect()
    }

    /// The single basis index carrying all the weight, if the state is a
    /// basis state up to phase.
    pub fn as_basis(&self, tolerance: f64) -> Option<(usize, Complex64)> {
        let mut found = None;
        for (p, a) in self.amps.iter().enumerate() {
            if a.norm_sqr() > tolerance {
                if found.is_some() {
                    return None;
                }
                found = Some((p ^ self.frame, *a));
            }
        }
        found
    }

    fn controlled_swap(&mut self, controls: &[usize], target: usize) {
        let (fixed, mask) = sorted_bits(controls, target);
        let control_mask = mask & !(1 << target);
        let pattern = !self.frame & control_mask;
        let tbit = 1 << target;
        for i in 0..(1usize << (self.qubits - fixed.len())) {
            let p0 = deposit(i, &fixed) | pattern;
            self.amps.swap(p0, p0 | tbit);
        }
    }

    fn phase_flip(&mut self, controls: &[usize], target: usize) {
        let (fixed, mask) = sorted_bits(controls, target);
        let pattern = !self.frame & mask;
        for i in 0..(1usize << (self.qubits - fixed.len())) {
            let p = deposit(i, &fixed) | pattern;
            self.amps[p] = -self.amps[p];
        }
    }

    fn hadamard(&mut self, target: usize) {
        let tbit = 1 << target;
        if self.frame & tbit != 0 {
            self.controlled_swap(&[], target);
            self.frame ^= tbit;
        }
        let fixed = [target];
        let s = FRAC_1_SQRT_2;
        for i in 0..(1usize << (self.qubits - 1)) {
            let p0 = deposit(i, &fixed);
            let p1 = p0 | tbit;
            let (a, b) = (self.amps[p0], self.amps[p1]);
            self.amps[p0] = (a + b) * s;
            self.amps[p1] = (a - b) * s;
        }
    }
}

impl QuantumState for StateVector {
    fn qubit_count(&self) -> usize {
        self.qubits
    }

    fn apply_gate(&mut self, gate: &Gate) {
        match gate.kind() {
            GateKind::X => self.frame ^= 1 << gate.target(),
            GateKind::Cnot | GateKind::Toffoli | GateKind::Mcx => {
                self.controlled_swap(gate.controls(), gate.target())
            }
            GateKind::Mcz => self.phase_flip(gate.controls(), gate.target()),
            GateKind::H => self.hadamard(gate.target()),
        }
    }

    fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(Complex64::norm_sqr).sum()
    }

    fn x_register_marginal(&self, layout: &QubitLayout) -> XMarginal {
        let xs = layout.x_qubits();
        let n = xs.len();
        let mut probs = vec![0.0; 1 << n];
        let contiguous = xs.iter().enumerate().all(|(d, &q)| d == q);
        for (p, a) in self.amps.iter().enumerate() {
            let logical = p ^ self.frame;
            let v = if contiguous {
                logical & ((1 << n) - 1)
            } else {
                xs.iter()
                    .enumerate()
                    .fold(0, |v, (d, &q)| v | (((logical >> q) & 1) << d))
            };
            probs[v] += a.norm_sqr();
        }
        XMarginal::new(n, probs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Gate;
    use crate::layout::QubitLayout;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn deposit_inserts_zero_bits() {
        assert_eq!(deposit(0b11, &[1]), 0b101);
        assert_eq!(deposit(0b111, &[0, 2]), 0b11010);
    }

    #[test]
    fn init_state_sets_aux_and_s() {
        let l = QubitLayout::compact(3, 2);
        let sv = StateVector::init_state(&l, 26).unwrap();
        let expected = (1 << 3) | (1 << 8) | (1 << 9);
        assert_eq!(sv.as_basis(1e-12).map(|b| b.0), Some(expected));
        assert_eq!(sv.probability(expected), 1.0);
    }

    #[test]
    fn memory_cap_reports_requirement() {
        let l = QubitLayout::faithful(3, 2);
        assert_eq!(
            StateVector::init_state(&l, 26).unwrap_err(),
            SimError::MemoryCap {
                required_qubits: 27,
                cap_qubits: 26,
                required_bytes: 16 << 27
            }
        );
    }

    #[test]
    fn x_and_h_are_involutions() {
        let mut sv = StateVector::basis(3, 0b101, 26).unwrap();
        sv.apply_gate(&Gate::h(1));
        sv.apply_gate(&Gate::h(0));
        let before = sv.amplitudes();
        for g in [Gate::x(2), Gate::x(2), Gate::h(0), Gate::h(0)] {
            sv.apply_gate(&g);
        }
        for (a, b) in sv.amplitudes().into_iter().zip(before) {
            assert!(close(a, b));
        }
    }

    #[test]
    fn framed_controls_respect_logical_values() {
        // X on the control then CNOT: logical control is 1, target flips.
        let mut sv = StateVector::basis(2, 0, 26).unwrap();
        sv.apply_gate(&Gate::x(0));
        sv.apply_gate(&Gate::cnot(0, 1).unwrap());
        assert_eq!(sv.as_basis(1e-12).map(|b| b.0), Some(0b11));
        // Hadamard on a framed qubit.
        let mut sv = StateVector::basis(1, 0, 26).unwrap();
        sv.apply_gate(&Gate::x(0));
        sv.apply_gate(&Gate::h(0));
        assert!(close(sv.amplitude(0), Complex64::new(FRAC_1_SQRT_2, 0.0)));
        assert!(close(sv.amplitude(1), Complex64::new(-FRAC_1_SQRT_2, 0.0)));
    }

    #[test]
    fn mcz_flips_only_all_ones() {
        let mut sv = StateVector::basis(3, 0, 26).unwrap();
        for q in 0..3 {
            sv.apply_gate(&Gate::h(q));
        }
        sv.apply_gate(&Gate::x(2));
        sv.apply_gate(&Gate::mcz(vec![1, 2], 0).unwrap());
        sv.apply_gate(&Gate::x(2));
        for i in 0..8 {
            let sign = if i == 0b011 { -1.0 } else { 1.0 };
            assert!((sv.amplitude(i).re - sign / 8f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn toffoli_truth_table() {
        for input in 0..8usize {
            let mut sv = StateVector::basis(3, input, 26).unwrap();
            sv.apply_gate(&Gate::toffoli(0, 1, 2).unwrap());
            let expect = if input & 0b11 == 0b11 {
                input ^ 0b100
            } else {
                input
            };
            assert_eq!(sv.as_basis(1e-12).map(|b| b.0), Some(expect));
        }
    }
}
