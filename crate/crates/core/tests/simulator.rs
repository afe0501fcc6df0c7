mod common;

use common::{path3, path4, rng};
use maxcut_grover::circuit::Circuit;
use maxcut_grover::layout::QubitLayout;
use maxcut_grover::sim::{self, QuantumState, SimError, SparseState, StateVector};
use maxcut_grover::synth::{synth_counting_block, synth_full_circuit, synth_oracle};
use maxcut_grover::verify::initial_key;
use num_complex::Complex64;
use rand::Rng;

#[test]
fn init_states() {
    let l = QubitLayout::compact(3, 2);
    let sv = StateVector::init_state(&l, 26).unwrap();
    let (idx, amp) = sv.as_basis(0.0).unwrap();
    assert_eq!(idx.count_ones(), 3);
    assert_eq!(amp, Complex64::new(1.0, 0.0));

    let f = QubitLayout::faithful(3, 2);
    let sp = SparseState::init_state(&f);
    let (key, _) = sp.as_basis().unwrap();
    assert_eq!((0..27).filter(|&q| key.get(q)).count(), 7);
    assert!(matches!(
        StateVector::init_state(&f, 26),
        Err(SimError::MemoryCap {
            required_qubits: 27,
            ..
        })
    ));
}

#[test]
fn hadamard_layer_is_uniform() {
    let l = QubitLayout::compact(3, 2);
    let mut sv = StateVector::init_state(&l, 26).unwrap();
    sim::apply_hadamard_layer(&mut sv, &l);
    let m = sv.x_register_marginal(&l);
    for x in 0..8 {
        assert!((m.get(x) - 0.125).abs() < 1e-12);
    }
    assert!((sv.norm_sqr() - 1.0).abs() < 1e-12);
    // aux is (|0⟩ - |1⟩)/√2.
    let aux_bit = 1 << l.aux();
    let p1: f64 = (0..1usize << 15)
        .filter(|i| i & aux_bit != 0)
        .map(|i| sv.probability(i))
        .sum();
    assert!((p1 - 0.5).abs() < 1e-12);
    let base = initial_key_index(&l);
    assert!(sv.amplitude(base).re < 0.0);
    assert!(sv.amplitude(base ^ aux_bit).re > 0.0);
}

fn initial_key_index(l: &QubitLayout) -> usize {
    l.initially_set().fold(0, |acc, q| acc | 1 << q)
}

#[test]
fn qubit_count_mismatch() {
    let mut sv = StateVector::basis(3, 0, 26).unwrap();
    assert_eq!(
        sv.apply_circuit(&Circuit::new(4)),
        Err(SimError::QubitCountMismatch {
            circuit: 4,
            state: 3
        })
    );
}

#[test]
fn path3_marginal_and_histogram() {
    let g = path3();
    let l = QubitLayout::compact(3, 2);
    let mut sv = StateVector::init_state(&l, 26).unwrap();
    sv.apply_circuit(&synth_full_circuit(&g, &l, 2, 1).unwrap())
        .unwrap();
    let map = sv.x_register_marginal(&l).to_map();
    assert!((map["010"] - 0.5).abs() < 1e-9);
    assert!((map["101"] - 0.5).abs() < 1e-9);
    assert!((map.values().sum::<f64>() - 1.0).abs() < 1e-9);
    assert!(sim::marked_probability(&sv, &l, |x| g.cut_size_bits(x) == 2) > 1.0 - 1e-9);
    assert_eq!(sim::marked_probability(&sv, &l, |_| false), 0.0);

    let h = sim::sample_shots(&sv, &l, 1024, 1).unwrap();
    assert_eq!(h.count("010") + h.count("101"), 1024);
    assert_eq!(h, sim::sample_shots(&sv, &l, 1024, 1).unwrap());
    let one = sim::sample_shots(&sv, &l, 1, 5).unwrap();
    assert_eq!(one.counts.len(), 1);
    assert!(one.counts.contains_key("010") || one.counts.contains_key("101"));
}

#[test]
fn dense_and_sparse_agree_amplitude_for_amplitude() {
    let g = path4();
    let l = QubitLayout::compact(4, 3);
    let c = synth_full_circuit(&g, &l, 3, 2).unwrap();
    let mut dense = StateVector::init_state(&l, 26).unwrap();
    dense.apply_circuit(&c).unwrap();
    let mut sparse = SparseState::init_state(&l);
    sparse.apply_circuit(&c).unwrap();
    assert!(sparse.support_size() <= 1 << 5);
    for (key, amp) in sparse.entries() {
        let idx = (0..l.total_qubits()).fold(0usize, |i, q| i | usize::from(key.get(q)) << q);
        assert_eq!(dense.amplitude(idx), *amp);
    }
    assert!((dense.norm_sqr() - sparse.norm_sqr()).abs() < 1e-12);
    assert_eq!(
        dense.x_register_marginal(&l).probabilities().len(),
        sparse.x_register_marginal(&l).probabilities().len()
    );
    for (a, b) in dense
        .x_register_marginal(&l)
        .probabilities()
        .iter()
        .zip(sparse.x_register_marginal(&l).probabilities())
    {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn counting_block_maps_basis_to_basis() {
    let g = path3();
    let l = QubitLayout::compact(3, 2);
    let block = synth_counting_block(&g, &l).unwrap();
    for x in 0..8usize {
        let mut sv = StateVector::basis(15, initial_key_index(&l) | x, 26).unwrap();
        sv.apply_circuit(&block).unwrap();
        assert!(sv.as_basis(0.0).is_some());
    }
}

#[test]
fn linearity_on_superposed_pairs() {
    let g = path3();
    let l = QubitLayout::compact(3, 2);
    let mut c = synth_counting_block(&g, &l).unwrap();
    c.extend_from(&synth_oracle(&l, 1).unwrap()).unwrap();
    c.extend_from(&maxcut_grover::synth::synth_diffusion(&l).unwrap())
        .unwrap();
    let dim = 1usize << l.total_qubits();
    let mut r = rng(11);
    for _ in 0..10 {
        let a = r.gen_range(0..dim);
        let b = loop {
            let b = r.gen_range(0..dim);
            if b != a {
                break b;
            }
        };
        let run = |idx: &[usize]| {
            let mut amps = vec![Complex64::new(0.0, 0.0); dim];
            let w = 1.0 / (idx.len() as f64).sqrt();
            for &i in idx {
                amps[i] = Complex64::new(w, 0.0);
            }
            let mut sv = StateVector::from_amplitudes(amps);
            sv.apply_circuit(&c).unwrap();
            sv.amplitudes()
        };
        let both = run(&[a, b]);
        let (ra, rb) = (run(&[a]), run(&[b]));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        for i in 0..dim {
            assert!((both[i] - (ra[i] + rb[i]) * s).norm() < 1e-12);
        }
    }
}

#[test]
fn sparse_key_for_faithful_layout() {
    // 27-qubit faithful circuits run on the sparse backend without a cap.
    let g = path3();
    let l = QubitLayout::faithful(3, 2);
    let mut s = SparseState::init_state(&l);
    s.apply_circuit(&synth_full_circuit(&g, &l, 2, 1).unwrap())
        .unwrap();
    let m = s.x_register_marginal(&l);
    assert!((m.get(0b010) - 0.5).abs() < 1e-9);
    assert_eq!(
        initial_key(&l, 0),
        SparseState::init_state(&l).as_basis().unwrap().0.clone()
    );
}
