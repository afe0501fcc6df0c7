#![allow(dead_code)]

use maxcut_grover::graph::{parse_graph, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn path3() -> Graph {
    parse_graph("3 2\n1 2\n2 3").unwrap()
}

pub fn triangle() -> Graph {
    parse_graph("3 3\n1 2\n2 3\n1 3").unwrap()
}

pub fn path4() -> Graph {
    parse_graph("4 3\n1 2\n2 3\n3 4").unwrap()
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for k in 1..=n {
        for p in k + 1..=n {
            v.push((k, p));
        }
    }
    v
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

/// Every labelled connected graph with `2 <= n <= max_n`, edges in
/// lexicographic order.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let pairs = all_pairs(n);
        for mask in 1u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if connected(n, &edges) {
                out.push(Graph::new(n, edges).unwrap());
            }
        }
    }
    out
}

/// A random simple graph on `n` vertices with `m` edges, edges shuffled and
/// randomly oriented.
pub fn random_graph(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut pairs = all_pairs(n);
    pairs.shuffle(rng);
    let edges = pairs
        .into_iter()
        .take(m)
        .map(|(k, p)| if rng.gen() { (k, p) } else { (p, k) })
        .collect();
    Graph::new(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Probability of the marked set after `k` ideal Grover iterations.
pub fn grover_law(n: usize, r: u64, k: usize) -> f64 {
    let theta = (r as f64 / (n as f64).exp2()).sqrt().asin();
    ((2 * k + 1) as f64 * theta).sin().powi(2)
}
