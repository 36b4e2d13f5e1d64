#![allow(dead_code)]

use isopoly::{AltSpace, Field, FqMatrix, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let m = n * n.saturating_sub(1) / 2;
    (0..1u64 << m).map(move |code| Graph::from_edge_code(n, code))
}

/// G(n, p) with the given edge probability.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// A uniformly random alternating n x n matrix over F_q.
pub fn random_alternating<R: Rng>(n: usize, field: &Field, rng: &mut R) -> FqMatrix {
    let mut m = FqMatrix::zeros(n, n);
    for a in 0..n {
        for b in a + 1..n {
            let v = field.elem(rng.gen_range(0..field.q())).unwrap();
            m.set(a, b, v);
            m.set(b, a, field.neg(v));
        }
    }
    m
}

/// Span of `k` random alternating matrices.
pub fn random_space<R: Rng>(n: usize, k: usize, field: &Field, rng: &mut R) -> AltSpace {
    let gens = (0..k).map(|_| random_alternating(n, field, rng)).collect();
    AltSpace::new(n, field, gens).unwrap()
}

/// A random permutation of `0..n`.
pub fn random_perm<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
