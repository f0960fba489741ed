//! Seeded random instance generators shared by the integration tests.
#![allow(dead_code)]

use kappa_degeneracy::{Assignment, Graph, Role};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A random spanning tree plus independent extra edges with probability `p`.
pub fn connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Uniform-ish r-regular graph by repeated configuration-model pairing.
pub fn random_regular(rng: &mut impl Rng, n: usize, r: usize) -> Option<Graph> {
    if n * r % 2 == 1 || r >= n {
        return None;
    }
    'attempt: for _ in 0..1000 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
        stubs.shuffle(rng);
        let mut edges = Vec::with_capacity(n * r / 2);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || edges.contains(&(u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        return Some(Graph::from_edges(n, &edges).unwrap());
    }
    None
}

/// Thresholds drawn uniformly from `low..=deg(v)` (clamped so that the range is nonempty).
pub fn random_tau(rng: &mut impl Rng, g: &Graph, low: i64) -> Assignment {
    let values = (0..g.n())
        .map(|v| {
            let hi = g.degree(v) as i64;
            rng.gen_range(low.min(hi)..=hi)
        })
        .collect();
    Assignment::tau(g, values).unwrap()
}

pub fn random_kappa(rng: &mut impl Rng, g: &Graph, low: i64, high: i64) -> Assignment {
    let values = (0..g.n()).map(|_| rng.gen_range(low..=high)).collect();
    Assignment::kappa(g, values).unwrap()
}

pub fn constant_kappa(g: &Graph, k: i64) -> Assignment {
    Assignment::constant(g, Role::Kappa, k).unwrap()
}

pub fn constant_tau(g: &Graph, t: i64) -> Assignment {
    Assignment::constant(g, Role::Tau, t).unwrap()
}

/// A random permutation of `0..n`, used as a peeling priority.
pub fn permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
