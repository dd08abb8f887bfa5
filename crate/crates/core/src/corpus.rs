//! Deterministic graph families and seeded random instances used by the
//! test suites and `selftest`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::block::MwGraph;
use crate::graph::Graph;
use crate::linalg::{sym_eigen, Matrix};

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Graph::new(n, edges).expect("complete graphs are connected")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycles are connected")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("paths are connected")
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("stars are connected")
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("Petersen graph is connected")
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).expect("connected")
}

/// `K_{1,3}` plus an edge between two leaves.
pub fn paw() -> Graph {
    Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).expect("connected")
}

/// A uniformly shuffled random tree on `n` vertices plus each remaining pair
/// with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for t in 1..n {
        let parent = order[rng.gen_range(0..t)];
        edges.push((parent.min(order[t]), parent.max(order[t])));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !edges.contains(&(i, j)) && rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("spanning tree keeps it connected")
}

pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    random_connected(rng, n, 0.0)
}

/// The named families: `K_2..K_6`, `C_3..C_8`, `P_2..P_8`, `K_{1,3}..K_{1,6}`
/// and the Petersen graph.
pub fn named_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push((format!("K{n}"), complete(n)));
    }
    for n in 3..=8 {
        out.push((format!("C{n}"), cycle(n)));
    }
    for n in 2..=8 {
        out.push((format!("P{n}"), path(n)));
    }
    for l in 3..=6 {
        out.push((format!("K1,{l}"), star(l)));
    }
    out.push(("Petersen".into(), petersen()));
    out
}

pub const RANDOM_GRAPHS: usize = 240;
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// `count` random connected graphs with `3 ≤ n ≤ 7`; the probability of each
/// extra edge is drawn per graph from `[0, 0.9)`.
pub fn random_graphs(seed: u64, count: usize) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(3..=7);
            let p = rng.gen_range(0.0..0.9);
            (format!("random-{i}"), random_connected(&mut rng, n, p))
        })
        .collect()
}

/// Named families followed by [`RANDOM_GRAPHS`] random graphs.
pub fn standard_corpus() -> Vec<(String, Graph)> {
    let mut out = named_graphs();
    out.extend(random_graphs(DEFAULT_SEED, RANDOM_GRAPHS));
    out
}

/// Random symmetric positive-definite `k × k` matrix `Q diag(λ) Qᵀ` with
/// eigenvalues drawn uniformly from `[lo, hi]`.
pub fn random_pd<R: Rng>(rng: &mut R, k: usize, lo: f64, hi: f64) -> Matrix {
    let s = Matrix::from_fn(k, k, |_, _| rng.gen_range(-1.0..1.0));
    let s = (&s + &s.transpose()).scale(0.5);
    let q = sym_eigen(&s).expect("random symmetric matrix").vectors;
    let lambda: Vec<f64> = (0..k).map(|_| rng.gen_range(lo..=hi)).collect();
    let w = &(&q * &Matrix::diagonal(&lambda)) * &q.transpose();
    w.symmetrized()
}

pub fn random_weights<R: Rng>(rng: &mut R, g: &Graph, k: usize) -> MwGraph {
    let edges = g
        .edges()
        .iter()
        .map(|&e| (e, random_pd(rng, k, 0.1, 10.0)))
        .collect();
    MwGraph::new(g.n(), k, edges).expect("random weights are positive definite")
}

/// Random connected matrix-weighted graphs with `2 ≤ n ≤ max_n`,
/// `k ∈ {1, 2, 3}`.
pub fn random_mw_graphs(seed: u64, count: usize, max_n: usize) -> Vec<MwGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            let k = rng.gen_range(1..=3);
            let p = rng.gen_range(0.0..=1.0);
            let g = random_connected(&mut rng, n, p);
            random_weights(&mut rng, &g, k)
        })
        .collect()
}

/// Random matrix-weighted trees with `2 ≤ n ≤ max_n`, `1 ≤ k ≤ max_k`.
pub fn random_mw_trees(seed: u64, count: usize, max_n: usize, max_k: usize) -> Vec<MwGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            let k = rng.gen_range(1..=max_k);
            let t = random_tree(&mut rng, n);
            random_weights(&mut rng, &t, k)
        })
        .collect()
}
