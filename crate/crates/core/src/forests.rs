//! Spanning-tree and spanning 2-forest counts.
//!
//! Counts come from determinants of Laplacian submatrices (matrix-tree
//! theorem) and, for small graphs, from an exhaustive enumeration oracle
//! over edge subsets.

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::graph::{laplacian, Graph};
use crate::linalg::principal_minor;
use crate::resistance::{
    kirchhoff_index, laplacian_spectrum, resistance_matrix, row_sums, ResistanceMethod,
};

/// Largest edge count the enumeration oracle accepts.
pub const ENUMERATION_EDGE_CAP: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeCountMethod {
    /// `λ_1 ⋯ λ_{n−1} / n`.
    Eigen,
    /// `det L(v)`.
    Det,
    /// Exhaustive search over `(n−1)`-edge subsets.
    Enumerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForestCountMethod {
    /// `s_ij = det L(i, j)`.
    Det,
    /// Exhaustive search over `(n−2)`-edge subsets.
    Enumerate,
}

/// Rounds a determinant-derived count, failing unless it sits within
/// `1e-6 · max(1, |v|)` of a nonnegative integer.
pub fn round_count(v: f64) -> Result<u64> {
    let r = v.round();
    if !v.is_finite() || r < 0.0 || (v - r).abs() >= 1e-6 * v.abs().max(1.0) {
        return Err(Error::NotInteger(v));
    }
    Ok(r as u64)
}

pub fn spanning_tree_count(g: &Graph, method: TreeCountMethod) -> Result<u64> {
    g.require_connected()?;
    let n = g.n();
    match method {
        TreeCountMethod::Eigen => {
            let e = laplacian_spectrum(g)?;
            let product: f64 = (0..e.len())
                .filter(|&k| !e.is_zero(k))
                .map(|k| e.values[k])
                .product();
            round_count(product / n as f64)
        }
        TreeCountMethod::Det => {
            if n == 1 {
                return Ok(1);
            }
            round_count(principal_minor(&laplacian(g), &[n - 1])?)
        }
        TreeCountMethod::Enumerate => Ok(enumerate_forests(g)?.trees),
    }
}

/// Number of spanning 2-forests with `i` and `j` in different trees.
pub fn two_forest_count(g: &Graph, i: usize, j: usize, method: ForestCountMethod) -> Result<u64> {
    g.require_connected()?;
    let n = g.n();
    for v in [i, j] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if i == j {
        return Err(Error::SameVertex(i));
    }
    match method {
        ForestCountMethod::Det => round_count(principal_minor(&laplacian(g), &[i, j])?),
        ForestCountMethod::Enumerate => Ok(enumerate_forests(g)?.separating[i][j]),
    }
}

/// The full symmetric matrix `s_ij` (zero diagonal).
pub fn two_forest_matrix(g: &Graph, method: ForestCountMethod) -> Result<Vec<Vec<u64>>> {
    g.require_connected()?;
    match method {
        ForestCountMethod::Enumerate => Ok(enumerate_forests(g)?.separating),
        ForestCountMethod::Det => {
            let n = g.n();
            let l = laplacian(g);
            let mut s = vec![vec![0; n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let c = round_count(principal_minor(&l, &[i, j])?)?;
                    s[i][j] = c;
                    s[j][i] = c;
                }
            }
            Ok(s)
        }
    }
}

/// Result of exhaustive enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestEnumeration {
    /// Spanning trees.
    pub trees: u64,
    /// Spanning 2-forests, each counted once.
    pub two_forests: u64,
    /// `separating[i][j]`: 2-forests with `i` and `j` in different trees.
    pub separating: Vec<Vec<u64>>,
}

/// Enumerates every `(n−1)`- and `(n−2)`-edge subset and classifies it with
/// union–find. Refuses graphs with more than [`ENUMERATION_EDGE_CAP`] edges.
pub fn enumerate_forests(g: &Graph) -> Result<ForestEnumeration> {
    g.require_connected()?;
    let m = g.edge_count();
    if m > ENUMERATION_EDGE_CAP {
        return Err(Error::EnumerationCap {
            edges: m,
            cap: ENUMERATION_EDGE_CAP,
        });
    }
    let n = g.n();
    let edges = g.edges();

    let trees = if n == 1 {
        1
    } else {
        subsets(m, n - 1)
            .filter(|&mask| acyclic(n, edges, mask).is_some())
            .count() as u64
    };

    let mut separating = vec![vec![0u64; n]; n];
    let mut two_forests = 0;
    if n >= 2 {
        let mut side = vec![false; n];
        for mask in subsets(m, n - 2) {
            let Some(uf) = acyclic(n, edges, mask) else {
                continue;
            };
            two_forests += 1;
            let root = uf.find(0);
            for (v, s) in side.iter_mut().enumerate() {
                *s = uf.find(v) == root;
            }
            for i in 0..n {
                for j in i + 1..n {
                    if side[i] != side[j] {
                        separating[i][j] += 1;
                        separating[j][i] += 1;
                    }
                }
            }
        }
    }
    Ok(ForestEnumeration {
        trees,
        two_forests,
        separating,
    })
}

/// Union–find over the edges selected by `mask`, or `None` if they contain a cycle.
fn acyclic(n: usize, edges: &[(usize, usize)], mask: u64) -> Option<UnionFind<usize>> {
    let mut uf = UnionFind::new(n);
    for (e, &(i, j)) in edges.iter().enumerate() {
        if mask >> e & 1 == 1 && !uf.union(i, j) {
            return None;
        }
    }
    Some(uf)
}

/// All `k`-element subsets of `0..m` as bitmasks, in increasing order.
fn subsets(m: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << m;
    let mut next = if k > m { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let x = next?;
        next = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            let y = (((r ^ x) >> 2) / c) | r;
            (y < limit).then_some(y)
        };
        Some(x)
    })
}

/// Spanning-tree count, the 2-forest matrix, and the residuals of
/// `Σ_{i<j} s_ij = t·Kf` and `Σ_j s_ij = t·R_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ForestCountReport {
    pub trees: u64,
    pub separating: Vec<Vec<u64>>,
    pub kirchhoff: f64,
    pub row_sums: Vec<f64>,
    /// `Σ_{i<j} s_ij`.
    pub pair_total: u64,
    /// `|Σ_{i<j} s_ij − t·Kf|`.
    pub pair_residual: f64,
    /// `Σ_j s_ij` per vertex.
    pub row_totals: Vec<u64>,
    /// `|Σ_j s_ij − t·R_i|` per vertex.
    pub row_residuals: Vec<f64>,
}

impl ForestCountReport {
    pub fn max_residual(&self) -> f64 {
        self.row_residuals
            .iter()
            .fold(self.pair_residual, |m, &r| m.max(r))
    }
}

/// Determinant-based counts checked against the spectral `Kf` and the
/// spectral resistance row sums.
pub fn forest_identities(g: &Graph) -> Result<ForestCountReport> {
    let trees = spanning_tree_count(g, TreeCountMethod::Det)?;
    let separating = two_forest_matrix(g, ForestCountMethod::Det)?;
    let kirchhoff = kirchhoff_index(g)?;
    let rows = row_sums(&resistance_matrix(g, ResistanceMethod::Eigen)?);
    let n = g.n();
    let t = trees as f64;

    let pair_total: u64 = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| separating[i][j])
        .sum();
    let row_totals: Vec<u64> = separating.iter().map(|r| r.iter().sum()).collect();
    let row_residuals = row_totals
        .iter()
        .zip(&rows)
        .map(|(&s, &r)| (s as f64 - t * r).abs())
        .collect();
    Ok(ForestCountReport {
        trees,
        pair_residual: (pair_total as f64 - t * kirchhoff).abs(),
        separating,
        kirchhoff,
        row_sums: rows,
        pair_total,
        row_totals,
        row_residuals,
    })
}
