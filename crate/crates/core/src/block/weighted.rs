use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{data_lines, parse_usizes, Graph};
use crate::linalg::{cholesky, inverse_symmetric, Matrix};
use crate::text::format_number;

/// A symmetric positive-definite edge weight.
///
/// Weights are resistance-like: the Laplacian uses their inverses, so a
/// larger weight means a larger resistance.
#[derive(Debug, Clone, PartialEq)]
pub struct PdWeight(Matrix);

impl PdWeight {
    /// Accepts `w` if it is square, symmetric within `1e-10 · max|w_ij|`, and
    /// admits a Cholesky factorization. The stored matrix is symmetrized.
    pub fn new(w: Matrix) -> Result<Self> {
        if !w.is_square() || w.rows() == 0 {
            return Err(Error::NotPositiveDefiniteMatrix);
        }
        if w.asymmetry() > 1e-10 * w.max_abs() {
            return Err(Error::NotPositiveDefiniteMatrix);
        }
        let w = w.symmetrized();
        cholesky(&w).map_err(|_| Error::NotPositiveDefiniteMatrix)?;
        Ok(PdWeight(w))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.rows()
    }

    pub fn inverse(&self) -> Matrix {
        inverse_symmetric(&self.0).expect("positive definite matrices are invertible")
    }
}

/// A connected graph whose edges carry `k × k` positive-definite weights.
#[derive(Debug, Clone, PartialEq)]
pub struct MwGraph {
    graph: Graph,
    k: usize,
    /// Indexed like `graph.edges()`.
    weights: Vec<PdWeight>,
}

impl MwGraph {
    pub fn new(n: usize, k: usize, edges: Vec<((usize, usize), Matrix)>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ShapeMismatch(
                "block order must be at least 1".into(),
            ));
        }
        let graph = Graph::new(n, edges.iter().map(|(e, _)| *e))?;
        let mut slots: Vec<Option<PdWeight>> = vec![None; graph.edge_count()];
        for ((i, j), w) in edges {
            if w.rows() != k || w.cols() != k {
                return Err(Error::ShapeMismatch(format!(
                    "weight on edge {{{i}, {j}}} is {}x{}, expected {k}x{k}",
                    w.rows(),
                    w.cols()
                )));
            }
            let w = PdWeight::new(w).map_err(|_| Error::NotPositiveDefinite(i.min(j), i.max(j)))?;
            let idx = graph.edge_index(i, j).expect("edge was just inserted");
            slots[idx] = Some(w);
        }
        let weights = slots
            .into_iter()
            .map(|w| w.expect("one weight per edge"))
            .collect();
        Ok(MwGraph { graph, k, weights })
    }

    /// Puts the same weight on every edge of `g`.
    pub fn uniform(g: &Graph, w: &Matrix) -> Result<Self> {
        let edges = g.edges().iter().map(|&e| (e, w.clone())).collect();
        Self::new(g.n(), w.rows(), edges)
    }

    /// Every edge weighted `I_k`.
    pub fn lift(g: &Graph, k: usize) -> Result<Self> {
        Self::uniform(g, &Matrix::identity(k))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn weights(&self) -> &[PdWeight] {
        &self.weights
    }

    /// `(edge, weight)` pairs in edge order.
    pub fn weighted_edges(&self) -> impl Iterator<Item = ((usize, usize), &PdWeight)> {
        self.graph.edges().iter().copied().zip(&self.weights)
    }

    pub fn weight(&self, i: usize, j: usize) -> Option<&PdWeight> {
        self.graph.edge_index(i, j).map(|idx| &self.weights[idx])
    }

    /// Renders the graph in `.mwg` form (1-based ids, 9 significant digits).
    pub fn to_mwg(&self) -> String {
        let mut s = format!("{} {} {}\n", self.n(), self.graph.edge_count(), self.k);
        for ((i, j), w) in self.weighted_edges() {
            let _ = writeln!(s, "{} {}", i + 1, j + 1);
            for r in 0..self.k {
                let row: Vec<String> = w
                    .matrix()
                    .row(r)
                    .iter()
                    .map(|&x| format_number(x))
                    .collect();
                let _ = writeln!(s, "{}", row.join(" "));
            }
        }
        s
    }
}

/// Parses the `.mwg` format: `#` comments, a header `n m k`, then for each
/// edge a line `i j` (1-based) followed by `k` rows of `k` numbers.
pub fn parse_mwg(text: &str) -> Result<MwGraph> {
    let mut lines = data_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing header line \"n m k\""))?;
    let [n, m, k] = parse_usizes::<3>(hline, header)?;
    if n < 1 {
        return Err(Error::Empty);
    }
    if k < 1 {
        return Err(Error::parse(hline, "block order k must be at least 1"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    for e in 0..m {
        let (eline, text) = lines
            .next()
            .ok_or_else(|| Error::parse(hline, format!("expected {m} edges, found {e}")))?;
        let [a, b] = parse_usizes::<2>(eline, text)?;
        for v in [a, b] {
            if v < 1 || v > n {
                return Err(Error::parse(eline, format!("vertex {v} outside 1..={n}")));
            }
        }
        if a == b {
            return Err(Error::parse(eline, format!("self-loop at vertex {a}")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::parse(
                eline,
                format!("duplicate edge {} {}", a.min(b), a.max(b)),
            ));
        }
        let mut rows = Vec::with_capacity(k);
        for r in 0..k {
            let (line, text) = lines
                .next()
                .ok_or_else(|| Error::parse(eline, format!("weight needs {k} rows, found {r}")))?;
            rows.push(parse_floats(line, text, k)?);
        }
        let w = Matrix::from_rows(&rows);
        if PdWeight::new(w.clone()).is_err() {
            return Err(Error::parse(
                eline,
                "weight is not symmetric positive definite",
            ));
        }
        edges.push(((a - 1, b - 1), w));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "unexpected data after the last edge"));
    }
    MwGraph::new(n, k, edges)
}

pub(crate) fn parse_floats(line: usize, text: &str, count: usize) -> Result<Vec<f64>> {
    let values: Vec<f64> = text
        .split_whitespace()
        .map(|t| {
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::parse(line, format!("invalid number {t:?}")))
        })
        .collect::<Result<_>>()?;
    if values.len() != count {
        return Err(Error::parse(
            line,
            format!("expected {count} numbers, found {}", values.len()),
        ));
    }
    Ok(values)
}
