//! Simple undirected graphs: construction, the `.grf` text format, Laplacians,
//! connectivity and cut vertices.
//!
//! Vertex ids are 0-based in memory and 1-based in files.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Graphs built with [`Graph::new`] (or parsed from text) are connected; all
/// analytics in this crate rely on that. [`Graph::new_simple`] allows
/// disconnected graphs for structural queries such as [`Graph::is_connected`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    connected: bool,
}

impl Graph {
    /// Builds a connected simple graph.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let g = Self::new_simple(n, edges)?;
        if !g.connected {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Builds a simple graph that need not be connected.
    pub fn new_simple(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut neighbors = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if neighbors[i].contains(&j) {
                return Err(Error::DuplicateEdge(i, j));
            }
            neighbors[i].push(j);
            neighbors[j].push(i);
            list.push((i, j));
        }
        list.sort_unstable();
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        let connected = components(&neighbors) == 1;
        Ok(Graph {
            n,
            edges: list,
            neighbors,
            connected,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && self.neighbors[i].binary_search(&j).is_ok()
    }

    /// Position of edge `{i, j}` in [`Graph::edges`].
    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.binary_search(&key).ok()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn is_tree(&self) -> bool {
        self.connected && self.edges.len() + 1 == self.n
    }

    /// All degrees equal.
    pub fn is_degree_regular(&self) -> bool {
        self.neighbors.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// The vertex-induced subgraph on all vertices but `v`, relabelled
    /// so that vertices above `v` shift down by one. `None` when `n == 1`.
    pub fn without_vertex(&self, v: usize) -> Option<Graph> {
        if self.n == 1 {
            return None;
        }
        let relabel = |x: usize| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, j)| i != v && j != v)
            .map(|&(i, j)| (relabel(i), relabel(j)));
        Some(Self::new_simple(self.n - 1, edges).expect("subgraph of a simple graph"))
    }

    pub fn adjacency(&self) -> Matrix {
        let mut a = Matrix::zeros(self.n, self.n);
        for &(i, j) in &self.edges {
            a[(i, j)] = 1.0;
            a[(j, i)] = 1.0;
        }
        a
    }

    /// Renders the graph in `.grf` form (1-based ids).
    pub fn to_grf(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(i, j) in &self.edges {
            let _ = writeln!(s, "{} {}", i + 1, j + 1);
        }
        s
    }
}

fn components(neighbors: &[Vec<usize>]) -> usize {
    let n = neighbors.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &w in &neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    count
}

/// `L = D − A`.
pub fn laplacian(g: &Graph) -> Matrix {
    let mut l = Matrix::zeros(g.n, g.n);
    for v in 0..g.n {
        l[(v, v)] = g.degree(v) as f64;
    }
    for &(i, j) in &g.edges {
        l[(i, j)] = -1.0;
        l[(j, i)] = -1.0;
    }
    l
}

/// Articulation points in ascending order (iterative low-link DFS).
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = g.n;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut parent = vec![UNSEEN; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        stack.push((root, 0));
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            if top.1 < g.neighbors[v].len() {
                let w = g.neighbors[v][top.1];
                top.1 += 1;
                if disc[w] == UNSEEN {
                    parent[w] = v;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, 0));
                } else if w != parent[v] {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// Parses the `.grf` format: `#` comment lines, a header `n m`, then `m`
/// lines `i j` with 1-based ids. The graph must be connected.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing header line \"n m\""))?;
    let [n, m] = parse_usizes::<2>(hline, header)?;
    if n < 1 {
        return Err(Error::Empty);
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for k in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| Error::parse(hline, format!("expected {m} edges, found {k}")))?;
        let [a, b] = parse_usizes::<2>(line, text)?;
        for v in [a, b] {
            if v < 1 || v > n {
                return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
            }
        }
        if a == b {
            return Err(Error::parse(line, format!("self-loop at vertex {a}")));
        }
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            return Err(Error::parse(
                line,
                format!("duplicate edge {} {}", key.0, key.1),
            ));
        }
        edges.push((a - 1, b - 1));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "unexpected data after the last edge"));
    }
    Graph::new(n, edges)
}

/// Non-empty, non-comment lines paired with their 1-based line numbers.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_usizes<const N: usize>(line: usize, text: &str) -> Result<[usize; N]> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != N {
        return Err(Error::parse(
            line,
            format!("expected {N} integers, found {} tokens", tokens.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, tok) in out.iter_mut().zip(tokens) {
        *slot = tok
            .parse()
            .map_err(|_| Error::parse(line, format!("invalid integer {tok:?}")))?;
    }
    Ok(out)
}
