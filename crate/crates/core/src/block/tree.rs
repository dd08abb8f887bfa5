//! Matrix-weighted trees: the bottleneck (1)-inverse and reconstruction of a
//! tree from its block resistance matrix.

use std::fmt::Write as _;

use super::weighted::parse_floats;
use super::{block_laplacian, block_resistance, BlockMatrix, MwGraph, PdWeight};
use crate::error::{Error, Result};
use crate::graph::{data_lines, parse_usizes};
use crate::linalg::{inverse_symmetric, Matrix};
use crate::text::format_number;

/// `[[L(u)⁻¹, 0], [0, 0]]` with `u` the last vertex; a (1)-inverse of the
/// Laplacian of a matrix-weighted tree.
pub fn tree_one_inverse(g: &MwGraph) -> Result<BlockMatrix> {
    if !g.graph().is_tree() {
        return Err(Error::NotTree);
    }
    let (n, k) = (g.n(), g.k());
    let l = block_laplacian(g);
    let m = (n - 1) * k;
    let mut out = BlockMatrix::zeros(n, k);
    if m > 0 {
        let reduced = l.as_matrix().view(0, 0, m, m);
        let mut dense = out.into_matrix();
        dense.set_view(0, 0, &inverse_symmetric(&reduced)?);
        out = BlockMatrix::from_matrix(dense, n, k)?;
    }
    Ok(out)
}

/// Rebuilds a matrix-weighted tree from its block resistance matrix.
///
/// With `u` the last vertex, the bottleneck matrix `B = L(u)⁻¹` has blocks
/// `B_ii = R_iu` and `B_ij = (R_iu + R_ju − R_ij)/2`. Inverting `B` gives
/// `L(u)`; zero block row sums complete `L`; nonzero off-diagonal blocks are
/// the edges, with weights `(−L_ij)⁻¹`.
pub fn reconstruct_tree(r: &BlockMatrix) -> Result<MwGraph> {
    let (n, k) = (r.n(), r.k());
    let scale = r.as_matrix().max_abs().max(1.0);
    let asym = r.as_matrix().asymmetry();
    if asym > 1e-8 * scale {
        return Err(Error::InvalidResistance(format!(
            "not symmetric (asymmetry {asym:e})"
        )));
    }
    for i in 0..n {
        if r.block(i, i).max_abs() > 1e-8 * scale {
            return Err(Error::InvalidResistance(format!(
                "diagonal block {} is not zero",
                i + 1
            )));
        }
    }
    if n == 1 {
        return MwGraph::new(1, k, Vec::new());
    }

    let u = n - 1;
    let mut bottleneck = BlockMatrix::zeros(u, k);
    for i in 0..u {
        for j in 0..u {
            let b = if i == j {
                r.block(i, u)
            } else {
                let s = &r.block(i, u) + &r.block(j, u);
                (&s - &r.block(i, j)).scale(0.5)
            };
            if b.asymmetry() > 1e-8 * scale {
                return Err(Error::InvalidResistance(format!(
                    "bottleneck block ({}, {}) is not symmetric",
                    i + 1,
                    j + 1
                )));
            }
            bottleneck.set_block(i, j, &b.symmetrized());
        }
    }
    let reduced = inverse_symmetric(bottleneck.as_matrix())
        .map_err(|_| Error::InvalidResistance("bottleneck matrix is singular".into()))?;
    let reduced = BlockMatrix::from_matrix(reduced, u, k)?;

    let mut l = BlockMatrix::zeros(n, k);
    for i in 0..u {
        for j in 0..u {
            l.set_block(i, j, &reduced.block(i, j));
        }
    }
    let mut corner = Matrix::zeros(k, k);
    for (i, row_sum) in reduced.block_row_sums().iter().enumerate() {
        let c = row_sum.scale(-1.0);
        l.set_block(i, u, &c);
        l.set_block(u, i, &c.transpose());
        corner = &corner - &c;
    }
    l.set_block(u, u, &corner);

    let block_scale = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| l.block(i, j).max_abs())
        .fold(0.0_f64, f64::max);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let b = l.block(i, j);
            if b.max_abs() <= 1e-8 * block_scale {
                continue;
            }
            let neg = b.scale(-1.0);
            // inverting B amplifies rounding in R, so this check is looser
            if neg.asymmetry() > 1e-6 * block_scale {
                return Err(Error::InvalidResistance(format!(
                    "Laplacian block ({}, {}) is not symmetric",
                    i + 1,
                    j + 1
                )));
            }
            let w = inverse_symmetric(&neg.symmetrized())
                .ok()
                .and_then(|w| PdWeight::new(w).ok())
                .ok_or(Error::NotPositiveDefinite(i, j))?;
            edges.push(((i, j), w.matrix().clone()));
        }
    }
    if edges.len() != n - 1 {
        return Err(Error::NotTree);
    }
    let tree = MwGraph::new(n, k, edges).map_err(|e| match e {
        Error::Disconnected => Error::NotTree,
        other => other,
    })?;

    let mismatch = block_resistance(&tree)?.max_abs_diff(r);
    if mismatch > 1e-6 * scale {
        return Err(Error::InvalidResistance(format!(
            "recovered tree does not reproduce R (mismatch {mismatch:e})"
        )));
    }
    Ok(tree)
}

/// Parses the `.rblk` format: a header `n k`, then `nk` rows of `nk` numbers.
pub fn parse_rblk(text: &str) -> Result<BlockMatrix> {
    let mut lines = data_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing header line \"n k\""))?;
    let [n, k] = parse_usizes::<2>(hline, header)?;
    if n < 1 {
        return Err(Error::Empty);
    }
    if k < 1 {
        return Err(Error::parse(hline, "block order k must be at least 1"));
    }
    let order = n * k;
    let mut rows = Vec::with_capacity(order);
    for r in 0..order {
        let (line, text) = lines
            .next()
            .ok_or_else(|| Error::parse(hline, format!("expected {order} rows, found {r}")))?;
        rows.push(parse_floats(line, text, order)?);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "unexpected data after the last row"));
    }
    BlockMatrix::from_matrix(Matrix::from_rows(&rows), n, k)
}

/// Renders a block matrix in `.rblk` form.
pub fn to_rblk(r: &BlockMatrix) -> String {
    let mut s = format!("{} {}\n", r.n(), r.k());
    let m = r.as_matrix();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|&x| format_number(x)).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar(x: f64) -> Matrix {
        Matrix::from_rows(&[[x]])
    }

    fn weighted_path() -> MwGraph {
        MwGraph::new(3, 1, vec![((0, 1), scalar(2.0)), ((1, 2), scalar(5.0))]).unwrap()
    }

    #[test]
    fn one_inverse_of_single_edge() {
        let w = Matrix::from_rows(&[[2.0, 0.5], [0.5, 1.0]]);
        let g = MwGraph::new(2, 2, vec![((0, 1), w.clone())]).unwrap();
        let g1 = tree_one_inverse(&g).unwrap();
        assert!(g1.block(0, 0).max_abs_diff(&w) < 1e-14);
        assert_eq!(g1.block(0, 1).max_abs(), 0.0);
        assert_eq!(g1.block(1, 1).max_abs(), 0.0);
    }

    #[test]
    fn one_inverse_of_weighted_path() {
        let g1 = tree_one_inverse(&weighted_path()).unwrap();
        let want = Matrix::from_rows(&[[7.0, 5.0, 0.0], [5.0, 5.0, 0.0], [0.0, 0.0, 0.0]]);
        assert!(g1.as_matrix().max_abs_diff(&want) < 1e-13);
        let l = block_laplacian(&weighted_path());
        let back = l.mul(&g1).unwrap().mul(&l).unwrap();
        assert!(back.max_abs_diff(&l) < 1e-14);
    }

    #[test]
    fn one_inverse_requires_tree() {
        let k3 = crate::graph::Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let g = MwGraph::lift(&k3, 1).unwrap();
        assert_eq!(tree_one_inverse(&g), Err(Error::NotTree));
    }

    #[test]
    fn reconstruct_worked_path() {
        let r = BlockMatrix::from_matrix(
            Matrix::from_rows(&[[0.0, 2.0, 7.0], [2.0, 0.0, 5.0], [7.0, 5.0, 0.0]]),
            3,
            1,
        )
        .unwrap();
        let t = reconstruct_tree(&r).unwrap();
        assert_eq!(t.graph().edges(), &[(0, 1), (1, 2)]);
        assert!((t.weight(0, 1).unwrap().matrix()[(0, 0)] - 2.0).abs() < 1e-12);
        assert!((t.weight(1, 2).unwrap().matrix()[(0, 0)] - 5.0).abs() < 1e-12);
        assert_eq!(t.to_mwg(), "3 2 1\n1 2\n2\n2 3\n5\n");
    }

    #[test]
    fn reconstruct_single_edge() {
        let w = Matrix::from_rows(&[[3.0, 1.0], [1.0, 2.0]]);
        let g = MwGraph::new(2, 2, vec![((0, 1), w.clone())]).unwrap();
        let t = reconstruct_tree(&block_resistance(&g).unwrap()).unwrap();
        assert!(t.weight(0, 1).unwrap().matrix().max_abs_diff(&w) < 1e-12);
    }

    #[test]
    fn reconstruct_rejects_non_tree_resistance() {
        // resistance matrix of K3 is not that of any tree
        let r = BlockMatrix::from_matrix(
            Matrix::from_fn(3, 3, |i, j| if i == j { 0.0 } else { 2.0 / 3.0 }),
            3,
            1,
        )
        .unwrap();
        assert!(reconstruct_tree(&r).is_err());

        let asym =
            BlockMatrix::from_matrix(Matrix::from_rows(&[[0.0, 1.0], [2.0, 0.0]]), 2, 1).unwrap();
        assert!(matches!(
            reconstruct_tree(&asym),
            Err(Error::InvalidResistance(_))
        ));
    }

    #[test]
    fn rblk_round_trip() {
        let r = block_resistance(&weighted_path()).unwrap();
        let text = to_rblk(&r);
        assert_eq!(text, "3 1\n0 2 7\n2 0 5\n7 5 0\n");
        let back = parse_rblk(&text).unwrap();
        assert!(back.max_abs_diff(&r) < 1e-8);
        assert!(matches!(parse_rblk("2 1\n0 1\n"), Err(Error::Parse { .. })));
    }
}
