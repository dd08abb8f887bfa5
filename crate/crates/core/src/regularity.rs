//! Resistance-regularity: a graph is resistance regular when every row of its
//! resistance matrix has the same sum. The report evaluates ten equivalent
//! characterizations independently and refuses to answer if they disagree.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{cut_vertices, laplacian, Graph};
use crate::linalg::{determinant, inverse_symmetric, principal_minor, Matrix};
use crate::resistance::{
    kirchhoff_index, laplacian_pinv, laplacian_spectrum, resistance_matrix, row_sums,
    ResistanceMatrix, ResistanceMethod,
};

/// Relative tolerance for "constant" and "equal" comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// The equivalent characterizations of resistance regularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Criterion {
    /// (a) all row sums of `R` are equal.
    RowSums,
    /// (b) `L⁺_ii = Kf/n²` for every `i`.
    PinvDiagonal,
    /// (c) `r_ij + 2 L⁺_ij` is the same for all `i, j`.
    ResistancePlusPinv,
    /// (d) `R = 2 (L⁺_00 J − L⁺)`.
    ResistanceFromPinv,
    /// (e) every bottleneck matrix has the same entry sum.
    BottleneckTotals,
    /// (f) `Σ_{λ≠0} c_ik² / λ` is the same for every vertex `i`.
    SpectralDiagonal,
    /// (g) every order-`(n−1)` principal minor of `L + J/n` equals `t (1 + Kf/n)`.
    PrincipalMinors,
    /// (h) `Σ_{j∈N(i)} L⁺_ij = d_i Kf/n² + 1/n − 1` for every `i`.
    NeighborPinvSums,
    /// (i) `Σ_{j∈N(i)} r_ij = 2 − 2/n` for every `i`.
    NeighborResistanceSums,
    /// (j) `d_v − d_u = yᵀP⁻¹y − xᵀP⁻¹x` for `u = 0` and every `v`, with the
    /// blocks taken from `L + J/n`.
    SchurPairs,
}

impl Criterion {
    pub const ALL: [Criterion; 10] = [
        Self::RowSums,
        Self::PinvDiagonal,
        Self::ResistancePlusPinv,
        Self::ResistanceFromPinv,
        Self::BottleneckTotals,
        Self::SpectralDiagonal,
        Self::PrincipalMinors,
        Self::NeighborPinvSums,
        Self::NeighborResistanceSums,
        Self::SchurPairs,
    ];

    /// Single-letter label `a` through `j`.
    pub fn id(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::RowSums => "equal-row-sums",
            Self::PinvDiagonal => "pinv-diagonal",
            Self::ResistancePlusPinv => "resistance-plus-pinv",
            Self::ResistanceFromPinv => "resistance-from-pinv",
            Self::BottleneckTotals => "bottleneck-totals",
            Self::SpectralDiagonal => "spectral-diagonal",
            Self::PrincipalMinors => "principal-minors",
            Self::NeighborPinvSums => "neighbor-pinv-sums",
            Self::NeighborResistanceSums => "neighbor-resistance-sums",
            Self::SchurPairs => "schur-pairs",
        }
    }
}

/// Vertices or vertex pairs responsible for the largest deviation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    None,
    /// For constancy checks: the vertices attaining the maximum and the
    /// minimum. For target checks: the worst vertex.
    Vertices(Vec<usize>),
    Pairs(Vec<(usize, usize)>),
}

impl fmt::Display for Witness {
    /// 1-based ids, pairs joined with `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = match self {
            Witness::None => Vec::new(),
            Witness::Vertices(v) => v.iter().map(|x| (x + 1).to_string()).collect(),
            Witness::Pairs(p) => p
                .iter()
                .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
                .collect(),
        };
        write!(f, "{}", items.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionRecord {
    pub criterion: Criterion,
    pub passed: bool,
    pub max_deviation: f64,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegularityReport {
    pub verdict: bool,
    /// Common row sum `2 Kf / n`, present when the verdict is true.
    pub constant: Option<f64>,
    pub kirchhoff: f64,
    pub row_sums: Vec<f64>,
    pub cut_vertices: Vec<usize>,
    pub degree_regular: bool,
    pub tolerance: f64,
    pub criteria: Vec<CriterionRecord>,
}

impl RegularityReport {
    pub fn record(&self, c: Criterion) -> &CriterionRecord {
        self.criteria
            .iter()
            .find(|r| r.criterion == c)
            .expect("every criterion is evaluated")
    }
}

/// `L(v)⁻¹` together with its entry sum.
#[derive(Debug, Clone, PartialEq)]
pub struct BottleneckMatrix {
    pub vertex: usize,
    pub matrix: Matrix,
    pub total: f64,
}

pub fn bottleneck_matrix(g: &Graph, v: usize) -> Result<BottleneckMatrix> {
    g.require_connected()?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let reduced = laplacian(g).without(&[v], &[v]);
    let matrix = inverse_symmetric(&reduced)?;
    let total = matrix.sum();
    Ok(BottleneckMatrix {
        vertex: v,
        matrix,
        total,
    })
}

/// `|(d_v − d_u) − (yᵀP⁻¹y − xᵀP⁻¹x)|` where `P`, `x`, `y` come from
/// partitioning `L + J/n` around `u` and `v`.
pub fn schur_pair_deviation(g: &Graph, u: usize, v: usize) -> Result<f64> {
    g.require_connected()?;
    let n = g.n();
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let m = &laplacian(g) + &Matrix::ones(n).scale(1.0 / n as f64);
    let rest: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
    let p = m.without(&[u, v], &[u, v]);
    let x: Vec<f64> = rest.iter().map(|&w| m[(w, u)]).collect();
    let y: Vec<f64> = rest.iter().map(|&w| m[(w, v)]).collect();
    let (qx, qy) = if rest.is_empty() {
        (0.0, 0.0)
    } else {
        let pinv = inverse_symmetric(&p)?;
        (pinv.quadratic_form(&x), pinv.quadratic_form(&y))
    };
    let lhs = g.degree(v) as f64 - g.degree(u) as f64;
    Ok((lhs - (qy - qx)).abs())
}

pub fn regularity_report(g: &Graph) -> Result<RegularityReport> {
    regularity_report_with_tolerance(g, DEFAULT_TOLERANCE)
}

pub fn regularity_report_with_tolerance(g: &Graph, tol: f64) -> Result<RegularityReport> {
    g.require_connected()?;
    let n = g.n();
    let nf = n as f64;
    let l = laplacian(g);
    let lp = laplacian_pinv(g)?;
    let spectrum = laplacian_spectrum(g)?;
    let r = resistance_matrix(g, ResistanceMethod::Det)?;
    let rows = row_sums(&r);
    let kf = kirchhoff_index(g)?;
    let trees = if n == 1 {
        1.0
    } else {
        principal_minor(&l, &[0])?
    };
    let cuts = cut_vertices(g);

    let criteria: Vec<CriterionRecord> = Criterion::ALL
        .iter()
        .map(|&c| {
            let (deviation, passed, witness) = match c {
                Criterion::RowSums => constancy(&rows, tol),
                Criterion::PinvDiagonal => {
                    let diag = lp.diag();
                    against_target(&diag, &vec![kf / (nf * nf); n], tol)
                }
                Criterion::ResistancePlusPinv => pair_constancy(&r, &lp, tol),
                Criterion::ResistanceFromPinv => resistance_from_pinv(&r, &lp, tol),
                Criterion::BottleneckTotals => {
                    let totals = (0..n)
                        .map(|v| bottleneck_matrix(g, v).map(|b| b.total))
                        .collect::<Result<Vec<_>>>()?;
                    constancy(&totals, tol)
                }
                Criterion::SpectralDiagonal => {
                    let values: Vec<f64> = (0..n)
                        .map(|i| {
                            (0..n)
                                .filter(|&k| !spectrum.is_zero(k))
                                .map(|k| spectrum.vectors[(i, k)].powi(2) / spectrum.values[k])
                                .sum()
                        })
                        .collect();
                    constancy(&values, tol)
                }
                Criterion::PrincipalMinors => {
                    let shifted = &l + &Matrix::ones(n).scale(1.0 / nf);
                    let minors = (0..n)
                        .map(|i| determinant(&shifted.without(&[i], &[i])))
                        .collect::<Result<Vec<_>>>()?;
                    against_target(&minors, &vec![trees * (1.0 + kf / nf); n], tol)
                }
                Criterion::NeighborPinvSums => {
                    let sums: Vec<f64> = (0..n)
                        .map(|i| g.neighbors(i).iter().map(|&j| lp[(i, j)]).sum())
                        .collect();
                    let targets: Vec<f64> = (0..n)
                        .map(|i| g.degree(i) as f64 * kf / (nf * nf) + 1.0 / nf - 1.0)
                        .collect();
                    if n == 1 {
                        (0.0, true, Witness::None)
                    } else {
                        against_target(&sums, &targets, tol)
                    }
                }
                Criterion::NeighborResistanceSums => {
                    let sums: Vec<f64> = (0..n)
                        .map(|i| g.neighbors(i).iter().map(|&j| r.get(i, j)).sum())
                        .collect();
                    if n == 1 {
                        (0.0, true, Witness::None)
                    } else {
                        against_target(&sums, &vec![2.0 - 2.0 / nf; n], tol)
                    }
                }
                Criterion::SchurPairs => {
                    let mut worst = 0.0;
                    let mut at = None;
                    for v in 1..n {
                        let d = schur_pair_deviation(g, 0, v)?;
                        if d > worst || at.is_none() {
                            worst = d;
                            at = Some(v);
                        }
                    }
                    let scale = g.degrees().into_iter().max().unwrap_or(0).max(1) as f64;
                    let witness = at.map_or(Witness::None, |v| Witness::Pairs(vec![(0, v)]));
                    (worst, worst <= tol * scale, witness)
                }
            };
            Ok(CriterionRecord {
                criterion: c,
                passed,
                max_deviation: deviation,
                witness,
            })
        })
        .collect::<Result<_>>()?;

    let verdict = criteria[0].passed;
    let disagreeing: Vec<String> = criteria
        .iter()
        .filter(|rec| rec.passed != verdict)
        .map(|rec| format!("({}) deviation {:e}", rec.criterion.id(), rec.max_deviation))
        .collect();
    if !disagreeing.is_empty() {
        return Err(Error::Inconsistent(format!(
            "regularity criteria disagree with row sums (verdict {verdict}): {}",
            disagreeing.join(", ")
        )));
    }
    if verdict && !cuts.is_empty() {
        return Err(Error::Inconsistent(format!(
            "resistance regular verdict on a graph with cut vertex {}",
            cuts[0] + 1
        )));
    }

    Ok(RegularityReport {
        verdict,
        constant: verdict.then(|| 2.0 * kf / nf),
        kirchhoff: kf,
        row_sums: rows,
        cut_vertices: cuts,
        degree_regular: g.is_degree_regular(),
        tolerance: tol,
        criteria,
    })
}

/// `max − min ≤ tol · max(1, |mean|)`; witness is `[argmax, argmin]`.
fn constancy(values: &[f64], tol: f64) -> (f64, bool, Witness) {
    if values.is_empty() {
        return (0.0, true, Witness::None);
    }
    let (mut hi, mut lo) = (0, 0);
    for (i, v) in values.iter().enumerate() {
        if *v > values[hi] {
            hi = i;
        }
        if *v < values[lo] {
            lo = i;
        }
    }
    let spread = values[hi] - values[lo];
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    (
        spread,
        spread <= tol * mean.abs().max(1.0),
        Witness::Vertices(vec![hi, lo]),
    )
}

/// `max |x_i − target_i| ≤ tol · max(1, max |target|)`; witness is the worst vertex.
fn against_target(values: &[f64], targets: &[f64], tol: f64) -> (f64, bool, Witness) {
    let mut worst = 0.0;
    let mut at = 0;
    for (i, (v, t)) in values.iter().zip(targets).enumerate() {
        let d = (v - t).abs();
        if d > worst {
            worst = d;
            at = i;
        }
    }
    let scale = targets.iter().fold(1.0_f64, |m, t| m.max(t.abs()));
    let witness = if values.is_empty() {
        Witness::None
    } else {
        Witness::Vertices(vec![at])
    };
    (worst, worst <= tol * scale, witness)
}

fn pair_constancy(r: &ResistanceMatrix, lp: &Matrix, tol: f64) -> (f64, bool, Witness) {
    let n = r.n();
    let mut values = Vec::with_capacity(n * n);
    let mut pairs = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            values.push(r.get(i, j) + 2.0 * lp[(i, j)]);
            pairs.push((i, j));
        }
    }
    let (spread, passed, witness) = constancy(&values, tol);
    let witness = match witness {
        Witness::Vertices(idx) => Witness::Pairs(idx.into_iter().map(|k| pairs[k]).collect()),
        other => other,
    };
    (spread, passed, witness)
}

fn resistance_from_pinv(r: &ResistanceMatrix, lp: &Matrix, tol: f64) -> (f64, bool, Witness) {
    let n = r.n();
    let mut worst = 0.0;
    let mut at = (0, 0);
    for i in 0..n {
        for j in 0..n {
            let d = (r.get(i, j) - 2.0 * (lp[(0, 0)] - lp[(i, j)])).abs();
            if d > worst {
                worst = d;
                at = (i, j);
            }
        }
    }
    let scale = r.matrix().max_abs().max(1.0);
    (worst, worst <= tol * scale, Witness::Pairs(vec![at]))
}

/// Whether every edge has the same resistance (equivalently, lies in the same
/// number of spanning trees).
#[derive(Debug, Clone, PartialEq)]
pub enum Equiarboreal {
    Yes {
        resistance: f64,
    },
    No {
        low_edge: (usize, usize),
        low: f64,
        high_edge: (usize, usize),
        high: f64,
    },
}

impl Equiarboreal {
    pub fn holds(&self) -> bool {
        matches!(self, Equiarboreal::Yes { .. })
    }
}

/// Equiarboreal iff `max_e r_e − min_e r_e ≤ 1e-9`.
pub fn is_equiarboreal(g: &Graph) -> Result<Equiarboreal> {
    g.require_connected()?;
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let r = resistance_matrix(g, ResistanceMethod::Det)?;
    let values: Vec<(f64, (usize, usize))> = g
        .edges()
        .iter()
        .map(|&(i, j)| (r.get(i, j), (i, j)))
        .collect();
    let (low, low_edge) = values
        .iter()
        .copied()
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .expect("at least one edge");
    let (high, high_edge) = values
        .iter()
        .copied()
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .expect("at least one edge");
    if high - low <= 1e-9 {
        let resistance = values.iter().map(|v| v.0).sum::<f64>() / values.len() as f64;
        Ok(Equiarboreal::Yes { resistance })
    } else {
        Ok(Equiarboreal::No {
            low_edge,
            low,
            high_edge,
            high,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn triangle_is_resistance_regular() {
        let rep = regularity_report(&k(3)).unwrap();
        assert!(rep.verdict);
        assert!((rep.constant.unwrap() - 4.0 / 3.0).abs() < 1e-12);
        assert!(rep.criteria.iter().all(|c| c.passed));
    }

    #[test]
    fn path_is_not() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let rep = regularity_report(&p3).unwrap();
        assert!(!rep.verdict);
        assert_eq!(rep.cut_vertices, vec![1]);
        for (got, want) in rep.row_sums.iter().zip([3.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        let a = rep.record(Criterion::RowSums);
        assert!((a.max_deviation - 1.0).abs() < 1e-12);
        assert_eq!(a.witness, Witness::Vertices(vec![0, 1]));
        assert!(rep.criteria.iter().all(|c| !c.passed));
    }

    #[test]
    fn four_cycle_is_resistance_regular() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let rep = regularity_report(&c4).unwrap();
        assert!(rep.verdict);
        assert!((rep.constant.unwrap() - 2.5).abs() < 1e-12);
    }

    #[test]
    fn degenerate_orders() {
        let one = Graph::new(1, []).unwrap();
        let rep = regularity_report(&one).unwrap();
        assert!(rep.verdict);
        assert_eq!(rep.constant, Some(0.0));
        let two = Graph::new(2, [(0, 1)]).unwrap();
        assert!(regularity_report(&two).unwrap().verdict);
    }

    #[test]
    fn bottleneck_examples() {
        let b = bottleneck_matrix(&k(3), 1).unwrap();
        let want = Matrix::from_rows(&[[2.0, 1.0], [1.0, 2.0]]).scale(1.0 / 3.0);
        assert!(b.matrix.max_abs_diff(&want) < 1e-14);
        assert!((b.total - 2.0).abs() < 1e-14);

        let p2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(
            bottleneck_matrix(&p2, 0).unwrap().matrix,
            Matrix::identity(1)
        );

        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let b = bottleneck_matrix(&p3, 1).unwrap();
        assert!(b.matrix.max_abs_diff(&Matrix::identity(2)) < 1e-15);
    }

    #[test]
    fn equiarboreal_examples() {
        match is_equiarboreal(&k(4)).unwrap() {
            Equiarboreal::Yes { resistance } => assert!((resistance - 0.5).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        match is_equiarboreal(&p3).unwrap() {
            Equiarboreal::Yes { resistance } => assert!((resistance - 1.0).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
        // triangle 0-1-2 with pendant 0-3
        let paw = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        match is_equiarboreal(&paw).unwrap() {
            Equiarboreal::No {
                high_edge,
                high,
                low,
                ..
            } => {
                assert_eq!(high_edge, (0, 3));
                assert!((high - 1.0).abs() < 1e-12);
                assert!((low - 2.0 / 3.0).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
        // two triangles sharing a vertex: every edge has resistance 2/3
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        match is_equiarboreal(&bowtie).unwrap() {
            Equiarboreal::Yes { resistance } => assert!((resistance - 2.0 / 3.0).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            is_equiarboreal(&Graph::new(1, []).unwrap()),
            Err(Error::NoEdges)
        );
    }

    #[test]
    fn schur_deviation_any_reference_vertex() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert!(schur_pair_deviation(&c4, u, v).unwrap() < 1e-12);
                }
            }
        }
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(schur_pair_deviation(&p3, 0, 1).unwrap() > 0.1);
    }

    #[test]
    fn witness_display_is_one_based() {
        assert_eq!(Witness::Vertices(vec![0, 2]).to_string(), "1 3");
        assert_eq!(Witness::Pairs(vec![(0, 1)]).to_string(), "1-2");
        assert_eq!(Criterion::SchurPairs.id(), 'j');
    }
}
