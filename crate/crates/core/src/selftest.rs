//! Invariant suites over the built-in corpus. Each suite cross-checks
//! independent routes to the same quantity.

use crate::block::{
    block_kirchhoff, block_laplacian, block_pinv, block_resistance, kirchhoff_from_pinv,
    lr_identity_residual, reconstruct_tree, tau, tau_sum_residual, BlockMatrix, MwGraph,
};
use crate::corpus::{self, DEFAULT_SEED};
use crate::error::Result;
use crate::forests::{
    enumerate_forests, forest_identities, spanning_tree_count, two_forest_matrix,
    ForestCountMethod, TreeCountMethod, ENUMERATION_EDGE_CAP,
};
use crate::graph::{laplacian, Graph};
use crate::linalg::{penrose_residual, Matrix};
use crate::regularity::regularity_report;
use crate::resistance::{
    kirchhoff_index, laplacian_pinv, resistance_matrix, row_sums, ResistanceMethod,
};

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type GraphCheck = fn(&Graph) -> Result<Option<String>>;
type WeightedCheck = fn(&MwGraph) -> Result<Option<String>>;

/// Runs every suite on the standard corpus plus seeded random weighted graphs.
pub fn run() -> Vec<SuiteResult> {
    let graphs = corpus::standard_corpus();
    let weighted = corpus::random_mw_graphs(DEFAULT_SEED, 60, 6);
    let trees = corpus::random_mw_trees(DEFAULT_SEED + 1, 60, 8, 3);

    let graph_suites: [(&'static str, GraphCheck); 7] = [
        ("resistance-methods", resistance_methods),
        ("penrose-conditions", penrose_conditions),
        ("row-sum-theorem", row_sum_theorem),
        ("forest-oracle", forest_oracle),
        ("forest-identities", forest_counts),
        ("regularity-criteria", regularity),
        ("unit-weight-reduction", unit_weight_reduction),
    ];
    let mut out: Vec<SuiteResult> = graph_suites
        .iter()
        .map(|&(name, check)| suite(name, graphs.iter().map(|(l, g)| (l.clone(), g)), check))
        .collect();
    out.push(suite(
        "block-identities",
        weighted
            .iter()
            .enumerate()
            .map(|(i, g)| (format!("weighted-{i}"), g)),
        block_identities as WeightedCheck,
    ));
    out.push(suite(
        "tree-reconstruction",
        trees
            .iter()
            .enumerate()
            .map(|(i, g)| (format!("tree-{i}"), g)),
        tree_round_trip as WeightedCheck,
    ));
    out
}

fn suite<'a, T: 'a>(
    name: &'static str,
    cases: impl Iterator<Item = (String, &'a T)>,
    check: fn(&T) -> Result<Option<String>>,
) -> SuiteResult {
    let mut count = 0;
    let mut failures = Vec::new();
    for (label, case) in cases {
        count += 1;
        match check(case) {
            Ok(None) => {}
            Ok(Some(msg)) => failures.push(format!("{label}: {msg}")),
            Err(e) => failures.push(format!("{label}: {e}")),
        }
    }
    SuiteResult {
        name,
        cases: count,
        failures,
    }
}

fn exceeds(what: &str, dev: f64, tol: f64) -> Option<String> {
    (dev.is_nan() || dev > tol).then(|| format!("{what} deviates by {dev:e} (tolerance {tol:e})"))
}

fn resistance_methods(g: &Graph) -> Result<Option<String>> {
    let eig = resistance_matrix(g, ResistanceMethod::Eigen)?;
    let pinv = resistance_matrix(g, ResistanceMethod::Pinv)?;
    let det = resistance_matrix(g, ResistanceMethod::Det)?;
    let dev = eig
        .matrix()
        .max_abs_diff(pinv.matrix())
        .max(eig.matrix().max_abs_diff(det.matrix()));
    Ok(exceeds("resistance", dev, 1e-8))
}

fn penrose_conditions(g: &Graph) -> Result<Option<String>> {
    let l = laplacian(g);
    Ok(exceeds(
        "Penrose condition",
        penrose_residual(&l, &laplacian_pinv(g)?),
        1e-9,
    ))
}

fn row_sum_theorem(g: &Graph) -> Result<Option<String>> {
    let n = g.n() as f64;
    let kf = kirchhoff_index(g)?;
    let lp = laplacian_pinv(g)?;
    let rows = row_sums(&resistance_matrix(g, ResistanceMethod::Pinv)?);
    let dev = rows
        .iter()
        .enumerate()
        .map(|(i, r)| (r - (kf / n + n * lp[(i, i)])).abs())
        .fold(0.0, f64::max);
    Ok(exceeds("row sum", dev, 1e-8))
}

fn forest_oracle(g: &Graph) -> Result<Option<String>> {
    if g.edge_count() > ENUMERATION_EDGE_CAP {
        return Ok(None);
    }
    let e = enumerate_forests(g)?;
    let t = spanning_tree_count(g, TreeCountMethod::Det)?;
    let s = two_forest_matrix(g, ForestCountMethod::Det)?;
    Ok(if e.trees != t {
        Some(format!(
            "enumerated {} spanning trees, determinant gives {t}",
            e.trees
        ))
    } else if e.separating != s {
        Some("2-forest counts differ from determinants".into())
    } else {
        None
    })
}

fn forest_counts(g: &Graph) -> Result<Option<String>> {
    let r = forest_identities(g)?;
    Ok(exceeds(
        "forest identity",
        r.max_residual(),
        1e-6 * r.trees as f64,
    ))
}

fn regularity(g: &Graph) -> Result<Option<String>> {
    let r = regularity_report(g)?;
    Ok((!r.cut_vertices.is_empty() && r.verdict)
        .then(|| "resistance regular despite a cut vertex".into()))
}

fn unit_weight_reduction(g: &Graph) -> Result<Option<String>> {
    let w = MwGraph::lift(g, 1)?;
    let l = block_laplacian(&w);
    let p = block_pinv(&w)?;
    let r = block_resistance(&w)?;
    let kf = block_kirchhoff(&w)?;
    let dev = [
        l.as_matrix().max_abs_diff(&laplacian(g)),
        p.lplus.as_matrix().max_abs_diff(&laplacian_pinv(g)?),
        r.as_matrix()
            .max_abs_diff(resistance_matrix(g, ResistanceMethod::Eigen)?.matrix()),
        (kf[(0, 0)] - kirchhoff_index(g)?).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    Ok(exceeds("unit-weight quantity", dev, 1e-9))
}

fn block_identities(g: &MwGraph) -> Result<Option<String>> {
    let (n, k) = (g.n(), g.k());
    let p = block_pinv(g)?;
    let l = block_laplacian(g);
    let projector = BlockMatrix::identity(n, k)
        .sub(&BlockMatrix::ones_kron_identity(n, k).scale(1.0 / n as f64))?;
    let checks = [
        exceeds("L⊠R total", lr_identity_residual(g)?, 1e-7),
        exceeds("τ sum", tau_sum_residual(&tau(g)?, k), 1e-7),
        exceeds("L L⁺", l.mul(&p.lplus)?.max_abs_diff(&projector), 1e-8),
        exceeds(
            "Kf via L⁺",
            block_kirchhoff(g)?.max_abs_diff(&kirchhoff_from_pinv(&p.lplus)),
            1e-8,
        ),
    ];
    Ok(checks.into_iter().flatten().next())
}

fn tree_round_trip(t: &MwGraph) -> Result<Option<String>> {
    let back = reconstruct_tree(&block_resistance(t)?)?;
    if back.graph().edges() != t.graph().edges() {
        return Ok(Some("edge set changed".into()));
    }
    let dev = t
        .weighted_edges()
        .zip(back.weighted_edges())
        .map(|((_, a), (_, b))| relative_diff(a.matrix(), b.matrix()))
        .fold(0.0, f64::max);
    Ok(exceeds("weight", dev, 1e-6))
}

/// `max|a − b| / max|a|`.
pub fn relative_diff(a: &Matrix, b: &Matrix) -> f64 {
    a.max_abs_diff(b) / a.max_abs().max(f64::MIN_POSITIVE)
}
