//! `resgraph`: resistance distances, forest counts and resistance-regularity
//! from the command line.
//!
//! Exit status: 0 on success, 1 for bad input or usage, 2 when two routes
//! that must agree do not (an internal inconsistency).

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use resgraph::block::{
    block_kirchhoff, block_resistance, lr_identity_residual, parse_mwg, parse_rblk,
    reconstruct_tree, tau, tau_sum_residual, MwGraph,
};
use resgraph::forests::{
    enumerate_forests, forest_identities, spanning_tree_count, TreeCountMethod,
};
use resgraph::regularity::{
    is_equiarboreal, regularity_report_with_tolerance, Equiarboreal, Witness, DEFAULT_TOLERANCE,
};
use resgraph::resistance::{kirchhoff_index, resistance_matrix, row_sums, ResistanceMethod};
use resgraph::{parse_graph, Error, Graph};

use report::{Field, Report};

#[derive(Parser)]
#[command(
    name = "resgraph",
    version,
    about = "Resistance distances and related graph invariants"
)]
struct Cli {
    /// Emit one JSON object instead of the plain-text layout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Resistance matrix, Kirchhoff index and row sums of a .grf graph.
    Resist {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Eigen)]
        method: Method,
    },
    /// Evaluate every resistance-regularity criterion.
    Regular {
        file: PathBuf,
        /// Relative tolerance for constancy checks.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Spanning tree and 2-forest counts with their identities.
    Forests {
        file: PathBuf,
        /// Also count by exhaustive enumeration and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Block resistance, block Kirchhoff index and identity residuals of a .mwg graph.
    Blockresist { file: PathBuf },
    /// Rebuild a matrix-weighted tree from a .rblk resistance matrix.
    Reconstruct { file: PathBuf },
    /// Run the built-in invariant suites.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Eigen,
    Pinv,
    Det,
}

impl From<Method> for ResistanceMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Eigen => ResistanceMethod::Eigen,
            Method::Pinv => ResistanceMethod::Pinv,
            Method::Det => ResistanceMethod::Det,
        }
    }
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

enum Output {
    Report(Report),
    Raw(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let json = cli.json;
    match run(cli.command, json) {
        Ok((out, code)) => {
            match out {
                Output::Report(r) if json => print!("{}", r.render_json()),
                Output::Report(r) => print!("{}", r.render_text()),
                Output::Raw(s) => print!("{s}"),
            }
            ExitCode::from(code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Failure {
    match e {
        Error::Parse { .. } => Failure::Input(format!("{}: {e}", path.display())),
        other => other.into(),
    }
}

fn run(cmd: Command, json: bool) -> Result<(Output, u8), Failure> {
    let report = match cmd {
        Command::Resist { file, method } => resist(&load_graph(&file)?, method.into())?,
        Command::Regular { file, tol } => regular(&load_graph(&file)?, tol)?,
        Command::Forests { file, oracle } => forests(&load_graph(&file)?, oracle)?,
        Command::Blockresist { file } => {
            let g = parse_mwg(&read(&file)?).map_err(|e| in_file(&file, e))?;
            blockresist(&g)?
        }
        Command::Reconstruct { file } => {
            let r = parse_rblk(&read(&file)?).map_err(|e| in_file(&file, e))?;
            let tree = reconstruct_tree(&r)?;
            if !json {
                return Ok((Output::Raw(tree.to_mwg()), 0));
            }
            mw_report(&tree)
        }
        Command::Selftest => return Ok(selftest()),
    };
    Ok((Output::Report(report), 0))
}

fn one_based(v: &[usize]) -> Vec<u64> {
    v.iter().map(|&x| x as u64 + 1).collect()
}

fn resist(g: &Graph, method: ResistanceMethod) -> Result<Report, Failure> {
    let r = resistance_matrix(g, method)?;
    let mut out = Report::new();
    out.int("n", g.n() as u64)
        .text("method", method.name())
        .matrix("resistance", r.matrix())
        .num("kirchhoff", kirchhoff_index(g)?)
        .push("row_sums", Field::Nums(row_sums(&r)));
    Ok(out)
}

fn witness_field(w: &Witness) -> Field {
    match w {
        Witness::None => Field::Words(vec![]),
        _ => Field::Words(w.to_string().split(' ').map(str::to_string).collect()),
    }
}

fn regular(g: &Graph, tol: f64) -> Result<Report, Failure> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Failure::Input(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let r = regularity_report_with_tolerance(g, tol)?;
    let mut out = Report::new();
    out.int("n", g.n() as u64)
        .push("verdict", Field::Bool(r.verdict))
        .push("constant", r.constant.map_or(Field::Absent, Field::Num))
        .num("kirchhoff", r.kirchhoff)
        .push("row_sums", Field::Nums(r.row_sums.clone()))
        .push("cut_vertices", Field::Ints(one_based(&r.cut_vertices)))
        .push("degree_regular", Field::Bool(r.degree_regular))
        .num("tolerance", r.tolerance);
    let records = r
        .criteria
        .iter()
        .map(|c| {
            (
                c.criterion.id().to_string(),
                vec![
                    ("name".to_string(), Field::Text(c.criterion.name().into())),
                    ("passed".to_string(), Field::Bool(c.passed)),
                    ("deviation".to_string(), Field::Num(c.max_deviation)),
                    ("witness".to_string(), witness_field(&c.witness)),
                ],
            )
        })
        .collect();
    out.push("criterion", Field::Records(records));
    if g.edge_count() > 0 {
        match is_equiarboreal(g)? {
            Equiarboreal::Yes { resistance } => {
                out.push("equiarboreal", Field::Bool(true))
                    .num("edge_resistance", resistance);
            }
            Equiarboreal::No {
                low_edge,
                low,
                high_edge,
                high,
            } => {
                let edge = |(a, b): (usize, usize)| format!("{}-{}", a + 1, b + 1);
                out.push("equiarboreal", Field::Bool(false))
                    .text("low_edge", edge(low_edge))
                    .num("low_resistance", low)
                    .text("high_edge", edge(high_edge))
                    .num("high_resistance", high);
            }
        }
    }
    Ok(out)
}

fn forests(g: &Graph, oracle: bool) -> Result<Report, Failure> {
    let f = forest_identities(g)?;
    let eigen_trees = spanning_tree_count(g, TreeCountMethod::Eigen)?;
    if eigen_trees != f.trees {
        return Err(Failure::Internal(format!(
            "spanning trees: {} by determinant, {eigen_trees} by eigenvalues",
            f.trees
        )));
    }
    let mut out = Report::new();
    out.int("n", g.n() as u64)
        .int("edges", g.edge_count() as u64)
        .int("spanning_trees", f.trees)
        .push("two_forests", Field::IntMatrix(f.separating.clone()))
        .num("kirchhoff", f.kirchhoff)
        .int("pair_total", f.pair_total)
        .num("pair_residual", f.pair_residual)
        .push("row_totals", Field::Ints(f.row_totals.clone()))
        .push("row_residuals", Field::Nums(f.row_residuals.clone()));
    if oracle {
        let e = enumerate_forests(g)?;
        if e.trees != f.trees || e.separating != f.separating {
            return Err(Failure::Internal(
                "enumeration disagrees with determinant counts".into(),
            ));
        }
        out.int("oracle_spanning_trees", e.trees)
            .int("oracle_two_forests", e.two_forests)
            .push("oracle_agrees", Field::Bool(true));
    }
    Ok(out)
}

fn blockresist(g: &MwGraph) -> Result<Report, Failure> {
    let taus = tau(g)?;
    let mut out = Report::new();
    out.int("n", g.n() as u64)
        .int("k", g.k() as u64)
        .matrix("resistance", block_resistance(g)?.as_matrix())
        .matrix("kirchhoff", &block_kirchhoff(g)?)
        .num("lr_residual", lr_identity_residual(g)?)
        .num("tau_sum_residual", tau_sum_residual(&taus, g.k()));
    let stacked: Vec<Vec<f64>> = taus.iter().flat_map(|t| t.to_rows()).collect();
    out.push("tau", Field::Matrix(stacked));
    Ok(out)
}

fn mw_report(t: &MwGraph) -> Report {
    let mut out = Report::new();
    out.int("n", t.n() as u64).int("k", t.k() as u64);
    let edges = t
        .weighted_edges()
        .map(|((i, j), w)| {
            (
                format!("{}-{}", i + 1, j + 1),
                vec![("weight".to_string(), Field::Matrix(w.matrix().to_rows()))],
            )
        })
        .collect();
    out.push("edge", Field::Records(edges));
    out
}

fn selftest() -> (Output, u8) {
    let suites = resgraph::selftest::run();
    let mut out = Report::new();
    let records = suites
        .iter()
        .map(|s| {
            let mut fields = vec![
                ("passed".to_string(), Field::Bool(s.passed())),
                ("cases".to_string(), Field::Int(s.cases as u64)),
                ("failures".to_string(), Field::Int(s.failures.len() as u64)),
            ];
            if let Some(first) = s.failures.first() {
                fields.push(("first_failure".to_string(), Field::Text(first.clone())));
            }
            (s.name.to_string(), fields)
        })
        .collect();
    out.push("suite", Field::Records(records));
    let passed = suites.iter().filter(|s| s.passed()).count();
    out.int("suites", suites.len() as u64)
        .int("passed", passed as u64)
        .push("ok", Field::Bool(passed == suites.len()));
    let code = if passed == suites.len() { 0 } else { 2 };
    (Output::Report(out), code)
}
