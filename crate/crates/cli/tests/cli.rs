use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn resist_triangle() {
    let k3 = path("k3.grf");
    let out = stdout(&["resist", &k3]);
    assert!(out.contains("matrix resistance 3 3\n0 0.666666667 0.666666667\n"));
    assert!(out.contains("\nkirchhoff 2\n"));
    for m in ["eigen", "pinv", "det"] {
        let out = stdout(&["resist", &k3, "--method", m]);
        assert!(out.contains(&format!("method {m}\n")));
        assert!(out.contains("row_sums 1.33333333 1.33333333 1.33333333\n"));
    }
}

#[test]
fn regular_path_and_cycle() {
    let out = stdout(&["regular", &path("p3.grf")]);
    assert!(out.contains("verdict false\n"));
    assert!(out.contains("row_sums 3 2 3\n"));
    assert!(out.contains("cut_vertices 2\n"));
    assert_eq!(out.matches(" passed false ").count(), 10);

    let out = stdout(&["regular", &path("c4.grf")]);
    assert!(out.contains("verdict true\n"));
    assert!(out.contains("constant 2.5\n"));
}

#[test]
fn forests_with_oracle() {
    let out = stdout(&["forests", &path("c4.grf"), "--oracle"]);
    assert!(out.contains("spanning_trees 4\n"));
    assert!(out.contains("matrix two_forests 4 4\n0 3 4 3\n"));
    assert!(out.contains("oracle_agrees true\n"));
}

#[test]
fn blockresist_and_reconstruct() {
    let out = stdout(&["blockresist", &path("weighted.mwg")]);
    assert!(out.starts_with("n 3\nk 2\nmatrix resistance 6 6\n0 0 2 0.5 3 0.5\n"));
    assert!(out.contains("matrix kirchhoff 2 2\n6 1\n1 8\n"));
    assert_eq!(
        stdout(&["reconstruct", &path("path.rblk")]),
        "3 2 1\n1 2\n2\n2 3\n5\n"
    );
}

#[test]
fn json_carries_the_same_data() {
    let v: Value = serde_json::from_str(&stdout(&["--json", "resist", &path("k3.grf")])).unwrap();
    assert_eq!(v["n"], 3);
    assert!((v["kirchhoff"].as_f64().unwrap() - 2.0).abs() < 1e-12);
    assert!((v["resistance"][0][1].as_f64().unwrap() - 2.0 / 3.0).abs() < 1e-12);

    let v: Value = serde_json::from_str(&stdout(&["regular", "--json", &path("p3.grf")])).unwrap();
    assert_eq!(v["verdict"], false);
    assert_eq!(v["cut_vertices"], serde_json::json!([2]));
    assert_eq!(v["criterion"].as_array().unwrap().len(), 10);
    assert_eq!(v["criterion"][0]["id"], "a");

    let v: Value =
        serde_json::from_str(&stdout(&["--json", "reconstruct", &path("path.rblk")])).unwrap();
    assert_eq!(v["edge"][1]["id"], "2-3");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["resist", &path("missing.grf")]), 1);
    assert_eq!(code(&["resist", &path("split.grf")]), 1);
    assert_eq!(code(&["resist", &path("k3.grf"), "--method", "qr"]), 1);
    assert_eq!(code(&["resist", &path("k3.grf"), "--unknown"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["regular", &path("k3.grf"), "--tol", "-1"]), 1);
    assert_eq!(code(&["--help"]), 0);

    let out = run(&["resist", &path("bad.grf")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}
