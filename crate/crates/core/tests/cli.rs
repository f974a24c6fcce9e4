use std::process::{Command, Output};

use serde_json::Value;

const T3N2: &str = r#"{"kind":"circular_nakayama","t":3,"n":2}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakayama-ext")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn rows(csv: &str) -> Vec<Vec<usize>> {
    csv.lines().skip(1).map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect()
}

#[test]
fn resolve_rows() {
    let out = stdout(&["resolve", "--algebra", T3N2, "--module", "simple:1", "--max-degree", "5"]);
    assert!(out.starts_with("degree,projective_index,multiplicity\n"));
    let expected: Vec<Vec<usize>> = (0..=5).map(|d| vec![d, 1 + d % 2, 1]).collect();
    assert_eq!(rows(&out), expected);

    let out = stdout(&["resolve", "--algebra", T3N2, "--module", "projective:1", "--max-degree", "5"]);
    assert_eq!(rows(&out), vec![vec![0, 1, 1]]);
}

#[test]
fn resolve_of_a_syzygy_is_shifted() {
    let base = rows(&stdout(&["resolve", "--algebra", T3N2, "--module", "simple:1", "--max-degree", "9"]));
    let shifted = rows(&stdout(&["resolve", "--algebra", T3N2, "--module", "syzygy:1:simple:1", "--max-degree", "8"]));
    let expected: Vec<Vec<usize>> = base[1..].iter().map(|r| vec![r[0] - 1, r[1], r[2]]).collect();
    assert_eq!(shifted, expected);
}

#[test]
fn ext_tables() {
    let fwd = stdout(&["ext", "--algebra", T3N2, "--module", "simple:1", "--target", "simple:2", "--max-degree", "10"]);
    assert!(fwd.starts_with("degree,dim\n"));
    assert_eq!(rows(&fwd), (1..=10).map(|i| vec![i, i % 2]).collect::<Vec<_>>());
    let bwd = stdout(&["ext", "--algebra", T3N2, "--module", "simple:2", "--target", "simple:1", "--max-degree", "10"]);
    assert!(rows(&bwd).iter().all(|r| r[1] == 0));
    let proj = stdout(&["ext", "--algebra", T3N2, "--module", "projective:1", "--target", "projective:1", "--max-degree", "10"]);
    assert!(rows(&proj).iter().all(|r| r[1] == 0));
    let gf2 = stdout(&["ext", "--algebra", T3N2, "--field-p", "2", "--module", "simple:1", "--target", "simple:2", "--max-degree", "10"]);
    assert_eq!(gf2, fwd);
}

#[test]
fn gaps_and_symmetry_json() {
    let g = json(&["gaps", "--algebra", T3N2, "--module", "simple:2", "--target", "simple:1", "--max-degree", "20"]);
    assert_eq!(g["verdict"], "gap-implies-all-zero-verified");
    assert_eq!(g["gap_start"], 1);
    assert_eq!(g["gap_length"], 2);
    assert_eq!(g["source"], "simple:2");

    let s = json(&["symmetry", "--algebra", T3N2, "--module", "simple:1", "--target", "simple:2", "--max-degree", "20"]);
    assert_eq!(s["classification"], "asymmetric");
    assert_eq!(s["vanishing_direction"], "target-to-source");
}

#[test]
fn report_for_a_symmetric_cell() {
    let r = json(&["report", "--algebra", r#"{"kind":"circular_nakayama","t":4,"n":4}"#, "--max-degree", "20"]);
    assert_eq!(r["r"], 0);
    assert_eq!(r["asymmetric_pairs"], 0);
    assert_eq!(r["pairs"].as_array().unwrap().len(), 16);
    assert!(r["violations"].as_array().unwrap().is_empty());
}

#[test]
fn small_sweep_and_config_files() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, r#"{"max_degree": 12, "workers": 2, "sweep": {"t": [2, 3], "n": [1, 2]}}"#).unwrap();
    let s = json(&["sweep", "--config", cfg.to_str().unwrap()]);
    let cells = s["cells"].as_array().unwrap();
    let keys: Vec<(u64, u64)> = cells.iter().map(|c| (c["t"].as_u64().unwrap(), c["n"].as_u64().unwrap())).collect();
    assert_eq!(keys, vec![(2, 1), (2, 2), (3, 1), (3, 2)]);
    assert!(cells.iter().all(|c| c["syzygy_formula"]["even_syzygies_verified"] == true));
    assert!(cells.iter().filter(|c| c["r"] == 0).all(|c| c["asymmetric_pairs"] == 0));
    assert!(cells[3]["asymmetric_pairs"].as_u64().unwrap() >= 1);
    assert_eq!(s["summary"]["cells"], 4);
    assert_eq!(s["max_degree"], 12);

    // flags win over the file
    let s = json(&["sweep", "--config", cfg.to_str().unwrap(), "--max-degree", "8"]);
    assert_eq!(s["max_degree"], 8);

    let alg = dir.path().join("alg.json");
    std::fs::write(&alg, T3N2).unwrap();
    let out = dir.path().join("ext.csv");
    let arg = format!("@{}", alg.display());
    stdout(&["ext", "--algebra", &arg, "--module", "simple:1", "--target", "simple:2", "--max-degree", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "degree,dim\n1,1\n2,0\n3,1\n4,0\n");
}

#[test]
fn config_errors_exit_with_2() {
    let cases: [&[&str]; 6] = [
        &["resolve", "--algebra", T3N2, "--module", "simple: 1"],
        &["resolve", "--algebra", T3N2, "--module", "simple:4"],
        &["resolve", "--algebra", r#"{"kind":"circular_nakayama","t":3,"n":2,"x":0}"#, "--module", "simple:1"],
        &["resolve", "--algebra", T3N2, "--field-p", "9", "--module", "simple:1"],
        &["ext", "--algebra", T3N2, "--module", "simple:1"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let out = run(&["resolve", "--algebra", T3N2, "--module", "simple:x"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("uniserial:<i>:<len>"));

    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    std::fs::write(&cfg, r#"{"max_degree": 4, "colour": "red"}"#).unwrap();
    assert_eq!(run(&["resolve", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn outputs_are_byte_identical() {
    let args = ["report", "--algebra", T3N2, "--max-degree", "16"];
    assert_eq!(stdout(&args), stdout(&args));
}
