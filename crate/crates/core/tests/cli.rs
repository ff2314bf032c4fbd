use std::path::PathBuf;
use std::process::Command;

use clap::Parser;
use knot_quandles::cli::{run, Cli};
use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Writes `contents` to a file private to this test run.
fn scratch(name: &str, contents: &str) -> String {
    let dir: PathBuf = std::env::temp_dir().join(format!("knot-quandles-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> knot_quandles::Result<String> {
    let argv = std::iter::once("knot-quandles").chain(args.iter().copied());
    run(&Cli::try_parse_from(argv).expect("arguments parse"))
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&cli(args).unwrap()).unwrap()
}

const S5_CLASS: &str = "conjclass:S5:(1,2)(3,4,5)";

#[test]
fn verify_quandle() {
    assert!(cli(&["verify-quandle", "--quandle", "trivial:4"]).unwrap().starts_with("pass: 4 elements"));
    assert!(cli(&["verify-quandle", "--quandle", "dihedral:3"]).unwrap().starts_with("pass"));
    let report = json(&["verify-quandle", "--quandle", S5_CLASS, "--json"]);
    assert_eq!(report["status"], "pass");
    assert_eq!(report["size"], 20);
}

#[test]
fn colorings() {
    let five_two = fixture("5_2_long.json");
    let out = cli(&["colorings", "--diagram", &five_two, "--quandle", S5_CLASS, "--basepoint", "(1,2)(3,4,5)"]);
    assert_eq!(out.unwrap(), "colorings: 7");

    let unknot = scratch("unknot.json", r#"{"kind":"long","over_arc":[],"sign":[]}"#);
    let listed = json(&["colorings", "--diagram", &unknot, "--quandle", "dihedral:3", "--basepoint", "2", "--json"]);
    assert_eq!(listed["count"], 1);
    assert_eq!(listed["colorings"][0], serde_json::json!([["2"]]));

    let tangle = fixture("t6_2.json");
    let base = ["--quandle", "conjgroup:A6", "--basepoint", "(1,2,3,4)(5,6)"];
    let mut args = vec!["colorings", "--diagram", &tangle];
    args.extend(base);
    assert!(cli(&args).is_err(), "tangles need --boundary-mono");
    args.push("--boundary-mono");
    assert_eq!(cli(&args).unwrap(), "colorings: 9");
}

#[test]
fn invariant() {
    let five_two = fixture("5_2_long.json");
    let q = ["--quandle", S5_CLASS, "--basepoint", "(1,2)(3,4,5)", "--act-on", "(1,2,3)(4,5)"];
    let mut args = vec!["invariant", "--diagram", &five_two];
    args.extend(q);
    assert_eq!(cli(&args).unwrap(), "6 · (1,2,4)(3,5) + (1,2,3)(4,5)");

    let nine = fixture("9_42.gauss");
    let out = cli(&[
        "invariant", "--diagram", &nine, "--quandle", "conjgroup:A5", "--basepoint", "(1,2,3)", "--act-on", "(2,3,4)",
    ]);
    assert_eq!(out.unwrap(), "7 · (2,3,4) + 6 · (1,4,3)");

    let out = cli(&["invariant", "--diagram", &five_two, "--quandle", "trivial:5", "--basepoint", "0", "--act-on", "3"]);
    assert_eq!(out.unwrap(), "3");

    let mut args = vec!["invariant", "--diagram", &five_two, "--json"];
    args.extend(q);
    let j = json(&args);
    assert_eq!(j["colorings"], 7);
    assert_eq!(j["sum"]["(1,2,4)(3,5)"], 6);
}

#[test]
fn element_arguments_are_canonicalized() {
    let five_two = fixture("5_2_long.json");
    let out = cli(&[
        "invariant", "--diagram", &five_two, "--quandle", S5_CLASS, "--basepoint", "(4,5,3)(2,1)", "--act-on", "(5,4)(2,3,1)",
    ]);
    assert_eq!(out.unwrap(), "6 · (1,2,4)(3,5) + (1,2,3)(4,5)");
}

#[test]
fn chirality_json_is_stable_across_job_counts() {
    let nine = fixture("9_42.gauss");
    let args = |jobs: &'static str| {
        vec![
            "--jobs", jobs, "chirality", "--diagram", nine.as_str(), "--quandle", "conjgroup:A5",
            "--basepoint", "(1,2,3)", "--act-on", "(2,3,4)", "--json",
        ]
    };
    let one = cli(&args("1")).unwrap();
    assert_eq!(one, cli(&args("3")).unwrap());
    assert_eq!(one, cli(&args("1")).unwrap());
    let v: Value = serde_json::from_str(&one).unwrap();
    assert_eq!(v["verdict"], "distinct");
    assert_eq!(v["sums"]["mirror"]["(1,2,4)"], 6);
    assert_eq!(v["query"]["act_on"], "(2,3,4)");
}

#[test]
fn tangle_obstruction_reports_all_three_sums() {
    let v = json(&[
        "tangle-obstruction", "--tangle", &fixture("t6_2.json"), "--knot", &fixture("6_3.gauss"),
        "--quandle", "conjgroup:A6", "--basepoint", "(1,2,3,4)(5,6)", "--act-on", "(1,2,3,4,5)", "--json",
    ]);
    assert_eq!(v["sums"]["knot"], serde_json::json!({"(1,2,3,4,5)": 33}));
    for name in ["S1", "S2"] {
        let mass: u64 = v["sums"][name].as_object().unwrap().values().map(|c| c.as_u64().unwrap()).sum();
        assert_eq!(mass, 9);
    }
    assert!(["obstructed", "inconclusive"].contains(&v["verdict"].as_str().unwrap()));
}

#[test]
fn nonclassical_and_connected_sum() {
    let witness = scratch("witness.gauss", "O2+ O3+ U1+ U2+ O1+ U3+");
    let v = json(&["nonclassical", "--diagram", &witness, "--quandle", "dihedral:3", "--basepoint", "0", "--act-on", "0", "--json"]);
    assert_eq!(v["verdict"], "distinct");
    assert_eq!(v["sums"]["arc 1"]["0"], 1);

    let trefoil = fixture("3_1.gauss");
    let v = json(&[
        "nonclassical", "--diagram", &trefoil, "--quandle", "dihedral:3", "--basepoint", "0", "--act-on", "1", "--json",
    ]);
    assert_eq!(v["verdict"], "inconclusive");

    let out = cli(&[
        "connected-sum", "--diagram", &trefoil, &fixture("5_2_long.json"), "--quandle", "dihedral:5", "--basepoint", "1",
        "--act-on", "2",
    ])
    .unwrap();
    assert!(out.starts_with("verdict: inconclusive"));
    assert!(out.ends_with("families differ: false"));
}

#[test]
fn input_errors() {
    let five_two = fixture("5_2_long.json");
    let bad_element = cli(&["invariant", "--diagram", &five_two, "--quandle", S5_CLASS, "--basepoint", "(1,2)", "--act-on", "(1,2)"]);
    assert!(bad_element.is_err());
    assert!(cli(&["verify-quandle", "--quandle", "dihedral:x"]).is_err());
    assert!(cli(&["verify-quandle", "--quandle", "conjclass:S9:(1,2)"]).is_err());
    assert!(cli(&["colorings", "--diagram", "/nonexistent/file", "--quandle", "dihedral:3", "--basepoint", "0"]).is_err());
    let broken = scratch("broken.json", r#"{"kind":"long","over_arc":[7],"sign":[1]}"#);
    assert!(cli(&["colorings", "--diagram", &broken, "--quandle", "dihedral:3", "--basepoint", "0"]).is_err());
    let tangle = fixture("t6_2.json");
    let not_closed = cli(&["nonclassical", "--diagram", &tangle, "--quandle", "dihedral:3", "--basepoint", "0", "--act-on", "0"]);
    assert!(not_closed.is_err());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_knot-quandles");
    let ok = Command::new(bin)
        .args(["chirality", "--diagram", &fixture("3_1.gauss"), "--quandle", "dihedral:3"])
        .args(["--basepoint", "0", "--act-on", "1"])
        .output()
        .unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("verdict: inconclusive"));

    let bad = Command::new(bin)
        .args(["invariant", "--diagram", &fixture("3_1.gauss"), "--quandle", "dihedral:3"])
        .args(["--basepoint", "7", "--act-on", "1"])
        .output()
        .unwrap();
    assert!(!bad.status.success());
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}
