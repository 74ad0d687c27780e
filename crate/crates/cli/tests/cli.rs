use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

/// Runs in-process; returns (exit code, stdout, stderr).
fn run_with_stdin(args: &[&str], stdin: &str) -> (u8, String, String) {
    let mut argv = vec!["isodist".to_string()];
    argv.extend(args.iter().map(|a| a.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = isodist_cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run(args: &[&str]) -> (u8, String, String) {
    run_with_stdin(args, "")
}

fn stdout_of(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn json_of(args: &[&str]) -> Value {
    let mut args = args.to_vec();
    args.extend(["--format", "json"]);
    let v: Value = serde_json::from_str(&stdout_of(&args)).unwrap();
    assert_eq!(v["format"], "isodist/1");
    v
}

#[test]
fn abelian_distance_through_a_cyclic_group() {
    assert_eq!(stdout_of(&["abelian", "dist", "2,2,4", "8"]), "3\n");
    assert_eq!(json_of(&["abelian", "dist", "2,2,4", "8"])["distance"], 3);
    assert_eq!(stdout_of(&["abelian", "dist", r#"{"chain":[2,2,4]}"#, "(2,2,2)"]), "1\n");
}

#[test]
fn chromatic_distance_of_illustration_graphs() {
    let (j, k, h) = (data("graph_j.json"), data("graph_k.json"), data("graph_h.json"));
    assert_eq!(stdout_of(&["graph", "dist", "--metric", "chi", &j, &k]), "1\n");
    assert_eq!(stdout_of(&["graph", "dist", "--metric", "chi", &j, &h]), "0\n");
    assert_eq!(stdout_of(&["graph", "chi", &k]), "4\n");
}

#[test]
fn equal_orders_are_at_distance_zero() {
    assert_eq!(stdout_of(&["order", "dist", "7", "7"]), "0\n");
    assert_eq!(stdout_of(&["order", "dist", "12", "18"]), "2\n");
}

#[test]
fn divisor_figure_as_dot() {
    let nodes = ["2,2,4", "2,2,2", "2,4", "8", "2,2", "4", "2", "3,3", "9", "6", "3"];
    let mut args = vec!["abelian", "covers"];
    args.extend(nodes);
    args.extend(["--format", "dot"]);
    let dot = stdout_of(&args);
    assert!(dot.starts_with("graph {\n") && dot.ends_with("}\n"));
    let edges: BTreeSet<BTreeSet<String>> = dot
        .lines()
        .filter(|l| l.contains(" -- "))
        .map(|l| l.trim().trim_end_matches(';').split(" -- ").map(|s| s.trim_matches('"').to_string()).collect())
        .collect();
    let drawn: BTreeSet<BTreeSet<String>> = [
        ("2", "4"),
        ("4", "8"),
        ("2", "2,2"),
        ("2,2", "2,2,2"),
        ("2,2,2", "2,2,4"),
        ("2,2", "2,4"),
        ("2,4", "2,2,4"),
        ("4", "2,4"),
        ("2", "6"),
        ("3", "6"),
        ("3", "9"),
        ("3", "3,3"),
    ]
    .iter()
    .map(|&(a, b)| [a.to_string(), b.to_string()].into())
    .collect();
    assert_eq!(edges, drawn);
}

#[test]
fn polynomials_and_embeddings() {
    let (g1, g2) = (data("triangle_plus_point.json"), data("four_cycle.json"));
    assert_eq!(stdout_of(&["graph", "poly", &g1]), "t^4 - 3t^3 + 2t^2\n");
    assert_eq!(json_of(&["graph", "poly", &g2])["coefficients"], serde_json::json!([0, -3, 6, -4, 1]));
    assert_eq!(stdout_of(&["graph", "leq", &g1, &g2]), "true\n");
    assert_eq!(stdout_of(&["graph", "embeds", &g1, &g2]), "false\n");
    // graph6 on stdin
    let (code, out, _) = run_with_stdin(&["graph", "chi", "-"], "Cl\n");
    assert_eq!((code, out.as_str()), (0, "2\n"));
}

#[test]
fn poset_orders_and_distances() {
    let v = json_of(&["poset", "order", &data("cycle_with_tail.json")]);
    assert_eq!(v["classes"][0]["members"], serde_json::json!(["a", "b", "c"]));
    assert_eq!(v["covers"], serde_json::json!([["a", "d"]]));
    assert_eq!(stdout_of(&["poset", "dist", &data("cycle_with_tail.json"), "b", "d"]), "1\n");
    assert_eq!(stdout_of(&["poset", "dist", &data("cycle_with_tail.json"), "a", "e"]), "inf\n");
    assert_eq!(json_of(&["poset", "metric", &data("divisors_12.json")])["pseudometric"], true);
    let (code, out, _) =
        run_with_stdin(&["poset", "order", "-", "--format", "dot"], r#"{"elements": [], "edges": []}"#);
    assert_eq!((code, out.as_str()), (0, "graph {}\n"));
}

#[test]
fn virtual_cycles_of_pointed_spaces() {
    let cat = data("pointed_spaces.json");
    let v = json_of(&["category", "cycles", &cat, "--invariant", &data("pointed_pi1.json")]);
    assert_eq!(v["nontrivial"], 1);
    let v = json_of(&["category", "cycles", &cat, "--invariant", &data("pointed_pi1_dim.json")]);
    assert_eq!(v["nontrivial"], 0);
}

#[test]
fn csb_failure_is_reported() {
    let v = json_of(&["category", "csb", &data("free_groups.json")]);
    assert_eq!(v["csb"]["holds"], false);
    assert_eq!(v["nontrivial_cycles"].as_array().unwrap().len(), 1);
}

#[test]
fn restricted_category_round_trips_through_stdin() {
    let restricted = stdout_of(&["category", "restrict", &data("chain3.json"), "--kind", "mono", "--format", "json"]);
    let (code, out, err) = run_with_stdin(&["category", "classify", "-", "f"], &restricted);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, "f: mono=true epi=true iso=false\n");
    let d = stdout_of(&["category", "dist", &data("chain3.json"), &data("chain3_sizes.json"), "a", "c"]);
    assert_eq!(d, "2\n");
}

#[test]
fn minors_of_the_diagonal_matrix() {
    let out = stdout_of(&["forms", "minors", "--matrix", &data("heisenberg_diagonal.json"), "--r", "2"]);
    let lines: BTreeSet<&str> = out.lines().collect();
    let expected: BTreeSet<&str> = ["x1*x2", "x1*x4", "x2*x3", "x3*x4", "span dimension: 4"].into();
    assert_eq!(lines, expected);
    let v = json_of(&["forms", "minors", "--p", "5", "--f", "t^2-1", "--r", "2"]);
    assert_eq!(v["span_dimension"], 4);
    assert_eq!(v["minors"].as_array().unwrap().len(), 4);
    let gens = data("diagonal_generators.json");
    assert_eq!(stdout_of(&["forms", "span-equal", &gens, &gens, "--p", "5"]), "true\n");
}

#[test]
fn basis_change_keeps_the_span_dimension() {
    let dir = std::env::temp_dir().join(format!("isodist-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let phi = dir.join("phi.json");
    let gamma = dir.join("gamma.json");
    std::fs::write(&phi, "[[1,1,0,0],[0,1,0,0],[0,0,1,2],[0,0,0,1]]").unwrap();
    std::fs::write(&gamma, "[[2,1],[1,1]]").unwrap();
    let v = json_of(&[
        "forms",
        "minors",
        "--p",
        "5",
        "--f",
        "t^2",
        "--r",
        "2",
        "--phi",
        phi.to_str().unwrap(),
        "--gamma",
        gamma.to_str().unwrap(),
    ]);
    assert_eq!(v["span_dimension"], 4);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["order", "dist", "3"]).0, 1);
    assert_eq!(run(&["order", "dist", "3", "4", "--bogus"]).0, 1);
    assert_eq!(run(&["abelian", "dist", "2", "4", "--format", "dot"]).0, 1);
    assert_eq!(run(&["order", "dist", "0", "4"]).0, 2);
    assert_eq!(run(&["graph", "chi", &data("missing.json")]).0, 2);
    assert_eq!(run(&["category", "classify", &data("pointed_spaces.json")]).0, 2);
    assert_eq!(run(&["graph", "poly", &data("graph_h.json"), "--budget", "1"]).0, 3);
    assert_eq!(run(&["poset", "order", &data("divisors_12.json"), "--max-elements", "3"]).0, 3);
    let (code, _, err) = run_with_stdin(&["graph", "chi", "-"], r#"{"format": "isodist/2", "n": 1, "edges": []}"#);
    assert_eq!(code, 2);
    assert!(err.contains("unsupported format"));
    let (code, _, err) = run_with_stdin(&["graph", "dist", "-", "-"], "Cl");
    assert_eq!(code, 1, "{err}");
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn output_is_deterministic() {
    for args in
        [vec!["poset", "order", "--format", "json"], vec!["category", "restrict", "--kind", "mono", "--format", "json"]]
    {
        let file = if args[0] == "poset" { data("divisors_12.json") } else { data("chain3.json") };
        let mut full = args.clone();
        full.insert(2, &file);
        assert_eq!(stdout_of(&full), stdout_of(&full));
    }
}

#[test]
fn element_cap_from_the_environment() {
    let bin = env!("CARGO_BIN_EXE_isodist");
    let order = data("divisors_12.json");
    let status = |var: &str| {
        Command::new(bin)
            .args(["poset", "order", &order])
            .env("ISODIST_MAX_ELEMENTS", var)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(status("3"), Some(3));
    assert_eq!(status("6"), Some(0));
    assert_eq!(status("many"), Some(1));
    let flag_wins = Command::new(bin)
        .args(["poset", "order", &order, "--max-elements", "10"])
        .env("ISODIST_MAX_ELEMENTS", "3")
        .output()
        .unwrap();
    assert_eq!(flag_wins.status.code(), Some(0));
}

#[test]
fn readme_examples_finish_quickly() {
    let bin = env!("CARGO_BIN_EXE_isodist");
    let examples: [&[&str]; 8] = [
        &["abelian", "dist", "2,2,4", "8"],
        &["abelian", "covers", "2", "3", "4", "2,2", "8", "2,4", "2,2,2", "--format", "dot"],
        &["order", "factor", "360"],
        &["graph", "poly", "data/graph_h.json"],
        &["graph", "dist", "data/graph_j.json", "data/graph_k.json"],
        &["poset", "order", "data/divisors_12.json"],
        &["category", "cycles", "data/pointed_spaces.json", "--invariant", "data/pointed_pi1.json"],
        &["forms", "minors", "--p", "5", "--f", "t^2-1", "--r", "2"],
    ];
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..");
    for args in examples {
        let start = std::time::Instant::now();
        let out = Command::new(bin).args(args).current_dir(&root).output().unwrap();
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(start.elapsed().as_secs_f64() < 5.0, "{args:?} took {:?}", start.elapsed());
    }
}
