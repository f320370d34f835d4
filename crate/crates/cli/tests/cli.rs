use std::path::Path;
use std::process::{Command, Output};

fn mrn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mrn"))
        .args(args)
        .env_remove("RAMSEY_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn formula_lines() {
    let o = mrn(&["formula", "--j", "5", "--n", "10"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "5 (general-formula)");
    assert_eq!(stdout(&mrn(&["formula", "--j", "2", "--n", "7"])).trim(), "infinite");
    assert_eq!(stdout(&mrn(&["formula", "--j", "7", "--n", "2"])).trim(), "2 (value-2-stars)");
    assert_eq!(stdout(&mrn(&["formula", "--j", "3", "--n", "4"])).trim(), "3 (general-formula)");
    assert_eq!(stdout(&mrn(&["formula", "--j", "3", "--n", "4", "--strict"])).trim(), "ambiguous");
}

#[test]
fn domain_and_usage_errors_exit_2() {
    assert_eq!(code(&mrn(&["formula", "--j", "1", "--n", "4"])), 2);
    assert_eq!(code(&mrn(&["formula", "--j", "5"])), 2);
    assert_eq!(code(&mrn(&["table", "--j-max", "1", "--n-max", "4"])), 2);
    assert_eq!(code(&mrn(&["search", "--parts", "2,0", "--n", "2"])), 2);
    assert_eq!(code(&mrn(&["search", "--parts", "2,2", "--n", "2", "--edge-order", "zigzag"])), 2);
}

#[test]
fn table_matches_formula_cells() {
    let o = mrn(&["table", "--j-max", "6", "--n-max", "6"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 6);
    for (r, j) in rows[1..].iter().zip(2..) {
        assert_eq!(r[0], j.to_string());
        for (cell, n) in r[1..].iter().zip(2..) {
            let expect = stdout(&mrn(&["formula", "--j", &j.to_string(), "--n", &n.to_string()]));
            let value = expect.split_whitespace().next().unwrap();
            assert_eq!(*cell, value, "j={j} n={n}");
        }
    }
    let json = stdout(&mrn(&["table", "--j-max", "3", "--n-max", "4", "--format", "json", "--strict"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["cells"].as_array().unwrap().len(), 6);
    assert_eq!(v["cells"][1]["value"], "ambiguous");
    assert_eq!(v["cells"][5]["value"], "ambiguous");
}

#[test]
fn construct_writes_verified_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = mrn(&["construct", "--j", "5", "--n", "4", "--out", p(dir.path())]);
    assert_eq!(code(&o), 0);
    let json = dir.path().join("coloring_j5_n4.json");
    let g6 = dir.path().join("coloring_j5_n4.g6");
    let shape = dir.path().join("coloring_j5_n4.shape.json");
    assert_eq!(std::fs::read_to_string(&shape).unwrap().trim(), r#"{"parts":[2,2,2,2,2]}"#);
    assert_eq!(code(&mrn(&["verify", p(&json), "--n", "4"])), 0);
    assert_eq!(code(&mrn(&["verify", p(&g6), "--shape", p(&shape), "--n", "4"])), 0);
    // same coloring, smaller n: the red matching is now too large
    let o = mrn(&["verify", p(&json), "--n", "3"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("\"stripe_found\": true"));

    let o = mrn(&["construct", "--j", "5", "--n", "10"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["shape"]["parts"], serde_json::json!([4, 4, 4, 4, 4]));
}

#[test]
fn construct_value_one_exits_3() {
    let o = mrn(&["construct", "--j", "8", "--n", "2"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("value 1: empty host"));
}

#[test]
fn verify_reports_bad_and_broken_files() {
    let dir = tempfile::tempdir().unwrap();
    let all_red = dir.path().join("red.json");
    let edges: Vec<[usize; 2]> =
        (0..5).flat_map(|u| (u + 1..5).map(move |v| [u, v])).collect();
    let text = serde_json::json!({"shape": {"parts": [1, 1, 1, 1, 1]}, "red_edges": edges});
    std::fs::write(&all_red, text.to_string()).unwrap();
    assert_eq!(code(&mrn(&["verify", p(&all_red), "--n", "2"])), 1);

    let truncated = dir.path().join("cut.json");
    std::fs::write(&truncated, r#"{"shape":{"parts":[1,1]},"red_ed"#).unwrap();
    assert_eq!(code(&mrn(&["verify", p(&truncated), "--n", "2"])), 2);
    assert_eq!(code(&mrn(&["verify", "/nonexistent/file.json", "--n", "2"])), 2);
}

#[test]
fn certificates_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (j, n, method) in [("8", "2", "exhausted"), ("5", "2", "exhausted"), ("5", "20", "formula_trusted")] {
        let file = dir.path().join(format!("cert_{j}_{n}.json"));
        let o = mrn(&["certify", "--j", j, "--n", n, "--out", p(&file)]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
        assert_eq!(v["schema"], "ramsey-cert/1");
        assert_eq!(v["upper_bound"]["method"], method);
        assert_eq!(code(&mrn(&["verify", p(&file)])), 0);
    }
    let v: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("cert_5_20.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(v["claimed_value"], 9);
    assert_eq!(v["lower_bound"]["shape"]["parts"], serde_json::json!([8, 8, 8, 8, 8]));

    let file = dir.path().join("cert_5_2.json");
    let text = std::fs::read_to_string(&file).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["claimed_value"], 2);
    assert_eq!(v["lower_bound"]["report"]["is_good"], true);
    std::fs::write(&file, text.replace("\"claimed_value\": 2", "\"claimed_value\": 3")).unwrap();
    assert_eq!(code(&mrn(&["verify", p(&file)])), 1);
}

#[test]
fn certify_small_j_cells_refuted() {
    // exhaustive search finds good colorings on K_{j x m} for these cells
    for (j, n) in [("3", "2"), ("3", "4"), ("4", "3")] {
        let o = mrn(&["certify", "--j", j, "--n", n]);
        assert_eq!(code(&o), 1, "j={j} n={n}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["upper_bound"]["method"], "refuted");
        assert_eq!(v["upper_bound"]["counterexample"]["report"]["is_good"], true);
    }
}

#[test]
fn search_verdicts() {
    let o = mrn(&["search", "--j", "8", "--t", "1", "--n", "2"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "exhausted");

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("found.json");
    let o = mrn(&["search", "--parts", "1,1,1,1,1,1,1", "--n", "2", "--symmetry", "lex-leader", "--dominance", "--out", p(&out)]);
    assert_eq!(code(&o), 0);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&stdout(&o)).unwrap()["verdict"], "good");
    assert_eq!(code(&mrn(&["verify", p(&out), "--n", "2"])), 0);

    let o = mrn(&["search", "--j", "5", "--t", "3", "--n", "5", "--node-budget", "1000", "--no-portfolio"]);
    assert_eq!(code(&o), 4);

    let o = Command::new(env!("CARGO_BIN_EXE_mrn"))
        .args(["search", "--j", "8", "--t", "1", "--n", "2", "--no-portfolio"])
        .env("RAMSEY_THREADS", "3")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["certificate"]["options"]["threads"], 3);
}

#[test]
fn cnf_export_and_model_decoding() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = dir.path().join("k7.cnf");
    let o = mrn(&["export-cnf", "--j", "7", "--t", "1", "--n", "2", "--out", p(&cnf)]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&cnf).unwrap();
    assert!(text.lines().any(|l| l == "p cnf 21 465"));
    let map = dir.path().join("k7.cnf.map.json");
    assert!(map.exists());

    // the star at vertex 0 is red: variables 1..=6
    let model = dir.path().join("model.txt");
    let lits: Vec<String> = (1..=21).map(|v| if v <= 6 { v.to_string() } else { format!("-{v}") }).collect();
    std::fs::write(&model, format!("s SATISFIABLE\nv {} 0\n", lits.join(" "))).unwrap();
    let o = mrn(&["decode-model", "--map", p(&map), "--model", p(&model)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let all_blue: Vec<String> = (1..=21).map(|v| format!("-{v}")).collect();
    std::fs::write(&model, format!("v {} 0\n", all_blue.join(" "))).unwrap();
    assert_eq!(code(&mrn(&["decode-model", "--map", p(&map), "--model", p(&model)])), 1);
}
