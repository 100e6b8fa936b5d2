use std::process::{Command, Output};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn grpx(args: &[&str]) -> Run {
    let cache = tempfile::tempdir().unwrap();
    let Output { status, stdout, stderr } = Command::new(env!("CARGO_BIN_EXE_grpx"))
        .args(args)
        .env("GRPX_CACHE", cache.path())
        .env_remove("GRPX_BUDGET")
        .output()
        .unwrap();
    Run {
        code: status.code().unwrap(),
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

#[test]
fn power_graph_of_c4_is_complete() {
    let r = grpx(&["graph", "C(4)", "--kind", "power"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("graph G {"));
    let edges: Vec<&str> = r.stdout.lines().filter(|l| l.contains("--")).map(str::trim).collect();
    assert_eq!(edges, ["0 -- 1;", "0 -- 2;", "0 -- 3;", "1 -- 2;", "1 -- 3;", "2 -- 3;"]);
    assert_eq!(r.stdout.matches("doublecircle").count(), 4);
}

#[test]
fn graph_json_and_directed_arcs() {
    let r = grpx(&["graph", "C(2)", "--kind", "dpower", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v, serde_json::json!({ "n": 2, "edges": [[1, 0]] }));
    let r = grpx(&["graph", "V4", "--kind", "enhanced", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn complex_outputs() {
    let r = grpx(&["complex", "V4", "--kind", "ind"]);
    assert_eq!((r.code, r.stdout.trim()), (0, "(3, 3)"));
    let r = grpx(&["complex", "V4", "--kind", "ind", "--out", "faces"]);
    let faces: Vec<&str> = r.stdout.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(faces, ["1", "2", "3", "1 2", "1 3", "2 3"]);
    let r = grpx(&["complex", "C(6)", "--kind", "strong", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["f_vector"], serde_json::json!([5]));
    let r = grpx(&["complex", "E8", "--kind", "ind", "--max-card", "2"]);
    assert_eq!(r.stdout.trim(), "(7, 21) (truncated)");
}

#[test]
fn iso_lines_and_outcomes() {
    let r = grpx(&["iso", "C(9) x C(3)", "ES27", "--on", "complex"]);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("independence: [0,"), "{}", lines[0]);
    assert!(lines[1].starts_with("strong: [0,"), "{}", lines[1]);
    let r = grpx(&["iso", "G42_1", "G42_2", "--on", "complex"]);
    assert!(r.stdout.contains("independence: NONE (refuted:"), "{}", r.stdout);
    let r = grpx(&["iso", "G42_1", "G42_2", "--on", "lattice", "--index-preserving"]);
    assert_eq!(r.stdout.trim(), "lattice (index-preserving): NONE (exhausted)");
    let r = grpx(&["iso", "C(4)", "V4", "--on", "group"]);
    assert_eq!((r.code, r.stdout.trim()), (0, "group: NONE (exhausted)"));
    let r = grpx(&["iso", "C(4)", "V4", "--on", "graph"]);
    assert_eq!(r.stdout.lines().filter(|l| l.ends_with("NONE (exhausted)")).count(), 3, "{}", r.stdout);
}

#[test]
fn exhausted_budget_is_unknown() {
    let r = grpx(&["--budget", "10", "iso", "G605_2", "G605_3", "--on", "group"]);
    assert_eq!(r.code, 3);
    assert_eq!(r.stdout.trim(), "group: UNKNOWN (budget)");
}

#[test]
fn exit_codes() {
    assert_eq!(grpx(&["frobnicate"]).code, 1);
    assert_eq!(grpx(&["graph", "C(4)"]).code, 1);
    assert_eq!(grpx(&["--help"]).code, 0);
    let r = grpx(&["build", "C("]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("column 3"), "{}", r.stderr);
    assert_eq!(grpx(&["build", "NOPE"]).code, 2);
    assert_eq!(grpx(&["build", "@/nonexistent/file"]).code, 1);
    assert_eq!(grpx(&["verify", "--suite", "bogus"]).code, 2);
    assert_eq!(grpx(&["verify", "--group", "NOPE"]).code, 2);
}

#[test]
fn table_input_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let r = grpx(&["build", "S3", "--print-table"]);
    let path = dir.path().join("s3.txt");
    std::fs::write(&path, &r.stdout).unwrap();
    let r = grpx(&["build", path.to_str().unwrap(), "--table"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("order 6\n"));
    std::fs::write(&path, "2\n0 1\n1 1\n").unwrap();
    let r = grpx(&["build", path.to_str().unwrap(), "--table"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("Latin"), "{}", r.stderr);
    let spec = dir.path().join("g.grp");
    std::fs::write(&spec, "SD(C(7), C(3), pow(2))\n").unwrap();
    let r = grpx(&["build", &format!("@{}", spec.display())]);
    assert!(r.stdout.starts_with("order 21\n"));
}

#[test]
fn analyze_and_verify() {
    let r = grpx(&["analyze", "Q8", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["is_hamiltonian"], true);
    assert_eq!(v["subgroups"], 6);
    let r = grpx(&["verify", "--suite", "iwasawa,skeleton", "--group", "M16", "--json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert!(entries.iter().all(|e| e["status"] == "pass"));
    let r = grpx(&["corpus", "list"]);
    assert!(r.stdout.lines().any(|l| l.starts_with("BLACKBURN5")));
}

#[test]
fn cache_is_written_and_optional() {
    let cache = tempfile::tempdir().unwrap();
    let run = |extra: &[&str]| {
        let mut args = extra.to_vec();
        args.extend(["complex", "SL23", "--kind", "ind"]);
        Command::new(env!("CARGO_BIN_EXE_grpx")).args(&args).env("GRPX_CACHE", cache.path()).output().unwrap()
    };
    let first = run(&["--no-cache"]);
    assert_eq!(std::fs::read_dir(cache.path()).unwrap().count(), 0);
    let second = run(&[]);
    assert_eq!(std::fs::read_dir(cache.path()).unwrap().count(), 1);
    let third = run(&[]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(second.stdout, third.stdout);
}
