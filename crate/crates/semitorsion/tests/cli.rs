use std::fs;
use std::process::{Command, Output};

fn semitorsion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semitorsion"))
        .args(args)
        .env_remove("SEMITORSION_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn info_reports_frobenius_and_gaps() {
    let o = semitorsion(&["info", "5,7", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["frobenius"], 23);
    assert_eq!(v["symmetric"], true);
    assert_eq!(v["gaps"].as_array().unwrap().len(), 12);

    let o = semitorsion(&["info", "1", "--json"]);
    let v = json(&o);
    assert_eq!(v["frobenius"], -1);
    assert!(v["gaps"].as_array().unwrap().is_empty());

    let text = stdout(&semitorsion(&["info", "7,5,14"]));
    assert!(text.contains("<5,7>"));
}

#[test]
fn bad_input_exits_1() {
    let o = semitorsion(&["info", "4,6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gcd 2"));
    assert_eq!(semitorsion(&["info", "5,x"]).status.code(), Some(1));
    assert_eq!(semitorsion(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        semitorsion(&["search", "--mode", "nope", "--ab-max", "9"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(semitorsion(&["--help"]).status.code(), Some(0));
}

#[test]
fn tau_examples() {
    let o = semitorsion(&[
        "tau",
        "--semigroup",
        "4,5,6",
        "--ideal-a",
        "4,5",
        "--ideal-b",
        "4,5",
        "--profile",
        "--json",
    ]);
    let v = json(&o);
    assert_eq!(v["tau"], 2);
    assert_eq!(v["support"], 2);
    assert_eq!(
        v["profile"],
        serde_json::json!([{"z": 9, "tau_z": 1}, {"z": 16, "tau_z": 1}])
    );

    let o = semitorsion(&[
        "tau",
        "--semigroup",
        "4,5,6",
        "--ideal-a",
        "4,5",
        "--ideal-b",
        "4,6",
        "--json",
    ]);
    assert_eq!(json(&o)["tau"], 0);
    assert!(json(&o).get("profile").is_none());

    let text = stdout(&semitorsion(&[
        "tau",
        "--semigroup",
        "4,5,6",
        "--ideal-a",
        "4,5",
        "--ideal-b",
        "4,5",
    ]));
    assert!(text.starts_with("tau      2\n"));
}

#[test]
fn tau_dot_output() {
    let o = semitorsion(&[
        "tau",
        "--semigroup",
        "5,11",
        "--ideal-a",
        "20,21,22",
        "--ideal-b",
        "0,23,24",
        "--dot",
        "45",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("graph gamma_45 {"));
    let edges: Vec<&str> = dot
        .lines()
        .filter(|l| l.contains("--"))
        .map(str::trim)
        .collect();
    assert_eq!(edges, ["v1 -- w1;", "v2 -- w3;", "v3 -- w2;"]);
}

#[test]
fn dual_methods_agree() {
    for method in ["formula", "bruteforce", "symmetric"] {
        let o = semitorsion(&[
            "dual",
            "--semigroup",
            "5,7",
            "--ideal",
            "17,21,25",
            "--method",
            method,
        ]);
        assert_eq!(stdout(&o).trim(), "0,3,4", "{method}");
    }
    let o = semitorsion(&["dual", "--semigroup", "3,5,7", "--ideal", "9"]);
    assert_eq!(stdout(&o).trim(), "-9");
    let o = semitorsion(&[
        "dual",
        "--semigroup",
        "3,5,7",
        "--ideal",
        "0,1",
        "--method",
        "formula",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = semitorsion(&[
        "dual",
        "--semigroup",
        "3,4,5",
        "--ideal",
        "0,1",
        "--method",
        "symmetric",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn hw_reports() {
    for s in ["5,7", "2,3", "1"] {
        let o = semitorsion(&["hw", "--semigroup", s]);
        assert_eq!(o.status.code(), Some(0), "{s}");
        assert_eq!(json(&o)["all_positive"], true);
    }
    let v = json(&semitorsion(&["hw", "--semigroup", "5,7"]));
    assert_eq!(v["gaps"].as_array().unwrap().len(), 12);
    assert_eq!(
        v["gaps"][0],
        serde_json::json!({"n": 1, "count": 12, "min_irreducible": 19})
    );
}

#[test]
fn search_examples_are_clean() {
    let dir = tempfile::tempdir().unwrap();
    for mode in ["half-mu-bound", "dual-consistency", "split-criterion"] {
        let path = dir.path().join(format!("{mode}.jsonl"));
        let o = semitorsion(&[
            "search",
            "--mode",
            mode,
            "--ab-max",
            "35",
            "--mu-max",
            "3",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{mode}");
        let summary = json(&o);
        assert_eq!(summary["violations"], 0);
        let lines = fs::read_to_string(&path).unwrap();
        assert_eq!(
            lines.lines().count() as u64,
            summary["tuples"].as_u64().unwrap()
        );
        for line in lines.lines() {
            let r: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(r["bound_ok"], true);
        }
    }
    let path = dir.path().join("oracle.jsonl");
    let o = semitorsion(&[
        "search",
        "--mode",
        "oracle-compare",
        "--ab-max",
        "20",
        "--mu-max",
        "3",
        "--seed",
        "7",
        "--samples",
        "50",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["stats"]["disagreements"], 0);
}

#[test]
fn search_csv_has_fixed_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hw.csv");
    let o = semitorsion(&[
        "search",
        "--mode",
        "hw",
        "--ab-max",
        "30",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("a,b,gaps,min_count,routes_ok,all_positive,bound_ok")
    );
    assert_eq!(lines.next(), Some("2,3,1,2,true,true,true"));
}

#[test]
fn search_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, jobs: &str| {
        let path = dir.path().join(name);
        let o = Command::new(env!("CARGO_BIN_EXE_semitorsion"))
            .args([
                "search",
                "--mode",
                "oracle-compare",
                "--ab-max",
                "30",
                "--mu-max",
                "3",
                "--seed",
                "11",
                "--samples",
                "40",
                "--out",
            ])
            .arg(&path)
            .env("SEMITORSION_JOBS", jobs)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        fs::read(&path).unwrap()
    };
    let one = run("one.jsonl", "1");
    let four = run("four.jsonl", "4");
    let again = run("again.jsonl", "4");
    assert!(!one.is_empty());
    assert_eq!(one, four);
    assert_eq!(four, again);
}

#[test]
fn search_to_stdout_without_out() {
    let o = semitorsion(&[
        "search",
        "--mode",
        "dual-consistency",
        "--ab-max",
        "6",
        "--mu-max",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let records: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 2);
    assert_eq!(records[1]["gens_A"], serde_json::json!([0, 1]));
    assert!(String::from_utf8_lossy(&o.stderr).contains("\"violations\":0"));
}

#[test]
fn unwritable_output_exits_1() {
    let o = semitorsion(&[
        "search",
        "--mode",
        "hw",
        "--ab-max",
        "10",
        "--out",
        "/nonexistent/dir/x.csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
}
