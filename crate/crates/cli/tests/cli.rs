use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trivsource"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_nocache(args: &[&str]) -> Output {
    let mut all = vec!["--no-cache"];
    all.extend_from_slice(args);
    run(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

/// Rational entries of a serialized exact matrix, as strings.
fn rational_rows(v: &Value) -> Vec<Vec<String>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|x| {
                    let coords = x["coords"].as_array().unwrap();
                    assert!(coords[1..].iter().all(|c| c == "0"), "not rational: {x}");
                    coords[0].as_str().unwrap().to_string()
                })
                .collect()
        })
        .collect()
}

fn strs(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect()
}

#[test]
fn brauer_table_cyclic_3() {
    let v = json(&run_nocache(&[
        "--group",
        "cyclic 3",
        "-p",
        "3",
        "--format",
        "json",
        "brauer-table",
    ]));
    assert_eq!(rational_rows(&v["irreducibles"]), strs(&[&["1"]]));
    assert_eq!(rational_rows(&v["projectives"]), strs(&[&["3"]]));
    assert_eq!(v["classes"], serde_json::json!(["1"]));
}

#[test]
fn brauer_table_symmetric_3() {
    let v = json(&run_nocache(&[
        "--group",
        "symmetric 3",
        "-p",
        "3",
        "--format",
        "json",
        "brauer-table",
    ]));
    assert_eq!(
        rational_rows(&v["irreducibles"]),
        strs(&[&["1", "1"], &["1", "-1"]])
    );
    assert_eq!(
        rational_rows(&v["projectives"]),
        strs(&[&["3", "1"], &["3", "-1"]])
    );
    assert_eq!(v["m"], 2);
    assert_eq!(v["group_hash"].as_str().unwrap().len(), 64);
}

#[test]
fn brauer_table_of_a_normalizer_quotient() {
    let v = json(&run_nocache(&[
        "--group",
        "S4",
        "-p",
        "2",
        "--format",
        "json",
        "brauer-table",
        "--psubgroup",
        "6",
    ]));
    assert_eq!(v["order"], 1);
    let o = run_nocache(&[
        "--group",
        "S4",
        "-p",
        "2",
        "brauer-table",
        "--psubgroup",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_cycle_string_exits_2() {
    let o = run_nocache(&["--group", "(0 1", "-p", "2", "species-table"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
    let o = run_nocache(&["--group", "(0 1)", "-p", "4", "species-table"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run_nocache(&["-p", "2", "species-table"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run_nocache(&["--group", "C2", "-p", "2", "no-such-command"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn order_cap_exits_3() {
    let o = run_nocache(&[
        "--group",
        "S3",
        "-p",
        "3",
        "--max-order",
        "5",
        "species-table",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = run_nocache(&["--group", "S6", "-p", "2", "verify"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn species_table_cyclic_2() {
    let v = json(&run_nocache(&[
        "--group",
        "cyclic 2",
        "-p",
        "2",
        "--format",
        "json",
        "species-table",
    ]));
    assert_eq!(
        rational_rows(&v["entries"]),
        strs(&[&["2", "1"], &["0", "1"]])
    );
    assert_eq!(v["kind"], "species-table");
    let csv = stdout(&run_nocache(&[
        "--group",
        "cyclic 2",
        "-p",
        "2",
        "--format",
        "csv",
        "species-table",
    ]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "label,1 phi0 (dim 1),<(0 1)> phi0 (dim 1)");
    assert_eq!(&lines[1..], &["1 [()],2,1", "<(0 1)> [()P],0,1"]);
}

#[test]
fn idempotents_cyclic_2() {
    let out = stdout(&run_nocache(&[
        "--group",
        "cyclic 2",
        "-p",
        "2",
        "idempotents",
    ]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1], "e[1 [()]] = 1/2*[N 1 phi0 (dim 1)]");
    assert_eq!(
        lines[2],
        "e[<(0 1)> [()P]] = -1/2*[N 1 phi0 (dim 1)] + [N <(0 1)> phi0 (dim 1)]"
    );
}

#[test]
fn trivial_group_gives_1x1_outputs() {
    for cmd in ["species-table", "idempotents", "linmap"] {
        let v = json(&run_nocache(&[
            "--group", "trivial", "-p", "2", "--format", "json", cmd,
        ]));
        assert_eq!(rational_rows(&v["entries"]), strs(&[&["1"]]), "{cmd}");
    }
    let v = json(&run_nocache(&[
        "--group",
        "trivial",
        "-p",
        "2",
        "--format",
        "json",
        "brauer-table",
    ]));
    assert_eq!(rational_rows(&v["irreducibles"]), strs(&[&["1"]]));
}

#[test]
fn linmap_rows_are_labelled_pairs() {
    let v = json(&run_nocache(&[
        "--group", "S3", "-p", "2", "--format", "json", "linmap",
    ]));
    let labels: Vec<&str> = v["row_labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert_eq!(labels.len(), 5);
    assert!(labels.contains(&"<(0 1 2)> nu=[z]"));
    assert_eq!(v["m"], 3);
}

#[test]
fn verify_passes_on_examples() {
    for g in ["klein4", "dihedral 8", "symmetric 3"] {
        let p = if g == "symmetric 3" { "3" } else { "2" };
        let o = run_nocache(&["--group", g, "-p", p, "verify"]);
        assert!(o.status.success(), "{g}: {}", stdout(&o));
        let out = stdout(&o);
        assert!(
            out.lines().filter(|l| l.starts_with("PASS")).count() >= 10,
            "{out}"
        );
        assert!(!out.contains("FAIL"));
    }
    let v = json(&run_nocache(&[
        "--group", "Q8", "-p", "2", "--format", "json", "verify",
    ]));
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn output_is_deterministic() {
    for cmd in [
        "species-table",
        "idempotents",
        "linmap",
        "brauer-table",
        "verify",
    ] {
        let a = run_nocache(&["--group", "A4", "-p", "2", "--seed", "5", cmd]);
        let b = run_nocache(&["--group", "A4", "-p", "2", "--seed", "5", cmd]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

fn cache_files(dir: &Path) -> usize {
    std::fs::read_dir(dir)
        .map(|d| {
            d.filter(|e| {
                e.as_ref()
                    .unwrap()
                    .path()
                    .extension()
                    .is_some_and(|x| x == "json")
            })
            .count()
        })
        .unwrap_or(0)
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    for (cmd, n) in [
        ("species-table", 1),
        ("idempotents", 2),
        ("brauer-table", 3),
        ("linmap", 4),
    ] {
        let fresh = run_nocache(&["--group", "D8", "-p", "2", "--format", "json", cmd]);
        let first = run(&[
            "--cache-dir",
            d,
            "--group",
            "D8",
            "-p",
            "2",
            "--format",
            "json",
            cmd,
        ]);
        assert_eq!(cache_files(dir.path()), n);
        let second = run(&[
            "--cache-dir",
            d,
            "--group",
            "D8",
            "-p",
            "2",
            "--format",
            "json",
            cmd,
        ]);
        assert_eq!(fresh.stdout, first.stdout, "{cmd}");
        assert_eq!(first.stdout, second.stdout, "{cmd}");
    }
    // the same group from other generators shares the entry
    let other = run(&[
        "--cache-dir",
        d,
        "--group",
        "(0 1 2 3), (0 2)",
        "-p",
        "2",
        "species-table",
    ]);
    assert!(other.status.success());
    assert_eq!(cache_files(dir.path()), 4);
    // a different seed is a different entry
    run(&[
        "--cache-dir",
        d,
        "--group",
        "D8",
        "-p",
        "2",
        "--seed",
        "1",
        "species-table",
    ]);
    assert_eq!(cache_files(dir.path()), 5);
}

#[test]
fn corrupt_cache_entry_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = run(&[
        "--cache-dir",
        d,
        "--group",
        "S3",
        "-p",
        "3",
        "species-table",
    ]);
    for e in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(e.unwrap().path(), "{").unwrap();
    }
    let second = run(&[
        "--cache-dir",
        d,
        "--group",
        "S3",
        "-p",
        "3",
        "species-table",
    ]);
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn concurrent_runs_share_a_cache() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap().to_string();
    let children: Vec<_> = (0..4)
        .map(|_| {
            Command::new(env!("CARGO_BIN_EXE_trivsource"))
                .args([
                    "--cache-dir",
                    &d,
                    "--group",
                    "S4",
                    "-p",
                    "3",
                    "--format",
                    "json",
                    "idempotents",
                ])
                .stdout(Stdio::piped())
                .stderr(Stdio::piped())
                .spawn()
                .unwrap()
        })
        .collect();
    let outs: Vec<Output> = children
        .into_iter()
        .map(|c| c.wait_with_output().unwrap())
        .collect();
    assert!(outs.iter().all(|o| o.status.success()));
    assert!(outs.windows(2).all(|w| w[0].stdout == w[1].stdout));
    assert_eq!(cache_files(dir.path()), 1);
}
