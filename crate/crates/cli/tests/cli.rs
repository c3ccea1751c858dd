use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn platforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_platforge"))
        .args(args)
        .env_remove("PLATFORGE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn braid_commands() {
    let o = platforge(&["braid", "tilde", "--n", "4", "s3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "s1 s3");
    assert_eq!(stdout(&platforge(&["braid", "family", "--g", "2"])).trim(), "s3 s4 s5");
    assert_eq!(stdout(&platforge(&["braid", "skew", "--n", "4", "s3"])).trim(), "s1");
    assert_eq!(stdout(&platforge(&["braid", "palindromic", "--n", "4", "s1 s2 s3"])).trim(), "true");
    assert_eq!(stdout(&platforge(&["braid", "equal", "--n", "3", "s1 s2 s1", "s2 s1 s2"])).trim(), "true");
}

#[test]
fn braid_index_error() {
    let o = platforge(&["braid", "skew", "--n", "4", "s5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("s5"));
}

#[test]
fn plat_certifies_unknot() {
    let r = json(&platforge(&["link", "plat", "--g", "1", "s3", "--certify-unknot"]));
    assert_eq!(r["determinant"], 1);
    assert_eq!(r["unknot_certificate"], "certified_unknot");
    assert_eq!(r["config"]["command"], "link plat invariants");
    assert!(r["schema"].is_string());
}

#[test]
fn trefoil_and_trivial_plat() {
    let r = json(&platforge(&["link", "closure", "--n", "2", "s1 s1 s1", "invariants"]));
    assert_eq!(r["determinant"], 3);
    assert_eq!(r["alexander"], "t^2 - t + 1");
    let r = json(&platforge(&["link", "plat", "--g", "1", ""]));
    assert_eq!(r["components"], 2);
    assert_eq!(r["crossings"], 0);
}

#[test]
fn link_errors() {
    let o = platforge(&["link", "closure", "--n", "3", &"s1 s2 ".repeat(20), "--bracket"]);
    assert_eq!(o.status.code(), Some(3));
    let o = platforge(&["link", "closure", "--n", "2", "s1 s9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = platforge(&["link", "import-pd", "/nonexistent/knot.pd"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_from_environment() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_platforge"));
        c.args(["link", "closure", "--n", "2", "s1"]).args(extra);
        match env {
            Some(v) => c.env("PLATFORGE_BUDGET", v),
            None => c.env_remove("PLATFORGE_BUDGET"),
        };
        c.output().unwrap()
    };
    assert_eq!(json(&run(Some("17"), &[]))["config"]["budget"], 17);
    assert_eq!(json(&run(Some("17"), &["--budget", "5"]))["config"]["budget"], 5);
    assert_eq!(run(Some("lots"), &[]).status.code(), Some(2));
}

#[test]
fn pd_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.pd");
    let p = path.to_str().unwrap();
    let o = platforge(&["link", "closure", "--n", "3", "s1 S2 s1 S2", "export-pd", "--out", p]);
    assert!(o.status.success());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with('X'));
    let back = platforge(&["link", "import-pd", p, "export-pd"]);
    assert_eq!(stdout(&back), text);
    let r = json(&platforge(&["link", "invariants", p]));
    assert_eq!(r["determinant"], 5);
    let o = platforge(&["link", "simplify", p]);
    assert!(o.status.success());
}

#[test]
fn scan_range_error() {
    assert_eq!(platforge(&["scan", "--gmin", "1", "--gmax", "3"]).status.code(), Some(2));
    assert_eq!(platforge(&["scan", "--gmin", "4", "--gmax", "3"]).status.code(), Some(2));
}

#[test]
fn scan_json_single_row() {
    let r = json(&platforge(&["scan", "--gmin", "2", "--gmax", "2", "--format", "json"]));
    assert_eq!(r["rows"].as_array().unwrap().len(), 1);
    assert_eq!(r["metadata"]["gmin"], 2);
    assert_eq!(r["config"]["command"], "scan");
    let l = r["rows"][0]["lambda_hom"].as_f64().unwrap();
    assert!((l - 2.618033988749895).abs() < 1e-12);
}

#[test]
fn scan_to_file_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = platforge(&["scan", "--gmin", "2", "--gmax", "12", "--out", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 11);
    for row in rows {
        let lambda: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
        assert!(lambda > 1.0, "{row}");
    }
}

#[test]
fn scan_assert_window() {
    let ok = platforge(&["scan", "--gmin", "2", "--gmax", "6", "--assert-window", "1.5", "3"]);
    assert!(ok.status.success());
    let bad = platforge(&["scan", "--gmin", "2", "--gmax", "6", "--assert-window", "2.2", "3"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn unknown_flag_rejected() {
    assert_ne!(platforge(&["scan", "--gmin", "2", "--gmax", "3", "--bogus"]).status.code(), Some(0));
}
