use std::process::{Command, Output};

use axial_core::engine::{FormFlag, Record, Status};

fn axial(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_axial")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn catalog_verifies_every_type() {
    let o = axial(&["catalog", "verify"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.ends_with(" pass")).count(), 8);
    let one = stdout(&axial(&["catalog", "verify", "--tag", "5A"]));
    assert_eq!(one.trim(), "5A dim 6 pass");
}

#[test]
fn catalog_dump_is_json() {
    let o = axial(&["catalog", "dump", "--tag", "4B"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["type"], "4B");
    assert_eq!(v[0]["basis"].as_array().unwrap().len(), 5);
}

#[test]
fn groups_table1_lists_covers_and_quotients() {
    let o = axial(&["groups", "table1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "name,order,4trans");
    for want in ["G4,336,y", "G14,32768,n", "G'14,8192,y", "G''8,1152,y"] {
        assert!(lines.contains(&want), "{}", want);
    }
}

#[test]
fn groups_order_reads_a_file() {
    let path = std::env::temp_dir().join(format!("axial-a5-{}.txt", std::process::id()));
    std::fs::write(&path, "<x, y | x^2, y^3, (x*y)^5>").unwrap();
    let o = axial(&["groups", "order", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(stdout(&o).trim(), "60");
}

#[test]
fn shapes_are_listed_with_forbidden_flags() {
    let text = stdout(&axial(&["shapes", "enumerate", "--group", "S3", "--axes", "1+3"]));
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.contains(&"S3,1+3,3C 2A,y"));
    assert!(rows.contains(&"S3,1+3,3A 2A,n"));
}

#[test]
fn construct_json_round_trips() {
    let o = axial(&["construct", "--group", "S3", "--axes", "1+3", "--shape", "3A 2A"]);
    assert!(o.status.success());
    let rec: Record = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((rec.dim, rec.m, rec.form), (Some(8), Some(2), Some(FormFlag::Pos)));
    assert_eq!(rec.products.len(), 8 * 9 / 2);
    let again: Record = serde_json::from_str(&serde_json::to_string(&rec).unwrap()).unwrap();
    assert_eq!(again, rec);
    assert!(stdout(&o).contains("\"1/4\""));
}

#[test]
fn env_caps_make_runs_inconclusive() {
    let o = Command::new(env!("CARGO_BIN_EXE_axial"))
        .args(["construct", "--group", "S4", "--axes", "6", "--shape", "3A 2A"])
        .env("AXIAL_MAX_DIM", "200")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let rec: Record = serde_json::from_slice(&o.stdout).unwrap();
    assert!(matches!(rec.status, Status::Incomplete { .. }));
    assert_eq!(rec.dim, None);
}

#[test]
fn reproduce_table3_matches() {
    let o = axial(&["reproduce", "--table", "3", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("11 match, 0 mismatch"));
}

#[test]
fn reproduce_json_names_rows() {
    let o = axial(&["reproduce", "--table", "1", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 25);
    assert!(rows.iter().all(|r| r["outcome"] == "match"));
}

#[test]
fn bad_arguments_are_rejected() {
    assert!(!axial(&["catalog", "verify", "--bogus"]).status.success());
    assert!(!axial(&["catalog", "verify", "--tag", "7A"]).status.success());
    assert!(!axial(&["reproduce", "--table", "2"]).status.success());
    assert!(!axial(&["construct", "--group", "S4", "--axes", "6", "--shape", "3A 2A", "--max-rounds", "0"]).status.success());
}
