use std::process::{Command, Output};

use serde_json::Value;

fn barfock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_barfock")).args(args).env_remove("BARFOCK_MAX_PARTITIONS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = barfock(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn cb_matrix_json_shape() {
    let v = json(&["cb", "--h", "5", "--core", "(1)", "--weight", "2"]);
    assert_eq!(v["h"], 5);
    assert_eq!(v["core"], "(1)");
    assert_eq!(v["weight"], 2);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    assert_eq!(v["cols"][1], "(5,5,1)");
    assert_eq!(v["entries"][3][0], "q^2 + q^4");
    assert_eq!(v["entries"][3][1], "q + q^3");
    assert_eq!(v["entries"][7][3], "q^3");
    assert!(v.get("provenance").is_none());
}

#[test]
fn table_marks_zero_with_a_dot() {
    let o = barfock(&["cb", "--h", "7", "--core", "(4,2)", "--weight", "1"]);
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    let cells: Vec<_> = last.split_whitespace().collect();
    assert_eq!(cells, ["(11,2)", "·", "·", "q^2"]);
}

#[test]
fn formula_and_oracle_agree_on_the_fixture() {
    let a = json(&["cb", "--h", "5", "--core", "(1)", "--weight", "2"]);
    let b = json(&["formula", "--h", "5", "--core", "(1)", "--weight", "2"]);
    assert_eq!(a, b);
}

#[test]
fn provenance_tags_every_nonzero_entry() {
    let v = json(&["formula", "--h", "5", "--core", "(1)", "--weight", "2", "--provenance"]);
    let entries = v["entries"].as_array().unwrap();
    let tags = v["provenance"].as_array().unwrap();
    for (row, tag_row) in entries.iter().zip(tags) {
        for (e, t) in row.as_array().unwrap().iter().zip(tag_row.as_array().unwrap()) {
            assert_eq!(e != "0", !t.is_null());
        }
    }
    assert_eq!(tags[4][0], "shp:lam=ppi");
    assert_eq!(tags[8][1], "nat:lam=yy");
}

#[test]
fn block_by_size_lists_h_strict_partitions() {
    let v = json(&["block", "--h", "3", "--size", "8"]);
    let parts: Vec<_> = v.as_array().unwrap().iter().map(|r| r["partition"].as_str().unwrap()).collect();
    assert_eq!(parts, ["(3,3,2)", "(4,3,1)", "(5,2,1)", "(5,3)", "(6,2)", "(7,1)", "(8)"]);
}

#[test]
fn weight_two_block_carries_profiles() {
    let v = json(&["block", "--h", "5", "--core", "(1)", "--weight", "2", "--restricted"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["special"], "shp");
    assert_eq!(rows[3]["colour"], "grey");
}

#[test]
fn core_reports_weight_and_abacus() {
    let v = json(&["core", "--h", "5", "--partition", "(11,5,5,1)"]);
    assert_eq!(v["core"], "(6,1)");
    assert_eq!(v["weight"], 3);
    assert!(!v["abacus"].as_array().unwrap().is_empty());
}

#[test]
fn diff_reports_agreement() {
    let o = barfock(&["diff", "--h", "3,5,7", "--weight", "1", "--max-core-size", "15"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all blocks agree"));
}

#[test]
fn diff_is_deterministic_across_thread_counts() {
    let one = barfock(&["--format", "json", "diff", "--h", "3,5", "--weight", "2", "--max-core-size", "8", "--threads", "1"]);
    let many = barfock(&["--format", "json", "diff", "--h", "3,5", "--weight", "2", "--max-core-size", "8", "--threads", "4"]);
    assert_eq!(one.stdout, many.stdout);
    let v: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["agree"], true);
}

#[test]
fn verify_pair_reports_checks() {
    let v = json(&["verify-pair", "--h", "7", "--core", "(8,2,1)", "--residue", "1"]);
    let pairs = v.as_array().unwrap();
    assert_eq!(pairs.len(), 1);
    assert_eq!(pairs[0]["kind"], "A");
    assert_eq!(pairs[0]["scopes_kessar"], false);
    let checks = pairs[0]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "table rows"));
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn predict_spin_lists_strict_rows() {
    let v = json(&["predict-spin", "--h", "5", "--core", "(1)", "--weight", "2"]);
    let rows = v.as_array().unwrap();
    assert!(rows.iter().all(|r| r["lambda"] != "(5,5,1)"));
    let flt = rows.iter().find(|r| r["lambda"] == "(6,4,1)" && r["mu"] == "(5,3,2,1)").unwrap();
    assert_eq!(flt["d_at_one"], "2");
    assert_eq!(flt["predicted"], "2");
}

#[test]
fn csv_quotes_partitions() {
    let o = barfock(&["--format", "csv", "cb", "--h", "3", "--core", "()", "--weight", "1"]);
    assert!(stdout(&o).starts_with(",\"(2,1)\""));
}

#[test]
fn exit_codes() {
    assert_eq!(barfock(&["cb", "--h", "4", "--core", "()", "--weight", "1"]).status.code(), Some(1));
    assert_eq!(barfock(&["cb", "--h", "3", "--core", "(3)", "--weight", "1"]).status.code(), Some(1));
    assert_eq!(barfock(&["cb", "--h", "3", "--core", "()", "--weight", "4"]).status.code(), Some(1));
    assert_eq!(barfock(&["formula", "--h", "3", "--core", "()", "--weight", "3"]).status.code(), Some(1));
    assert_eq!(barfock(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(barfock(&["--help"]).status.code(), Some(0));
}

#[test]
fn partition_cap_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_barfock"))
        .args(["cb", "--h", "5", "--core", "(1)", "--weight", "2"])
        .env("BARFOCK_MAX_PARTITIONS", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("resource limit"));
}
