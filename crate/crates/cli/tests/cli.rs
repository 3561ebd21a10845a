//! End-to-end tests of the `strata` binary: exit codes, output shapes,
//! determinism, and the ingestion interface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn strata(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strata"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("strata-cli-test-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn group_listing() {
    let out = strata(&["group", "--type", "B3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("type B3 | order 48 | rank 3"));
    assert!(text.contains("class .111 | size 1 | minlen 9 | m 0 | elliptic true"));
    assert!(text.contains("irr 1_9 | dim 1 | b 9"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["group", "--type", "E8"][..],
        &["group", "--type", "I2"][..],
        &["group", "--type", "B3", "--p", "4"][..],
        &["verify", "--suite", "nonsense"][..],
        &["cross-section"][..],
        &["psi", "--type", "I2", "--p", "5", "--a-file", "x"][..],
    ] {
        let out = strata(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
    // clap-level parse errors share the usage exit code
    let out = strata(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn psi_json_for_p5_matches_published_matrix() {
    let out = strata(&["psi", "--type", "I2", "--p", "5", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["type"], "I2(5)");
    assert_eq!(v["classes"][0], "<c>");
    let entries = v["entries"].as_array().unwrap();
    let rows: Vec<Vec<&str>> = entries
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|e| e.as_str().unwrap()).collect())
        .collect();
    assert_eq!(
        rows,
        vec![
            vec!["1", "0", "0", "0"],
            vec!["1,0,1", "0,1", "0", "0"],
            vec!["1", "1", "1", "0"],
            vec!["1", "2", "2", "1"],
        ]
    );
}

#[test]
fn psi_check_passes_for_p9() {
    let out = strata(&["psi", "--type", "I2", "--p", "9", "--check"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("checks passed"));
}

#[test]
fn sigma_b3_json_shape() {
    let out = strata(&["sigma", "--type", "B3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["irr_star"], serde_json::json!(["1_3"]));
    assert_eq!(v["irr_star_star"], serde_json::json!([]));
    assert_eq!(v["map"].as_array().unwrap().len(), 10);
    assert!(v["conj33c"].as_array().unwrap().iter().all(|c| c["holds"] == true));
    // field order is part of the interface
    let text = stdout(&out);
    let order = ["\"type\"", "\"irr_star\"", "\"irr_star_star\"", "\"map\"", "\"image\"", "\"conj33c\""];
    let mut last = 0;
    for key in order {
        let pos = text.find(key).unwrap_or_else(|| panic!("missing {key}"));
        assert!(pos > last, "field {key} out of order");
        last = pos;
    }
}

#[test]
fn sigma_h4_partial_mode() {
    let out = strata(&["sigma", "--type", "H4", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["image"].as_array().unwrap().len(), 22);
    assert_eq!(v["irr_star"].as_array().unwrap().len(), 9);
    assert_eq!(v["map"].as_array().unwrap().len(), 34);
    // the monomial law fails somewhere in H4 (e.g. at c_16)
    let conj = v["conj33c"].as_array().unwrap();
    assert!(conj.iter().any(|c| c["holds"] == false));
    assert!(conj
        .iter()
        .any(|c| c["class"] == "(12123)" && c["holds"] == true));
}

#[test]
fn hecke_column_h3_contains_alternating_signs() {
    let out = strata(&["hecke-column", "--type", "H3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("c_15 | 1,0,1,0,1,0,-1,0,1,0,1,0,1"));
}

#[test]
fn cross_section_product_output() {
    let out = strata(&["cross-section", "--product", "H3,I2(7)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("type H3 x I2(7)"));
    // 8 * 5 product fibers plus two header lines
    assert_eq!(text.lines().count(), 2 + 40);
    assert!(text.contains("5_5, 1_0 | c_15, <c> (17, 0) | (13), <c> (4, 1)"));
}

#[test]
fn deterministic_output() {
    for args in [
        &["sigma", "--type", "H3", "--format", "json"][..],
        &["psi", "--type", "I2", "--p", "8"][..],
        &["cross-section", "--type", "B3"][..],
    ] {
        let a = strata(args);
        let b = strata(args);
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
    }
}

#[test]
fn verify_suite_b3_passes() {
    let out = strata(&["verify", "--suite", "b3"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS [criterion 7]"));
    assert!(text.contains("checks passed"));
}

#[test]
fn ingestion_assembles_psi_from_factor_files() {
    // rank-1 miniature with hand-checked factors:
    //   A  = [[u, -1], [u-1, u-1]]  (classes c_1, (-))
    //   A' = identity
    //   A'' = [[u, 1], [1, u]] / (u^2 - 1)
    // giving Ψ = [[1, 0], [1, 1]].
    let dir = temp_dir("ingest");
    let a = "table a\ntype A1\nrows c_1,(-)\ncols 1_0,1_1\n\
             entry c_1 1_0 0,1\nentry c_1 1_1 -1\n\
             entry (-) 1_0 -1,1\nentry (-) 1_1 -1,1\n";
    let ap = "table ap\ntype A1\nrows 1_0,1_1\ncols 1_0,1_1\n\
              entry 1_0 1_0 1\nentry 1_1 1_1 1\n";
    let app = "table app\ntype A1\nrows _h,1_0,1_1\ncols _h,1_0,1_1\n\
               entry _h _h -1,0,1\n\
               entry 1_0 1_0 0,1\nentry 1_0 1_1 1\n\
               entry 1_1 1_0 1\nentry 1_1 1_1 0,1\n";
    let (fa, fap, fapp) =
        (dir.join("a.tbl"), dir.join("ap.tbl"), dir.join("app.tbl"));
    std::fs::write(&fa, a).unwrap();
    std::fs::write(&fap, ap).unwrap();
    std::fs::write(&fapp, app).unwrap();

    let out = strata(&[
        "psi",
        "--type",
        "A1",
        "--format",
        "json",
        "--a-file",
        fa.to_str().unwrap(),
        "--a-prime-file",
        fap.to_str().unwrap(),
        "--a-double-prime-file",
        fapp.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["entries"], serde_json::json!([["1", "0"], ["1", "1"]]));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn sigma_from_ingested_psi_file_matches_embedded() {
    // round-trip the embedded H3 matrix through a file
    let dir = temp_dir("psi-file");
    let table = strata_core::golden::embedded_psi_table(strata_core::meta::GroupType::H3)
        .unwrap();
    let path = dir.join("h3.tbl");
    table.save(&path).unwrap();

    let from_file = strata(&[
        "sigma",
        "--type",
        "H3",
        "--psi-file",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let embedded = strata(&["sigma", "--type", "H3", "--format", "json"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, embedded.stdout);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn broken_psi_file_fails_with_exit_1() {
    // breaking one dimension entry violates the identity-row validation
    let dir = temp_dir("broken");
    let table = strata_core::golden::embedded_psi_table(strata_core::meta::GroupType::H3)
        .unwrap();
    let text = table.render().replace("entry (-) 5_2 5", "entry (-) 5_2 4");
    let path = dir.join("broken.tbl");
    std::fs::write(&path, text).unwrap();
    let out = strata(&["sigma", "--type", "H3", "--psi-file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(dir).ok();
}
