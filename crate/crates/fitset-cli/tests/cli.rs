//! End-to-end checks of the command-line contract: exit codes, report
//! shapes, filters, and input validation, all through the real binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use fitset_cli::corpus;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fitset"))
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fitset-cli-test-{tag}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &std::path::Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const S4: &str = r#"{"name": "S4", "degree": 4, "generators": [[[1, 2]], [[1, 2, 3, 4]]]}"#;

#[test]
fn default_corpus_has_nine_entries_in_file_order() {
    let entries = corpus::load_default_corpus(512).unwrap();
    let names: Vec<&str> = entries.iter().map(|e| e.group.name()).collect();
    assert_eq!(
        names,
        ["S3", "C6", "D8", "Q8", "A4", "S4", "SL(2,3)", "S3xS3", "A5"]
    );
}

#[test]
fn empty_directory_loads_as_empty_corpus() {
    let dir = tmpdir("empty");
    let entries = corpus::load_corpus(&dir, 512).unwrap();
    assert!(entries.is_empty());
}

#[test]
fn malformed_corpus_file_is_named_with_position() {
    let dir = tmpdir("malformed");
    write(&dir, "bad.json", "{\"group\": nope}");
    let Err(err) = corpus::load_corpus(&dir, 512) else {
        panic!("malformed corpus loaded")
    };
    let err = err.to_string();
    assert!(err.contains("bad.json:1:"), "error was: {err}");

    let out = bin().arg("verify").arg("--corpus").arg(&dir).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bad.json"), "stderr: {}", stderr(&out));
}

#[test]
fn unknown_suite_name_is_rejected_at_load() {
    let dir = tmpdir("unknown-suite");
    write(
        &dir,
        "g.json",
        r#"{"group": {"name": "S3", "degree": 3, "generators": [[[1,2]], [[1,2,3]]]},
            "suites": [{"name": "no-such-suite"}]}"#,
    );
    let Err(err) = corpus::load_corpus(&dir, 512) else {
        panic!("unknown suite accepted")
    };
    let err = err.to_string();
    assert!(err.contains("no-such-suite"), "error was: {err}");
}

#[test]
fn verify_default_corpus_passes_and_exits_zero() {
    let out = bin().args(["verify", "--format", "json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert_eq!(report["entries"].as_array().unwrap().len(), 9);
    assert_eq!(report["schema"], "fitset-report/1");
}

#[test]
fn theorem_b_suite_alone_passes_everywhere() {
    let out = bin()
        .args(["verify", "--suite", "theorem-b", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert_eq!(report["summary"]["hypotheses_unmet"], 0);
    assert_eq!(report["summary"]["skipped"], 0);
    let pass = report["summary"]["pass"].as_u64().unwrap();
    assert!(pass > 0, "theorem-b produced no reports");
}

#[test]
fn filter_matching_no_declared_suite_yields_zero_summary() {
    let dir = tmpdir("filter-nothing");
    write(
        &dir,
        "g.json",
        r#"{"group": {"name": "S3", "degree": 3, "generators": [[[1,2]], [[1,2,3]]]},
            "suites": [{"name": "lattice-invariants"}]}"#,
    );
    let out = bin()
        .arg("verify")
        .arg("--corpus")
        .arg(&dir)
        .args(["--suite", "products", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["pass", "fail", "hypotheses_unmet", "skipped"] {
        assert_eq!(report["summary"][key], 0, "summary.{key}");
    }
}

#[test]
fn a5_theorem_a2_at_two_reports_hypotheses_unmet() {
    let out = bin()
        .args(["verify", "--suite", "theorem-a2", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let a5 = report["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["group"] == "A5")
        .expect("A5 entry");
    let suite = a5["suites"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["suite"] == "theorem-a2" && s["pi"] == serde_json::json!([2]))
        .expect("A5 declares theorem-a2 at pi=[2]");
    let items = suite["items"].as_array().unwrap();
    assert!(!items.is_empty());
    assert!(
        items
            .iter()
            .filter(|i| i["report"]["theorem_id"] == "theorem-a2")
            .all(|i| i["report"]["status"] == "hypotheses_unmet"),
        "A5 is not 2-soluble, so every theorem-a2 report must be unmet"
    );
}

#[test]
fn unknown_filter_name_is_a_usage_error() {
    let out = bin().args(["verify", "--suite", "bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn cap_violation_is_a_parse_error() {
    let dir = tmpdir("cap");
    let group = write(&dir, "s4.json", S4);
    let out = bin()
        .env("FITSET_CAP", "4")
        .arg("lattice")
        .arg(&group)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .env("FITSET_CAP", "not-a-number")
        .arg("lattice")
        .arg(&group)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("FITSET_CAP"));
}

#[test]
fn lattice_subcommand_prints_the_table() {
    let dir = tmpdir("lattice");
    let group = write(&dir, "s4.json", S4);
    let out = bin().arg("lattice").arg(&group).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("30 subgroups in 11 conjugacy classes"), "{text}");
}

#[test]
fn radical_subcommand_prints_the_fitting_subgroup() {
    let dir = tmpdir("radical");
    let group = write(&dir, "s4.json", S4);
    let set = write(&dir, "set.json", r#"{"kind": "trace", "class": {"name": "nilpotent"}}"#);
    let out = bin()
        .arg("radical")
        .arg(&group)
        .arg("--set")
        .arg(&set)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("order 4"), "nilpotent radical of S4 is V4: {text}");
}

#[test]
fn injector_methods_agree_on_s4() {
    let dir = tmpdir("injectors");
    let group = write(&dir, "s4.json", S4);
    let slr = write(
        &dir,
        "slr.json",
        r#"{"kind": "slr", "pi": [2],
            "f": {"2": {"kind": "trace", "class": {"name": "soluble_pi", "pi": [2]}}}}"#,
    );
    let brute = bin()
        .arg("injectors")
        .arg(&group)
        .arg("--set")
        .arg(&slr)
        .args(["--method", "brute"])
        .output()
        .unwrap();
    assert_eq!(brute.status.code(), Some(0));
    let constructive = bin()
        .arg("injectors")
        .arg(&group)
        .arg("--set")
        .arg(&slr)
        .args(["--method", "theorem-b", "--pi", "2"])
        .output()
        .unwrap();
    assert_eq!(constructive.status.code(), Some(0));
    for text in [stdout(&brute), stdout(&constructive)] {
        assert!(text.contains("1 injectors in 1 conjugacy class(es)"), "{text}");
        assert!(text.contains("order 12, index 2"), "{text}");
    }
}

#[test]
fn theorem_b_method_rejects_non_slr_specs_and_pi_mismatch() {
    let dir = tmpdir("usage");
    let group = write(&dir, "s4.json", S4);
    let trace = write(&dir, "t.json", r#"{"kind": "trace", "class": {"name": "nilpotent"}}"#);
    let out = bin()
        .arg("injectors")
        .arg(&group)
        .arg("--set")
        .arg(&trace)
        .args(["--method", "theorem-b"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let slr = write(
        &dir,
        "slr.json",
        r#"{"kind": "slr", "pi": [2],
            "f": {"2": {"kind": "trace", "class": {"name": "soluble_pi", "pi": [2]}}}}"#,
    );
    let out = bin()
        .arg("injectors")
        .arg(&group)
        .arg("--set")
        .arg(&slr)
        .args(["--method", "theorem-b", "--pi", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("disagrees"));
}

#[test]
fn unmet_hypotheses_on_the_constructive_route_exit_zero() {
    // The trivial assignment at 2 is not full, so the route must refuse
    // honestly instead of computing something else.
    let dir = tmpdir("unmet");
    let group = write(&dir, "s4.json", S4);
    let slr = write(
        &dir,
        "slr.json",
        r#"{"kind": "slr", "pi": [2], "f": {"2": {"kind": "trace", "class": {"name": "trivial"}}}}"#,
    );
    let out = bin()
        .arg("injectors")
        .arg(&group)
        .arg("--set")
        .arg(&slr)
        .args(["--method", "theorem-b"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("hypotheses unmet"), "{}", stdout(&out));
}

#[test]
fn text_and_json_formats_render_the_same_run() {
    let dir = tmpdir("formats");
    let report = dir.join("report.json");
    let out = bin()
        .args(["verify", "--suite", "lattice-invariants", "--format", "text", "--report"])
        .arg(&report)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("corpus "), "{}", stdout(&out));
    let file: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(file["summary"]["fail"], 0);
    let digest = file["corpus_digest"].as_str().unwrap();
    assert!(stdout(&out).contains(&digest[..12]));
}
