//! End-to-end checks of the command-line surface: formats, exit codes,
//! certificate round-trips.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nonevasive"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn check_diamond_with_expectation() {
    let dir = tempfile::tempdir().unwrap();
    let poset = write(
        dir.path(),
        "diamond.poset",
        "n 4\n0 < 1\n0 < 2\n1 < 3\n2 < 3\n",
    );
    let out = run(&["check", &poset, "--expect", "nonevasive"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("dismantlable: yes"));
    assert!(text.contains("non-evasive: yes"));

    let out = run(&["check", &poset, "--expect", "not-nonevasive"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_crown_is_not_dismantlable() {
    let dir = tempfile::tempdir().unwrap();
    let crown = stdout(&run(&["generate", "--family", "crown", "--size", "3"]));
    let poset = write(dir.path(), "crown.poset", &crown);
    let out = run(&["check", &poset]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dismantlable: no"));
    let out = run(&["dismantle", &poset]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_errors_exit_2_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.poset", "n 2\n0 < x\n");
    let out = run(&["check", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let cyclic = write(dir.path(), "cyclic.poset", "n 2\n0 < 1\n1 < 0\n");
    let out = run(&["check", &cyclic]);
    assert_eq!(out.status.code(), Some(2));

    let missing = dir.path().join("missing.poset");
    let out = run(&["check", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn redundant_pairs_warn_but_parse() {
    let dir = tempfile::tempdir().unwrap();
    let poset = write(dir.path(), "redundant.poset", "n 3\n0 < 1\n1 < 2\n0 < 2\n");
    let out = run(&["check", &poset]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a cover"));
}

#[test]
fn generate_stream_round_trips_through_check() {
    let all = stdout(&run(&["generate", "--all-n", "4"]));
    assert_eq!(all.matches("---").count(), 15); // 16 posets, separators between
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "all4.poset", &all);
    let out = run(&["check", &path, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let docs: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(docs.as_array().unwrap().len(), 16);
}

#[test]
fn generate_random_is_seeded() {
    let a = stdout(&run(&[
        "generate", "--random", "6", "--count", "3", "--seed", "9",
    ]));
    let b = stdout(&run(&[
        "generate", "--random", "6", "--count", "3", "--seed", "9",
    ]));
    assert_eq!(a, b);
    let c = stdout(&run(&[
        "generate", "--random", "6", "--count", "3", "--seed", "10",
    ]));
    assert_ne!(a, c);
}

#[test]
fn dual_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let poset = write(dir.path(), "v.poset", "n 3\n0 < 1\n0 < 2\n");
    let dual = stdout(&run(&["dual", &poset]));
    assert!(dual.contains("1 < 0") && dual.contains("2 < 0"));
    let dual_path = write(dir.path(), "dual.poset", &dual);
    let back = stdout(&run(&["dual", &dual_path]));
    assert_eq!(back.trim(), "n 3\n0 < 1\n0 < 2");
}

#[test]
fn nonevasive_command_on_complexes() {
    let dir = tempfile::tempdir().unwrap();
    // the interval: accepted
    let interval = write(dir.path(), "interval.cx", "\n0\n1\n0, 1\n");
    let out = run(&["nonevasive", &interval, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["nonevasive"], true);
    assert_eq!(doc["certificate"]["vertex"], 0);
    assert_eq!(doc["certificate"]["del"], "leaf");
    // two points: rejected, exit 1
    let two = write(dir.path(), "two.cx", "0\n1\n");
    let out = run(&["nonevasive", &two]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("non-evasive: no"));
}

#[test]
fn certificate_emit_and_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let interval = write(dir.path(), "interval.cx", "0, 1\n");
    let cert_path = dir.path().join("cert.json");
    let out = bin()
        .args(["certificate", &interval, "--target", "nonevasive", "--out"])
        .arg(&cert_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = bin()
        .args([
            "certificate",
            &interval,
            "--target",
            "nonevasive",
            "--verify",
        ])
        .arg(&cert_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("valid"));
    // a leaf-only certificate is the wrong shape for the interval
    let bogus = write(dir.path(), "bogus.json", "\"leaf\"");
    let out = run(&[
        "certificate",
        &interval,
        "--target",
        "nonevasive",
        "--verify",
        &bogus,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("invalid"));
    // malformed JSON is an input error
    let broken = write(dir.path(), "broken.json", "{\"vertex\": 0}");
    let out = run(&[
        "certificate",
        &interval,
        "--target",
        "nonevasive",
        "--verify",
        &broken,
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn certificate_rejects_evasive_complexes() {
    let dir = tempfile::tempdir().unwrap();
    let two = write(dir.path(), "two.cx", "0\n1\n");
    let out = run(&["certificate", &two, "--target", "nonevasive"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not non-evasive"));
}

#[test]
fn certificate_dismantle_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let chain = write(dir.path(), "chain4.poset", "n 4\n0 < 1\n1 < 2\n2 < 3\n");
    let cert_path = dir.path().join("seq.json");
    let out = bin()
        .args(["certificate", &chain, "--target", "dismantle", "--out"])
        .arg(&cert_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let seq: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&cert_path).unwrap()).unwrap();
    assert_eq!(seq["order"].as_array().unwrap().len(), 4);
    let out = bin()
        .args(["certificate", &chain, "--target", "dismantle", "--verify"])
        .arg(&cert_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    // a wrong order against a poset where order matters
    let m3 = write(
        dir.path(),
        "m3.poset",
        "n 5\n0 < 1\n0 < 2\n0 < 3\n1 < 4\n2 < 4\n3 < 4\n",
    );
    let bad_seq = write(dir.path(), "bad_seq.json", "{\"order\": [1, 2, 3, 4, 0]}");
    let out = run(&[
        "certificate",
        &m3,
        "--target",
        "dismantle",
        "--verify",
        &bad_seq,
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_json_report_schema_keys() {
    let dir = tempfile::tempdir().unwrap();
    let poset = write(dir.path(), "chain3.poset", "n 3\n0 < 1\n1 < 2\n");
    let out = run(&["check", &poset, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["dismantlable"], true);
    assert_eq!(doc["nonevasive"], true);
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 3);
    for rep in reports {
        for key in [
            "poset",
            "s",
            "variant",
            "holds",
            "failures",
            "nonevasive",
            "certificate",
            "recursion",
        ] {
            assert!(rep.get(key).is_some(), "missing key {key}");
        }
        assert_eq!(rep["variant"], "both");
        assert_eq!(rep["holds"], true);
        assert_eq!(rep["nonevasive"], true);
        // chains are fully comparable: single cone node in the replay
        assert!(rep["recursion"][0]["cone_peak"].is_number());
    }
}

#[test]
fn verify_conjecture_exit_codes_and_guard() {
    let out = run(&["verify-conjecture", "--max-n", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["failure_count"], 0);
    assert_eq!(doc["classes_per_n"], serde_json::json!([1, 2, 5]));
    // guard: 7 needs --force
    let out = run(&["verify-conjecture", "--max-n", "7"]);
    assert_eq!(out.status.code(), Some(2));
    // bad variant is an input error
    let out = run(&["verify-conjecture", "--variant", "zigzag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_conjecture_clean_on_all_variants_n5() {
    for variant in ["corollary15", "theorem8", "bw"] {
        let out = run(&[
            "verify-conjecture",
            "--max-n",
            "5",
            "--variant",
            variant,
            "--json",
        ]);
        assert_eq!(out.status.code(), Some(0), "variant {variant}");
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(doc["failure_count"], 0, "variant {variant}");
        assert_eq!(
            doc["hypothesis_holding"], doc["verified"],
            "variant {variant}"
        );
    }
}

#[test]
fn verify_conjecture_out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("summary.json");
    let out = bin()
        .args([
            "verify-conjecture",
            "--max-n",
            "4",
            "--variant",
            "bw",
            "--json",
            "--out",
        ])
        .arg(&out_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let from_file = fs::read_to_string(&out_path).unwrap();
    assert_eq!(stdout(&out).trim_end(), from_file.trim_end());
}

#[test]
fn vertex_guard_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let interval = write(dir.path(), "interval.cx", "0, 1\n");
    let out = bin()
        .args(["nonevasive", &interval])
        .env("NONEVASIVE_MAX_VERTICES", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size guard"));
    let out = bin()
        .args(["nonevasive", &interval])
        .env("NONEVASIVE_MAX_VERTICES", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
