//! End-to-end checks of the `barker` binary: argument handling, output
//! formats, exit codes, and manifest sidecars.

use std::fs;
use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use barker::manifest::sha256_hex;

const BARKER_13: &str = "+++++--++-+-+";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_barker"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

#[test]
fn autocorr_text_shows_the_profile() {
    let out = run(&["autocorr", BARKER_13]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("n = 13"), "{text}");
    assert!(text.contains("peak sidelobe: 1"), "{text}");
}

#[test]
fn autocorr_json_freezes_the_values() {
    let out = run(&["autocorr", "+++-+", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["values"], serde_json::json!([5, 0, 1, 0, 1]));
    assert_eq!(v["peak_sidelobe"], 1);
}

#[test]
fn autocorr_csv_has_a_header() {
    let out = run(&["autocorr", "++-", "--format", "csv"]);
    let text = stdout_of(&out);
    assert!(text.starts_with("k,c_k\n"), "{text}");
    assert!(text.contains("2,-1"), "{text}");
}

#[test]
fn empty_input_is_a_usage_error() {
    let out = run(&["autocorr", ""]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("error"), "{}", stderr_of(&out));
}

#[test]
fn check_passes_on_barker_and_fails_on_flat() {
    let ok = run(&["check", BARKER_13]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout_of(&ok).contains("verdict: PASS"));

    let bad = run(&["check", "++++++"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout_of(&bad).contains("verdict: FAIL"));
}

#[test]
fn check_reads_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_barker"))
        .args(["check", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().unwrap().write_all(b"+++-+\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("verdict: PASS"));
}

#[test]
fn search_finds_the_length_13_class() {
    let out = run(&["search", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("mode = pruned"), "{text}");
    assert!(text.contains("found 1:"), "{text}");
    assert!(stderr_of(&out).contains("TIMINGS"), "timing goes to stderr");
}

#[test]
fn search_above_the_ceiling_needs_an_override() {
    let refused = run(&["search", "31"]);
    assert_eq!(refused.status.code(), Some(2));
    assert!(stderr_of(&refused).contains("ceiling"), "{}", stderr_of(&refused));

    let allowed = run(&["search", "31", "--ceiling", "63"]);
    assert_eq!(allowed.status.code(), Some(0));
    assert!(stdout_of(&allowed).contains("found 0:"));
}

#[test]
fn pruned_mode_rejects_even_lengths() {
    let out = run(&["search", "12", "--mode", "pruned"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("even"), "{}", stderr_of(&out));
}

#[test]
fn worker_count_leaves_results_alone() {
    let one = run(&["search", "17", "--workers", "1", "--format", "json"]);
    let four = run(&["search", "17", "--workers", "4", "--format", "json"]);
    let a: serde_json::Value = serde_json::from_str(&stdout_of(&one)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout_of(&four)).unwrap();
    assert_eq!(a["found"], b["found"]);
    assert_eq!(a["nodes_explored"], b["nodes_explored"]);
}

#[test]
fn scan_csv_is_a_census_table() {
    let out = run(&["scan", "1..8", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,mode,found,nodes,example");
    assert_eq!(lines.len(), 9);
    assert!(lines[6].starts_with("6,exhaustive,0,"), "no length-6 sequence: {}", lines[6]);
}

#[test]
fn psl_reports_the_minimum() {
    let out = run(&["psl", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("minimal peak sidelobe = 2"), "{}", stdout_of(&out));
}

#[test]
fn certificate_roundtrip_with_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("cert15.json");
    let cert_arg = cert_path.to_str().unwrap();

    let gen = run(&["certificate", "15", "--out", cert_arg, "--manifest"]);
    assert_eq!(gen.status.code(), Some(0), "{}", stderr_of(&gen));

    let cert_bytes = fs::read(&cert_path).unwrap();
    let cert: serde_json::Value = serde_json::from_slice(&cert_bytes).unwrap();
    assert_eq!(cert["n"], 15);
    assert_eq!(cert["records"].as_array().unwrap().len(), 7);

    // The sidecar records the output digest; recompute it independently.
    let manifest_path = dir.path().join("cert15.json.manifest.json");
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&manifest_path).unwrap()).unwrap();
    assert_eq!(manifest["tool"], "barker");
    assert_eq!(manifest["outputs"][0]["sha256"], sha256_hex(&cert_bytes));

    let verify = run(&["certificate", "--verify", cert_arg]);
    assert_eq!(verify.status.code(), Some(0));
    assert!(stdout_of(&verify).contains("VALID"));

    // One flipped field must flip the verdict.
    let mut tampered = cert.clone();
    tampered["records"][0]["u"] = serde_json::json!(4);
    let bad_path = dir.path().join("tampered.json");
    fs::write(&bad_path, serde_json::to_vec(&tampered).unwrap()).unwrap();
    let refused = run(&["certificate", "--verify", bad_path.to_str().unwrap()]);
    assert_eq!(refused.status.code(), Some(1));
    assert!(stdout_of(&refused).contains("INVALID"));
}

#[test]
fn certificate_rejects_solved_lengths() {
    let out = run(&["certificate", "13"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("13"), "{}", stderr_of(&out));
}

#[test]
fn certificate_needs_a_length_or_a_file() {
    let out = run(&["certificate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn power_sums_match_the_small_oracle() {
    let out = run(&["power-sums", "++-", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("s_1 = -1"), "{text}");
    assert!(text.contains("s_2 = 3"), "{text}");
}

#[test]
fn power_sums_from_a_file_with_residues() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seq.txt");
    fs::write(&path, format!("{BARKER_13}\n")).unwrap();
    let arg = format!("@{}", path.display());

    let out = run(&["power-sums", &arg, "6", "--source", "q", "--mod", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("S_2 = -2  (mod 5: 3)"), "{text}");
    assert!(text.contains("S_5 = 0  (mod 5: 0)"), "{text}");
}

#[test]
fn canon_json_lists_the_orbit() {
    let out = run(&["canon", "++-+", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["canonical"], "---+");
    assert_eq!(v["orbit"].as_array().unwrap().len(), 8);
}
