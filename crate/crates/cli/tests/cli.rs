use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn monostar(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monostar"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn gen_affine_matches_golden() {
    let out = monostar(&["gen", "affine", "--q", "2", "--mult", "2"], None);
    assert!(out.status.success());
    assert_eq!(stdout(&out), fs::read_to_string(golden("affine_q2_m2.txt")).unwrap());
}

#[test]
fn gen_pipes_into_analyze() {
    let gen = monostar(&["gen", "affine", "--q", "2", "--mult", "2"], None);
    let out = monostar(&["analyze", "-"], Some(&stdout(&gen)));
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("max component   4 (colour 1)"), "{text}");
    assert_eq!(text, fs::read_to_string(golden("affine_q2_m2.analyze.txt")).unwrap());
}

#[test]
fn analyze_json_is_byte_stable() {
    let path = golden("affine_q2_m2.txt");
    let args = ["analyze", path.to_str().unwrap(), "--json"];
    let a = stdout(&monostar(&args, None));
    let b = stdout(&monostar(&args, None));
    assert_eq!(a, b);
    assert_eq!(a, fs::read_to_string(golden("affine_q2_m2.analyze.json")).unwrap());
}

#[test]
fn prove_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("fano.cert.json");
    let fano = golden("fano.txt");
    let out =
        monostar(&["prove", fano.to_str().unwrap(), "--local", "--r", "3", "--cert", cert.to_str().unwrap()], None);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(fs::read_to_string(&cert).unwrap(), fs::read_to_string(golden("fano.cert.json")).unwrap());

    let out = monostar(&["verify", "--cert", cert.to_str().unwrap(), fano.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "accept\n");
}

#[test]
fn verify_rejects_a_tampered_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("bad.json");
    let text = fs::read_to_string(golden("fano.cert.json")).unwrap().replace("\"colour\": 1", "\"colour\": 2");
    fs::write(&cert, text).unwrap();
    let fano = golden("fano.txt");
    let out = monostar(&["verify", "--cert", cert.to_str().unwrap(), fano.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("reject: "));
}

#[test]
fn prove_local_rejects_a_colouring_above_the_declared_locality() {
    let affine = golden("affine_q2_m2.txt");
    let out = monostar(&["prove", affine.to_str().unwrap(), "--local", "--r", "2", "--cert", "-"], None);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
}

#[test]
fn colour_out_of_range_exits_2_with_position() {
    let out = monostar(&["analyze", "-"], Some("3 2\n1 3\n1\n"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("-:2:3:"), "{}", stderr(&out));
}

#[test]
fn malformed_header_exits_2() {
    let out = monostar(&["analyze", "-"], Some("three 2\n"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("-:1:1:"), "{}", stderr(&out));
}

#[test]
fn unknown_flag_exits_2() {
    assert_eq!(monostar(&["exhaust", "--n", "4", "--frobnicate"], None).status.code(), Some(2));
}

#[test]
fn exhaust_n4_matches_golden() {
    let out = monostar(&["exhaust", "--n", "4", "--r", "3", "--mode", "triple", "--prove"], None);
    assert!(out.status.success());
    assert_eq!(stdout(&out), fs::read_to_string(golden("exhaust_n4_r3_triple.json")).unwrap());
}

#[test]
fn exhaust_n5_with_certificates_has_no_violations() {
    let out = monostar(&["exhaust", "--n", "5", "--r", "3", "--mode", "triple", "--prove", "--threads", "2"], None);
    assert!(out.status.success(), "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["colourings_checked"], 9842);
    assert_eq!(report["minimum"], 3);
    assert_eq!(report["violations"], serde_json::json!([]));
}

#[test]
fn exhaust_over_budget_reports_partial_and_exits_2() {
    let out = monostar(&["exhaust", "--n", "5", "--r", "3", "--mode", "component", "--budget", "100"], None);
    assert_eq!(out.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["colourings_checked"], 100);
}

#[test]
fn search_writes_colouring_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let best = dir.path().join("best.txt");
    let args = [
        "search",
        "--n",
        "4",
        "--r",
        "3",
        "--objective",
        "triple",
        "--iters",
        "2000",
        "--seed",
        "3",
        "--restarts",
        "2",
        "--out",
        best.to_str().unwrap(),
    ];
    let out = monostar(&args, None);
    assert!(out.status.success(), "{}", stderr(&out));
    let summary: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(summary["best_objective"], 2);
    let analyzed = monostar(&["analyze", best.to_str().unwrap()], None);
    assert!(stdout(&analyzed).contains("max triple star none"));
    // same seed, same output
    assert_eq!(stdout(&monostar(&args, None)), stdout(&out));
}

#[test]
fn gen_random_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.txt");
    let out =
        monostar(&["gen", "random", "--n", "5", "--r", "3", "--seed", "1", "--out", path.to_str().unwrap()], None);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&path).unwrap(), "5 3\n2 3 3 2\n2 3 3\n2 1\n3\n");
}
