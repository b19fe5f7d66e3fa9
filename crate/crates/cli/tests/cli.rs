use std::process::{Command, Output};

use srg_certify::scan::{RowVerdict, ScanRow};
use srg_core::{Certificate, Verdict};

const BIN: &str = env!("CARGO_BIN_EXE_srg-certify");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("SRG_CERTIFY_JOBS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_exit_codes() {
    let cases: [(&[&str], i32); 8] = [
        (&["check", "460", "153", "32", "60"], 10),
        (&["check", "10", "3", "0", "1"], 0),
        (&["check", "10", "3", "1", "1"], 11),
        (&["check", "28", "9", "0", "4"], 11),
        (&["check", "13", "6", "2", "3"], 12),
        (&["check", "10", "10", "0", "1"], 2),
        (&["check", "10", "3", "0", "0"], 2),
        (&["check", "10", "3", "zero", "1"], 2),
    ];
    for (args, code) in cases {
        assert_eq!(run(args).status.code(), Some(code), "{args:?}");
    }
}

#[test]
fn check_transcript_for_target_tuple() {
    let out = run(&["check", "460", "153", "32", "60", "--split", "14"]);
    let text = stdout(&out);
    assert!(text.contains("K4 >= 228111"), "{text}");
    assert!(text.contains("m range          [39, 39]  (m <= 2416/61)"), "{text}");
    assert!(text.contains("w = 14: max det = -270848/132651 at (alpha, beta) = (42, 3)"), "{text}");
    assert!(text.trim_end().ends_with("verdict          Nonexistent"));
}

#[test]
fn check_json_round_trips() {
    for args in [["460", "153", "32", "60"], ["2950", "891", "204", "297"], ["16", "6", "2", "2"]] {
        let out = run(&["check", args[0], args[1], args[2], args[3], "--json"]);
        let text = stdout(&out);
        let cert: Certificate = serde_json::from_str(&text).unwrap();
        assert!(cert.is_consistent());
        assert_eq!(serde_json::to_string_pretty(&cert).unwrap(), text.trim_end());
    }
}

#[test]
fn clique_bound_flags() {
    let out = run(&["check", "460", "153", "32", "60", "--json", "--no-clique-bound"]);
    let cert: Certificate = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert.verdict, Verdict::Inconclusive);
    assert!(cert.k4_bound.is_none());
    let out = run(&["check", "460", "153", "32", "60", "--json", "--max-gegenbauer-degree", "8"]);
    let cert: Certificate = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert.verdict, Verdict::Nonexistent);
    assert_eq!(run(&["check", "460", "153", "32", "60", "--max-gegenbauer-degree", "5"]).status.code(), Some(2));
}

#[test]
fn subscan_output() {
    let out = run(&["subscan", "891", "204"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "NONE\n");
    let out = run(&["subscan", "16", "6"]);
    assert!(stdout(&out).lines().any(|l| l == "2 2"));
    assert_eq!(run(&["subscan", "5", "5"]).status.code(), Some(2));
    assert_eq!(run(&["subscan", "5", "0"]).status.code(), Some(2));
}

#[test]
fn self_check_succeeds() {
    let out = run(&["self-check"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 12);
}

fn scan_json(csv: &str, extra: &[&str]) -> (Output, Vec<ScanRow>) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.csv");
    std::fs::write(&path, csv).unwrap();
    let mut args = vec!["scan", path.to_str().unwrap(), "--json-lines"];
    args.extend_from_slice(extra);
    let out = run(&args);
    let rows = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    (out, rows)
}

#[test]
fn scan_header_only_and_empty_rows() {
    let (out, rows) = scan_json("v,k,lambda,mu\n", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(rows.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("rows: 0"));
}

#[test]
fn scan_preserves_order_and_reports_bad_rows() {
    let csv = "v,k,lambda,mu\n460,153,32,60\n10,3,0,1\n\n# note\n1,2\n10,3,1,1\n13,6,2,3\n";
    let (out, rows) = scan_json(csv, &["--jobs", "3", "--timings"]);
    assert_eq!(out.status.code(), Some(0));
    let got: Vec<(u64, RowVerdict)> = rows.iter().map(|r| (r.line, r.verdict)).collect();
    assert_eq!(
        got,
        [
            (2, RowVerdict::Nonexistent),
            (3, RowVerdict::Inconclusive),
            (6, RowVerdict::Invalid),
            (7, RowVerdict::InfeasibleClassical),
            (8, RowVerdict::NotApplicable),
        ]
    );
    assert!(rows.iter().all(|r| r.elapsed_ms.is_some()));
    assert_eq!(rows[0].witness_w, Some(13));
    assert!(rows[2].error.is_some());
    let summary = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(summary.contains("Nonexistent: 1") && summary.contains("Invalid: 1"), "{summary}");
}

#[test]
fn scan_without_timings_omits_elapsed() {
    let (_, rows) = scan_json("v,k,lambda,mu\n10,3,0,1\n", &[]);
    assert!(rows[0].elapsed_ms.is_none());
}

#[test]
fn scan_table_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.csv");
    std::fs::write(&path, "v,k,lambda,mu\n460,153,32,60\n").unwrap();
    let out = run(&["scan", path.to_str().unwrap()]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("line\tparams\tverdict"));
    assert_eq!(lines.next().unwrap(), "2\t(460,153,32,60)\tNonexistent\t228111\t[39,39]\t13\tfalse");
}

#[test]
fn scan_input_errors() {
    assert_eq!(run(&["scan", "/nonexistent/tuples.csv"]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, "a,b,c\n1,2,3\n").unwrap();
    assert_eq!(run(&["scan", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn scan_jobs_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.csv");
    std::fs::write(&path, "v,k,lambda,mu\n16,6,2,2\n").unwrap();
    let out = Command::new(BIN)
        .args(["scan", path.to_str().unwrap(), "--json-lines"])
        .env("SRG_CERTIFY_JOBS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
}
