use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fibercone::report::Report;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fibercone"))
}

fn cases_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("cases")
}

fn write_case(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn analyze(path: &Path, extra: &[&str]) -> Output {
    bin().arg("analyze").arg(path).args(extra).output().unwrap()
}

#[test]
fn json_report_round_trips_and_is_reproducible() {
    let path = cases_dir().join("example-1.case");
    let a = analyze(&path, &["--json", "--seed", "3"]);
    let b = analyze(&path, &["--json", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let report = Report::from_json(&text).unwrap();
    assert_eq!(report.to_json() + "\n", text);
    assert_eq!((report.r, report.seed, report.characteristic), (2, 3, 32003));
    assert!(report.truncation.passed);
}

#[test]
fn text_report_shows_decomposition() {
    let out = analyze(&cases_dir().join("closing.case"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("F(J) ⊕ F(J)(−1) ⊕ F(J)(−2) ⊕ F(J)(−3) ⊕ (F(J)/aF(J))(−1)"), "{text}");
    assert!(text.contains("Buchsbaum, not Cohen-Macaulay"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_case(dir.path(), "bad.case", "semigroup: 6 11 15 31\nideal: t^7\n");
    assert_eq!(analyze(&bad, &[]).status.code(), Some(2));
    let garbled = write_case(dir.path(), "garbled.case", "semigroup 6 11\n");
    assert_eq!(analyze(&garbled, &[]).status.code(), Some(2));
    assert_eq!(analyze(&dir.path().join("missing.case"), &[]).status.code(), Some(2));
    let not_red = write_case(
        dir.path(),
        "nr.case",
        "semigroup: 6 11 15 31\nideal: t^6, t^11, t^31\nreduction: t^11\n",
    );
    let out = analyze(&not_red, &[]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    let halved = analyze(&cases_dir().join("example-2.case"), &["--truncation", "52"]);
    assert_eq!(halved.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&halved.stderr).contains("truncation"));
}

#[test]
fn characteristic_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_case(dir.path(), "c.case", "semigroup: 4 5 11\nideal: t^4, t^5, t^11\n");
    let out = bin().env("FIBERCONE_CHAR", "101").arg("analyze").arg(&p).arg("--json").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(report.characteristic, 101);
    let bad = bin().env("FIBERCONE_CHAR", "100").arg("analyze").arg(&p).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn sweep_over_fixture_directory() {
    let out = bin().arg("sweep").arg(cases_dir()).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("3 cases: 3 analyzed, 0 failed"), "{text}");
    assert!(text.contains("Buchsbaum not CM 2, not Buchsbaum 1"), "{text}");
    assert!(text.contains("example-2: r=3 mu=[1,4,4,4,4,4] reduction-invariant; not Buchsbaum"));
}

#[test]
fn sweep_random_json_and_empty() {
    let out = bin().args(["sweep", "--random", "count=5,seed=4", "--json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["cases"], 5);
    assert_eq!(v["cases"].as_array().unwrap().len(), 5);

    let empty = bin().args(["sweep", "--random", "count=0"]).output().unwrap();
    assert_eq!(empty.status.code(), Some(0));
    assert!(String::from_utf8(empty.stdout).unwrap().starts_with("0 cases: 0 analyzed, 0 failed"));
    let bad = bin().args(["sweep", "--random", "colour=blue"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let out = bin().arg("selftest").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 failed"), "{text}");
}
