use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

fn csym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csym")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn catalog_file(name: &str) -> String {
    catalog_dir().join(name).to_string_lossy().into_owned()
}

#[test]
fn criterion_verdicts() {
    let o = csym(&["criterion", "3", "7", "11", "15", "19"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pre-c-symplectic: yes"));
    let o = csym(&["criterion", "3", "5"]);
    assert!(stdout(&o).contains("no (n even)"));
    let o = csym(&["criterion", "3", "3", "9", "11", "13", "15", "19"]);
    assert!(stdout(&o).contains("no (9 + 11 >= 19)"));
}

#[test]
fn lefschetz_entry_reports_the_failure_it_expects() {
    let dir = catalog_dir();
    let o = csym(&["catalog", "--dir", dir.to_str().unwrap(), "run", "rk2.12.b"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("lefschetz: FAIL at k=10 kernel=[v1, v2]"));
}

#[test]
fn machine_output() {
    let o = csym(&["--machine", "csym", &catalog_file("sp5.i.model")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "status=CSymplectic"), "{out}");
    assert!(out.lines().any(|l| l == "witness_power=27"), "{out}");
    let o = csym(&["--machine", "fd", &catalog_file("sp5.i.model")]);
    assert!(stdout(&o).lines().all(|l| l.contains('=')));
}

#[test]
fn betti_and_finiteness() {
    let file = catalog_file("sp5.i.model");
    let o = csym(&["--machine", "betti", &file, "--from", "0", "--to", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let values: Vec<String> = stdout(&o).lines().map(|l| l.split('=').nth(1).unwrap().to_string()).collect();
    assert_eq!(values, ["1", "0", "1", "1", "1"]);
    let o = csym(&["finite", &file]);
    assert!(stdout(&o).contains("Finite"));
    let o = csym(&["toomer", &catalog_file("rk2.10.y1.model")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn lie_and_pairing() {
    let o = csym(&["lie", "classify", "E7"]);
    assert!(stdout(&o).contains("yes"));
    let o = csym(&["lie", "classify", "D5"]);
    assert!(stdout(&o).contains("no"));
    let o = csym(&["--machine", "pairing", "brute", "3", "3", "9", "11", "--bound", "13"]);
    assert!(stdout(&o).contains("pairing_exists=no"));
    let o = csym(&["--machine", "pairing", "check", "3", "7", "11", "15", "--bound", "18"]);
    assert!(stdout(&o).contains("within=yes"));
}

#[test]
fn witness_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.model");
    let o = csym(&["witness", "3", "3", "7", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = csym(&["--machine", "fd", out.to_str().unwrap()]);
    assert!(stdout(&o).contains("=12"), "{}", stdout(&o));
    let o = csym(&["--machine", "csym", out.to_str().unwrap()]);
    assert!(stdout(&o).contains("status=CSymplectic"));
}

#[test]
fn hasse_verify_and_dot() {
    let o = csym(&["hasse", "verify", &catalog_file("ex3.4.hasse")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = csym(&["hasse", "dot", &catalog_file("ex3.4.hasse")]);
    assert!(stdout(&o).starts_with("digraph"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.hasse");
    std::fs::write(&bad, "r0 1\npoint 0 0 P0\npoint 0 1 P1\nedge P1 P0\n").unwrap();
    let o = csym(&["hasse", "verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let o = csym(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));

    let o = csym(&["fd", "/nonexistent/model"]);
    assert_eq!(o.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.model");
    std::fs::write(&broken, "gen v 3\nd v = w\n").unwrap();
    assert_eq!(csym(&["fd", broken.to_str().unwrap()]).status.code(), Some(2));

    std::fs::write(dir.path().join("sources.txt"), "demo somewhere\n").unwrap();
    std::fs::write(dir.path().join("s.model"), "gen v 5\n").unwrap();
    std::fs::write(dir.path().join("s.expect"), "cite demo\nbetti 5 1\nbetti 5 2\n").unwrap();
    let o = csym(&["catalog", "--dir", dir.path().to_str().unwrap(), "run", "s"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    let o = csym(&["catalog", "--dir", dir.path().to_str().unwrap(), "run", "missing"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let file = catalog_file("ex3.6.b.p6.model");
    for args in [
        vec!["csym", file.as_str()],
        vec!["--machine", "lefschetz", file.as_str()],
        vec!["--machine", "finite", file.as_str()],
    ] {
        let a = csym(&args);
        let b = csym(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn catalog_run_all_succeeds() {
    let dir = catalog_dir();
    let o = csym(&["catalog", "--dir", dir.to_str().unwrap(), "run-all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let again = csym(&["catalog", "--dir", dir.to_str().unwrap(), "run-all"]);
    assert_eq!(o.stdout, again.stdout);
}
