use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ciskit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ciskit")).args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = ciskit(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn save(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn constructions_round_trip_as_cis() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&str, &[&str])] = &[
        ("dc", &["construct", "double-circulant", "--n", "15", "--f", "110101011010000"]),
        ("paley5", &["construct", "paley", "--q", "5"]),
        ("paley3", &["construct", "paley", "--q", "3"]),
        ("short", &["construct", "cyclic-shorten", "--N", "23", "--g", "110001110101"]),
        ("ext", &["construct", "cyclic-extend", "--N", "7", "--g", "1101"]),
        ("octa", &["construct", "octacode"]),
        ("qr24", &["construct", "z4-qr", "--p", "23"]),
    ];
    for (name, args) in cases {
        let text = stdout_of(args);
        let file = save(dir.path(), name, &text);
        let line = stdout_of(&["check", &file, "--what", "cis"]);
        assert!(line.starts_with("cis=yes left="), "{name}: {line}");
    }
    let dc = save(dir.path(), "dc2", &stdout_of(cases[0].1));
    assert_eq!(stdout_of(&["check", &dc, "--what", "distance"]), "distance=8\n");
}

#[test]
fn check_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let zero_col = save(dir.path(), "z", "bin 2 4\n1010\n0110\n");
    assert_eq!(stdout_of(&["check", &zero_col, "--what", "cis"]), "cis=no reason=dual-weight-1\n");
    let ham = save(dir.path(), "h", "bin 4 8\n10000111\n01001011\n00101101\n00011110\n");
    assert_eq!(stdout_of(&["check", &ham, "--what", "self-dual"]), "self-dual=yes\n");
    assert_eq!(stdout_of(&["check", &ham, "--what", "fsd"]), "fsd=yes\n");
    assert_eq!(stdout_of(&["check", &ham, "--what", "dual-distance"]), "dual-distance=4\n");
    assert_eq!(
        stdout_of(&["check", &ham, "--what", "cis-systematic"]),
        "cis=yes left=0,1,2,3 right=4,5,6,7\n"
    );
    let rep = save(dir.path(), "r", "bin 2 4\n1010\n0101\n");
    assert_eq!(stdout_of(&["check", &rep, "--what", "cis-systematic"]), "cis=yes left=0,1 right=2,3\n");
    let not_sys = save(dir.path(), "ns", "bin 2 4\n1100\n0011\n");
    assert_eq!(stdout_of(&["check", &not_sys, "--what", "cis-systematic"]), "cis=no reason=not-systematic\n");
    assert!(stdout_of(&["check", &not_sys, "--what", "cis"]).starts_with("cis=yes"));
}

#[test]
fn gci_reports_and_export() {
    let dir = tempfile::tempdir().unwrap();
    let octa = save(dir.path(), "o", &stdout_of(&["construct", "octacode"]));
    let sbox = dir.path().join("o.sbox");
    let line = stdout_of(&["gci", &octa, "--export", sbox.to_str().unwrap()]);
    assert_eq!(line, "gci-order=6 method=walsh crosscheck=dual-distance agreement=yes\n");
    let table: Vec<String> = fs::read_to_string(&sbox).unwrap().lines().map(String::from).collect();
    assert_eq!(table[0], "n=8");
    assert_eq!(table.len(), 257);
    let ham = save(dir.path(), "h", "bin 4 8\n10000111\n01001011\n00101101\n00011110\n");
    assert!(stdout_of(&["gci", &ham]).starts_with("gci-order=4 "));
    let id = save(dir.path(), "i", "bin 3 6\n100100\n010010\n001001\n");
    assert!(stdout_of(&["gci", &id]).starts_with("gci-order=2 "));
    let not_sys = save(dir.path(), "ns", "bin 2 4\n1100\n0011\n");
    assert_eq!(ciskit(&["gci", &not_sys]).status.code(), Some(2));
}

#[test]
fn classify_masscheck_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r8.txt");
    assert_eq!(
        stdout_of(&["classify", "--length", "8", "--method", "exhaustive", "--out", out.to_str().unwrap()]),
        "len=8 total=27 d2=22 d3=4 d4=1\n"
    );
    let lines = fs::read_to_string(&out).unwrap();
    assert_eq!(lines.lines().count(), 27);
    assert!(lines.lines().all(|l| l.starts_with("len=8 d=")));
    assert_eq!(
        stdout_of(&["--jobs", "2", "classify", "--length", "10", "--method", "buildup"]),
        "len=10 total=195 d2=156 d3=35 d4=4\n"
    );
    assert!(stdout_of(&["classify", "--length", "2"]).starts_with("len=2 total=1 "));
    assert_eq!(stdout_of(&["masscheck", "--n", "2"]), "gn=6 sum=6 complete=yes\n");
    assert_eq!(stdout_of(&["masscheck", "--n", "3"]), "gn=168 sum=168 complete=yes\n");
    assert_eq!(stdout_of(&["bounds", "--n", "2", "--d", "1"]), "M=0 B=0\n");
    let b = stdout_of(&["bounds", "--n", "3", "--d", "2"]);
    let nums: Vec<u64> = b.split_whitespace().map(|t| t.split_once('=').unwrap().1.parse().unwrap()).collect();
    assert!(nums[1] <= nums[0]);
}

#[test]
fn buildup_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let base = save(dir.path(), "b", "bin 3 6\n100011\n010101\n001111\n");
    let text = stdout_of(&["construct", "buildup", "--base", &base, "--x", "110", "--y", "110"]);
    assert_eq!(text, "bin 4 8\n10001110\n01001011\n00101101\n00010111\n");
}

#[test]
fn failures_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = save(dir.path(), "bad", "bin 2 4\n10x0\n0110\n");
    for args in [
        vec!["check", bad.as_str(), "--what", "cis"],
        vec!["check", "/nonexistent/file", "--what", "cis"],
        vec!["construct", "paley", "--q", "9"],
        vec!["masscheck", "--n", "5"],
        vec!["classify", "--length", "7"],
        vec!["classify", "--length", "14", "--method", "exhaustive"],
        vec!["frobnicate"],
    ] {
        let out = ciskit(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
