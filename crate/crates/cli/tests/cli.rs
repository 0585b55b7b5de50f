use std::fs;
use std::process::{Command, Output};

fn emverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_emverify"))
        .args(args)
        .env_remove("EMVERIFY_DATA")
        .output()
        .unwrap()
}

#[test]
fn csv_has_fixed_header() {
    let out = emverify(&["--format", "csv", "sym", "--n-max", "6", "--primes", "2,3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("target,block,mhB,mhD,status"));
    assert!(lines.all(|l| l.split(',').count() >= 5));
}

#[test]
fn json_lines_parse() {
    let out = emverify(&["--format", "json", "lemma33", "--q", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["target"], "Y(3)");
    assert_eq!(rows[0]["mhB"], 1);
    assert_eq!(rows[0]["status"], "match");
}

#[test]
fn infinity_in_text_and_json() {
    let out = emverify(&["sym", "--n-max", "3", "--primes", "5"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains('∞'));
    let out = emverify(&["--format", "json", "sym", "--n-max", "3", "--primes", "5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"mhB\":\"infinity\""), "{text}");
}

#[test]
fn bad_arguments_fail() {
    assert!(!emverify(&["sym", "--n-max", "x"]).status.success());
    assert!(!emverify(&["lie", "--families", "Q7"]).status.success());
    assert!(!emverify(&["--format", "xml"]).status.success());
}

#[test]
fn data_directory_override() {
    let dir = std::env::temp_dir().join(format!("emverify-data-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let builtin = include_str!("../../core/data/3d4.txt");
    fs::write(dir.join("3d4.txt"), builtin).unwrap();
    let g2 = include_str!("../../core/data/g2.txt");
    let run = |dir: &std::path::Path| {
        Command::new(env!("CARGO_BIN_EXE_emverify"))
            .args(["lie", "--families", "G2", "--q-list", "4,5"])
            .env("EMVERIFY_DATA", dir)
            .output()
            .unwrap()
    };
    fs::write(dir.join("g2.txt"), g2).unwrap();
    assert!(run(&dir).status.success());
    // drop the Steinberg line: the data no longer validates
    let broken: String = g2.lines().filter(|l| !l.contains("phi1,6")).map(|l| format!("{l}\n")).collect();
    fs::write(dir.join("g2.txt"), broken).unwrap();
    let out = run(&dir);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("G2"));
    fs::remove_dir_all(&dir).unwrap();
}
