//! The built binary, driven as a subprocess.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use exotic_rs::enumerate_signed_permutations;

fn exe() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_exotic-rs"));
    c.env_remove("EXOTIC_RS_MAX_N");
    c
}

fn run(args: &[&str]) -> Output {
    exe().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = exe()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn insert_then_bump_round_trips_through_json() {
    let dir = tempfile::tempdir().unwrap();
    for n in 0..=4 {
        for w in enumerate_signed_permutations(n) {
            let text = w.to_string();
            let pair_json = run(&["insert", &text, "--json"]);
            assert!(pair_json.status.success());
            let path = dir.path().join("pair.json");
            std::fs::write(&path, &pair_json.stdout).unwrap();
            let back = run(&["bump", "--pair", path.to_str().unwrap()]);
            assert_eq!(stdout(&back), format!("{text}\n"));
            let again = run(&["insert", stdout(&back).trim_end(), "--json"]);
            assert_eq!(again.stdout, pair_json.stdout, "{text}");
        }
    }
}

#[test]
fn worked_example_renders() {
    let o = run(&["insert", "-3 6 4 -7 2 -5 1"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "T:\n1 | 2 4\n3 | 5 6\n7 |\nR:\n2 | 1 3\n5 | 4 7\n6 |\n"
    );
    let rendered = run_stdin(&["render", "--pair", "-"], &stdout(&o));
    assert_eq!(stdout(&rendered), stdout(&o));
}

#[test]
fn table_three_has_48_rows() {
    let o = run(&["table", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 48);
    assert_eq!(
        rows[0],
        "1 2 3\t{\"left\":[[1,2,3]],\"right\":[]}\t{\"left\":[[1,2,3]],\"right\":[]}"
    );
    assert!(text.lines().filter(|l| l.starts_with("# shape")).count() == 10);
    assert_eq!(run(&["table", "3"]).stdout, o.stdout);
}

#[test]
fn counts_and_cells() {
    let o = run(&["count", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("mu=[1];nu=[2]\t3\n"), "{text}");
    assert!(text.ends_with("# pairs 48, 2^n n! = 48\n"), "{text}");
    let cells = stdout(&run(&["cells", "3"]));
    assert_eq!(cells.lines().count(), 10);
    assert!(cells.starts_with("mu=[3];nu=[]\t1\t1 2 3\n"), "{cells}");
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "roundtrip", "4"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("PASS roundtrip n=4"));
    let refused = run(&["verify", "roundtrip", "6"]);
    assert_eq!(refused.status.code(), Some(2));
    assert!(stderr(&refused).contains("budget"), "{}", stderr(&refused));
    let raised = exe()
        .env("EXOTIC_RS_MAX_N", "6")
        .args(["verify", "iota", "7"])
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(2));
    let json = run(&["verify", "golden", "3", "--json"]);
    let report: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(report["checked"], 48);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    assert_eq!(run(&["verify", "bogus", "3"]).status.code(), Some(2));
}

#[test]
fn diagnostics_go_to_stderr() {
    let o = run(&["insert", "1 x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(stderr(&o).contains("column 3"), "{}", stderr(&o));
    let bad = r#"{"T":{"left":[[2,1]],"right":[]},"R":{"left":[[1,2]],"right":[]}}"#;
    let o = run_stdin(&["bump", "--pair", "-"], bad);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("row invariant"), "{}", stderr(&o));
}

#[test]
fn empty_word() {
    let o = run(&["insert", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "T:\n|\nR:\n|\n");
}

#[test]
fn traces() {
    let pair = stdout(&run(&["insert", "-1 2", "--json"]));
    let traced = run_stdin(&["bump", "--pair", "-", "--trace"], &pair);
    let text = stdout(&traced);
    assert!(text.ends_with("-1 2\n"), "{text}");
    assert!(text.contains("leaves: w(1) = -1"), "{text}");
    let json = stdout(&run(&["insert", "2 -1", "--json", "--trace"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v["trace"].as_array().unwrap().len() >= 2);
}
