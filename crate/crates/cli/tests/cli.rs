use std::process::{Command, Output};

use serde_json::Value;

fn qbgc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbgc"))
        .args(args)
        .env_remove("QBGC_MAX_L")
        .env_remove("QBGC_MAX_W")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qbgc(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&a)).unwrap()
}

#[test]
fn enumerations() {
    let out = stdout(&["enum", "qls", "--type", "A1", "--lambda", "1"]);
    assert!(out.ends_with("count: 2\n"));
    assert_eq!(out.lines().count(), 3);

    let out = stdout(&["enum", "qb", "--type", "A1", "--lambda", "1", "--w", "s1"]);
    assert!(out.ends_with("count: 2\n"));
    assert_eq!(out.lines().filter(|l| l.ends_with("quantum")).count(), 1);

    let out = stdout(&["enum", "qls", "--type", "A1", "--lambda", "0"]);
    assert!(out.ends_with("count: 1\n"));
}

#[test]
fn characters() {
    assert_eq!(stdout(&["char", "qb", "--type", "A1", "--lambda", "1", "--w", "e"]), "e[-1] + e[1]\n");
    assert_eq!(stdout(&["char", "qls-down", "--type", "A1", "--lambda", "1", "--w", "s1"]), "e[-1] + q^-1 e[1]\n");
    assert_eq!(stdout(&["char", "qb", "--type", "A1", "--lambda", "0", "--w", "e"]), "1\n");
    assert_eq!(stdout(&["char", "qb", "--type", "A1", "--lambda", "1", "--w", "s1"]), "q^1 e[-1] + e[1]\n");

    let v = json(&["char", "qls-up", "--type", "A1", "--lambda", "1", "--w", "e"]);
    let terms = v["results"][0]["character"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["weight"], serde_json::json!([-1]));
    assert_eq!(terms[0]["q"], -1);
}

#[test]
fn all_w_lists_every_element() {
    let out = stdout(&["char", "qb", "--type", "A2", "--lambda", "1,0", "--all-w"]);
    assert_eq!(out.lines().count(), 6);
    assert!(out.starts_with("e: "));
}

#[test]
fn non_reduced_words_are_normalised() {
    let a = stdout(&["char", "qb", "--type", "A2", "--lambda", "1,1", "--w", "s1 s2 s2"]);
    let b = stdout(&["char", "qb", "--type", "A2", "--lambda", "1,1", "--w", "s1"]);
    assert_eq!(a, b);
}

#[test]
fn verification_suites_pass() {
    let out = stdout(&["verify", "theorem", "--type", "A1", "--lambda", "1", "--all-w"]);
    assert!(out.ends_with("theorem: pass (2 checks, 0 failed)\n"));

    let v = json(&["verify", "bijection", "--type", "A2", "--lambda", "1,1", "--all-w"]);
    assert_eq!(v["status"], "pass");
    let counts: Vec<u64> =
        v["checks"].as_array().unwrap().iter().filter_map(|c| c["detail"]["qb_count"].as_u64()).collect();
    assert_eq!(counts, vec![9; 6]);

    let v = json(&["verify", "shellability", "--type", "B2"]);
    assert_eq!(v["status"], "pass");
    // two reduced words of w0, both orientations
    assert_eq!(v["checks"].as_array().unwrap().len(), 4);

    let out = stdout(&["verify", "involution", "--type", "B2", "--lambda", "1,1", "--all-w"]);
    assert!(out.ends_with("involution: pass (9 checks, 0 failed)\n"));
}

#[test]
fn graph_and_table_exports() {
    let v = json(&["graph", "--type", "A2"]);
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(edges.iter().filter(|e| e["kind"] == "bruhat").count(), 8);
    assert_eq!(edges.iter().filter(|e| e["kind"] == "quantum").count(), 7);

    let v = json(&["graph", "--type", "A2", "--parabolic", "2"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);

    let dot = stdout(&["graph", "--type", "A1", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("dashed").count(), 1);

    let v = json(&["table", "--type", "A2", "--lambda", "1,1"]);
    assert_eq!(v["length"], 4);

    let v = json(&["root-system", "--type", "G2"]);
    assert_eq!(v["weyl_order"], 12);
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let args = ["enum", "qb", "--type", "B2", "--lambda", "1,1", "--all-w", "--format", "json"];
    let one = stdout(&[&args[..], &["--jobs", "1"]].concat());
    let four = stdout(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one, four);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("qbgc-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("char.txt");
    let p = path.to_str().unwrap();
    assert!(stdout(&["char", "qb", "--type", "A1", "--lambda", "1", "--output", p]).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "e[-1] + e[1]\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(qbgc(&["char", "qb", "--type", "A1", "--lambda", "x"]).status.code(), Some(2));
    assert_eq!(qbgc(&["char", "qb", "--type", "A1", "--lambda", "1", "--w", "s2"]).status.code(), Some(2));
    assert_eq!(qbgc(&["char", "qb", "--type", "Z9", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(qbgc(&["char", "qb", "--type", "A1"]).status.code(), Some(2));
    assert_eq!(qbgc(&["nonsense"]).status.code(), Some(2));
    assert_eq!(qbgc(&["char", "qb", "--type", "A2", "--lambda", "2,2", "--max-l", "3"]).status.code(), Some(3));
    assert_eq!(qbgc(&["root-system", "--type", "B3", "--max-w", "10"]).status.code(), Some(3));

    let out = Command::new(env!("CARGO_BIN_EXE_qbgc"))
        .args(["char", "qb", "--type", "A2", "--lambda", "2,2"])
        .env("QBGC_MAX_L", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
