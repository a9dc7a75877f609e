use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(TempDir::new().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn swapdist(args: &[&Path]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swapdist"))
        .args(args)
        .env_remove("SWAPDIST_BUDGET")
        .output()
        .unwrap()
}

fn run(args: &[&str]) -> Output {
    let paths: Vec<&Path> = args.iter().map(Path::new).collect();
    swapdist(&paths)
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const MATCHING_1: &str = "u 10\n0 1\n2 3\n4 5\n6 7\n8 9\n";
const MATCHING_2: &str = "u 10\n1 2\n3 4\n5 6\n7 8\n9 0\n";
const BOWTIE_1: &str = "d 5\n1 2\n2 0\n0 1\n0 3\n3 4\n4 0\n";
const BOWTIE_2: &str = "d 5\n2 1\n0 2\n1 0\n3 0\n4 3\n0 4\n";
const TRIANGLE_1: &str = "d 3\n0 1\n1 2\n2 0\n";
const TRIANGLE_2: &str = "# reversed\nd 3\n1 0\n2 1\n0 2\n";

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_verdicts() {
    let d = Dir::new();
    let cases = [
        ("3 3 3 3\n", "u", 0, "GRAPHICAL"),
        ("3 3 1 1\n", "u", 1, "NOT GRAPHICAL"),
        ("1 1 1 / 1 1 1\n", "d", 0, "GRAPHICAL"),
        ("2 0 / 0 2\n", "d", 1, "NOT GRAPHICAL"),
        ("2 / 1 1 0\n", "b", 0, "GRAPHICAL"),
        ("3 / 1 1\n", "b", 1, "NOT GRAPHICAL"),
    ];
    for (i, (text, kind, want, verdict)) in cases.into_iter().enumerate() {
        let f = d.file(&format!("s{i}"), text);
        let o = run(&["check", "--kind", kind, s(&f)]);
        assert_eq!(code(&o), want, "{text}");
        assert_eq!(stdout(&o).trim(), verdict);
    }
}

#[test]
fn parse_errors_report_positions() {
    let d = Dir::new();
    let f = d.file("seq", "3 3\n3 x\n");
    let o = run(&["check", s(&f)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains(":2:3:"), "{}", stderr(&o));

    let g = d.file("g", MATCHING_1);
    let bad = d.file("bad", "u 10\n0 1\n1 1\n");
    let o = run(&["distance", s(&g), s(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains(":3:1:"), "{}", stderr(&o));

    let o = run(&["check", s(&d.path("missing"))]);
    assert_eq!(code(&o), 2);
}

#[test]
fn distance_examples() {
    let d = Dir::new();
    let m1 = d.file("m1", MATCHING_1);
    let m2 = d.file("m2", MATCHING_2);
    let o = run(&["distance", s(&m1), s(&m1)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("distance  0 EXACT"));

    let o = run(&["distance", s(&m1), s(&m2)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("distance  4 EXACT"));
    assert!(stdout(&o).contains("H'*f = 4.3333"));

    let b1 = d.file("b1", BOWTIE_1);
    let b2 = d.file("b2", BOWTIE_2);
    let o = run(&["distance", s(&b1), s(&b2)]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("distance  4 EXACT"));
    assert!(out.contains("moves     1 1 1 1"));
    assert!(out.contains("triangular C6 circuits  0"));

    let t1 = d.file("t1", TRIANGLE_1);
    let t2 = d.file("t2", TRIANGLE_2);
    let o = run(&["distance", s(&t1), s(&t2)]);
    assert!(stdout(&o).contains("distance  2 EXACT"));
    assert!(stdout(&o).contains("moves     2\n"));

    let o = run(&["distance", "--mode", "greedy", s(&m1), s(&m2)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("UPPER BOUND"));
}

#[test]
fn distance_json_report() {
    let d = Dir::new();
    let b1 = d.file("b1", BOWTIE_1);
    let b2 = d.file("b2", BOWTIE_2);
    let o = run(&["distance", "--json", s(&b1), s(&b2)]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "d");
    assert_eq!(v["h_prime"], 6);
    assert_eq!(v["k"], 2);
    assert_eq!(v["distance"], 4);
    assert_eq!(v["exact"], true);
    assert_eq!(v["triangular_c6_count"], 0);
    assert_eq!(v["move_weights"], serde_json::json!([1, 1, 1, 1]));
    let again = run(&["distance", "--json", s(&b1), s(&b2)]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn mismatches_exit_3() {
    let d = Dir::new();
    let m1 = d.file("m1", MATCHING_1);
    let b1 = d.file("b1", BOWTIE_1);
    let other = d.file("other", "u 10\n0 1\n");
    assert_eq!(code(&run(&["distance", s(&m1), s(&b1)])), 3);
    assert_eq!(code(&run(&["distance", s(&m1), s(&other)])), 3);
    assert_eq!(code(&run(&["transform", s(&m1), s(&other)])), 3);
}

#[test]
fn budgets_exit_4() {
    let d = Dir::new();
    let m1 = d.file("m1", MATCHING_1);
    let m2 = d.file("m2", MATCHING_2);
    let o = run(&["--budget", "4", "distance", s(&m1), s(&m2)]);
    assert_eq!(code(&o), 4);
    assert!(stderr(&o).contains("budget"));

    let env = |value: &str, extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_swapdist"))
            .args(extra)
            .args(["distance", s(&m1), s(&m2)])
            .env("SWAPDIST_BUDGET", value)
            .output()
            .unwrap()
    };
    assert_eq!(code(&env("edges=4", &[])), 4);
    assert_eq!(code(&env("4", &["--budget", "edges=20"])), 0);
    assert_eq!(code(&env("edges=4,nodes=10", &["--budget", "10"])), 0);
    assert_ne!(code(&env("nonsense", &[])), 0);
}

#[test]
fn transform_verify_round_trip() {
    let d = Dir::new();
    let pairs = [(MATCHING_1, MATCHING_1, 0), (MATCHING_1, MATCHING_2, 4), (BOWTIE_1, BOWTIE_2, 4), (TRIANGLE_1, TRIANGLE_2, 1)];
    for (i, (a, b, moves)) in pairs.into_iter().enumerate() {
        let g1 = d.file(&format!("g{i}a"), a);
        let g2 = d.file(&format!("g{i}b"), b);
        let out = d.path(&format!("seq{i}.json"));
        let o = run(&["transform", s(&g1), s(&g2), "--out", s(&out)]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        assert!(stdout(&o).starts_with(&format!("{moves} moves")), "{}", stdout(&o));
        let rec: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(rec["moves"].as_array().unwrap().len(), moves);
        let o = run(&["verify", s(&out), s(&g1), s(&g2)]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
    }
}

#[test]
fn transform_output_is_byte_stable() {
    let d = Dir::new();
    let b1 = d.file("b1", BOWTIE_1);
    let b2 = d.file("b2", BOWTIE_2);
    let first = run(&["transform", s(&b1), s(&b2)]);
    let second = run(&["transform", s(&b1), s(&b2)]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys.len(), 5);
    for k in ["kind", "start_fingerprint", "stop_fingerprint", "moves", "total_weight"] {
        assert!(keys.contains(&k));
    }
    assert_eq!(v["moves"][0]["type"], "c4");
}

#[test]
fn triangle_move_is_serialized() {
    let d = Dir::new();
    let t1 = d.file("t1", TRIANGLE_1);
    let t2 = d.file("t2", TRIANGLE_2);
    let o = run(&["transform", s(&t1), s(&t2)]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["total_weight"], 2);
    assert_eq!(v["moves"][0]["type"], "tri_c6");
    assert_eq!(v["moves"][0]["triangle"].as_array().unwrap().len(), 3);
}

#[test]
fn broken_sequences_exit_5() {
    let d = Dir::new();
    let g1 = d.file("g1", MATCHING_1);
    let g2 = d.file("g2", MATCHING_2);
    let seq = d.path("seq.json");
    assert_eq!(code(&run(&["transform", s(&g1), s(&g2), "--out", s(&seq)])), 0);
    let mut v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&seq).unwrap()).unwrap();

    let swapped = run(&["verify", s(&seq), s(&g2), s(&g1)]);
    assert_eq!(code(&swapped), 5);
    assert!(stderr(&swapped).contains("move 0"));

    v["moves"].as_array_mut().unwrap().remove(1);
    let short = d.file("short.json", &serde_json::to_string(&v).unwrap());
    let o = run(&["verify", s(&short), s(&g1), s(&g2)]);
    assert_eq!(code(&o), 5);
    assert!(stderr(&o).contains("verification failed at move"));

    let garbled = d.file("garbled.json", "{\"kind\": \"u\",\n  \"moves\": [");
    assert_eq!(code(&run(&["verify", s(&garbled), s(&g1), s(&g2)])), 2);

    let b1 = d.file("b1", BOWTIE_1);
    assert_eq!(code(&run(&["verify", s(&seq), s(&b1), s(&b1)])), 3);
}

#[test]
fn experiment_suites() {
    let o = run(&["experiment", "--suite", "identity", "--n", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains(" 0 violations, 0 over budget"), "{}", stdout(&o));

    let o = run(&["experiment", "--suite", "identity", "--n", "3", "--kind", "d"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains(" 0 violations"));

    let o = run(&["experiment", "--suite", "bounds", "--n", "6"]);
    assert_eq!(code(&o), 0);
    let row = stdout(&o).lines().find(|l| l.starts_with("1 1 1 1 1 1 ")).unwrap().to_string();
    let cols: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(&cols[6..], ["3", "6", "2", "2.33", "2.33", "2.33", "0"]);

    let args = ["experiment", "--suite", "conjectures", "--n", "7", "--trials", "20", "--seed", "9", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["label"], "EMPIRICAL");
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
}
