use std::process::{Command, Output};

use serde_json::Value;

fn relfrac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relfrac")).args(args).env_remove("RELFRAC_TIMEOUT").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn ok(args: &[&str]) -> Value {
    let out = relfrac(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    json(&out)
}

#[test]
fn documented_values() {
    assert_eq!(ok(&["relfrac", "cycle:9", "cycle:11"])["result"]["value"], "9/11");
    assert_eq!(ok(&["relfrac", "cycle:7", "cycle:5", "--cross-check"])["result"]["value"], "7/4");
    assert_eq!(ok(&["relfrac", "complete:1", "cycle:5"])["result"]["value"], "1/2");
    assert_eq!(ok(&["alpha", "johnson3:6"])["result"]["value"], 4);
    assert_eq!(ok(&["alphak", "cycle:5", "2"])["result"]["value"], 5);
    let v = ok(&["--approx", "relfrac", "cycle:9", "cycle:11"]);
    assert_eq!(v["result"]["value"]["approx"], "0.818182");
}

#[test]
fn certificates_and_witness() {
    let v = ok(&["relfrac", "cycle:5", "cycle:4", "--witness", "--cert"]);
    assert_eq!(v["result"]["value"], "5/4");
    assert_eq!(v["certificates"]["witness"]["ratio"], "5/4");
    assert!(!v["certificates"]["gamma1"].as_array().unwrap().is_empty());
    let e = ok(&["expand-check", "cycle:7", "cayley:10:2"]);
    assert_eq!(e["result"]["replay_verified"], true);
    let ops = e["certificates"]["script"]["ops"].as_array().unwrap();
    assert!(ops.iter().any(|o| o["op"] == "clique"));
}

#[test]
fn make_round_trip_through_files() {
    let dir = std::env::temp_dir().join(format!("relfrac-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("c5c5.txt");
    let v = ok(&["--format", "edgelist", "make", "sprod", "cycle:5", "cycle:5", "--out", p.to_str().unwrap()]);
    assert_eq!(v["result"]["n"], 25);
    assert_eq!(ok(&["alpha", p.to_str().unwrap()])["result"]["value"], 5);
    let q = dir.join("c10.json");
    ok(&["make", "cayley:10:2", "--out", q.to_str().unwrap()]);
    assert_eq!(ok(&["expand-check", "cycle:7", q.to_str().unwrap()])["result"]["member"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let bad = relfrac(&["make", "cycle:2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(json(&bad)["error"].is_object());
    assert_eq!(relfrac(&["relfrac", "cycle:5"]).status.code(), Some(2));
    assert_eq!(relfrac(&["alpha", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(relfrac(&["relfrac", "petersen", "cycle:5", "--method", "closed"]).status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("relfrac-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("bad.txt");
    std::fs::write(&f, "4\n0 1\n1 9\n").unwrap();
    let out = relfrac(&["alpha", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"]["message"].as_str().unwrap().contains("line 3"));
    std::fs::remove_dir_all(&dir).unwrap();

    let slow = relfrac(&["--timeout", "1", "relfrac", "cycle:7", "johnson3:14"]);
    assert_eq!(slow.status.code(), Some(3));
    assert_eq!(json(&slow)["error"]["kind"], "timeout");

    let capped = relfrac(&["--max-search-nodes", "1", "hom", "cycle:5", "cycle:7"]);
    assert_eq!(capped.status.code(), Some(5));
    assert_eq!(json(&capped)["error"]["kind"], "undecided");
}

#[test]
fn reports_do_not_depend_on_threads() {
    let one = relfrac(&["--threads", "1", "table1"]);
    let four = relfrac(&["--threads", "4", "table1"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let a = relfrac(&["--threads", "1", "selftest", "--oracle-cases", "5"]);
    let b = relfrac(&["--threads", "3", "selftest", "--oracle-cases", "5"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a).get("elapsed_ms").is_none());
    assert!(ok(&["--timing", "alpha", "cycle:5"])["elapsed_ms"].is_u64());
}

#[test]
fn help_lists_commands() {
    let out = relfrac(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for c in ["make", "relfrac", "table1", "cyclegrid", "expand-check", "hom", "gamma0", "alphafrac", "witness", "selftest"] {
        assert!(text.contains(c), "{c} missing from help");
    }
}
