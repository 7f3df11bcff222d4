use std::process::{Command, Output};

use kostka::{KostkaEngine, KostkaMatrix};

fn kostka(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kostka"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn compute_prints_the_count() {
    let out = kostka(&["compute", "--shape", "2,1", "--content", "1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2\n");

    let out = kostka(&["compute", "--shape", "3,2", "--skew-inner", "1", "--content", "2,1,1"]);
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn compute_json() {
    let out = kostka(&["compute", "--shape", "3,2,1", "--content", "1,1,1,1,1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["kostka"], "16");
    assert_eq!(v["shape"], "3,2,1");
}

#[test]
fn malformed_input_exits_2_and_names_the_argument() {
    let cases: [(&[&str], &str); 5] = [
        (&["compute", "--shape", "1,2", "--content", "3"], "--shape"),
        (&["compute", "--shape", "2,1", "--content", "a,b"], "--content"),
        (&["compute", "--shape", "2", "--skew-inner", "3", "--content", "1"], "--skew-inner"),
        (&["covers", "--mu", "1,3"], "--mu"),
        (&["chain", "--mu", "3,1", "--nu", "1,2,1"], "--nu"),
    ];
    for (args, flag) in cases {
        let out = kostka(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr(&out).contains(flag), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn inconsistent_input_exits_2() {
    let out = kostka(&["compute", "--shape", "2,1", "--content", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = kostka(&["chain", "--mu", "2,2", "--nu", "3,1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = kostka(&["classes", "--shape", "2,1", "--content", "1,2", "--i", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--i"));
}

#[test]
fn covers_annotate_moves() {
    let out = kostka(&["covers", "--mu", "3,1"]);
    assert_eq!(stdout(&out), "(2,2)  [row-move i=1]\n");
    let out = kostka(&["covers", "--mu", "2,1"]);
    assert_eq!(stdout(&out), "(1,1,1)  [column-move i=1 j=3]\n");
}

#[test]
fn chain_runs_from_mu_to_nu() {
    let out = kostka(&["chain", "--mu", "4", "--nu", "1,1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines.first().unwrap(), "(4)");
    assert_eq!(lines.len(), 5);
    assert!(lines.last().unwrap().starts_with("(1,1,1,1)"));

    let out = kostka(&["chain", "--mu", "2,1", "--nu", "1,1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["steps"][0]["partition"], "1,1,1");
    assert_eq!(v["steps"][0]["transfers"][0], "1,2,0");
}

#[test]
fn classes_show_both_counts() {
    let out = kostka(&["classes", "--shape", "3,1", "--content", "2,2,0", "--i", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("total: K(mu) = 1  K(nu) = 2"), "{text}");

    let out = kostka(&["classes", "--shape", "3,1", "--content", "2,2,0", "--i", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let sum = |key: &str| -> u64 {
        v["classes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c[key].as_str().unwrap().parse::<u64>().unwrap())
            .sum()
    };
    assert_eq!(sum("mu_count"), 1);
    assert_eq!(sum("nu_count"), 2);
}

#[test]
fn matrix_json_round_trips() {
    let out = kostka(&["matrix", "--n", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let m = KostkaMatrix::from_json(&stdout(&out)).unwrap();
    assert_eq!(m, KostkaEngine::new().matrix(6));
    assert_eq!(m.to_json(), stdout(&out).trim_end());
}

#[test]
fn matrix_csv_and_text() {
    let out = kostka(&["matrix", "--n", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), ",2,\"1,1\"\n2,1,1\n\"1,1\",0,1\n");
    let out = kostka(&["matrix", "--n", "3", "--parallelism", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 4);
}

#[test]
fn verify_reports_no_violations() {
    let out = kostka(&["verify", "--max-n", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["violations"], serde_json::json!([]));
    assert!(v["suites"].as_array().unwrap().len() >= 9);

    let out = kostka(&["verify", "--max-n", "3"]);
    assert!(stdout(&out).ends_with("total: 0 violations\n"));
}

#[test]
fn bench_is_deterministic_in_its_workload() {
    let out = kostka(&["bench", "--max-n", "5", "--samples", "30", "--seed", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["mismatches"], 0);
    assert_eq!(v["samples"], 30);
}
