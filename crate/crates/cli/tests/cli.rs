use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("fixtures");
    p.push(name);
    p.display().to_string()
}

fn ginbetti(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ginbetti"))
        .args(args)
        .env_remove("GINBETTI_DEGREE_GUARD")
        .output()
        .expect("run ginbetti")
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--output", "json"];
    all.extend_from_slice(args);
    let out = ginbetti(&all);
    serde_json::from_slice(&out.stdout).expect("json document")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn betti_of_first_example() {
    let f = fixture("first_example.ideal");
    let out = ginbetti(&["betti", &f]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("total: 6 9 4"), "{}", stdout(&out));
    let doc = json(&["betti", &f]);
    assert_eq!(
        doc["result"]["betti"]["totals"],
        serde_json::json!([6, 9, 4])
    );
    assert_eq!(doc["result"]["betti"]["convention"], "ideal");
}

#[test]
fn ek_and_koszul_methods_agree() {
    let f = fixture("stable.ideal");
    let ek = json(&["betti", "--method", "ek", &f]);
    let kz = json(&["betti", "--method", "koszul", &f]);
    assert_eq!(ek["result"]["method"], "ek");
    assert_eq!(kz["result"]["method"], "koszul");
    assert_eq!(ek["result"]["betti"], kz["result"]["betti"]);
}

#[test]
fn ek_method_rejects_non_stable_input() {
    let out = ginbetti(&["betti", "--method", "ek", &fixture("twisted_cubic.ideal")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_file_reports_position() {
    let out = ginbetti(&["betti", &fixture("malformed.ideal")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("malformed.ideal:4:8"), "{err}");
}

#[test]
fn randomized_commands_need_a_seed() {
    let out = ginbetti(&["gin", &fixture("first_example.ideal")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gin_of_first_example() {
    let doc = json(&["--seed", "7", "gin", &fixture("first_example.ideal")]);
    assert_eq!(
        doc["result"]["gens"],
        serde_json::json!(["x1^2", "x1*x2", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2", "x3^3"])
    );
    assert_eq!(doc["config"]["seed"], 7);
    assert_eq!(doc["config"]["trials"], 3);
    assert_eq!(doc["config"]["field"], "Q");
}

#[test]
fn lex_of_second_example() {
    let doc = json(&["lex", &fixture("second_example.ideal")]);
    assert_eq!(
        doc["result"]["betti"]["totals"],
        serde_json::json!([6, 9, 5, 1])
    );
}

#[test]
fn rigidity_check_on_first_example() {
    let out = ginbetti(&[
        "--seed",
        "1",
        "check",
        "rigidity",
        &fixture("first_example.ideal"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("rigidity: PASS"));
    let doc = json(&[
        "--seed",
        "1",
        "check",
        "rigidity",
        &fixture("first_example.ideal"),
    ]);
    assert_eq!(doc["result"]["witness"]["minimal_index"], 2);
}

#[test]
fn lowerbound_check_on_pairs() {
    for (small, big) in [
        ("pair_small.ideal", "cube_two_vars.ideal"),
        ("cube_two_vars.ideal", "pair_line.ideal"),
    ] {
        let doc = json(&[
            "--seed",
            "4",
            "check",
            "lowerbound",
            &fixture(small),
            &fixture(big),
        ]);
        assert_eq!(doc["result"]["status"], "pass", "{small} {big}");
        let verdicts = doc["result"]["verdicts"].as_array().unwrap();
        assert_eq!(verdicts.len(), 3);
    }
}

#[test]
fn failed_hypotheses_exit_nonzero() {
    let out = ginbetti(&[
        "--seed",
        "1",
        "check",
        "strange",
        "-d",
        "2",
        &fixture("second_example.ideal"),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn generator_bound_on_squares() {
    let doc = json(&[
        "--seed",
        "2",
        "check",
        "strange",
        "-d",
        "2",
        &fixture("squares.ideal"),
    ]);
    assert_eq!(doc["result"]["status"], "pass");
    assert_eq!(doc["result"]["witness"]["beta0_gin"], 6);
}

#[test]
fn degree_guard_exit_code() {
    let f = fixture("twisted_cubic.ideal");
    let out = ginbetti(&["--degree-guard", "5", "betti", &f]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_ginbetti"))
        .args(["betti", &f])
        .env("GINBETTI_DEGREE_GUARD", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn prime_field_runs_carry_the_caveat() {
    let doc = json(&[
        "--seed",
        "3",
        "--field",
        "Fp:32003",
        "gin",
        &fixture("squares.ideal"),
    ]);
    assert_eq!(doc["char0_caveat"], true);
    assert_eq!(doc["inputs"][0]["ring"]["field"], "Fp:32003");
}

#[test]
fn structured_output_is_reproducible() {
    let f = fixture("twisted_cubic.ideal");
    for args in [
        vec!["--output", "json", "--seed", "11", "alpha", f.as_str()],
        vec![
            "--output",
            "json",
            "--seed",
            "11",
            "check",
            "bound",
            f.as_str(),
        ],
    ] {
        let a = ginbetti(&args);
        let b = ginbetti(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}
