use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn meadow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_meadow")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = meadow(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

const TABLES: [&str; 5] = ["classes", "mul", "add", "neg-inv", "saturated"];

#[test]
fn text_tables_match_golden_bytes() {
    for t in TABLES {
        assert_eq!(stdout(&["tables", "mod:6", t]), golden(&format!("{t}.txt")), "{t}");
    }
}

#[test]
fn json_tables_match_golden_values() {
    for t in TABLES {
        let got: Value = serde_json::from_str(&stdout(&["tables", "mod:6", t, "--format", "json"])).unwrap();
        let want: Value = serde_json::from_str(&golden(&format!("{t}.json"))).unwrap();
        assert_eq!(got, want, "{t}");
    }
}

#[test]
fn csv_tables_match_golden_values() {
    let records = |s: &str| -> Vec<Vec<String>> {
        csv::ReaderBuilder::new()
            .has_headers(false)
            .from_reader(s.as_bytes())
            .records()
            .map(|r| r.unwrap().iter().map(String::from).collect())
            .collect()
    };
    for t in TABLES {
        let got = stdout(&["tables", "mod:6", t, "--format", "csv"]);
        assert_eq!(records(&got), records(&golden(&format!("{t}.csv"))), "{t}");
    }
}

#[test]
fn golden_regeneration_reproduces_checked_in_files() {
    let dir = std::env::temp_dir().join(format!("meadow-golden-{}", std::process::id()));
    stdout(&["golden", "--out-dir", dir.to_str().unwrap()]);
    for t in TABLES {
        for ext in ["txt", "json", "csv"] {
            let name = format!("{t}.{ext}");
            assert_eq!(std::fs::read_to_string(dir.join(&name)).unwrap(), golden(&name), "{name}");
        }
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn classes_list_the_twelve_representatives() {
    let v: Value = serde_json::from_str(&stdout(&["tables", "mod:6", "classes", "--format", "json"])).unwrap();
    let reps: Vec<&str> =
        v["classes"].as_array().unwrap().iter().map(|c| c["representative"].as_str().unwrap()).collect();
    assert_eq!(reps, ["1/0", "0/1", "1/1", "2/1", "3/1", "4/1", "5/1", "0/2", "1/2", "2/2", "0/3", "1/3"]);
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&["eval", "qbot", "1/0"]), "⊥\n");
    assert_eq!(stdout(&["eval", "fcm-int", "2/4 + 1/4"]), "3/4\n");
    assert_eq!(stdout(&["eval", "fcm-mod:6", "(1/2)*(1/3)"]), "⊥\n");
    assert_eq!(stdout(&["eval", "q0", "1/0"]), "0\n");
    assert_eq!(stdout(&["eval", "qbot", "1/2+1/3"]), "5/6\n");
    assert_eq!(stdout(&["eval", "--term-syntax", "qbot", "3/6"]), "1/(1+1)\n");
    assert_eq!(stdout(&["eval", "--term-syntax", "fcm-int", "2/6"]), "(1+1)/(1+1+1+1+1+1)\n");
    let v: Value = serde_json::from_str(&stdout(&["eval", "--format", "json", "fcm-mod:6", "5/4"])).unwrap();
    assert_eq!(v["value"], "1/2");
}

#[test]
fn eval_rejects_bad_input() {
    let out = meadow(&["eval", "qbot", "1/"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("column 3"));
    let out = meadow(&["eval", "fcm-mod:4", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not reduced"));
    assert!(meadow(&["--allow-non-reduced", "eval", "fcm-mod:4", "1/2"]).status.success());
}

#[test]
fn normalize_examples() {
    assert_eq!(stdout(&["normalize", "cc", "4", "12"]), "2/6\n");
    assert_eq!(stdout(&["normalize", "rf", "4", "12"]), "1/3\n");
    assert_eq!(stdout(&["normalize", "rf", "5", "0"]), "1/0\n");
    assert_eq!(stdout(&["normalize", "cc", "0", "-12"]), "0/6\n");
    assert_eq!(stdout(&["normalize", "cc", "-3", "-9"]), "1/3\n");
}

#[test]
fn check_exit_status_follows_the_report() {
    let out = meadow(&["check", "fcm-mod:6", "md-axioms"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("md-axioms on Fcm(Z/6Z): 17/17 pass"));

    let out = meadow(&["check", "mod:6", "bmcr", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["axiom-id"], "bmcr");
    assert_eq!(v[0]["status"], "fail");
    assert!(v[0]["counterexample"]["assignment"]["x"].is_string());

    assert_eq!(meadow(&["check", "q0", "involutive"]).status.code(), Some(0));
    assert_eq!(meadow(&["check", "q0", "md-axioms"]).status.code(), Some(1));
    assert_eq!(meadow(&["check", "mod:4", "reduced"]).status.code(), Some(1));
    assert_eq!(meadow(&["check", "mod:6", "eqnn"]).status.code(), Some(0));
    assert_eq!(meadow(&["check", "fcm-mod:6", "congruence"]).status.code(), Some(0));
    assert_eq!(meadow(&["check", "int", "cr"]).status.code(), Some(0));
    assert_eq!(meadow(&["check", "qbot", "cr"]).status.code(), Some(2));
    assert_eq!(meadow(&["check", "int", "eqnn"]).status.code(), Some(2));
    assert_eq!(meadow(&["check", "int", "frobnicate"]).status.code(), Some(2));
}

#[test]
fn random_suites_print_their_seed_and_repeat() {
    let args = ["check", "qbot", "md-identities", "--seed", "7", "--samples", "300", "--format", "json"];
    let a = meadow(&args);
    let b = meadow(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(String::from_utf8_lossy(&a.stderr), "seed: 7\n");
    let text = stdout(&["check", "qbot", "md-identities", "--seed", "7", "--samples", "300"]);
    assert!(text.lines().next().unwrap().ends_with("(seed 7)"));
}

#[test]
fn json_report_schema() {
    let out = meadow(&["check", "q0", "md-axioms", "--samples", "200", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 17);
    for e in entries {
        for key in ["axiom-id", "status", "statement", "mode", "seed", "tuples"] {
            assert!(e.get(key).is_some(), "{key} in {e}");
        }
    }
    let bot = entries.iter().find(|e| e["axiom-id"] == "md-add-bot").unwrap();
    assert_eq!(bot["status"], "fail");
    assert_eq!(bot["counterexample"]["detail"], "lhs = 1, rhs = 0");
}

#[test]
fn rewrite_examples() {
    let trace = stdout(&["rewrite", "1+(1+1)", "--trace"]);
    let lines: Vec<&str> = trace.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains("r3"));
    assert_eq!(lines[1], "3");
    assert_eq!(stdout(&["rewrite", "(1+1)*(1+1)"]), "4\n");
    assert_eq!(stdout(&["rewrite", "(1+1)*(1+1)", "--term-syntax"]), "1+1+1+1\n");
    assert_eq!(stdout(&["rewrite", "0", "--trace"]), "0\n");
    assert_eq!(stdout(&["rewrite", "(1+1)*(-(1+1))"]), "-4\n");
    assert_eq!(stdout(&["rewrite", "((1+1)*(1+1))-1", "--strategy", "random", "--seed", "3"]), "3\n");
    assert_eq!(stdout(&["rewrite", "2*3", "--strategy", "rightmost-innermost"]), "6\n");
}

#[test]
fn rewrite_trace_json_lines() {
    let out = stdout(&["rewrite", "(1+1)*(1+1)", "--trace", "--format", "json"]);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let (summary, steps) = lines.split_last().unwrap();
    assert_eq!(summary["normal-form"], "4");
    assert_eq!(summary["steps"].as_u64().unwrap() as usize, steps.len());
    for s in steps {
        assert!(s["rule"].as_str().unwrap().starts_with('r'));
        assert!(s["position"].is_array());
        assert!(s["term-after"].is_string());
    }
    assert_eq!(steps.last().unwrap()["term-after"], "1+1+1+1");
}

#[test]
fn rewrite_errors() {
    let out = meadow(&["rewrite", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_meadow"))
        .args(["rewrite", "(1+1)*(1+1)"])
        .env("MEADOW_STEP_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no normal form within 2 steps"));
    assert!(meadow(&["rewrite", "1", "--strategy", "sideways"]).status.code() == Some(2));
}

#[test]
fn tables_refuse_non_squarefree_moduli() {
    assert_eq!(meadow(&["tables", "mod:12", "mul"]).status.code(), Some(2));
    assert!(meadow(&["--allow-non-reduced", "tables", "mod:12", "mul"]).status.success());
    assert!(stdout(&["tables", "mod:4", "saturated"]).contains("{1, 3}"));
    assert_eq!(meadow(&["tables", "int", "mul"]).status.code(), Some(2));
}
