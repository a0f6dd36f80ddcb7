use std::path::PathBuf;
use std::process::{Command, Output};

fn config(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("crystal-poly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn a1() -> PathBuf {
    config(
        "a1.json",
        r#"{"family": "A1", "n": 3, "iota_word": "2 1 3", "lambda": {"1": 1, "2": 1}}"#,
    )
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystal-poly")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn zero_vector_is_a_member() {
    let c = a1();
    let o = run(&["check", c.to_str().unwrap(), "--vector", "[0]"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "member"));
}

#[test]
fn check_reports_the_violated_form() {
    let c = a1();
    let o = run(&["check", c.to_str().unwrap(), "--vector", "{(1,2):2}"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("not a member"), "{out}");
    assert!(out.contains("violated: -x[1,2] + 1 = -1"), "{out}");
    let o = run(&["check", c.to_str().unwrap(), "--vector", "{(1,2):2}", "--lambda", "inf"]);
    assert!(stdout(&o).lines().any(|l| l == "member"));
}

#[test]
fn epsilon_star_methods_agree() {
    let c = a1();
    let o = run(&["epsilon-star", c.to_str().unwrap(), "--vector", "[3,3,2,3,2,1]", "--method", "both"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("forms  1 3 0"), "{out}");
    assert!(out.contains("oracle 1 3 0"), "{out}");
}

#[test]
fn crosscheck_finds_no_mismatch() {
    let c = a1();
    let o = run(&["crosscheck", c.to_str().unwrap(), "--depth", "5"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mismatches"], serde_json::json!([]));
    assert_eq!(v["ok"], true);
}

#[test]
fn gen_ineq_is_sorted_and_deterministic() {
    let c = a1();
    let a = run(&["gen-ineq", c.to_str().unwrap(), "--mode", "sprime", "--window", "6"]);
    let b = run(&["gen-ineq", c.to_str().unwrap(), "--mode", "sprime", "--window", "6"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let maxes: Vec<u64> = v["forms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| {
            f["terms"]
                .as_array()
                .unwrap()
                .iter()
                .map(|t| (t["s"].as_u64().unwrap() - 1) * 3 + [0, 2, 1, 3][t["k"].as_u64().unwrap() as usize])
                .max()
                .unwrap_or(0)
        })
        .collect();
    assert!(maxes.windows(2).all(|w| w[0] <= w[1]), "{maxes:?}");
}

#[test]
fn gen_ineq_modes_agree_on_comb_sets() {
    let c = a1();
    let forms = |mode: &str| -> Vec<String> {
        let o = run(&["gen-ineq", c.to_str().unwrap(), "--mode", mode, "--k", "3", "--window", "9"]);
        assert!(o.status.success());
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let mut t: Vec<String> = v["forms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|f| f["text"].as_str().unwrap().to_string())
            .filter(|t| t != "0")
            .collect();
        t.sort();
        t
    };
    assert_eq!(forms("shat"), forms("comb"));
}

#[test]
fn gen_ineq_writes_a_file() {
    let c = a1();
    let out = c.with_file_name("forms.json");
    let o = run(&["gen-ineq", c.to_str().unwrap(), "--window", "6", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["mode"], "comb");
    assert!(v["count"].as_u64().unwrap() > 0);
}

#[test]
fn enumerate_counts_levels() {
    let c = a1();
    let o = run(&["enumerate", c.to_str().unwrap(), "--depth", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("size 1: 2 elements"), "{out}");
    assert!(out.contains("size 2: 4 elements"), "{out}");
}

#[test]
fn bad_input_fails_cleanly() {
    let bad = config("bad.json", r#"{"family": "A1", "n": 3, "iota_word": "1 1 2"}"#);
    let o = run(&["check", bad.to_str().unwrap(), "--vector", "[0]"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let twisted = config("a2.json", r#"{"family": "A2", "n": 3, "iota_word": [2, 1, 3], "lambda": "inf"}"#);
    let o = run(&["gen-ineq", twisted.to_str().unwrap(), "--mode", "shat"]);
    assert!(!o.status.success());
}
