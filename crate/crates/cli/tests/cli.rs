use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn ratcap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratcap"))
        .args(args)
        .env_remove("RATCAP_ORACLE_BOUND")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn m_cross() -> String {
    fixture("m_cross.json").display().to_string()
}

#[test]
fn validate_exit_codes() {
    assert_eq!(code(&ratcap(&["validate", &m_cross()])), 0);

    let broken = ratcap(&["validate", fixture("m_cross_missing_c2.json").to_str().unwrap()]);
    assert_eq!(code(&broken), 1);
    assert!(stdout(&broken).starts_with("C2 violation at q0"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ \"agents\": [").unwrap();
    assert_eq!(code(&ratcap(&["validate", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&ratcap(&["validate", "/nonexistent/model.json"])), 2);
}

#[test]
fn mc_running_example() {
    let m = m_cross();
    assert_eq!(code(&ratcap(&["mc", &m, "<<v1>>^r X !crash", "--state", "q0"])), 0);
    assert_eq!(code(&ratcap(&["mc", &m, "<<v1>>^r ( true U c1 )", "--state", "q0"])), 1);
    for scope in ["global", "first"] {
        for future in ["strict", "reflexive"] {
            let out = ratcap(&[
                "mc", &m, "<<v1>>^r ( true U c1 )", "--state", "q0", "--rat-scope", scope,
                "--future", future,
            ]);
            assert_eq!(code(&out), 1, "{scope}/{future}");
        }
    }
    let all = ratcap(&["mc", &m, "true"]);
    assert_eq!(code(&all), 0);
    assert_eq!(stdout(&all), "q0\nq1\nq2\nq3\nq4\n");
}

#[test]
fn mc_json_and_input_errors() {
    let m = m_cross();
    let out = ratcap(&["--json", "mc", &m, "crash"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["holds_at"], serde_json::json!(["q4"]));
    assert_eq!(v["options"]["rat_scope"], "global");
    assert_eq!(v["options"]["future"], "strict");

    assert_eq!(code(&ratcap(&["mc", &m, "<<v1>> X (p &"])), 2);
    assert_eq!(code(&ratcap(&["mc", &m, "<<v9>> X p"])), 2);
    assert_eq!(code(&ratcap(&["mc", &m, "p", "--state", "q9"])), 2);
    assert_eq!(code(&ratcap(&["mc", &m, "rat_v1"])), 2);
    let reserved = ratcap(&["mc", &m, "rat_v1", "--allow-reserved"]);
    assert_eq!(code(&reserved), 0);
    assert!(String::from_utf8_lossy(&reserved.stderr).contains("rat_v1"));
    assert_eq!(code(&ratcap(&["mc", &m, "p", "--future", "sometimes"])), 2);
}

#[test]
fn formula_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("phi.txt");
    std::fs::write(&f, "<<v1>>^r X !crash\n").unwrap();
    let arg = format!("@{}", f.display());
    assert_eq!(code(&ratcap(&["mc", &m_cross(), &arg, "--state", "q0"])), 0);
}

#[test]
fn valid_and_sat() {
    let sup1 = ratcap(&["valid", "(<<1>>^r X p & <<2>>^r X q) -> <<1,2>>^r X (p & q)", "--agents", "1,2"]);
    assert_eq!(code(&sup1), 0);
    assert_eq!(stdout(&sup1).trim(), "valid");
    assert_eq!(code(&ratcap(&["valid", "p | !p"])), 0);

    let err = ratcap(&["valid", "<<1>> G p", "--agents", "1,2"]);
    assert_eq!(code(&err), 2);
    assert!(String::from_utf8_lossy(&err.stderr).contains("next-time"));

    assert_eq!(code(&ratcap(&["sat", "p & !p"])), 1);
    assert_eq!(code(&ratcap(&["sat", "<<1>> X p & <<2>> X !p"])), 1);
    assert_eq!(code(&ratcap(&["sat", "<<1>>^r X p"])), 0);
}

#[test]
fn emitted_countermodel_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cm.json");
    let phi = "!<<>>^r X !p -> <<1,2>>^r X p";
    let out = ratcap(&["valid", phi, "--agents", "1,2", "--countermodel", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(code(&ratcap(&["validate", path.to_str().unwrap()])), 0);
    // the formula fails at the countermodel root
    assert_eq!(code(&ratcap(&["mc", path.to_str().unwrap(), phi, "--state", "w0"])), 1);

    let json = ratcap(&["--json", "valid", phi]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert!(v["countermodel"]["states"].is_array());

    let model = dir.path().join("sat.json");
    let out = ratcap(&["sat", "<<1>>^r X p & !p", "--countermodel", model.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let m = model.to_str().unwrap();
    assert_eq!(code(&ratcap(&["mc", m, "<<1>>^r X p & !p", "--state", "w0"])), 0);
}

#[test]
fn translate_and_nf() {
    let out = ratcap(&["translate", "<<1>>^r X p", "--agents", "1,2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "<<1>> X (rat_1 & rat_2 & p)");
    assert_eq!(code(&ratcap(&["translate", "rat_1 -> p"])), 2);

    let nf = ratcap(&["nf", "p | !p"]);
    assert_eq!(code(&nf), 0);
    assert_eq!(stdout(&nf).lines().count(), 1);
    let v: serde_json::Value = serde_json::from_slice(&ratcap(&["--json", "nf", "p | !p"]).stdout).unwrap();
    assert_eq!(v["conjuncts"].as_array().unwrap().len(), 1);
    assert_eq!(v["conjuncts"][0]["chi"].as_array().unwrap().len(), 2);
}

#[test]
fn transform_writes_a_valid_model() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    assert_eq!(code(&ratcap(&["transform", &m_cross(), "-o", out.to_str().unwrap()])), 0);
    let t = out.to_str().unwrap();
    assert_eq!(code(&ratcap(&["validate", t])), 0);
    let holds = ratcap(&["mc", t, "<<v1>>^r X !crash"]);
    // every copy of q0 keeps the property
    assert_eq!(stdout(&holds).lines().filter(|l| l.starts_with("q0^")).count(), 4);
}

#[test]
fn oracle_agrees_and_respects_bound() {
    let m = m_cross();
    let out = ratcap(&["oracle", &m, "<<v1>>^r X !crash"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("AGREE"));
    assert_eq!(code(&ratcap(&["oracle", &m, "p", "--oracle-bound", "3"])), 2);

    let env = Command::new(env!("CARGO_BIN_EXE_ratcap"))
        .args(["oracle", &m, "p"])
        .env("RATCAP_ORACLE_BOUND", "3")
        .output()
        .unwrap();
    assert_eq!(code(&env), 2);
}
