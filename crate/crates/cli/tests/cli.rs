//! End-to-end tests of the `bsdh` binary: outputs, exit codes, JSON schema
//! and determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn bsdh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsdh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let o = bsdh(&full);
    serde_json::from_slice(&o.stdout).expect("valid JSON report")
}

fn code(args: &[&str]) -> i32 {
    bsdh(args).status.code().unwrap()
}

#[test]
fn coeffs_examples() {
    let r = json(&[
        "coeffs",
        "--type",
        "A",
        "--rank",
        "3",
        "--word",
        "1,2,1,3,2,1",
    ]);
    assert_eq!(r["result"]["m"], serde_json::json!([1, 0, 1, 1, 1, 2]));
    let r = json(&[
        "coeffs",
        "--type",
        "A",
        "--rank",
        "4",
        "--word",
        "3,2,1,4,3,2,3,1,4,3",
    ]);
    assert_eq!(r["result"]["m"][5], -1);
    let r = json(&["coeffs", "--type", "A", "--rank", "1", "--word", "1"]);
    assert_eq!(r["result"]["m"], serde_json::json!([2]));
    let r = json(&["coeffs", "--type", "A3", "--word", "1,2", "--basis", "x"]);
    assert!(r["result"].get("m").is_none());
    assert!(r["result"]["x"].is_array());
}

#[test]
fn classify_verdict_lines() {
    let out = stdout(&bsdh(&[
        "classify", "--type", "D", "--rank", "4", "--word", "2,1,3,4",
    ]));
    assert!(out.contains("globally generated: no"), "{out}");
    let out = stdout(&bsdh(&[
        "classify",
        "--type",
        "A",
        "--rank",
        "3",
        "--word",
        "1,2,1,3,2,1",
    ]));
    assert!(out.contains("globally generated: yes\nFano: no"), "{out}");
    let out = stdout(&bsdh(&["classify", "--type", "A3", "--word", ""]));
    assert!(out.contains("point: Fano (convention)"), "{out}");
}

#[test]
fn words_counts() {
    let r = json(&["words", "--type", "A3", "--longest", "--classes"]);
    assert_eq!(r["result"]["count"], "16");
    assert_eq!(r["result"]["num_classes"], 8);
    let r = json(&["words", "--type", "A4", "--longest", "--count-only"]);
    assert_eq!(r["result"]["count"], "768");
    let r = json(&["words", "--type", "B3", "--word", "2", "--classes"]);
    assert_eq!(r["result"]["count"], "1");
    assert_eq!(r["result"]["num_classes"], 1);
}

#[test]
fn census_tables() {
    let out = stdout(&bsdh(&["census", "--type", "G2"]));
    assert!(out.contains("alpha_1 (short) -> s2s1"), "{out}");
    assert!(out.contains("alpha_2 (long) -> none"), "{out}");
    let r = json(&["census", "--type", "A2"]);
    let entries = r["result"]["entries"].as_array().unwrap();
    assert!(entries.iter().all(|e| !e["word"].is_null()));
    let r = json(&["census", "--type", "B", "--rank", "2"]);
    let found = r["result"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| !e["word"].is_null())
        .count();
    assert_eq!(found, 1);
}

#[test]
fn character_reports() {
    let r = json(&["character", "--type", "A2", "--word", "1"]);
    assert_eq!(r["result"]["dimension"], 3);
    assert_eq!(r["result"]["weights"].as_array().unwrap().len(), 3);
    let r = json(&["character", "--type", "A2", "--word", "1,2"]);
    assert_eq!(r["result"]["lowest_multiplicity"], 1);
    assert_eq!(r["result"]["passed"], true);
    // -(2 alpha_1 + alpha_2) in fundamental-weight coordinates
    assert_eq!(r["result"]["lowest_weight"], serde_json::json!([-3, 0]));
    let r = json(&["character", "--type", "D4", "--word", "2,1,3,4"]);
    assert!(r["result"]["certified"].is_boolean());
}

#[test]
fn euler_only_certification() {
    // Not globally generated; its Euler characteristic has negative terms.
    let args = ["character", "--type", "B3", "--word", "3,2,1,2"];
    let out = stdout(&bsdh(&args));
    assert!(out.contains("certification: euler-only"), "{out}");
    let r = json(&args);
    assert_eq!(r["result"]["certified"], false);
    assert_eq!(r["result"]["negative"].as_array().unwrap().len(), 2);
    assert_eq!(bsdh(&args).status.code(), Some(0));
}

#[test]
fn verify_suites() {
    assert_eq!(code(&["verify", "thm56", "--types", "A3,B3,G2"]), 0);
    assert_eq!(
        code(&["verify", "thm58", "--types", "A4:2,D4:4,B3:3,C3:1"]),
        0
    );
    assert_eq!(
        code(&["verify", "oracle-m", "--type", "A3", "--exhaustive"]),
        0
    );
    assert_eq!(code(&["verify", "cor54", "--max-rank", "3"]), 0);
    assert_eq!(
        code(&["verify", "census", "--types", "A4,D4,B3,C3,G2,F4"]),
        0
    );
    assert_eq!(code(&["verify", "character", "--max-rank", "3"]), 0);
    assert_eq!(
        code(&[
            "verify",
            "structural",
            "--type",
            "F4",
            "--sample",
            "50",
            "--seed",
            "3"
        ]),
        0
    );
    assert_eq!(code(&["verify", "fixtures"]), 0);
    let r = json(&["verify", "oracle-m", "--type", "A3", "--exhaustive"]);
    assert_eq!(r["result"][0]["checked"], 66);
    assert_eq!(r["result"][0]["violations"], serde_json::json!([]));
}

#[test]
fn j1_cardinality_violation_exits_3() {
    assert_eq!(code(&["verify", "j1", "--types", "A3,B3,G2"]), 0);
    assert_eq!(code(&["verify", "j1", "--types", "C3"]), 3);
}

#[test]
fn fixtures_command() {
    let o = bsdh(&["fixtures"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("[FAIL]"));
    let r = json(&["fixtures"]);
    assert!(r["verdicts"].as_array().unwrap().len() >= 15);

    let dir = std::env::temp_dir().join(format!("bsdh-fixture-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.toml");
    std::fs::write(
        &bad,
        "[[fixture]]\nname = \"wrong\"\ntype = \"A2\"\nword = \"1,2\"\nexpected_m = [0, 2]\nsource = \"deliberately wrong\"\n",
    )
    .unwrap();
    assert_eq!(code(&["fixtures", "--file", bad.to_str().unwrap()]), 3);
    std::fs::write(&bad, "not toml [").unwrap();
    assert_eq!(code(&["fixtures", "--file", bad.to_str().unwrap()]), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["coeffs", "--type", "A3", "--word", "1,2"]), 0);
    // malformed input
    assert_eq!(code(&["coeffs", "--type", "A3", "--word", "1,x"]), 1);
    assert_eq!(
        code(&["coeffs", "--type", "Q", "--rank", "3", "--word", "1"]),
        1
    );
    assert_eq!(code(&["coeffs", "--type", "A", "--word", "1"]), 1);
    assert_eq!(code(&["nonsense"]), 1);
    assert_eq!(code(&["verify", "nonsense"]), 1);
    assert_eq!(code(&["--help"]), 0);
    // domain preconditions
    let o = bsdh(&["coeffs", "--type", "A3", "--word", "1,2,1,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 1"));
    assert_eq!(
        code(&["classify", "--type", "E", "--rank", "5", "--word", "1"]),
        2
    );
    assert_eq!(code(&["coeffs", "--type", "A2", "--word", "3"]), 2);
    assert_eq!(code(&["census", "--type", "A1"]), 2);
    assert_eq!(code(&["verify", "thm58", "--types", "A3:9"]), 2);
}

fn strip_duration(v: &mut Value) {
    v.as_object_mut().unwrap().remove("duration_ms");
}

#[test]
fn output_is_deterministic() {
    let runs: [&[&str]; 5] = [
        &["words", "--type", "A3", "--longest", "--classes"],
        &["census", "--type", "F4"],
        &["character", "--type", "B3", "--word", "1,2,3"],
        &[
            "verify", "oracle-m", "--type", "D4", "--sample", "200", "--seed", "11",
        ],
        &["verify", "thm56", "--types", "B3,G2"],
    ];
    for args in runs {
        assert_eq!(stdout(&bsdh(args)), stdout(&bsdh(args)), "{args:?}");
        let (mut a, mut b) = (json(args), json(args));
        for v in [&mut a, &mut b] {
            assert!(v["duration_ms"].is_u64());
            for key in ["command", "input", "result", "verdicts"] {
                assert!(v.get(key).is_some(), "{key} missing");
            }
            strip_duration(v);
        }
        assert_eq!(a, b, "{args:?}");
    }
}
