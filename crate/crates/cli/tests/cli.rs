use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_g2lf");

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data")
        .join(name)
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn scratch(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

/// Drops timing so outputs compare byte for byte.
fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("elapsed_ms");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn check_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("G2LF_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).expect("golden file present");
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

fn write(name: &str, text: &str) -> PathBuf {
    let p = scratch(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn verify_seed_exits_zero() {
    let o = run(&["verify", data("seed_4_3.json").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let mut v = stdout_json(&o);
    assert_eq!(v["certificate"]["verdict"], "Identity");
    assert_eq!(v["stamp"], "valid");
    strip_timing(&mut v);
    v["manifest"]["inputs"][0]["source"] = Value::String("seed_4_3.json".into());
    check_golden(
        "verify_seed.json",
        &(serde_json::to_string_pretty(&v).unwrap() + "\n"),
    );
}

#[test]
fn verify_single_letter_exits_one() {
    let p = write(
        "single.json",
        r#"{"letters":[{"transporter":[],"base":"C1"}]}"#,
    );
    let o = run(&["verify", p.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout_json(&o)["certificate"]["verdict"], "NotIdentity");
}

#[test]
fn verify_involution_exits_one() {
    let gens = [1, 2, 3, 4, 5, 5, 4, 3, 2, 1];
    let letters: Vec<String> = gens
        .iter()
        .map(|i| format!(r#"{{"transporter":[],"base":"C{i}"}}"#))
        .collect();
    let p = write(
        "involution.json",
        &format!(r#"{{"letters":[{}]}}"#, letters.join(",")),
    );
    let o = run(&["verify", p.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert_eq!(
        stdout_json(&o)["certificate"]["verdict"],
        "HyperellipticInvolution"
    );
}

#[test]
fn verify_malformed_exits_two() {
    let p = write(
        "malformed.json",
        r#"{"letters":[{"transporter":[[7,1]],"base":"C1"}]}"#,
    );
    assert_eq!(code(&run(&["verify", p.to_str().unwrap()])), 2);
    let p = write("garbage.json", "not json");
    assert_eq!(code(&run(&["verify", p.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["verify", "/nonexistent/file.json"])), 2);
}

#[test]
fn tampered_stamp_is_reported() {
    let text = std::fs::read_to_string(data("seed_4_3.json")).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["verified_by"] = Value::String(format!("sha256:{}", "0".repeat(64)));
    let p = write("tampered.json", &v.to_string());
    let o = run(&["verify", p.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["stamp"], "mismatch");
}

#[test]
fn derive_writes_verified_14_13() {
    let out = scratch("derived.json");
    let o = run(&["derive", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let summary = stdout_json(&o);
    assert_eq!(summary["letters"], 27);
    assert_eq!(summary["signature"], -11);
    assert_eq!(summary["euler"], 23);
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(file["letters"].as_array().unwrap().len(), 27);
    assert!(file["manifest"]["inputs"].as_array().unwrap().len() == 2);
    let o = run(&["verify", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["type"]["n"], 14);
    assert_eq!(v["type"]["s"], 13);
    assert_eq!(v["stamp"], "valid");
}

#[test]
fn derive_with_explicit_paths_matches_bundled() {
    let a = scratch("derived_a.json");
    let b = scratch("derived_b.json");
    assert_eq!(code(&run(&["derive", "--out", a.to_str().unwrap()])), 0);
    let seed = data("seed_4_3.json");
    let lantern = data("lantern.json");
    let o = run(&[
        "derive",
        "--seed",
        seed.to_str().unwrap(),
        "--lantern",
        lantern.to_str().unwrap(),
        "--out",
        b.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let read =
        |p: &Path| -> Value { serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap() };
    assert_eq!(read(&a)["letters"], read(&b)["letters"]);
    assert_eq!(read(&a)["verified_by"], read(&b)["verified_by"]);
}

#[test]
fn derive_precondition_codes() {
    let seed = data("seed_4_3.json");
    let lantern = data("lantern.json");
    // swapped arguments
    let o = run(&[
        "derive",
        "--seed",
        lantern.to_str().unwrap(),
        "--lantern",
        seed.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
    // a seed that does not verify
    let text = std::fs::read_to_string(&seed).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["letters"].as_array_mut().unwrap().swap(0, 3);
    let broken = write("broken_seed.json", &v.to_string());
    assert_eq!(
        code(&run(&["derive", "--seed", broken.to_str().unwrap()])),
        4
    );
    // a verified word of the wrong type
    let chain: Vec<String> = (0..30)
        .map(|k| format!(r#"{{"transporter":[],"base":"C{}"}}"#, k % 5 + 1))
        .collect();
    let chain = write(
        "chain.json",
        &format!(r#"{{"letters":[{}]}}"#, chain.join(",")),
    );
    assert_eq!(
        code(&run(&["derive", "--seed", chain.to_str().unwrap()])),
        5
    );
    // a lantern whose relation fails
    let mut l: Value = serde_json::from_str(&std::fs::read_to_string(&lantern).unwrap()).unwrap();
    l["interior"][0]["base"] = Value::String("C2".into());
    let bad = write("bad_lantern.json", &l.to_string());
    assert_eq!(
        code(&run(&["derive", "--lantern", bad.to_str().unwrap()])),
        6
    );
    // a valid lantern whose boundary does not match a1 = C1
    let shifted = r#"{"boundary":[
        {"transporter":[[1,1],[2,1]],"base":"C1"},{"transporter":[[1,1],[2,1]],"base":"C1"},
        {"transporter":[[1,1],[2,1]],"base":"C5"},{"transporter":[[1,1],[2,1]],"base":"C5"}],
      "interior":[
        {"transporter":[[1,1],[2,1]],"base":"C3"},{"transporter":[[1,1],[2,1]],"base":"S0"},
        {"transporter":[[1,1],[2,1],[2,-1],[1,-2],[2,-1]],"base":"C3"}]}"#;
    let shifted = write("shifted_lantern.json", shifted);
    assert_eq!(
        code(&run(&["derive", "--lantern", shifted.to_str().unwrap()])),
        7
    );
}

#[test]
fn certify_examples() {
    let o = run(&["certify", "6", "7", "--kind", "minimal"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["verdict"], "Proved");
    let o = run(&["certify", "14", "13", "--kind", "indecomposable"]);
    assert_eq!(code(&o), 3);
    assert_eq!(
        stdout_json(&o)["decompositions"].as_array().unwrap().len(),
        3
    );
    let o = run(&["certify", "10", "0", "--kind", "minimal"]);
    assert_eq!(code(&o), 2);
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["admissibility"]["violations"][0], "TenCase");
    let o = run(&["certify", "--kind", "theorem1"]);
    assert_eq!(code(&o), 0);
    check_golden("theorem1.json", &String::from_utf8(o.stdout).unwrap());
}

#[test]
fn geography_goldens() {
    let table = run(&["geography", "--max-k", "4"]);
    assert_eq!(code(&table), 0);
    let table = String::from_utf8(table.stdout).unwrap();
    check_golden("geography_k4.txt", &table);
    let json = run(&["geography", "--max-k", "4", "--format", "json"]);
    let json_text = String::from_utf8(json.stdout).unwrap();
    check_golden("geography_k4.json", &json_text);
    let rows: Vec<Value> = serde_json::from_str(&json_text).unwrap();
    // both renderings list the same pairs in the same order
    let from_table: Vec<(u64, u64)> = table
        .lines()
        .skip(1)
        .map(|l| {
            let mut it = l.split_whitespace();
            (
                it.next().unwrap().parse().unwrap(),
                it.next().unwrap().parse().unwrap(),
            )
        })
        .collect();
    let from_json: Vec<(u64, u64)> = rows
        .iter()
        .map(|r| (r["n"].as_u64().unwrap(), r["s"].as_u64().unwrap()))
        .collect();
    assert_eq!(from_table, from_json);
    for (n, s) in [(4, 3), (6, 7), (8, 11), (10, 15)] {
        let row = rows.iter().find(|r| r["n"] == n && r["s"] == s).unwrap();
        assert_eq!(row["slope_extremal"], true);
    }
    let k5 = run(&["geography", "--max-k", "5", "--format", "json"]);
    let k5: Vec<Value> = serde_json::from_slice(&k5.stdout).unwrap();
    assert!(k5
        .iter()
        .any(|r| r["n"] == 12 && r["s"] == 19 && r["slope_extremal"] == true));
    let k1 = run(&["geography", "--max-k", "1", "--format", "json"]);
    let k1: Vec<Value> = serde_json::from_slice(&k1.stdout).unwrap();
    assert_eq!(k1.len(), 2);
}

#[test]
fn moves_script_round_trip() {
    let script = write(
        "script.json",
        r#"{"moves":[
            {"op":"cyclic_permute","k":3},
            {"op":"hurwitz","index":1,"direction":"forward"},
            {"op":"hurwitz","index":1,"direction":"backward"},
            {"op":"conjugate","word":[[1,1],[3,-2]]},
            {"op":"square_swap","take":"second"}
        ]}"#,
    );
    let out = scratch("moved.json");
    let seed = data("seed_4_3.json");
    let o = run(&[
        "moves",
        seed.to_str().unwrap(),
        "--script",
        script.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = stdout_json(&o);
    assert_eq!(v["type_after"]["n"], 8);
    assert_eq!(v["type_after"]["s"], 6);
    assert_eq!(code(&run(&["verify", out.to_str().unwrap()])), 0);
    let bad = write(
        "bad_script.json",
        r#"{"moves":[{"op":"hurwitz","index":6,"direction":"forward"}]}"#,
    );
    assert_eq!(
        code(&run(&[
            "moves",
            seed.to_str().unwrap(),
            "--script",
            bad.to_str().unwrap()
        ])),
        8
    );
    let unknown = write("unknown_script.json", r#"{"moves":[{"op":"teleport"}]}"#);
    assert_eq!(
        code(&run(&[
            "moves",
            seed.to_str().unwrap(),
            "--script",
            unknown.to_str().unwrap()
        ])),
        2
    );
}

#[test]
fn moves_lantern_rejects_wrong_window() {
    let seed = data("seed_4_3.json");
    let script = write(
        "lantern_script.json",
        r#"{"moves":[{"op":"lantern","position":0}]}"#,
    );
    // the seed does not start with the lantern boundary
    let o = run(&[
        "moves",
        seed.to_str().unwrap(),
        "--script",
        script.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 8);
}
