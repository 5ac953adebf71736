use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn examples() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas/examples")
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hallcont"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    // `verify` never reads stdin and may exit before the write lands.
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn run_json(args: &[&str], doc: &Value) -> (i32, Value) {
    let o = run(args, &doc.to_string());
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&o.stdout)));
    (o.status.code().unwrap(), v)
}

fn read(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn a2_triple() -> Value {
    json!({
        "quiver": {"n": 2, "directions": ["fwd"]},
        "total": {"intervals": [[1, 2]]},
        "quot": {"intervals": [[1, 1]]},
        "sub": {"intervals": [[2, 2]]}
    })
}

#[test]
fn documented_examples_reproduce() {
    let mut seen = 0;
    for entry in std::fs::read_dir(examples()).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_str().unwrap().to_string();
        if !name.ends_with(".json") || name.ends_with(".out.json") {
            continue;
        }
        let stem = name.trim_end_matches(".json");
        let cmd = stem.trim_end_matches("-malformed").trim_end_matches("-vanishing");
        let want_code = if stem.ends_with("-malformed") { 2 } else { 0 };
        let o = run(&[cmd, "--in", path.to_str().unwrap()], "");
        assert_eq!(o.status.code(), Some(want_code), "{stem}: {}", String::from_utf8_lossy(&o.stdout));
        let got: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(got, read(&examples().join(format!("{stem}.out.json"))), "{stem}");
        seen += 1;
    }
    assert!(seen >= 12);
}

#[test]
fn hall_num_counts_one_extension() {
    let (code, v) = run_json(&["hall-num", "--q", "3"], &a2_triple());
    assert_eq!(code, 0);
    assert_eq!(v, json!({"count": 1}));
    let mut rev = a2_triple();
    rev["quot"] = json!({"intervals": [[2, 2]]});
    rev["sub"] = json!({"intervals": [[1, 1]]});
    assert_eq!(run_json(&["hall-num", "--q", "3"], &rev).1, json!({"count": 0}));
}

#[test]
fn q_flag_overrides_document_field() {
    let mut doc = json!({
        "quiver": {"n": 1, "directions": []},
        "total": {"intervals": [[1, 1], [1, 1]]},
        "quot": {"intervals": [[1, 1]]},
        "sub": {"intervals": [[1, 1]]},
        "p": 2
    });
    assert_eq!(run_json(&["hall-num"], &doc).1, json!({"count": 3}));
    assert_eq!(run_json(&["hall-num", "--q", "5"], &doc).1, json!({"count": 6}));
    doc.as_object_mut().unwrap().remove("p");
    let (code, v) = run_json(&["hall-num"], &doc);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "precondition");
}

#[test]
fn verify_reports_pass() {
    let (code, v) = run_json(&["verify", "psi-phi-id", "--seed", "7"], &Value::Null);
    assert_eq!(code, 0);
    assert_eq!(v["suite"], "psi-phi-id");
    assert_eq!(v["seed"], 7);
    assert_eq!(v["passed"], 100);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["counterexample"], Value::Null);
}

#[test]
fn every_suite_passes_briefly() {
    for suite in ["associativity", "phi-hom", "psi-phi-id", "sigma-squares", "orbit-census", "theta-welldef", "psi-coherence"] {
        let (code, v) = run_json(&["verify", suite, "--seed", "1", "--count", "5"], &Value::Null);
        assert_eq!(code, 0, "{suite}: {v}");
        assert_eq!(v["passed"], 5);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "associativity", "--seed", "3", "--count", "20"];
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc = read(&examples().join("cont-product.json")).to_string();
    assert_eq!(run(&["cont-product"], &doc).stdout, run(&["cont-product"], &doc).stdout);
}

#[test]
fn malformed_input_exits_2() {
    let doc = json!({"n": 2, "directions": ["fwd"], "dims": [1, 1], "p": 3, "maps": [[[1, 0]]]});
    let (code, v) = run_json(&["decompose"], &doc);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "schema");
    assert!(v["error"]["detail"].is_string());

    let o = run(&["decompose"], "{not json");
    assert_eq!(o.status.code(), Some(2));
    let bad_p = json!({"n": 1, "directions": [], "dims": [1], "p": 4, "maps": []});
    assert_eq!(run_json(&["decompose"], &bad_p).0, 2);
    let mut wrong_class = a2_triple();
    wrong_class["total"] = json!({"intervals": [[1, 3]]});
    assert_eq!(run_json(&["hall-num", "--q", "2"], &wrong_class).0, 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["no-such-command"], "").status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-suite"], "").status.code(), Some(2));
    assert_eq!(run(&["hall-num", "--budget", "0"], "").status.code(), Some(2));
}

#[test]
fn precondition_failures_exit_3() {
    let doc = json!({
        "partition": {"cuts": [0, 1], "ownership": ["left", "left"]},
        "rep": {"intervals": [{"lo": 0, "lo_closed": false, "hi": "1/2", "hi_closed": true}]}
    });
    let (code, v) = run_json(&["sigma"], &doc);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "adaptedness");

    let conflict = json!({
        "coarse": {"cuts": [0], "ownership": ["left"]},
        "fine": {"cuts": [0], "ownership": ["right"]},
        "class": {"intervals": [[1, 1]]}
    });
    assert_eq!(run_json(&["stretch"], &conflict).0, 3);

    let a = json!({"quiver": {"n": 2, "directions": ["fwd"]}, "p": 2, "terms": []});
    let b = json!({"quiver": {"n": 2, "directions": ["fwd"]}, "p": 3, "terms": []});
    let (code, v) = run_json(&["hall-product"], &json!({"f": a, "g": b}));
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "typing");
}

#[test]
fn budget_exhaustion_exits_4() {
    let doc = json!({
        "quiver": {"n": 1, "directions": []},
        "total": {"intervals": [[1, 1], [1, 1], [1, 1], [1, 1]]},
        "quot": {"intervals": [[1, 1], [1, 1]]},
        "sub": {"intervals": [[1, 1], [1, 1]]}
    });
    let (code, v) = run_json(&["hall-num", "--q", "3", "--budget", "2"], &doc);
    assert_eq!(code, 4);
    assert_eq!(v["error"]["kind"], "resource");
    let (code, v) = run_json(&["hall-num", "--q", "3"], &doc);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 130);
}

#[test]
fn products_round_trip_through_the_unit() {
    let h = read(&examples().join("hall-product.out.json"));
    let unit = json!({"quiver": h["quiver"], "p": h["p"], "terms": [{"class": {"intervals": []}, "num": 1, "den": 1}]});
    let (code, again) = run_json(&["hall-product"], &json!({"f": h, "g": unit}));
    assert_eq!(code, 0);
    assert_eq!(again, h);

    let c = read(&examples().join("cont-product.out.json"));
    let unit = json!({"quiver": c["quiver"], "p": c["p"], "terms": [{"rep": {"intervals": []}, "coeff": 1}]});
    let (code, again) = run_json(&["cont-product"], &json!({"f": unit, "g": c}));
    assert_eq!(code, 0);
    assert_eq!(again, c);
}

#[test]
fn cont_product_accepts_a_finer_partition() {
    let mut doc = read(&examples().join("cont-product.json"));
    doc["partition"] = json!({"cuts": [-1, 0, "1/2", 1, 2, 3], "ownership": ["left", "left", "right", "left", "left", "left"]});
    let (code, v) = run_json(&["cont-product"], &doc);
    assert_eq!(code, 0);
    assert_eq!(v, read(&examples().join("cont-product.out.json")));
    doc["partition"] = json!({"cuts": [1], "ownership": ["right"]});
    assert_eq!(run_json(&["cont-product"], &doc).0, 3);
}

#[test]
fn table_format_and_out_file() {
    let o = run(&["hall-num", "--q", "3", "--format", "table"], &a2_triple().to_string());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap().trim(), "1");

    let path = std::env::temp_dir().join(format!("hallcont-cli-test-{}.json", std::process::id()));
    let o = run(&["hall-poly", "--out", path.to_str().unwrap()], &read(&examples().join("hall-poly.json")).to_string());
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(read(&path), read(&examples().join("hall-poly.out.json")));
    std::fs::remove_file(path).unwrap();
}
