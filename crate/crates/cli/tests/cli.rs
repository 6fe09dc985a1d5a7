use std::io::Write;
use std::process::Command;

use serde_json::{json, Value};

fn run(args: &[&str], input: Option<Value>) -> (i32, Value) {
    let file = input.map(|v| {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(v.to_string().as_bytes()).unwrap();
        f
    });
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_supergrade"));
    cmd.args(args);
    if let Some(f) = &file {
        cmd.arg("--input").arg(f.path());
    }
    let out = cmd.output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

fn without_timings(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timings");
    v
}

fn m11() -> Value {
    json!({ "type": "matrix_super", "n": 1, "m": 1 })
}

#[test]
fn demo_z4_passes() {
    let (code, v) = run(&["demo-z4"], None);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["result"]["dims"], json!([2, 2, 2, 2]));
    assert_eq!(v["result"]["classification"], "III");
    assert_eq!(v["result"]["h"], json!([3]));
}

#[test]
fn q1_has_no_superinvolution() {
    let (code, v) = run(&["search-superinvolution"], Some(json!({ "algebra": { "type": "q", "n": 1 } })));
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["found"], json!([]));
}

#[test]
fn malformed_grading_exits_2() {
    let bad = json!({ "grading": { "kind": "elementary", "algebra": { "type": "matrix_super", "n": 2, "m": 0 }, "group": { "factors": [2] }, "tuple": [[0], ["x"]] } });
    let (code, v) = run(&["check-grading"], Some(bad));
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
    assert!(v["message"].as_str().unwrap().contains("grading"), "{v}");

    let bad_scalar = json!({ "grading": { "kind": "explicit", "group": { "factors": [2] }, "algebra": { "type": "matrix_super", "n": 1, "m": 0 },
        "components": [{ "g": [0], "basis": { "order": 1, "rows": [["one"]] } }] } });
    let (code, v) = run(&["check-grading"], Some(bad_scalar));
    assert_eq!(code, 2);
    assert!(v["message"].as_str().unwrap().contains("components[0].basis[0][0]"), "{v}");

    let (code, _) = run(&["check-grading"], None);
    assert_eq!(code, 2);
}

#[test]
fn grade_suite_is_deterministic() {
    let (c1, a) = run(&["grade", "--seed", "7"], None);
    let (c2, b) = run(&["grade", "--seed", "7", "--parallel", "4"], None);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a["result"]["checks"].as_object().unwrap().len(), 20);
    assert_eq!(without_timings(a.clone()), without_timings(b));
    let (_, c) = run(&["grade", "--seed", "8"], None);
    assert_ne!(without_timings(a), without_timings(c));
}

#[test]
fn identical_runs_are_byte_identical() {
    let input = json!({ "grading": { "kind": "pauli", "algebra": m11() }, "star": { "algebra": m11(), "canonical": "trp" } });
    let (_, a) = run(&["check-grading"], Some(input.clone()));
    let (_, b) = run(&["check-grading"], Some(input));
    assert_eq!(without_timings(a), without_timings(b));
}

#[test]
fn tau_axioms_and_powers() {
    let (code, v) = run(&["verify-axioms"], Some(json!({ "map": { "algebra": m11(), "canonical": "tau" }, "claim": "superantiautomorphism" })));
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["order"], 4);
    assert_eq!(v["result"]["square"], json!({ "even": "+id", "odd": "-id" }));

    // τ is not involutive, so the superinvolution claim fails with a witness
    let (code, v) = run(&["verify-axioms"], Some(json!({ "map": { "algebra": m11(), "canonical": "tau" }, "claim": "superinvolution" })));
    assert_eq!(code, 1);
    assert!(v["witnesses"].as_array().unwrap().iter().any(|w| w["check"] == "involutive"));
}

#[test]
fn involution_simple_flag() {
    let prod = json!({ "type": "product", "left": m11(), "right": m11() });
    let (code, v) = run(&["verify-axioms"], Some(json!({ "map": { "algebra": m11(), "canonical": "trp" }, "claim": "superinvolution", "simple": true })));
    assert_eq!(code, 0, "{v}");
    let (code, v) = run(&["verify-axioms"], Some(json!({ "map": { "algebra": prod, "canonical": "trp" }, "claim": "superinvolution", "simple": true })));
    assert_eq!(code, 1, "{v}");
    assert_eq!(v["result"]["involution_simple"], false);
}

#[test]
fn build_then_classify() {
    let spec = json!({ "type": "II", "base": { "kind": "trivial", "algebra": m11(), "group": { "factors": [2] } },
        "dagger": { "algebra": m11(), "canonical": "trp" }, "h": [1] });
    let (code, v) = run(&["build"], Some(spec));
    assert_eq!(code, 0, "{v}");
    let grading = v["result"]["typed"]["grading"].clone();
    let mut explicit = grading.as_object().unwrap().clone();
    explicit.insert("kind".into(), json!("explicit"));
    let (code, c) = run(&["classify"], Some(json!({ "grading": explicit })));
    assert_eq!(code, 0, "{c}");
    assert_eq!(c["result"]["typed"]["type"], "II");
    assert_eq!(c["result"]["typed"]["h"], json!([1]));
}

#[test]
fn exchange_on_pair_algebra() {
    let pair = json!({ "type": "pair_sop", "base": m11() });
    let ex = json!({ "algebra": pair, "canonical": "exchange" });
    let id = json!({ "algebra": pair, "canonical": "identity" });
    let input = json!({
        "alpha": { "group": { "factors": [2] }, "images": [id] },
        "beta": { "group": { "factors": [2] }, "images": [ex] },
        "lambda": [[0]],
    });
    let (code, v) = run(&["exchange"], Some(input));
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["first_identity"], true);
    assert_eq!(v["result"]["second_identity"], true);
}

#[test]
fn obstruction_tasks() {
    let m2 = json!({ "type": "matrix_super", "n": 2, "m": 0 });
    let (code, v) = run(&["obstruction"], Some(json!({ "grading": { "kind": "pauli", "algebra": m2 }, "expect": false })));
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["obstructed"], false);

    let elem = json!({ "kind": "elementary", "algebra": m2, "group": { "factors": [2] }, "tuple": [[0], [1]] });
    let input = json!({ "task": "commuting_root", "grading": elem, "phi": { "algebra": m2, "canonical": "transpose" }, "mode": "square" });
    let (code, v) = run(&["obstruction"], Some(input));
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["powers_agree"], true);

    let (code, v) = run(&["obstruction"], Some(json!({ "task": "commuting_root" })));
    assert_eq!(code, 2, "{v}");
}

#[test]
fn list_checks_has_ten_entries() {
    let (code, v) = run(&["--list-checks"], None);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 10);
}

#[test]
fn text_output_renders_the_report() {
    let out = Command::new(env!("CARGO_BIN_EXE_supergrade")).args(["demo-z4", "--output", "text"]).output().unwrap();
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("status: pass"), "{s}");
    assert!(s.contains("classification: III"), "{s}");
}
