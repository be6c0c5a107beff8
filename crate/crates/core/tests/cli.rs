use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn rslice(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rslice"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn rslice_json(args: &[&str], stdin: &str) -> (i32, Value) {
    let (code, out) = rslice(args, stdin);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("not JSON ({e}): {out}")))
}

#[test]
fn classify_jordan_plus_point() {
    let (code, v) = rslice_json(&["classify"], r#"{"matrix": [[1,1,0],[0,1,0],[0,0,2]]}"#);
    assert_eq!(code, 0);
    assert_eq!(v["label"], json!([{"size": 2, "partition": [2]}, {"size": 1, "partition": [1]}]));
}

#[test]
fn richardson_of_the_borel() {
    let (code, v) = rslice_json(&["richardson", "--blocks", "1,1,1"], "");
    assert_eq!(code, 0);
    assert_eq!(v["partition"], json!([3]));
}

#[test]
fn verify_sweep_is_reproducible() {
    let args = ["verify", "slodowy", "--n", "3", "--seed", "7", "--samples", "50"];
    let (code, first) = rslice(&args, "");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["ok"], json!(true));
    assert_eq!(rslice(&args, "").1, first);
}

#[test]
fn exit_codes() {
    let (code, v) = rslice_json(&["classify"], r#"{"matrix": [[0,2],[1,0]]}"#);
    assert_eq!(code, 1);
    assert_eq!(v["factor"], json!("t^2 - 2"));
    assert_eq!(rslice(&["classify"], "{not json").0, 2);
    assert_eq!(rslice(&["classify"], r#"{"matrix": [[0.5]]}"#).0, 2);
    assert_eq!(rslice(&["verify", "nope", "--n", "2"], "").0, 2);
    assert_eq!(rslice(&["atlas", "--n", "7"], "").0, 1);
}

#[test]
fn jordan_and_jm_documents() {
    let (code, v) = rslice_json(&["jordan"], r#"[["2","1"],["0","2"]]"#);
    assert_eq!(code, 0);
    assert_eq!(v["semisimple"], json!([["2", "0"], ["0", "2"]]));
    assert_eq!(v["nilpotent"], json!([["0", "1"], ["0", "0"]]));
    let (code, v) = rslice_json(&["jm"], r#"{"matrix": [[0,1],[0,0]]}"#);
    assert_eq!(code, 0);
    assert_eq!(v["h"], json!([["1", "0"], ["0", "-1"]]));
    let (code, v) = rslice_json(&["slodowy"], r#"{"matrix": [[0,1,0],[0,0,1],[0,0,0]]}"#);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], json!(3));
}

#[test]
fn classes_and_induction() {
    let (code, v) = rslice_json(&["enumerate", "--n", "3"], "");
    assert_eq!(code, 0);
    assert_eq!(v["count"], json!(6));
    let (code, v) = rslice_json(&["class-dim"], r#"{"label": [{"size": 2, "partition": [1,1]}]}"#);
    assert_eq!(code, 0);
    assert_eq!(v["dimension"], json!(1));
    let (code, v) = rslice_json(&["induce"], r#"{"blocks": [2,1], "orbits": [[2],[1]]}"#);
    assert_eq!(code, 0);
    assert_eq!(v["partition"], json!([3]));
}

#[test]
fn slices_and_residual() {
    let (code, v) = rslice_json(&["natural-slice"], r#"{"matrix": [[1,0,0],[0,1,0],[0,0,2]]}"#);
    assert_eq!(code, 0);
    assert_eq!(v["I"], json!([2, 1]));
    let (code, v) = rslice_json(&["comp-slice"], r#"{"matrix": [[1,1,0],[0,1,0],[0,0,2]]}"#);
    assert_eq!(code, 0);
    assert!(v["triple"].is_object());
    let (code, v) = rslice_json(&["membership"], r#"{"x": [[1,0],[0,2]], "y": [[3,0],[0,5]]}"#);
    assert_eq!(code, 0);
    assert_eq!(v["member"], json!(true));
    let (code, v) = rslice_json(&["--algebra", "sl", "residual"], r#"{"matrix": [[0,1],[0,0]]}"#);
    assert_eq!(code, 0);
    assert_eq!(v["c_order"], json!(2));
}

#[test]
fn atlas_exports() {
    let (code, dot) = rslice(&["atlas", "--n", "2", "--format", "dot"], "");
    assert_eq!(code, 0);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("partial order (certified subset)"));
    let (code, v) = rslice_json(&["atlas", "--n", "1"], "");
    assert_eq!(code, 0);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 1);
}
