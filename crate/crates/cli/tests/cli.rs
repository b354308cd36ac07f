use std::io::Write;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["conet".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let out = conet::run(&argv);
    (out.code, serde_json::from_str(&out.stdout).expect("json output"))
}

fn input(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn term(c: &str, e: [u32; 3]) -> String {
    format!("{{\"coef\":\"{c}\",\"exp\":[{},{},{}]}}", e[0], e[1], e[2])
}

fn form(d: u32, terms: &[String]) -> String {
    format!("{{\"degree\":{d},\"terms\":[{}]}}", terms.join(","))
}

fn system(forms: &[String]) -> String {
    format!("{{\"field\":\"Q\",\"forms\":[{}]}}", forms.join(","))
}

fn hesse_lambda1() -> String {
    system(&[
        form(2, &[term("1", [2, 0, 0]), term("1", [0, 1, 1])]),
        form(2, &[term("1", [0, 2, 0]), term("1", [1, 0, 1])]),
        form(2, &[term("1", [0, 0, 2]), term("1", [1, 1, 0])]),
    ])
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn classify_hesse_net() {
    let f = input(&hesse_lambda1());
    let (code, v) = run(&["classify", "net", "--file", path(&f), "--seed", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["orbit"], "8b");
    assert_eq!(v["key"], serde_json::json!(["1", "-169/2058"]));
    assert_eq!(v["scheme_length"], 0);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn two_dimensional_input_is_rejected() {
    let f = input(&system(&[form(2, &[term("1", [2, 0, 0])]), form(2, &[term("1", [0, 2, 0])])]));
    let (code, v) = run(&["classify", "net", "--file", path(&f)]);
    assert_eq!(code, 3);
    assert_eq!(v["error"], "NotThreeDimensional");
    let (code, v) = run(&["classify", "pencil", "--file", path(&f)]);
    assert_eq!(code, 0);
    assert_eq!(v["type"], "h");
}

#[test]
fn malformed_inputs() {
    assert_eq!(run(&["classify", "net"]).0, 3);
    assert_eq!(run(&["classify", "net", "--file", "/nonexistent/net.json"]).0, 3);
    assert_eq!(run(&["hessian", "net"]).0, 3);
    assert_eq!(run(&["frobnicate", "net"]).0, 3);
    let f = input("{\"field\":\"Q\",\"forms\":[");
    assert_eq!(run(&["classify", "net", "--file", path(&f)]).1["error"], "InvalidJson");
    let f = input(&system(&[form(2, &[term("1", [2, 0, 0])])]));
    assert_eq!(run(&["hessian", "cubic", "--file", path(&f)]).1["error"], "NotACubic");
    assert_eq!(run(&["verify", "smoothing", "--lambda", "-1"]).1["error"], "InvalidParameters");
    assert_eq!(run(&["verify", "onr2", "--r", "5", "--lambdas", "2,2"]).0, 3);
}

#[test]
fn net_operations() {
    let f = input(&hesse_lambda1());
    let (code, v) = run(&["dual", "net", "--file", path(&f)]);
    assert_eq!(code, 0);
    assert_eq!(v["orbit"], "8b");
    assert_eq!(v["key"], serde_json::json!(["1", "169/3072"]));
    assert_eq!(v["complement"]["forms"].as_array().unwrap().len(), 3);
    let (_, v) = run(&["gamma", "net", "--file", path(&f)]);
    assert_eq!(v["type"]["type"], "Smooth");
    assert_eq!(v["gamma"]["degree"], 3);
    let (_, v) = run(&["preimage", "net", "--file", path(&f)]);
    assert_eq!(v["dim"], 1);
}

#[test]
fn cubic_operations() {
    let fermat = form(3, &[term("1", [3, 0, 0]), term("1", [0, 3, 0]), term("1", [0, 0, 3])]);
    let f = input(&fermat);
    let (_, v) = run(&["apolar", "cubic", "--file", path(&f)]);
    assert_eq!(v["generators"]["2"], 3);
    assert_eq!(v["generators"]["3"], 2);
    let (_, v) = run(&["hessian", "cubic", "--file", path(&f)]);
    assert_eq!(v["hessian"]["terms"].as_array().unwrap().len(), 1);
    let (_, v) = run(&["classify", "cubic", "--file", path(&f)]);
    assert_eq!(v["type"], "Smooth");
    let node = input(&system(&[form(3, &[term("1", [0, 2, 1]), term("-1", [3, 0, 0]), term("-1", [2, 0, 1])])]));
    assert_eq!(run(&["classify", "cubic", "--file", path(&node)]).1["type"], "Node");
}

#[test]
fn verification_subjects_pass() {
    for args in [
        vec!["verify", "tables"],
        vec!["verify", "specializations"],
        vec!["verify", "smoothing", "--lambda", "1", "--t", "1"],
        vec!["verify", "onr2", "--r", "4", "--lambdas", "2", "--t", "1"],
    ] {
        let (code, v) = run(&args);
        assert_eq!(code, 0, "{args:?}: {v}");
        assert!(v["clauses"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    }
}

#[test]
fn binary_output_is_deterministic() {
    let f = input(&hesse_lambda1());
    let exe = env!("CARGO_BIN_EXE_conet");
    let once = || Command::new(exe).args(["classify", "net", "--file", path(&f), "--seed", "7"]).output().unwrap();
    let (a, b) = (once(), once());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let bad = Command::new(exe).args(["verify", "smoothing", "--t", "0"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(3));
}
