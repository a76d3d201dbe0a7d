use std::path::PathBuf;
use std::process::Command;

use lipmod_core::algebra::parse_expr;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let out = lipmod::run(std::iter::once("lipmod").chain(args.iter().copied()));
    (out.exit, out.report)
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lipmod")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

const W10: [&str; 8] =
    ["check-trivial", "--family", "x^4+s*x^2*y^3+t*x^2*y^4+y^6", "--param", "t", "--scheme", "5,8", "--constraint"];

#[test]
fn milnor_of_e6() {
    let (code, r) = run(&["milnor", "x^3+y^4"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["mu"], 6);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["status"], "ok");
}

#[test]
fn w10_scheme_holds() {
    let mut args = W10.to_vec();
    args.push("s^2-4");
    let (code, r) = run(&args);
    assert_eq!(code, 0);
    // the cofactors of x^5 give 1/5 here, not 3/5 (see README)
    assert_eq!(r["result"]["margin"], "1/5");
    assert_eq!(r["result"]["certificate"]["margin"], "1/5");
}

#[test]
fn zero_six_jet_verdict() {
    let (code, r) = run(&["classify", "x^7+y^7"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["modality"], "AtLeast2");
    assert!(r["trace"].as_array().unwrap().iter().any(|t| t["criterion"] == "zero-6-jet"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["milnor", "x^3+"]).0, 2);
    assert_eq!(run(&["milnor", "x^2", "--vars", "x,y"]).0, 1);
    assert_eq!(run(&["no-such-command"]).0, 2);
    let (code, r) = run(&["--limit", "1", "milnor", "x^4+x^2*y^3+y^7"]);
    assert_eq!(code, 3);
    assert_eq!(r["status"], "resource-limit");
    let (code, r) = run(&["milnor", "x^3+q*y^4", "--vars", "x,y", "--params", "a"]);
    assert_eq!(code, 2, "{r}");
    assert!(r["error"]["message"].is_string());
}

#[test]
fn help_and_text_mode() {
    let (code, out) = bin(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("check-trivial"));
    let (code, out) = bin(&["--text", "milnor", "x^3+y^4"]);
    assert_eq!(code, 0);
    assert!(out.contains("mu: 6"), "{out}");
}

#[test]
fn binary_matches_library_and_is_deterministic() {
    let args = ["verify-table8", "Z17", "W1,1"];
    let (c1, a) = bin(&args);
    let (c2, b) = bin(&args);
    assert_eq!(c1, 1);
    assert_eq!(c1, c2);
    assert_eq!(a, b);
    let lib = lipmod::run(std::iter::once("lipmod").chain(args));
    assert_eq!(a, lipmod::render(&lib));
}

#[test]
fn polynomials_round_trip() {
    let (_, r) = run(&["divide", "y^8", "--jacobian-of", "x^4+s*x^2*y^3+t*x^2*y^4+y^6", "--constraint", "s^2-4"]);
    let vars = ["x", "y"];
    let params = ["s", "t"];
    let res = &r["result"];
    let mut texts = vec![res["unit"].as_str().unwrap().to_string(), res["remainder"].as_str().unwrap().to_string()];
    texts.extend(res["quotients"].as_array().unwrap().iter().map(|q| q.as_str().unwrap().to_string()));
    for t in texts {
        let p = parse_expr(&t, &vars, &params).unwrap();
        assert_eq!(parse_expr(&p.to_string(), &vars, &params).unwrap(), p, "{t}");
    }
    let (_, r) = run(&["initial", "x^2*y^3 + x^3 + y^9 + x*y^7", "--weight", "3,1"]);
    let t = r["result"]["initial"].as_str().unwrap();
    assert_eq!(parse_expr(t, &vars, &[] as &[&str]).unwrap(), parse_expr("x^3 + x^2*y^3 + y^9", &vars, &[] as &[&str]).unwrap());
}

#[test]
fn saved_certificate_reverifies() {
    let mut args = W10.to_vec();
    args.push("s^2-4");
    let out = lipmod::run(std::iter::once("lipmod").chain(args));
    let path = tmp("w10_report.json", &lipmod::render(&out));
    let (code, r) = run(&["verify-certificate", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{r}");

    let mut cert = out.report["result"]["certificate"].clone();
    cert["margin"] = "3/5".into();
    let path = tmp("w10_tampered.json", &cert.to_string());
    assert_eq!(run(&["verify-certificate", path.to_str().unwrap()]).0, 1);
}

#[test]
fn shipped_manifest_passes() {
    let manifest = concat!(env!("CARGO_MANIFEST_DIR"), "/manifests/acceptance.jsonl");
    let (code, r) = run(&["batch", manifest]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["result"]["failed"], 0);
}

#[test]
fn manifest_with_wrong_mu() {
    let path = tmp(
        "wrong_mu.jsonl",
        "{\"cmd\": \"milnor\", \"args\": [\"x^3+y^4\"], \"expect\": {\"result.mu\": 6}}\n\
         {\"cmd\": \"milnor\", \"args\": [\"x^3+y^5\"], \"expect\": {\"result.mu\": 9}}\n",
    );
    let (code, r) = run(&["batch", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(r["result"]["failed"], 1);
    let items = r["result"]["items"].as_array().unwrap();
    assert_eq!(items[0]["passed"], true);
    assert_eq!(items[1]["failures"].as_array().unwrap().len(), 1);
}

#[test]
fn empty_manifest() {
    let path = tmp("empty.jsonl", "");
    let (code, r) = run(&["batch", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["total"], 0);
    assert_eq!(r["result"]["items"].as_array().unwrap().len(), 0);
}
