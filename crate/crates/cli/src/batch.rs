//! Manifest runner. Each non-blank line is `{"cmd": .., "args": [..], "expect": {..}}`;
//! `expect` maps `exit`, `status` or a dotted path into the report (`result.mu`,
//! `result.rows.0.margin`) to the expected value.

use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::report::{Failure, Payload};

#[derive(Debug)]
struct Item {
    line: usize,
    cmd: String,
    args: Vec<String>,
    expect: Map<String, Value>,
}

fn parse_item(line: usize, text: &str) -> Result<Item, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let cmd = v.get("cmd").and_then(Value::as_str).ok_or("missing string `cmd`")?.to_string();
    if cmd == "batch" {
        return Err("nested batch is not allowed".into());
    }
    let args = match v.get("args") {
        None => Vec::new(),
        Some(Value::Array(a)) => a
            .iter()
            .map(|x| match x {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            })
            .collect(),
        Some(_) => return Err("`args` must be a list".into()),
    };
    let expect = match v.get("expect") {
        None => Map::new(),
        Some(Value::Object(m)) => m.clone(),
        Some(_) => return Err("`expect` must be an object".into()),
    };
    Ok(Item { line, cmd, args, expect })
}

fn lookup<'a>(report: &'a Value, path: &str) -> Option<&'a Value> {
    path.split('.').try_fold(report, |v, k| match v {
        Value::Array(a) => k.parse::<usize>().ok().and_then(|i| a.get(i)),
        Value::Object(m) => m.get(k),
        _ => None,
    })
}

/// Equal as JSON, or equal after rendering a scalar as text (so `6` matches `"6"`).
fn matches(expected: &Value, actual: &Value) -> bool {
    if expected == actual {
        return true;
    }
    let text = |v: &Value| match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(_) | Value::Bool(_) => Some(v.to_string()),
        _ => None,
    };
    matches!((text(expected), text(actual)), (Some(a), Some(b)) if a == b)
}

fn run_item(item: &Item) -> Value {
    let mut argv = vec!["lipmod".to_string(), item.cmd.clone()];
    argv.extend(item.args.iter().cloned());
    let out = crate::run(argv);
    let mut failures = Vec::new();
    for (key, want) in &item.expect {
        let got = match key.as_str() {
            "exit" => Some(json!(out.exit)),
            _ => lookup(&out.report, key).cloned(),
        };
        match got {
            Some(g) if matches(want, &g) => {}
            Some(g) => failures.push(format!("{key}: expected {want}, got {g}")),
            None => failures.push(format!("{key}: expected {want}, missing")),
        }
    }
    json!({
        "line": item.line,
        "cmd": item.cmd,
        "args": item.args,
        "exit": out.exit,
        "passed": failures.is_empty(),
        "failures": failures,
    })
}

/// Runs every item (concurrently) and reports them in manifest order.
pub fn run_manifest(path: &Path) -> Result<Payload, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let parsed: Vec<(usize, Result<Item, String>)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| (i + 1, parse_item(i + 1, l)))
        .collect();
    let items: Vec<Value> = parsed
        .par_iter()
        .map(|(line, it)| match it {
            Ok(item) => run_item(item),
            Err(e) => json!({ "line": line, "passed": false, "failures": [e] }),
        })
        .collect();
    let failed = items.iter().filter(|v| v["passed"] != json!(true)).count();
    let result = json!({
        "total": items.len(),
        "passed": items.len() - failed,
        "failed": failed,
        "items": items,
    });
    Ok(Payload::new(json!({ "manifest": path.display().to_string() }), result).holds(failed == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_and_matching() {
        let r = json!({"result": {"rows": [{"m": "3/5"}], "mu": 6}});
        assert_eq!(lookup(&r, "result.rows.0.m"), Some(&json!("3/5")));
        assert_eq!(lookup(&r, "result.rows.x"), None);
        assert!(matches(&json!("6"), &json!(6)));
        assert!(matches(&json!(true), &json!(true)));
        assert!(!matches(&json!(7), &json!(6)));
        assert!(!matches(&json!(["a"]), &json!("a")));
    }

    #[test]
    fn bad_lines() {
        assert!(parse_item(1, "{").is_err());
        assert!(parse_item(1, r#"{"args": []}"#).is_err());
        assert!(parse_item(1, r#"{"cmd": "batch"}"#).is_err());
        assert!(parse_item(1, r#"{"cmd": "milnor", "expect": 3}"#).is_err());
        let it = parse_item(4, r#"{"cmd": "fil", "args": ["x", "--weight", "1,1"]}"#).unwrap();
        assert_eq!(it.line, 4);
        assert!(it.expect.is_empty());
    }
}
