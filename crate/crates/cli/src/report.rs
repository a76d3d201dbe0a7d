use std::fmt::Write as _;

use lipmod_core::Error;
use serde_json::{json, Map, Value};

pub const SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// A command that could not produce a result.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub exit: i32,
    pub kind: String,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Self { exit: EXIT_INPUT, kind: "input".into(), message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (exit, kind) = match &e {
            Error::Parse { .. } => (EXIT_INPUT, "parse"),
            Error::UnknownSymbol(_) => (EXIT_INPUT, "unknown-symbol"),
            Error::NonPolynomial { .. } => (EXIT_INPUT, "non-polynomial"),
            Error::ZeroDenominator => (EXIT_INPUT, "zero-denominator"),
            Error::SpaceMismatch => (EXIT_INPUT, "space-mismatch"),
            Error::ZeroPolynomial => (EXIT_INPUT, "zero-polynomial"),
            Error::UnsupportedDimension(_) => (EXIT_INPUT, "unsupported-dimension"),
            Error::NonGermInput(_) => (EXIT_INPUT, "non-germ"),
            Error::ConstraintViolated(_) => (EXIT_INPUT, "constraint-violated"),
            Error::TruncationTooSmall { .. } => (EXIT_INPUT, "truncation-too-small"),
            Error::BeyondTruncation { .. } => (EXIT_INPUT, "beyond-truncation"),
            Error::DomainViolation(_) => (EXIT_INPUT, "domain-violation"),
            Error::UnknownLabel(_) => (EXIT_INPUT, "unknown-label"),
            Error::InvalidArgument(_) => (EXIT_INPUT, "invalid-argument"),
            Error::NotQuasihomogeneous => (EXIT_INPUT, "not-quasihomogeneous"),
            Error::ResourceLimit(_) => (EXIT_RESOURCE, "resource-limit"),
            Error::Inconclusive(_) => (EXIT_NEGATIVE, "inconclusive"),
            Error::NotIsolated => (EXIT_NEGATIVE, "not-isolated"),
            Error::SchemeFails { .. } => (EXIT_NEGATIVE, "scheme-fails"),
            Error::DecompositionMismatch => (EXIT_NEGATIVE, "decomposition-mismatch"),
            Error::NotControlFunction(_) => (EXIT_NEGATIVE, "not-control-function"),
            Error::NonUnitConstantTerm => (EXIT_NEGATIVE, "non-unit-constant-term"),
            Error::NonSquareConstant => (EXIT_NEGATIVE, "non-square-constant"),
        };
        Self { exit, kind: kind.into(), message: e.to_string() }
    }
}

/// Successful command output before it is wrapped into a report.
#[derive(Debug, Clone)]
pub struct Payload {
    pub inputs: Value,
    pub result: Value,
    pub trace: Vec<Value>,
    /// `false` turns a completed computation into exit code 1.
    pub holds: bool,
}

impl Payload {
    pub fn new(inputs: Value, result: Value) -> Self {
        Self { inputs, result, trace: Vec::new(), holds: true }
    }

    pub fn holds(mut self, holds: bool) -> Self {
        self.holds = holds;
        self
    }

    pub fn trace(mut self, trace: Vec<Value>) -> Self {
        self.trace = trace;
        self
    }
}

/// Exit code plus the report printed for one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub exit: i32,
    pub report: Value,
    pub text: bool,
    /// Help or version text, printed verbatim instead of a report.
    pub raw: Option<String>,
}

fn status(exit: i32) -> &'static str {
    match exit {
        EXIT_OK => "ok",
        EXIT_NEGATIVE => "negative",
        EXIT_RESOURCE => "resource-limit",
        _ => "error",
    }
}

pub fn build(command: &str, argv: &[String], outcome: Result<Payload, Failure>) -> (i32, Value) {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert("command".into(), json!(command));
    m.insert("argv".into(), json!(argv));
    let exit = match outcome {
        Ok(p) => {
            let exit = if p.holds { EXIT_OK } else { EXIT_NEGATIVE };
            m.insert("inputs".into(), p.inputs);
            m.insert("result".into(), p.result);
            m.insert("trace".into(), Value::Array(p.trace));
            exit
        }
        Err(f) => {
            m.insert("error".into(), json!({ "kind": f.kind, "message": f.message }));
            m.insert("trace".into(), json!([]));
            f.exit
        }
    };
    m.insert("status".into(), json!(status(exit)));
    m.insert("exit".into(), json!(exit));
    (exit, Value::Object(m))
}

/// Deterministic rendering: JSON with sorted keys, or an indented text view of the same data.
pub fn render(outcome: &Outcome) -> String {
    if let Some(raw) = &outcome.raw {
        return raw.clone();
    }
    if !outcome.text {
        let mut s = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
        s.push('\n');
        return s;
    }
    let mut out = String::new();
    let r = &outcome.report;
    let _ = writeln!(out, "lipmod {}: {}", r["command"].as_str().unwrap_or("?"), r["status"].as_str().unwrap_or("?"));
    for key in ["error", "inputs", "result", "trace"] {
        match &r[key] {
            Value::Null => {}
            Value::Array(a) if a.is_empty() => {}
            v => {
                let _ = writeln!(out, "{key}:");
                text_value(v, 1, &mut out);
            }
        }
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(a) if a.iter().all(|x| x.as_array().is_some_and(|y| y.iter().all(|z| z.is_number()))) => {
            Some(a.iter().filter_map(scalar).collect::<Vec<_>>().join(" "))
        }
        _ => None,
    }
}

fn text_value(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        text_value(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        text_value(x, depth + 1, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_kinds_map_to_exit_codes() {
        assert_eq!(Failure::from(Error::ResourceLimit(5)).exit, EXIT_RESOURCE);
        assert_eq!(Failure::from(Error::NotIsolated).exit, EXIT_NEGATIVE);
        assert_eq!(Failure::from(Error::UnknownSymbol("q".into())).exit, EXIT_INPUT);
    }

    #[test]
    fn keys_are_sorted_and_text_mirrors_json() {
        let p = Payload::new(json!({"expr": "x^2"}), json!({"zeta": 1, "alpha": ["a", "b"]}));
        let (exit, report) = build("demo", &["demo".into()], Ok(p));
        assert_eq!(exit, 0);
        let o = Outcome { exit, report, text: false, raw: None };
        let s = render(&o);
        assert!(s.find("\"alpha\"").unwrap() < s.find("\"zeta\"").unwrap());
        assert!(s.find("\"argv\"").unwrap() < s.find("\"schema\"").unwrap());
        let t = render(&Outcome { text: true, ..o });
        assert!(t.contains("alpha: [a, b]"));
        assert!(t.starts_with("lipmod demo: ok"));
    }

    #[test]
    fn failures_carry_kind() {
        let (exit, report) = build("milnor", &[], Err(Failure::input("bad")));
        assert_eq!(exit, EXIT_INPUT);
        assert_eq!(report["error"]["kind"], "input");
        assert_eq!(report["status"], "error");
    }
}
