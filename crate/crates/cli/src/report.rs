//! Machine-readable verification reports.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: Value) -> Check {
        Check { name: name.into(), passed, detail }
    }
}

/// Outcome of one harness run before it is wrapped into a [`Report`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verification {
    pub inputs: Value,
    pub checks: Vec<Check>,
    /// Observations that are recorded but never fail the run.
    pub findings: Vec<Value>,
}

impl Verification {
    pub fn new(inputs: Value) -> Verification {
        Verification { inputs, checks: Vec::new(), findings: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        format!("{} checks, {} passed, {} failed", self.checks.len(), self.checks.len() - failed, failed)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub command: Vec<String>,
    pub inputs_digest: String,
    pub field: String,
    pub passed: bool,
    pub summary: String,
    pub inputs: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

/// SHA-256 of the canonical JSON encoding (object keys sorted).
pub fn digest(value: &Value) -> String {
    let text = serde_json::to_string(value).expect("JSON values serialize");
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl Report {
    pub fn new(command: Vec<String>, field: String, v: Verification) -> Report {
        Report {
            command,
            inputs_digest: digest(&v.inputs),
            field,
            passed: v.passed(),
            summary: v.summary(),
            inputs: v.inputs,
            checks: v.checks,
            findings: v.findings,
            timing_ms: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn digest_ignores_key_order() {
        let a: Value = serde_json::from_str(r#"{"b":1,"a":[1,2]}"#).unwrap();
        let b = json!({"a": [1, 2], "b": 1});
        assert_eq!(digest(&a), digest(&b));
        assert_ne!(digest(&a), digest(&json!({"a": [2, 1], "b": 1})));
    }

    #[test]
    fn pass_fail() {
        let mut v = Verification::new(json!({}));
        v.checks.push(Check::new("x", true, Value::Null));
        assert!(v.passed());
        v.checks.push(Check::new("y", false, Value::Null));
        assert!(!v.passed());
        assert_eq!(v.summary(), "2 checks, 1 passed, 1 failed");
        let r = Report::new(vec!["verify".into()], "Q".into(), v);
        assert!(!r.passed);
        assert!(serde_json::to_string(&r).unwrap().contains("inputsDigest"));
    }
}
