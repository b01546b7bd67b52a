//! Machine-readable verification reports.
//!
//! A report is a named list of pass/fail checks plus a sorted key/value
//! data section.  JSON output is byte-deterministic for a fixed input
//! and tool version: keys are sorted, no timestamps or timings are
//! included.

use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

pub fn tool_version() -> String {
    format!("arclab {}", env!("CARGO_PKG_VERSION"))
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<CheckResult>,
    pub data: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
            data: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    /// Record a check that passes exactly when `actual == expected`.
    pub fn expect<T: PartialEq + std::fmt::Display>(
        &mut self,
        name: impl Into<String>,
        actual: T,
        expected: T,
    ) {
        let pass = actual == expected;
        let detail = if pass {
            format!("{actual}")
        } else {
            format!("expected {expected}, got {actual}")
        };
        self.push(name, pass, detail);
    }

    pub fn insert(&mut self, key: impl Into<String>, value: impl Serialize) {
        self.data.insert(
            key.into(),
            serde_json::to_value(value).expect("report values serialize"),
        );
    }

    /// Conjunction of all checks.
    pub fn verdict(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "tool": tool_version(),
            "subject": self.subject,
            "verdict": self.verdict(),
            "checks": self.checks,
            "data": self.data,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value())
            .expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check, then the verdict.
    pub fn render_text(&self) -> String {
        let mut out = format!("== {} ==\n", self.subject);
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark}  {}: {}\n", c.name, c.detail));
        }
        out.push_str(&format!(
            "verdict: {}\n",
            if self.verdict() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_is_conjunction() {
        let mut r = Report::new("t");
        r.push("a", true, "");
        assert!(r.verdict());
        r.expect("b", 3, 4);
        assert!(!r.verdict());
        assert!(r.render_text().contains("FAIL  b: expected 4, got 3"));
    }

    #[test]
    fn json_is_deterministic_and_versioned() {
        let mut r = Report::new("t");
        r.push("a", true, "ok");
        r.insert("zeta", 1);
        r.insert("alpha", 2);
        let s1 = r.to_json();
        let s2 = r.to_json();
        assert_eq!(s1, s2);
        assert!(s1.contains("\"schema\": 1"));
        let v: serde_json::Value = serde_json::from_str(&s1).unwrap();
        assert_eq!(v["data"]["alpha"], 2);
    }
}
