//! Plain pass/fail records consumed by the command-line front end.

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    /// Statement being checked.
    #[serde(rename = "paper_ref")]
    pub reference: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub p: u64,
    pub e: u64,
    pub q: u64,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(p: u64, e: u64, q: u64) -> Self {
        Self {
            p,
            e,
            q,
            checks: Vec::new(),
        }
    }

    /// Passes iff `expected == computed`.
    pub fn check_eq<T: Serialize + PartialEq>(&mut self, id: &str, reference: &str, expected: T, computed: T) {
        let pass = expected == computed;
        self.push(id, reference, json!(expected), json!(computed), pass);
    }

    /// Boolean property expected to hold.
    pub fn check_true(&mut self, id: &str, reference: &str, computed: bool) {
        self.push(id, reference, json!(true), json!(computed), computed);
    }

    /// Arbitrary expected/computed description with an explicit verdict.
    pub fn check_with(&mut self, id: &str, reference: &str, expected: Value, computed: Value, pass: bool) {
        self.push(id, reference, expected, computed, pass);
    }

    /// Records an error raised while computing a check as a failure.
    pub fn check_error(&mut self, id: &str, reference: &str, err: &crate::Error) {
        self.push(id, reference, Value::Null, json!(format!("error: {err}")), false);
    }

    fn push(&mut self, id: &str, reference: &str, expected: Value, computed: Value, pass: bool) {
        self.checks.push(CheckRecord {
            id: id.to_string(),
            reference: reference.to_string(),
            expected,
            computed,
            pass,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// JSON value with object keys in sorted order.
    pub fn to_value(&self) -> Value {
        sort_keys(serde_json::to_value(self).expect("report is serializable"))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("report is serializable")
    }

    /// One line per check.
    pub fn to_text(&self) -> String {
        let mut out = format!("p = {}, e = {}, q = {}\n", self.p, self.e, self.q);
        for c in &self.checks {
            out.push_str(&format!(
                "[{}] {}: expected {}, computed {} ({})\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.expected,
                c.computed,
                c.reference
            ));
        }
        out
    }
}

/// Rebuilds every object with its keys in sorted order, whatever map
/// representation `serde_json` was compiled with.
pub fn sort_keys(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, sort_keys(v))).collect())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(sort_keys).collect()),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted() {
        let mut r = Report::new(3, 2, 2);
        r.check_eq("a", "x", 1, 1);
        let s = serde_json::to_string(&r.to_value()).unwrap();
        assert_eq!(
            s,
            r#"{"checks":[{"computed":1,"expected":1,"id":"a","paper_ref":"x","pass":true}],"e":2,"p":3,"q":2}"#
        );
    }
}
