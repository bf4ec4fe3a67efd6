//! Command results, rendered as text or as JSON with the schema
//! `{command, inputs, verdict, witness?, checks?, reason?}`.

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub verdict: String,
    pub witness: Option<Map<String, Value>>,
    pub checks: Option<Vec<CheckRow>>,
    pub reason: Option<String>,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<String>, verdict: impl Into<String>) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            verdict: verdict.into(),
            ..Default::default()
        }
    }

    pub fn with_witness(mut self, witness: Map<String, Value>) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }

    pub fn with_checks(mut self, checks: Vec<CheckRow>) -> Self {
        self.checks = Some(checks);
        self
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("command".into(), json!(self.command));
        out.insert("inputs".into(), json!(self.inputs));
        out.insert("verdict".into(), json!(self.verdict));
        if let Some(w) = &self.witness {
            out.insert("witness".into(), Value::Object(w.clone()));
        }
        if let Some(checks) = &self.checks {
            let rows: Vec<Value> = checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            out.insert("checks".into(), Value::Array(rows));
        }
        if let Some(r) = &self.reason {
            out.insert("reason".into(), json!(r));
        }
        Value::Object(out)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}: {}\n", self.command, self.verdict);
        if let Some(r) = &self.reason {
            s += &format!("  reason: {r}\n");
        }
        if let Some(w) = &self.witness {
            for (k, v) in w {
                let v = match v {
                    Value::String(t) => t.clone(),
                    other => other.to_string(),
                };
                s += &format!("  {k} = {v}\n");
            }
        }
        for c in self.checks.iter().flatten() {
            let mark = if c.passed { "pass" } else { "FAIL" };
            s += &format!("  [{mark}] {}: {}\n", c.name, c.detail);
        }
        s
    }
}
