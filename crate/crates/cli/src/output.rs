use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One checked claim: passes iff `computed == expected` as strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub claim: String,
    pub description: String,
    pub computed: String,
    pub expected: String,
}

impl Certificate {
    pub fn new(claim: &str, description: &str, computed: impl ToString, expected: impl ToString) -> Self {
        Certificate {
            claim: claim.into(),
            description: description.into(),
            computed: computed.to_string(),
            expected: expected.to_string(),
        }
    }

    /// A certificate for a computation that raised an error.
    pub fn error(claim: &str, description: &str, err: impl ToString, expected: impl ToString) -> Self {
        Self::new(claim, description, format!("error: {}", err.to_string()), expected)
    }

    pub fn passed(&self) -> bool {
        self.computed == self.expected
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "claim": self.claim,
            "description": self.description,
            "computed": self.computed,
            "expected": self.expected,
            "status": self.status(),
        })
    }
}

/// Everything a subcommand emits.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub records: Vec<Value>,
    pub certificates: Vec<Certificate>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.certificates.iter().all(Certificate::passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let v = json!({
                    "records": self.records,
                    "certificates": self.certificates.iter().map(Certificate::to_json).collect::<Vec<_>>(),
                    "status": if self.passed() { "pass" } else { "fail" },
                });
                let mut s = serde_json::to_string_pretty(&v).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        if !self.records.is_empty() {
            out.push_str(&csv_table(&self.records));
        }
        if !self.certificates.is_empty() {
            if !out.is_empty() {
                out.push('\n');
            }
            let rows: Vec<Value> = self.certificates.iter().map(Certificate::to_json).collect();
            out.push_str(&csv_table(&rows));
        }
        out
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            match r {
                Value::Object(m) => {
                    let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect();
                    let _ = writeln!(out, "{}", parts.join("  "));
                }
                v => {
                    let _ = writeln!(out, "{}", scalar(v));
                }
            }
        }
        let width = self.certificates.iter().map(|c| c.claim.len()).max().unwrap_or(0);
        for c in &self.certificates {
            let _ = write!(out, "{:4}  {:width$}  {}: {}", c.status().to_uppercase(), c.claim, c.description, c.computed);
            if !c.passed() {
                let _ = write!(out, " (expected {})", c.expected);
            }
            out.push('\n');
        }
        out
    }
}

/// Strings bare, everything else as compact JSON.
fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        v => v.to_string(),
    }
}

fn csv_table(rows: &[Value]) -> String {
    let mut keys: Vec<String> = Vec::new();
    for r in rows {
        if let Value::Object(m) = r {
            for k in m.keys() {
                if !keys.contains(k) {
                    keys.push(k.clone());
                }
            }
        }
    }
    let mut w = csv::Writer::from_writer(vec![]);
    if keys.is_empty() {
        w.write_record(["value"]).expect("in-memory write");
        for r in rows {
            w.write_record([scalar(r)]).expect("in-memory write");
        }
    } else {
        w.write_record(&keys).expect("in-memory write");
        let empty = Map::new();
        for r in rows {
            let m = r.as_object().unwrap_or(&empty);
            w.write_record(keys.iter().map(|k| m.get(k).map(scalar).unwrap_or_default())).expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_is_string_equality() {
        assert!(Certificate::new("x", "", "3/2", "3/2").passed());
        assert!(!Certificate::new("x", "", "3/2", "1.5").passed());
    }

    #[test]
    fn csv_quotes_nested_values() {
        let r = Report { records: vec![json!({"a": 1, "e": [1, 2]})], certificates: vec![] };
        assert_eq!(r.render(Format::Csv), "a,e\n1,\"[1,2]\"\n");
    }

    #[test]
    fn json_round_trips() {
        let r = Report {
            records: vec![json!({"a": "1/2"})],
            certificates: vec![Certificate::new("c", "d", "1", "2")],
        };
        let v: Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(v["status"], "fail");
        assert_eq!(v["records"][0]["a"], "1/2");
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", r.render(Format::Json));
    }
}
