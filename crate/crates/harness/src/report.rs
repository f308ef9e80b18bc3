//! Report assembly and serialization: JSON Lines with a trailing summary
//! record, or CSV for tables.

use std::collections::BTreeSet;
use std::io::Write;

use anyhow::Result;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::config::Format;
use moddom_core::ProductVertex;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub kind: &'static str,
    pub mode: &'static str,
    pub records: usize,
    pub checks: u64,
    pub failures: u64,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub records: Vec<Value>,
    pub summary: Summary,
}

impl Report {
    pub fn new(mode: &'static str) -> Self {
        Report {
            records: Vec::new(),
            summary: Summary {
                kind: "summary",
                mode,
                records: 0,
                checks: 0,
                failures: 0,
                extra: Map::new(),
            },
        }
    }

    pub fn push<T: Serialize>(&mut self, record: &T) {
        self.records
            .push(serde_json::to_value(record).expect("records serialize"));
        self.summary.records = self.records.len();
    }

    pub fn set_extra(&mut self, key: &str, value: impl Serialize) {
        self.summary.extra.insert(
            key.to_string(),
            serde_json::to_value(value).expect("summary fields serialize"),
        );
    }

    pub fn failed(&self) -> bool {
        self.summary.failures > 0
    }

    pub fn write_to(&self, out: &mut dyn Write, format: Format) -> Result<()> {
        match format {
            Format::Jsonl => {
                for r in &self.records {
                    serde_json::to_writer(&mut *out, r)?;
                    out.write_all(b"\n")?;
                }
                serde_json::to_writer(&mut *out, &self.summary)?;
                out.write_all(b"\n")?;
            }
            Format::Csv => {
                let columns: BTreeSet<&str> = self
                    .records
                    .iter()
                    .filter_map(Value::as_object)
                    .flat_map(|o| o.keys().map(String::as_str))
                    .collect();
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&columns)?;
                for r in &self.records {
                    w.write_record(columns.iter().map(|c| cell(r.get(*c))))?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }

    pub fn render(&self, format: Format) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf, format).expect("writing to memory");
        String::from_utf8(buf).expect("reports are UTF-8")
    }
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
    }
}

/// `(g, h)` pairs as two-element arrays.
pub fn pairs(set: &[ProductVertex]) -> Vec<[usize; 2]> {
    set.iter().map(|v| [v.g, v.h]).collect()
}
