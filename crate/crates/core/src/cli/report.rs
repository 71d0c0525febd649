//! Case records and report serialization.

use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use super::config::Format;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseRecord {
    pub suite: String,
    pub case: String,
    pub params: Value,
    pub dims: Vec<usize>,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    pub millis: u64,
    /// Diagnostics that do not take part in the pass decision.
    pub detail: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub records: Vec<CaseRecord>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(&self.records).map_err(|e| Error::Io(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    /// Same columns as the JSON records; nested values are compact JSON strings.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["suite", "case", "params", "dims", "expected", "computed", "pass", "millis", "detail"])
            .map_err(io)?;
        for r in &self.records {
            w.write_record([
                r.suite.clone(),
                r.case.clone(),
                r.params.to_string(),
                serde_json::to_string(&r.dims).map_err(|e| Error::Io(e.to_string()))?,
                r.expected.to_string(),
                r.computed.to_string(),
                r.pass.to_string(),
                r.millis.to_string(),
                r.detail.to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn write_to(&self, format: Format, mut out: impl Write) -> Result<()> {
        out.write_all(self.render(format)?.as_bytes())?;
        Ok(())
    }
}
