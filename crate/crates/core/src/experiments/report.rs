use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub input: String,
    pub measured: String,
    pub expected: String,
    pub pass: bool,
}

/// Outcome of one suite. `pass` holds iff every row passes; `seconds` is
/// the only field that varies between runs with the same seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub params: BTreeMap<String, Value>,
    pub rows: Vec<Row>,
    pub pass: bool,
    pub seconds: f64,
}

impl Report {
    pub fn new(suite: &str, seed: u64) -> Self {
        Report {
            suite: suite.to_string(),
            seed,
            params: BTreeMap::new(),
            rows: Vec::new(),
            pass: true,
            seconds: 0.0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn row(
        &mut self,
        input: impl ToString,
        measured: impl ToString,
        expected: impl ToString,
        pass: bool,
    ) {
        self.rows.push(Row {
            input: input.to_string(),
            measured: measured.to_string(),
            expected: expected.to_string(),
            pass,
        });
        self.pass &= pass;
    }

    /// Appends every row of `other`, prefixing inputs with its suite name.
    pub fn absorb(&mut self, other: Report) {
        for r in other.rows {
            self.row(
                format!("{}: {}", other.suite, r.input),
                r.measured,
                r.expected,
                r.pass,
            );
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn to_table(&self) -> String {
        let headers = ["input", "measured", "expected", "pass"];
        let cells: Vec<[String; 4]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.input.clone(),
                    r.measured.clone(),
                    r.expected.clone(),
                    if r.pass { "ok" } else { "FAIL" }.to_string(),
                ]
            })
            .collect();
        let mut width = headers.map(|h| h.chars().count());
        for row in &cells {
            for (w, c) in width.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |out: &mut String, cols: [&str; 4]| {
            let parts: Vec<String> = cols
                .iter()
                .zip(width)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            writeln!(out, "{}", parts.join("  ").trim_end()).unwrap();
        };
        let mut out = String::new();
        let params = serde_json::to_string(&self.params).unwrap();
        writeln!(
            out,
            "suite {} (seed {}) params {}",
            self.suite, self.seed, params
        )
        .unwrap();
        line(&mut out, headers);
        for row in &cells {
            line(&mut out, [&row[0], &row[1], &row[2], &row[3]]);
        }
        writeln!(
            out,
            "{}: {} rows, {} failed, {:.2}s",
            if self.pass { "PASS" } else { "FAIL" },
            self.rows.len(),
            self.failures().count(),
            self.seconds
        )
        .unwrap();
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    /// The report without its timing, for comparisons across runs.
    pub fn to_json_untimed(&self) -> String {
        let mut r = self.clone();
        r.seconds = 0.0;
        serde_json::to_string(&r).expect("report is serializable")
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 input"))
    }
}

/// Rows of several reports in one CSV, with a leading `suite` column.
pub fn reports_to_csv(reports: &[Report]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["suite", "input", "measured", "expected", "pass"])
        .map_err(io)?;
    for r in reports {
        for row in &r.rows {
            let pass = row.pass.to_string();
            w.write_record([&r.suite, &row.input, &row.measured, &row.expected, &pass])
                .map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 input"))
}
