use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

use super::checks::{CheckRecord, Status};
use super::config::Format;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checked: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(records: &[CheckRecord]) -> Summary {
        let count = |s| records.iter().filter(|r| r.status == s).count();
        Summary {
            checked: records.len(),
            matched: count(Status::Match),
            mismatched: count(Status::Mismatch),
            skipped: count(Status::SkippedEmpty),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(records: Vec<CheckRecord>) -> Report {
        let summary = Summary::of(&records);
        Report { records, summary }
    }

    pub fn has_mismatch(&self) -> bool {
        self.summary.mismatched > 0
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Table => Ok(self.table()),
            Format::Json => {
                serde_json::to_string_pretty(self).map(|s| s + "\n").map_err(|e| Error::Config(e.to_string()))
            }
            Format::Csv => self.csv(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let check_w = self.records.iter().map(|r| r.check.id().len()).max().unwrap_or(5).max(5);
        let params: Vec<String> = self.records.iter().map(|r| r.params.to_string()).collect();
        let params_w = params.iter().map(String::len).max().unwrap_or(6).max(6);
        let _ =
            writeln!(out, "{:<13}  {:<check_w$}  {:<params_w$}  {:>6}  enumerated", "status", "check", "params", "ms");
        for (rec, p) in self.records.iter().zip(&params) {
            let _ = writeln!(
                out,
                "{:<13}  {:<check_w$}  {:<params_w$}  {:>6}  {}",
                rec.status.to_string(),
                rec.check.id(),
                p,
                rec.millis,
                rec.enumerated
            );
            if rec.status != Status::Match {
                let _ = writeln!(out, "{:>13}  closed form: {}", "", rec.closed_form);
            }
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "checked {}, matched {}, mismatched {}, skipped {}",
            s.checked, s.matched, s.mismatched, s.skipped
        );
        out
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Config(e.to_string());
        w.write_record([
            "check",
            "r",
            "n",
            "m",
            "k",
            "shape",
            "order",
            "enumerated",
            "closed_form",
            "status",
            "millis",
        ])
        .map_err(io)?;
        let opt = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
        for rec in &self.records {
            let p = &rec.params;
            w.write_record([
                rec.check.id().to_string(),
                opt(p.r),
                opt(p.n),
                opt(p.m),
                opt(p.k),
                p.shape.clone().unwrap_or_default(),
                p.order.clone().unwrap_or_default(),
                rec.enumerated.clone(),
                rec.closed_form.clone(),
                rec.status.to_string(),
                rec.millis.to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Config(e.to_string()))
    }
}
