use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Version of the machine report schema; bumped on breaking changes.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

pub const KERNEL_VERSION: &str = concat!("supertwist ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Not run because an upstream check failed or a payload is missing.
    Skipped,
    /// Diagnostic comparison that does not affect the exit status.
    Info,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
            Verdict::Info => "info",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub id: String,
    pub group: String,
    /// The identity in compact notation.
    pub label: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_us: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub kernel_version: String,
    pub input_digest: String,
    pub truncation_order: usize,
    pub checks: Vec<String>,
    pub records: Vec<Record>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub info: usize,
}

impl Report {
    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for r in &self.records {
            match r.verdict {
                Verdict::Pass => t.passed += 1,
                Verdict::Fail => t.failed += 1,
                Verdict::Skipped => t.skipped += 1,
                Verdict::Info => t.info += 1,
            }
        }
        t
    }

    /// True when every record is `pass` or `info`.
    pub fn success(&self) -> bool {
        let t = self.tally();
        t.failed == 0 && t.skipped == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.success() {
            0
        } else {
            1
        }
    }

    pub fn record(&self, id: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.id == id)
    }

    /// Drops wall-clock fields, which are the only nondeterministic part.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        for rec in &mut r.records {
            rec.wall_us = None;
        }
        r
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum Line {
    Header {
        schema: u32,
        kernel: String,
        input_sha256: String,
        order: usize,
        checks: Vec<String>,
    },
    Check(Record),
    Summary {
        #[serde(flatten)]
        tally: Tally,
        status: String,
    },
}

/// One JSON object per line: a header, one `check` line per record in
/// execution order, then a summary.
pub fn emit_machine(report: &Report, timing: bool) -> String {
    let report = if timing { report.clone() } else { report.without_timing() };
    let mut lines = vec![Line::Header {
        schema: REPORT_SCHEMA_VERSION,
        kernel: report.kernel_version.clone(),
        input_sha256: report.input_digest.clone(),
        order: report.truncation_order,
        checks: report.checks.clone(),
    }];
    lines.extend(report.records.iter().cloned().map(Line::Check));
    lines.push(Line::Summary {
        tally: report.tally(),
        status: if report.success() { "ok" } else { "fail" }.into(),
    });
    let mut out = String::new();
    for line in &lines {
        out.push_str(&serde_json::to_string(line).expect("report lines serialize"));
        out.push('\n');
    }
    out
}

/// Inverse of [`emit_machine`]; the summary line is checked against the records.
pub fn parse_machine(text: &str) -> Result<Report> {
    let mut header = None;
    let mut records = Vec::new();
    let mut summary = None;
    for (n, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let parsed: Line = serde_json::from_str(line)
            .map_err(|e| Error::parse(format!("report line {}", n + 1), e.to_string()))?;
        match parsed {
            Line::Header { schema, kernel, input_sha256, order, checks } => {
                if schema != REPORT_SCHEMA_VERSION {
                    return Err(Error::Schema(format!("report schema {schema} is not supported")));
                }
                if header.replace((kernel, input_sha256, order, checks)).is_some() {
                    return Err(Error::Schema("duplicate report header".into()));
                }
            }
            Line::Check(r) => records.push(r),
            Line::Summary { tally, .. } => summary = Some(tally),
        }
    }
    let (kernel_version, input_digest, truncation_order, checks) =
        header.ok_or_else(|| Error::Schema("report has no header".into()))?;
    let report = Report { kernel_version, input_digest, truncation_order, checks, records };
    match summary {
        Some(t) if t == report.tally() => Ok(report),
        Some(_) => Err(Error::Schema("summary does not match the records".into())),
        None => Err(Error::Schema("report has no summary".into())),
    }
}

/// Aligned table, one row per record, counterexamples on continuation lines.
pub fn emit_human(report: &Report, timing: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}  order {}  input sha256 {}",
        report.kernel_version, report.truncation_order, report.input_digest
    );
    let id_w = report.records.iter().map(|r| r.id.chars().count()).max().unwrap_or(2).max(2);
    let label_w = report.records.iter().map(|r| r.label.chars().count()).max().unwrap_or(8).max(8);
    let _ = write!(out, "{:<id_w$}  {:<7}  {:<label_w$}", "ID", "VERDICT", "IDENTITY");
    if timing {
        let _ = write!(out, "  {:>10}", "TIME (ms)");
    }
    out.push('\n');
    for r in &report.records {
        let _ = write!(out, "{:<id_w$}  {:<7}  {:<label_w$}", r.id, r.verdict.as_str(), r.label);
        if timing {
            match r.wall_us {
                Some(us) => {
                    let _ = write!(out, "  {:>10.3}", us as f64 / 1000.0);
                }
                None => {
                    let _ = write!(out, "  {:>10}", "-");
                }
            }
        }
        let line_end = out.trim_end_matches(' ').len();
        out.truncate(line_end);
        out.push('\n');
        if let Some(d) = &r.detail {
            let _ = writeln!(out, "{:id_w$}    {d}", "");
        }
        if let Some(c) = &r.counterexample {
            let _ = writeln!(out, "{:id_w$}    counterexample: {c}", "");
        }
    }
    let t = report.tally();
    let _ = writeln!(
        out,
        "{} passed, {} failed, {} skipped, {} info: {}",
        t.passed,
        t.failed,
        t.skipped,
        t.info,
        if report.success() { "OK" } else { "FAILED" }
    );
    out
}
