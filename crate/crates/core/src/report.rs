//! JSON, CSV and markdown renderings of index vectors, records, audit
//! reports and the formula catalog.
//!
//! Exact values are always written as decimal or `p/q` strings; floats only
//! appear in the separate `ln_*` / `*_decimal` display fields.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas::FormulaMeta;
use crate::indices::{IndexKind, IndexVector};
use crate::verify::{AuditReport, VerificationRecord};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Markdown,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

fn md_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = String::new();
    writeln!(out, "| {} |", header.join(" | ")).unwrap();
    writeln!(out, "|{}", "---|".repeat(header.len())).unwrap();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| md_cell(c)).collect();
        writeln!(out, "| {} |", cells.join(" | ")).unwrap();
    }
    out
}

/// Display form of one graph's indices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexReport {
    pub graph: String,
    pub n: u64,
    pub m: u64,
    #[serde(rename = "M1")]
    pub m1: String,
    #[serde(rename = "M2")]
    pub m2: String,
    #[serde(rename = "F")]
    pub f: String,
    #[serde(rename = "PI1")]
    pub pi1: String,
    #[serde(rename = "PI2")]
    pub pi2: String,
    #[serde(rename = "HM")]
    pub hm: String,
    /// Always `p/q`.
    #[serde(rename = "SDD")]
    pub sdd: String,
    pub sdd_decimal: f64,
    /// `None` when the product is 0 (isolated vertex).
    pub ln_pi1: Option<f64>,
    pub ln_pi2: Option<f64>,
}

impl IndexReport {
    pub fn new(graph: &str, v: &IndexVector) -> IndexReport {
        IndexReport {
            graph: graph.to_string(),
            n: v.n,
            m: v.m,
            m1: v.m1.to_string(),
            m2: v.m2.to_string(),
            f: v.f.to_string(),
            pi1: v.pi1.to_string(),
            pi2: v.pi2.to_string(),
            hm: v.hm.to_string(),
            sdd: v.sdd.to_ratio_string(),
            sdd_decimal: v.sdd.to_f64(),
            ln_pi1: v.pi1.ln().ok(),
            ln_pi2: v.pi2.ln().ok(),
        }
    }

    fn row(&self) -> Vec<String> {
        let opt = |x: Option<f64>| x.map(|v| format!("{v:.10}")).unwrap_or_default();
        vec![
            self.graph.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.m1.clone(),
            self.m2.clone(),
            self.f.clone(),
            self.pi1.clone(),
            self.pi2.clone(),
            self.hm.clone(),
            self.sdd.clone(),
            format!("{:.10}", self.sdd_decimal),
            opt(self.ln_pi1),
            opt(self.ln_pi2),
        ]
    }
}

const INDEX_HEADER: [&str; 13] = [
    "graph",
    "n",
    "m",
    "M1",
    "M2",
    "F",
    "PI1",
    "PI2",
    "HM",
    "SDD",
    "SDD_decimal",
    "ln_PI1",
    "ln_PI2",
];

pub fn render_indices(report: &IndexReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => csv_string(&INDEX_HEADER, [report.row()]),
        OutputFormat::Markdown => {
            let rows = IndexKind::ALL.iter().map(|k| {
                let v = match k {
                    IndexKind::M1 => &report.m1,
                    IndexKind::M2 => &report.m2,
                    IndexKind::F => &report.f,
                    IndexKind::PI1 => &report.pi1,
                    IndexKind::PI2 => &report.pi2,
                    IndexKind::HM => &report.hm,
                    IndexKind::SDD => &report.sdd,
                };
                let note = match k {
                    IndexKind::PI1 => report.ln_pi1.map(|l| format!("ln = {l:.6}")),
                    IndexKind::PI2 => report.ln_pi2.map(|l| format!("ln = {l:.6}")),
                    IndexKind::SDD => Some(format!("= {:.6}", report.sdd_decimal)),
                    _ => None,
                };
                vec![k.to_string(), v.clone(), note.unwrap_or_default()]
            });
            format!(
                "{} (n = {}, m = {})\n\n{}",
                report.graph,
                report.n,
                report.m,
                md_table(&["index", "value", "note"], rows)
            )
        }
    }
}

const RECORD_HEADER: [&str; 10] = [
    "formula",
    "graph",
    "n",
    "m",
    "k",
    "predicted",
    "actual",
    "match",
    "residual",
    "in_domain",
];

fn record_row(r: &VerificationRecord) -> Vec<String> {
    vec![
        r.formula.to_string(),
        r.graph.clone(),
        r.n.to_string(),
        r.m.to_string(),
        r.k.to_string(),
        r.predicted.to_string(),
        r.actual.to_string(),
        r.matched.to_string(),
        r.residual.to_string(),
        r.in_domain.to_string(),
    ]
}

pub fn render_record(record: &VerificationRecord, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(record),
        OutputFormat::Csv => csv_string(&RECORD_HEADER, [record_row(record)]),
        OutputFormat::Markdown => md_table(&RECORD_HEADER, [record_row(record)]),
    }
}

fn summary_rows(report: &AuditReport) -> impl Iterator<Item = Vec<String>> + '_ {
    report.summary.iter().map(|s| {
        let cx = s
            .smallest_counterexample
            .as_ref()
            .map(|r| {
                format!(
                    "{} k={} (predicted {}, actual {})",
                    r.graph, r.k, r.predicted, r.actual
                )
            })
            .unwrap_or_else(|| "-".to_string());
        vec![
            s.formula.to_string(),
            s.passes.to_string(),
            s.fails.to_string(),
            cx,
        ]
    })
}

const SUMMARY_HEADER: [&str; 4] = ["formula", "passes", "fails", "smallest_counterexample"];

/// Per-formula summary as a markdown table, used for console output.
pub fn render_summary_table(report: &AuditReport) -> String {
    md_table(&SUMMARY_HEADER, summary_rows(report))
}

/// Full report. CSV carries the records only; JSON and markdown also
/// carry the suite, the summary and the skips.
pub fn render_report(report: &AuditReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => csv_string(&RECORD_HEADER, report.records.iter().map(record_row)),
        OutputFormat::Markdown => {
            let mut out = String::from("# Audit report\n\n");
            writeln!(out, "- families: {}", report.suite.families.join("; ")).unwrap();
            writeln!(out, "- kmax: {}", report.suite.kmax).unwrap();
            writeln!(out, "- seed: {}", report.suite.seed).unwrap();
            let ids: Vec<String> = report
                .suite
                .formulas
                .iter()
                .map(|f| f.to_string())
                .collect();
            writeln!(out, "- formulas: {}", ids.join(", ")).unwrap();
            writeln!(
                out,
                "- include_below_kmin: {}\n",
                report.suite.include_below_kmin
            )
            .unwrap();
            out.push_str("## Summary\n\n");
            out.push_str(&render_summary_table(report));
            out.push_str("\n## Records\n\n");
            out.push_str(&md_table(
                &RECORD_HEADER,
                report.records.iter().map(record_row),
            ));
            if !report.skipped.is_empty() {
                out.push_str("\n## Skipped\n\n");
                let rows = report.skipped.iter().map(|s| {
                    vec![
                        s.formula.map(|f| f.to_string()).unwrap_or_default(),
                        s.graph.clone(),
                        s.k.map(|k| k.to_string()).unwrap_or_default(),
                        s.reason.clone(),
                    ]
                });
                out.push_str(&md_table(&["formula", "graph", "k", "reason"], rows));
            }
            out
        }
    }
}

pub fn parse_report_json(text: &str) -> Result<AuditReport> {
    serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))
}

pub fn render_catalog(rows: &[FormulaMeta], format: OutputFormat) -> String {
    let header = ["id", "transform", "kind", "k_min", "inputs", "formula"];
    let as_row = |m: &FormulaMeta| {
        vec![
            m.id.to_string(),
            m.transform.to_string(),
            m.kind.to_string(),
            m.k_min.to_string(),
            serde_json::to_value(m.inputs)
                .unwrap()
                .as_str()
                .unwrap()
                .to_string(),
            m.formula.to_string(),
        ]
    };
    match format {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => csv_string(&header, rows.iter().map(as_row)),
        OutputFormat::Markdown => md_table(&header, rows.iter().map(as_row)),
    }
}
