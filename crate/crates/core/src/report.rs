//! JSON and text renderings of analysis results.

use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::AnalysisReport;
use crate::code::Code;
use crate::face::Face;
use crate::status::{Evidence, TriStatus};

pub const SCHEMA_VERSION: &str = "neucode-report/1";

/// The schema that [`ClassifyReport`] conforms to.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report-v1.schema.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputEcho {
    pub ambient_n: u32,
    pub contains_empty: bool,
    /// Nonempty codewords in graded order.
    pub codewords: Vec<Face>,
}

impl From<&Code> for InputEcho {
    fn from(code: &Code) -> Self {
        InputEcho {
            ambient_n: code.ambient_n(),
            contains_empty: code.contains_empty(),
            codewords: code.nonempty_words(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MandatorySummary {
    pub found: Vec<Face>,
    pub unknown: Vec<Face>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timings {
    pub total_ms: f64,
}

/// The `classify` report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassifyReport {
    pub schema_version: &'static str,
    pub input: InputEcho,
    pub sparsity: usize,
    pub max_intersection_complete: bool,
    pub locally_good: TriStatus,
    pub locally_great: TriStatus,
    pub mandatory: MandatorySummary,
    /// `null` in deterministic runs so that output is byte-stable.
    pub timings: Option<Timings>,
    pub implication_notes: Vec<String>,
}

impl ClassifyReport {
    pub fn new(report: &AnalysisReport, timings: Option<Timings>) -> Self {
        ClassifyReport {
            schema_version: SCHEMA_VERSION,
            input: InputEcho::from(&report.code),
            sparsity: report.sparsity,
            max_intersection_complete: report.max_intersection_complete,
            locally_good: report.locally_good.clone(),
            locally_great: report.locally_great.clone(),
            mandatory: MandatorySummary {
                found: report.mandatory.found.clone(),
                unknown: report.mandatory.unknown.clone(),
            },
            timings,
            implication_notes: report.implication_notes.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn face_list(faces: &[Face]) -> String {
    if faces.is_empty() {
        return "none".to_string();
    }
    faces.iter().map(Face::to_string).collect::<Vec<_>>().join(", ")
}

/// One-line summary of a piece of evidence.
pub fn describe_evidence(evidence: &Evidence) -> String {
    match evidence {
        Evidence::None => String::new(),
        Evidence::Graph {
            vertices,
            edges,
            components,
        } => format!("{vertices} vertices, {edges} edges, {components} component(s)"),
        Evidence::Apex { vertex } => format!("cone with apex {vertex}"),
        Evidence::Collapse { mode, steps } => {
            let mode = serde_json::to_value(mode).unwrap();
            let steps: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
            format!("{} {}-steps: {}", steps.len(), mode.as_str().unwrap_or(""), steps.join(" "))
        }
        Evidence::Betti(b) => format!(
            "reduced Betti numbers over F{}: {:?}",
            b.field_characteristic, b.reduced_betti
        ),
        Evidence::Search {
            nodes_explored,
            budget_exhausted,
        } => {
            if *budget_exhausted {
                format!("search stopped after {nodes_explored} nodes")
            } else if *nodes_explored == 0 {
                "no collapse exists (cached search)".to_string()
            } else {
                format!("search exhausted {nodes_explored} nodes")
            }
        }
        Evidence::Links { checks } => format!("{} link(s) checked", checks.len()),
    }
}

fn reason_tag(status: &TriStatus) -> String {
    serde_json::to_value(status.reason)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

/// `Yes (reason)` plus witness and evidence lines.
pub fn describe_status(label: &str, status: &TriStatus) -> String {
    let mut out = format!("{label}: {} ({})\n", status.value, reason_tag(status));
    if let Some(w) = status.witness {
        let _ = writeln!(out, "  witness face: {w}");
    }
    if let Evidence::Links { checks } = &status.evidence {
        for c in checks {
            let _ = writeln!(
                out,
                "  link of {}: {} [{}] {}",
                c.face,
                c.value,
                serde_json::to_value(c.reason).unwrap().as_str().unwrap_or(""),
                describe_evidence(&c.evidence)
            );
        }
    } else {
        let ev = describe_evidence(&status.evidence);
        if !ev.is_empty() {
            let _ = writeln!(out, "  {ev}");
        }
    }
    out
}

/// Human-readable `classify` output.
pub fn render_text(report: &ClassifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "code on {} neurons: {} nonempty codeword(s){}",
        report.input.ambient_n,
        report.input.codewords.len(),
        if report.input.contains_empty { " plus the empty word" } else { "" }
    );
    let _ = writeln!(out, "sparsity: {}", report.sparsity);
    let _ = writeln!(
        out,
        "max-intersection complete: {}",
        if report.max_intersection_complete { "yes" } else { "no" }
    );
    out.push_str(&describe_status("locally good", &report.locally_good));
    out.push_str(&describe_status("locally great", &report.locally_great));
    let _ = writeln!(out, "mandatory codewords: {}", face_list(&report.mandatory.found));
    if !report.mandatory.unknown.is_empty() {
        let _ = writeln!(out, "undecided candidates: {}", face_list(&report.mandatory.unknown));
    }
    if let Some(t) = &report.timings {
        let _ = writeln!(out, "time: {:.3} ms", t.total_ms);
    }
    for note in &report.implication_notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{AnalysisConfig, Analyzer};
    use crate::instances;

    #[test]
    fn json_shape() {
        let a = Analyzer::new(AnalysisConfig {
            deterministic: true,
            ..Default::default()
        })
        .unwrap();
        let r = ClassifyReport::new(&a.classify(&instances::not_locally_good_example()).unwrap(), None);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema_version"], SCHEMA_VERSION);
        assert_eq!(v["locally_good"]["value"], "no");
        assert_eq!(v["locally_good"]["witness"], serde_json::json!([3]));
        assert_eq!(v["mandatory"]["found"], serde_json::json!([[3], [1, 3], [2, 3]]));
        assert!(v["timings"].is_null());
        let text = render_text(&r);
        assert!(text.contains("locally good: No (tree-test)"));
        assert!(text.contains("witness face: 3"));
    }
}
