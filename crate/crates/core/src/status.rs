//! Three-valued verdicts and the certificates attached to them.

use std::fmt;

use serde::Serialize;

use crate::collapse::{CollapseStep, StepMode};
use crate::face::Face;
use crate::homology::BettiVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "Yes",
            Verdict::No => "No",
            Verdict::Unknown => "Unknown",
        })
    }
}

/// Which test produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    /// Exact decision for complexes of dimension at most one.
    TreeTest,
    /// Some vertex lies in every facet.
    ConeApex,
    CollapseCertificate,
    /// The collapse search ran to completion without reaching a point.
    ExhaustiveSearch,
    NonzeroBetti,
    Budget,
    /// Acyclic over the tested fields yet not shown collapsible.
    Inconclusive,
    AllLinksVerified,
}

/// Replayable evidence behind a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    None,
    Graph {
        vertices: usize,
        edges: usize,
        components: usize,
    },
    Apex {
        vertex: u32,
    },
    Collapse {
        mode: StepMode,
        steps: Vec<CollapseStep>,
    },
    Betti(BettiVector),
    Search {
        nodes_explored: u64,
        budget_exhausted: bool,
    },
    Links {
        checks: Vec<FaceCheck>,
    },
}

/// Verdict for one face of a code's complex, as collected in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceCheck {
    pub face: Face,
    pub value: Verdict,
    pub reason: Reason,
    pub evidence: Evidence,
}

/// A Yes / No / Unknown answer with its witness and certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriStatus {
    pub value: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Face>,
    pub reason: Reason,
    #[serde(rename = "certificate")]
    pub evidence: Evidence,
}

impl TriStatus {
    pub fn new(value: Verdict, reason: Reason, evidence: Evidence) -> Self {
        TriStatus {
            value,
            witness: None,
            reason,
            evidence,
        }
    }

    pub fn with_witness(mut self, witness: Face) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn is_yes(&self) -> bool {
        self.value == Verdict::Yes
    }

    pub fn is_no(&self) -> bool {
        self.value == Verdict::No
    }

    pub fn is_unknown(&self) -> bool {
        self.value == Verdict::Unknown
    }
}
