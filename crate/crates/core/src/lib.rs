//! Local obstructions to convexity for combinatorial neural codes.
//!
//! Faces are bitmasks over neurons `1..=64`. A [`Code`] is a set of faces and
//! its simplicial complex is the downward closure. The [`Analyzer`] decides
//! whether a code is locally good or locally great with certified
//! three-valued answers, backed by reduced homology over prime fields and a
//! memoized collapse search.

pub mod analysis;
pub mod cli;
pub mod code;
pub mod collapse;
pub mod complex;
pub mod error;
pub mod face;
pub mod format;
pub mod homology;
pub mod instances;
pub mod realization;
pub mod report;
pub mod status;

pub use analysis::{AnalysisConfig, AnalysisReport, Analyzer, FaceScope, Mandatory};
pub use code::Code;
pub use collapse::{CollapseOutcome, CollapseStep, Collapser, Engine, SearchOptions, StepMode};
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use face::Face;
pub use homology::BettiVector;
pub use status::{Evidence, FaceCheck, Reason, TriStatus, Verdict};
