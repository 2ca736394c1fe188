//! Fully resolved run configuration. This is what `manifest.json` records
//! and what `replay` consumes.

use std::path::PathBuf;

use mutrel_core::{GeneratorSpec, Measure};
use serde::{Deserialize, Serialize};

pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub run: RunConfig,
}

impl Manifest {
    pub fn new(seed: u64, run: RunConfig) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            run,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "snake_case")]
pub enum RunConfig {
    Score(ScoreConfig),
    Analyze(AnalyzeConfig),
    Synth(SynthConfig),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreConfig {
    pub corpus: PathBuf,
    pub query: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnalyzeInput {
    Scores {
        path: PathBuf,
        ranked_by: Measure,
        read_off: Measure,
        include_zero_scores: bool,
    },
    Series {
        path: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeConfig {
    pub input: AnalyzeInput,
    pub trim: f64,
    pub grid: usize,
    /// Resolved window grids; `None` only before resolution.
    pub dfa_windows: Option<Vec<usize>>,
    pub rs_windows: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    pub spec: GeneratorSpec,
}
