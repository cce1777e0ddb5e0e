//! JSON search specifications.
//!
//! ```json
//! {
//!   "order": 13,
//!   "degree": { "regular": 6 },
//!   "edges": [39, 39],
//!   "filters": ["basic"],
//!   "mode": { "sample": { "count": 10000, "seed": 1 } },
//!   "k": 3,
//!   "candidates": ["L~~~..."]
//! }
//! ```
//!
//! `degree` is `"any"`, `{"regular": d}` or `{"window": {"min": a, "max": b}}`;
//! `mode` is `{"sample": ...}` or `"exhaustive"`.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use gammac_core::compliance::FilterKind;
use gammac_core::search::{DegreeConstraint, SearchMode, SearchSpec};

use crate::format::{emit_graph6, parse_graph6, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeFile {
    Any,
    Regular(usize),
    Window { min: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeFile {
    Sample { count: u64, seed: u64 },
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterFile {
    Basic,
    Order14,
    Order15,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub order: usize,
    #[serde(default = "any_degree")]
    pub degree: DegreeFile,
    #[serde(default)]
    pub edges: Option<(usize, usize)>,
    #[serde(default)]
    pub filters: Vec<FilterFile>,
    pub mode: ModeFile,
    pub k: usize,
    #[serde(default)]
    pub long_running: bool,
    /// graph6 strings examined before the generated stream.
    #[serde(default)]
    pub candidates: Vec<String>,
}

fn any_degree() -> DegreeFile {
    DegreeFile::Any
}

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("spec file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("candidate {index}: {source}")]
    Candidate { index: usize, source: ParseError },
}

impl SpecFile {
    pub fn from_json(text: &str) -> Result<Self, SpecError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_spec(&self) -> Result<SearchSpec, SpecError> {
        let candidates = self
            .candidates
            .iter()
            .enumerate()
            .map(|(index, s)| parse_graph6(s).map_err(|source| SpecError::Candidate { index, source }))
            .collect::<Result<_, _>>()?;
        Ok(SearchSpec {
            order: self.order,
            degree: match self.degree {
                DegreeFile::Any => DegreeConstraint::Any,
                DegreeFile::Regular(d) => DegreeConstraint::Regular(d),
                DegreeFile::Window { min, max } => DegreeConstraint::Window { min, max },
            },
            edges: self.edges,
            filters: self
                .filters
                .iter()
                .map(|f| match f {
                    FilterFile::Basic => FilterKind::Basic,
                    FilterFile::Order14 => FilterKind::Order14,
                    FilterFile::Order15 => FilterKind::Order15,
                })
                .collect(),
            mode: match self.mode {
                ModeFile::Sample { count, seed } => SearchMode::Sample { count, seed },
                ModeFile::Exhaustive => SearchMode::Exhaustive,
            },
            k: self.k,
            long_running: self.long_running,
            candidates,
        })
    }

    pub fn from_spec(spec: &SearchSpec) -> Self {
        SpecFile {
            order: spec.order,
            degree: match spec.degree {
                DegreeConstraint::Any => DegreeFile::Any,
                DegreeConstraint::Regular(d) => DegreeFile::Regular(d),
                DegreeConstraint::Window { min, max } => DegreeFile::Window { min, max },
            },
            edges: spec.edges,
            filters: spec
                .filters
                .iter()
                .map(|f| match f {
                    FilterKind::Basic => FilterFile::Basic,
                    FilterKind::Order14 => FilterFile::Order14,
                    FilterKind::Order15 => FilterFile::Order15,
                })
                .collect(),
            mode: match spec.mode {
                SearchMode::Sample { count, seed } => ModeFile::Sample { count, seed },
                SearchMode::Exhaustive => ModeFile::Exhaustive,
            },
            k: spec.k,
            long_running: spec.long_running,
            candidates: spec.candidates.iter().map(emit_graph6).collect(),
        }
    }

    /// SHA-256 of the compact JSON re-serialisation, in lowercase hex.
    pub fn hash(&self) -> String {
        let text = serde_json::to_string(self).expect("specs serialise");
        Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn seed(&self) -> Option<u64> {
        match self.mode {
            ModeFile::Sample { seed, .. } => Some(seed),
            ModeFile::Exhaustive => None,
        }
    }
}
