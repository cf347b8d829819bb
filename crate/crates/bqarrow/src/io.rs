//! JSON formats for biquandles, weights and invariant values.
//!
//! Biquandle: `{"n": 2, "under": [[2,2],[1,1]], "over": [[2,2],[1,1]]}`, with
//! elements `1..=n` and the left operand as row.
//!
//! Weight: `{"m": 8, "tensor": [...]}`, nested `[i][j][k][l]`.
//!
//! Invariant: `{"m": 8, "counts": {"4": 2}}`.

use bqarrow_core::{AlgebraError, ArrowWeight, Biquandle, InvariantValue, WeightError};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// Errors from reading input files.
#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    /// The file could not be read.
    #[error("cannot read {path}: {source}")]
    Io {
        /// File path.
        path: PathBuf,
        /// Underlying error.
        source: std::io::Error,
    },
    /// The file is not valid JSON of the expected shape.
    #[error("{path}: {source}")]
    Json {
        /// File path.
        path: PathBuf,
        /// Underlying error.
        source: serde_json::Error,
    },
    /// The tables do not form a biquandle.
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    /// The tensor is malformed.
    #[error(transparent)]
    Weight(#[from] WeightError),
}

impl LoadError {
    /// True when the input is well formed but breaks an axiom.
    pub fn is_violation(&self) -> bool {
        matches!(self, LoadError::Algebra(AlgebraError::AxiomViolation { .. }))
    }
}

/// Biquandle file contents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BiquandleJson {
    /// Element count.
    pub n: usize,
    /// `under[x-1][y-1] = x ⊳̲ y`.
    pub under: Vec<Vec<i64>>,
    /// `over[x-1][y-1] = x ⊳̄ y`.
    pub over: Vec<Vec<i64>>,
}

impl BiquandleJson {
    /// Validates the tables.
    pub fn build(&self) -> Result<Biquandle, AlgebraError> {
        if self.under.len() != self.n || self.over.len() != self.n {
            return Err(AlgebraError::Shape);
        }
        Biquandle::from_one_indexed(&self.under, &self.over)
    }

    /// The file form of `b`.
    pub fn from_biquandle(b: &Biquandle) -> Self {
        let one = |t: Vec<Vec<usize>>| t.into_iter().map(|r| r.into_iter().map(|v| v as i64 + 1).collect()).collect();
        BiquandleJson { n: b.size(), under: one(b.under_rows()), over: one(b.over_rows()) }
    }
}

/// Weight file contents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightJson {
    /// Modulus.
    pub m: u64,
    /// Nested `[i][j][k][l]` entries in `0..m`.
    pub tensor: Vec<Vec<Vec<Vec<i64>>>>,
}

impl WeightJson {
    /// Checks shape and entry range.
    pub fn build(&self) -> Result<ArrowWeight, WeightError> {
        ArrowWeight::from_nested(self.m, &self.tensor)
    }

    /// The file form of `w`.
    pub fn from_weight(w: &ArrowWeight) -> Self {
        let tensor = w
            .to_nested()
            .into_iter()
            .map(|a| {
                a.into_iter()
                    .map(|b| b.into_iter().map(|c| c.into_iter().map(|v| v as i64).collect()).collect())
                    .collect()
            })
            .collect();
        WeightJson { m: w.modulus(), tensor }
    }
}

/// Invariant value as JSON; residues are keys in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantJson {
    /// Modulus.
    pub m: u64,
    /// Multiplicity of each residue.
    pub counts: BTreeMap<u64, u64>,
}

impl From<&InvariantValue> for InvariantJson {
    fn from(v: &InvariantValue) -> Self {
        InvariantJson { m: v.m, counts: v.counts.clone() }
    }
}

/// Reads and deserializes a JSON file.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| LoadError::Json { path: path.into(), source })
}

/// Reads and validates a biquandle file.
pub fn load_biquandle(path: &Path) -> Result<Biquandle, LoadError> {
    Ok(read_json::<BiquandleJson>(path)?.build()?)
}

/// Reads a weight file. Axioms are not checked here.
pub fn load_weight(path: &Path) -> Result<ArrowWeight, LoadError> {
    Ok(read_json::<WeightJson>(path)?.build()?)
}
