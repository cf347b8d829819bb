//! Knot tables and batch classification.

use bqarrow_core::{
    compute_invariant, parse_gauss_code, ArrowWeight, Biquandle, GaussDiagram, GaussError, InvariantError,
    InvariantValue,
};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::fmt::Write;
use std::path::{Path, PathBuf};

/// A named knot diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    /// Table name such as `3_1` or `4.72`.
    pub name: String,
    /// The Gauss code as written in the table.
    pub code: String,
    /// Parsed diagram.
    pub diagram: GaussDiagram,
}

/// Errors while reading a knot table.
#[derive(Debug, thiserror::Error)]
pub enum TableError {
    /// The file could not be read.
    #[error("cannot read {path}: {source}")]
    Io {
        /// File path.
        path: PathBuf,
        /// Underlying error.
        source: std::io::Error,
    },
    /// A line is not `name<TAB>code`.
    #[error("line {line}: expected name<TAB>gauss code")]
    Format {
        /// 1-based line number.
        line: usize,
    },
    /// The Gauss code does not parse.
    #[error("line {line}: {source}")]
    Parse {
        /// 1-based line number.
        line: usize,
        /// Parser error.
        source: GaussError,
    },
    /// A name occurs twice.
    #[error("line {line}: duplicate knot name {name}")]
    DuplicateName {
        /// 1-based line number of the second occurrence.
        line: usize,
        /// The repeated name.
        name: String,
    },
}

/// Parses table text. Blank lines and lines starting with `#` are skipped.
pub fn parse_table(text: &str) -> Result<Vec<KnotRecord>, TableError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let (name, code) = raw.split_once('\t').ok_or(TableError::Format { line })?;
        let (name, code) = (name.trim(), code.trim());
        if name.is_empty() {
            return Err(TableError::Format { line });
        }
        let diagram = parse_gauss_code(code).map_err(|source| TableError::Parse { line, source })?;
        if !seen.insert(name.to_owned()) {
            return Err(TableError::DuplicateName { line, name: name.to_owned() });
        }
        out.push(KnotRecord { name: name.to_owned(), code: code.to_owned(), diagram });
    }
    Ok(out)
}

/// Reads a table file.
pub fn load_table(path: &Path) -> Result<Vec<KnotRecord>, TableError> {
    let text = std::fs::read_to_string(path).map_err(|source| TableError::Io { path: path.into(), source })?;
    parse_table(&text)
}

/// Failure to evaluate one knot.
#[derive(Debug, thiserror::Error)]
#[error("{name}: {source}")]
pub struct ClassifyError {
    /// The knot that failed.
    pub name: String,
    /// Cause.
    pub source: InvariantError,
}

/// Invariant values of a table and the knots grouped by value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    /// Value of each knot, in table order.
    pub values: Vec<(String, InvariantValue)>,
    /// Knot names by polynomial, names in table order.
    pub groups: BTreeMap<String, Vec<String>>,
}

#[derive(Serialize)]
struct GroupsJson<'a> {
    groups: &'a BTreeMap<String, Vec<String>>,
}

impl ClassificationReport {
    fn assemble(values: Vec<(String, InvariantValue)>) -> Self {
        let mut groups: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for (name, v) in &values {
            groups.entry(v.polynomial()).or_default().push(name.clone());
        }
        ClassificationReport { values, groups }
    }

    /// The group containing `name`, if any.
    pub fn group_of(&self, name: &str) -> Option<&str> {
        self.groups.iter().find(|(_, names)| names.iter().any(|n| n == name)).map(|(k, _)| k.as_str())
    }

    /// The value of `name`, if present.
    pub fn value_of(&self, name: &str) -> Option<&InvariantValue> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    /// Two columns, value then comma-separated knots.
    pub fn to_text(&self) -> String {
        let width = self.groups.keys().map(|k| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, names) in &self.groups {
            let pad = width - k.chars().count();
            let _ = writeln!(out, "{k}{} | {}", " ".repeat(pad), names.join(", "));
        }
        out
    }

    /// `{"groups": {"2u^2": ["2.1", ...]}}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GroupsJson { groups: &self.groups }).expect("string keys")
    }
}

fn evaluate(r: &KnotRecord, b: &Biquandle, w: &ArrowWeight) -> Result<(String, InvariantValue), ClassifyError> {
    compute_invariant(&r.diagram, b, w)
        .map(|v| (r.name.clone(), v))
        .map_err(|source| ClassifyError { name: r.name.clone(), source })
}

/// Evaluates every record in parallel and groups the results.
pub fn classify(records: &[KnotRecord], b: &Biquandle, w: &ArrowWeight) -> Result<ClassificationReport, ClassifyError> {
    let values = records.par_iter().map(|r| evaluate(r, b, w)).collect::<Result<Vec<_>, _>>()?;
    Ok(ClassificationReport::assemble(values))
}

/// Same as [`classify`] on the calling thread only.
pub fn classify_serial(
    records: &[KnotRecord],
    b: &Biquandle,
    w: &ArrowWeight,
) -> Result<ClassificationReport, ClassifyError> {
    let values = records.iter().map(|r| evaluate(r, b, w)).collect::<Result<Vec<_>, _>>()?;
    Ok(ClassificationReport::assemble(values))
}
