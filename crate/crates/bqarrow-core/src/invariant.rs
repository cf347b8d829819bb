//! Weight sums over colorings and the resulting multiset / polynomial.

use crate::algebra::Biquandle;
use crate::coloring::{enumerate_colorings, extract_pairs, Coloring, ColoringError};
use crate::gauss::GaussDiagram;
use crate::weight::{ArrowWeight, WeightError};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

/// Errors from weight-sum evaluation.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    /// The coloring is not valid for the diagram.
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    /// Tensor size does not match the biquandle.
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// One crossing of two arrows and its signed weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingTerm {
    /// Lower arrow index.
    pub first: usize,
    /// Higher arrow index.
    pub second: usize,
    /// ε·ε′·φ as an integer, before reduction.
    pub value: i64,
}

/// The signed terms contributing to the weight sum of one coloring.
pub fn crossing_terms(
    d: &GaussDiagram,
    b: &Biquandle,
    w: &ArrowWeight,
    c: &Coloring,
) -> Result<Vec<CrossingTerm>, InvariantError> {
    if w.size() != b.size() {
        return Err(WeightError::Dimension { expected: b.size() }.into());
    }
    let pairs = extract_pairs(d, b, c)?;
    Ok(d.crossing_pairs()
        .into_iter()
        .map(|(i, j)| {
            let (x, y, e) = pairs[i];
            let (u, v, f) = pairs[j];
            CrossingTerm { first: i, second: j, value: e.value() * f.value() * w.get(x, y, u, v) as i64 }
        })
        .collect())
}

/// Σ over crossing arrow pairs of ε·ε′·φ(pair, pair′), reduced mod `m`.
pub fn weight_sum(d: &GaussDiagram, b: &Biquandle, w: &ArrowWeight, c: &Coloring) -> Result<u64, InvariantError> {
    let total: i128 = crossing_terms(d, b, w, c)?.iter().map(|t| i128::from(t.value)).sum();
    Ok(total.rem_euclid(i128::from(w.modulus())) as u64)
}

/// A multiset of residues mod `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantValue {
    /// Modulus.
    pub m: u64,
    /// Multiplicity of each residue that occurs.
    pub counts: BTreeMap<u64, u64>,
}

impl InvariantValue {
    /// Total multiplicity.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Residues with multiplicity, ascending.
    pub fn multiset(&self) -> Vec<u64> {
        self.counts.iter().flat_map(|(&r, &c)| core::iter::repeat_n(r, c as usize)).collect()
    }

    /// Polynomial text such as `19+4u+4u^2`.
    pub fn polynomial(&self) -> String {
        let mut out = String::new();
        for (&e, &c) in &self.counts {
            if !out.is_empty() {
                out.push('+');
            }
            let _ = match (e, c) {
                (0, c) => write!(out, "{c}"),
                (1, 1) => write!(out, "u"),
                (1, c) => write!(out, "{c}u"),
                (e, 1) => write!(out, "u^{e}"),
                (e, c) => write!(out, "{c}u^{e}"),
            };
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.polynomial())
    }
}

/// Multiset of weight sums over all colorings.
pub fn compute_invariant(d: &GaussDiagram, b: &Biquandle, w: &ArrowWeight) -> Result<InvariantValue, InvariantError> {
    let mut counts = BTreeMap::new();
    for c in enumerate_colorings(d, b) {
        *counts.entry(weight_sum(d, b, w, &c)?).or_insert(0) += 1;
    }
    Ok(InvariantValue { m: w.modulus(), counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn polynomial_rendering() {
        let v = |pairs: &[(u64, u64)]| InvariantValue { m: 9, counts: pairs.iter().copied().collect() };
        assert_eq!(v(&[(0, 19), (1, 4), (2, 4)]).polynomial(), "19+4u+4u^2");
        assert_eq!(v(&[(4, 2)]).polynomial(), "2u^4");
        assert_eq!(v(&[(0, 4), (1, 1), (2, 4)]).polynomial(), "4+u+4u^2");
        assert_eq!(v(&[(2, 1)]).polynomial(), "u^2");
        assert_eq!(v(&[]).polynomial(), "0");
        assert_eq!(v(&[(0, 1), (3, 2)]).multiset(), vec![0, 3, 3]);
    }
}
