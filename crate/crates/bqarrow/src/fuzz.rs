//! Runtime check that invariants survive random Reidemeister walks.

use bqarrow_core::{
    compute_invariant, counting_invariant, enumerate_colorings, extract_pairs, random_move_walk, serialize_gauss_code,
    ArrowWeight, Biquandle, GaussDiagram, InvariantError, InvariantValue, WeightError,
};
use serde::Serialize;
use std::collections::BTreeMap;

/// Walk parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    /// Moves per walk.
    pub steps: usize,
    /// Number of walks.
    pub trials: usize,
    /// Base seed; trial `t` walks with `seed + t`.
    pub seed: u64,
    /// Negative control: drop the arrow signs from the weight sum.
    pub ignore_signs: bool,
}

/// One walk that changed a value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzFailure {
    /// Trial index.
    pub trial: usize,
    /// Seed of the walk.
    pub seed: u64,
    /// Gauss code after the walk.
    pub code: String,
    /// Invariant before the walk.
    pub before: String,
    /// Invariant after the walk.
    pub after: String,
    /// Counting invariant before the walk.
    pub count_before: usize,
    /// Counting invariant after the walk.
    pub count_after: usize,
}

/// Outcome of a fuzz run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    /// Walks performed.
    pub trials: usize,
    /// Moves per walk.
    pub steps: usize,
    /// Base seed.
    pub seed: u64,
    /// Walks that changed either value.
    pub failures: Vec<FuzzFailure>,
}

impl FuzzReport {
    /// No walk changed anything.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Weight sums with every arrow sign taken as positive.
pub fn unsigned_invariant(d: &GaussDiagram, b: &Biquandle, w: &ArrowWeight) -> Result<InvariantValue, InvariantError> {
    if w.size() != b.size() {
        return Err(WeightError::Dimension { expected: b.size() }.into());
    }
    let m = w.modulus();
    let crossings = d.crossing_pairs();
    let mut counts = BTreeMap::new();
    for c in enumerate_colorings(d, b) {
        let pairs = extract_pairs(d, b, &c)?;
        let s = crossings.iter().fold(0u64, |acc, &(i, j)| {
            let ((x, y, _), (u, v, _)) = (pairs[i], pairs[j]);
            (acc + w.get(x, y, u, v)) % m
        });
        *counts.entry(s).or_insert(0) += 1;
    }
    Ok(InvariantValue { m, counts })
}

fn value(
    d: &GaussDiagram,
    b: &Biquandle,
    w: &ArrowWeight,
    ignore_signs: bool,
) -> Result<InvariantValue, InvariantError> {
    if ignore_signs {
        unsigned_invariant(d, b, w)
    } else {
        compute_invariant(d, b, w)
    }
}

/// Runs `trials` seeded walks from `d` and compares both invariants.
pub fn fuzz(d: &GaussDiagram, b: &Biquandle, w: &ArrowWeight, cfg: FuzzConfig) -> Result<FuzzReport, InvariantError> {
    let before = value(d, b, w, cfg.ignore_signs)?;
    let count_before = counting_invariant(d, b);
    let mut failures = Vec::new();
    for trial in 0..cfg.trials {
        let seed = cfg.seed.wrapping_add(trial as u64);
        let e = random_move_walk(d, cfg.steps, seed);
        let after = value(&e, b, w, cfg.ignore_signs)?;
        let count_after = counting_invariant(&e, b);
        if after != before || count_after != count_before {
            failures.push(FuzzFailure {
                trial,
                seed,
                code: serialize_gauss_code(&e),
                before: before.polynomial(),
                after: after.polynomial(),
                count_before,
                count_after,
            });
        }
    }
    Ok(FuzzReport { trials: cfg.trials, steps: cfg.steps, seed: cfg.seed, failures })
}
