//! The shipped data files, embedded at compile time.

use crate::io::{BiquandleJson, WeightJson};
use crate::knotdb::{parse_table, KnotRecord};
use bqarrow_core::{ArrowWeight, Biquandle};

/// Two-element biquandle with both operations `x, y ↦ the other element of x`.
pub const FLIP_BIQUANDLE: &str = include_str!("../data/flip2.biquandle.json");
/// The Fox tricoloring quandle as a biquandle with trivial over operation.
pub const TRICOLOR_BIQUANDLE: &str = include_str!("../data/tricolor.biquandle.json");
/// ℤ₈ weight on the flip biquandle.
pub const Z8_WEIGHT: &str = include_str!("../data/z8.weight.json");
/// First ℤ₄ weight on the flip biquandle.
pub const W1_WEIGHT: &str = include_str!("../data/w1.weight.json");
/// Second ℤ₄ weight on the flip biquandle.
pub const W2_WEIGHT: &str = include_str!("../data/w2.weight.json");
/// ℤ₃ weight on the tricolor biquandle.
pub const TRICOLOR_Z3_WEIGHT: &str = include_str!("../data/tricolor_z3.weight.json");
/// Classical knots through eight crossings.
pub const CLASSICAL_TABLE: &str = include_str!("../data/classical.tsv");
/// Virtual knots.
pub const VIRTUAL_TABLE: &str = include_str!("../data/virtual.tsv");

fn biquandle(text: &str) -> Biquandle {
    serde_json::from_str::<BiquandleJson>(text).expect("embedded biquandle").build().expect("embedded biquandle")
}

fn weight(text: &str) -> ArrowWeight {
    serde_json::from_str::<WeightJson>(text).expect("embedded weight").build().expect("embedded weight")
}

/// The two-element flip biquandle.
pub fn flip_biquandle() -> Biquandle {
    biquandle(FLIP_BIQUANDLE)
}

/// The tricoloring biquandle.
pub fn tricolor_biquandle() -> Biquandle {
    biquandle(TRICOLOR_BIQUANDLE)
}

/// ℤ₈ weight for [`flip_biquandle`].
pub fn z8_weight() -> ArrowWeight {
    weight(Z8_WEIGHT)
}

/// First ℤ₄ weight for [`flip_biquandle`].
pub fn w1_weight() -> ArrowWeight {
    weight(W1_WEIGHT)
}

/// Second ℤ₄ weight for [`flip_biquandle`].
pub fn w2_weight() -> ArrowWeight {
    weight(W2_WEIGHT)
}

/// ℤ₃ weight for [`tricolor_biquandle`].
pub fn tricolor_z3_weight() -> ArrowWeight {
    weight(TRICOLOR_Z3_WEIGHT)
}

/// Parsed classical table.
pub fn classical_knots() -> Vec<KnotRecord> {
    parse_table(CLASSICAL_TABLE).expect("embedded table")
}

/// Parsed virtual table.
pub fn virtual_knots() -> Vec<KnotRecord> {
    parse_table(VIRTUAL_TABLE).expect("embedded table")
}

/// Classical followed by virtual knots.
pub fn all_knots() -> Vec<KnotRecord> {
    let mut v = classical_knots();
    v.extend(virtual_knots());
    v
}
