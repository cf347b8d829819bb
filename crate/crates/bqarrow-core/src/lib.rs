//! Biquandle arrow-weight invariants of virtual and classical knots.
//!
//! Knots are presented as signed Gauss diagrams. A finite biquandle colors the
//! segments of the Gauss circle; an arrow weight assigns a residue mod `m` to
//! every crossing pair of colored arrows, and the multiset of signed sums over
//! all colorings is the invariant.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod algebra;
pub mod coloring;
pub mod gauss;
pub mod invariant;
pub mod weight;

mod zmod;

pub use algebra::{AlgebraError, Axiom, Biquandle};
pub use coloring::{check_coloring, counting_invariant, enumerate_colorings, extract_pairs};
pub use coloring::{ArrowColors, Coloring, ColoringError};
pub use gauss::{parse_gauss_code, random_move_walk, serialize_gauss_code};
pub use gauss::{Arrow, GaussDiagram, GaussError, MoveError, MoveSpec, Sign};
pub use invariant::InvariantValue;
pub use invariant::{compute_invariant, crossing_terms, weight_sum, CrossingTerm, InvariantError};
pub use weight::{axiom_instance_count, solve_weight_space, verify_weight};
pub use weight::{ArrowWeight, WeightAxiom, WeightError, WeightSpace};
