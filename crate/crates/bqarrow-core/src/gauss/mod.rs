//! Gauss diagrams: signed arrows on a circle with `2n` endpoint positions.
//!
//! The tail of an arrow is the over passage and the head the under passage.

mod code;
mod moves;

pub use code::{parse_gauss_code, serialize_gauss_code};
pub use moves::{random_move_walk, walk_with_trace, MoveError, MoveSpec};

use alloc::vec::Vec;
use rand::Rng;

/// Crossing sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    /// Positive crossing.
    Positive,
    /// Negative crossing.
    Negative,
}

impl Sign {
    /// `+1` or `-1`.
    #[inline]
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    /// The opposite sign.
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    /// `'+'` or `'-'`.
    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// One signed chord, directed from the over passage to the under passage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    /// Position of the over passage.
    pub tail: usize,
    /// Position of the under passage.
    pub head: usize,
    /// Crossing sign.
    pub sign: Sign,
}

/// Errors for diagram construction and arrow queries.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GaussError {
    /// Unreadable token at a character offset.
    #[error("syntax error at offset {offset}: expected a token like O1+ or U2-")]
    Syntax {
        /// Character offset into the input.
        offset: usize,
    },
    /// A label does not occur exactly once as O and once as U.
    #[error("label {label} must appear exactly once as O and once as U")]
    Label {
        /// The crossing label.
        label: u64,
    },
    /// The two occurrences of a label carry different signs.
    #[error("label {label} has inconsistent signs")]
    SignMismatch {
        /// The crossing label.
        label: u64,
    },
    /// Endpoint positions are not exactly `0..2n`, or a tail equals its head.
    #[error("endpoint positions must be a permutation of 0..{positions}")]
    Positions {
        /// Expected number of positions.
        positions: usize,
    },
    /// Arrow index out of range.
    #[error("arrow index {index} out of range for {len} arrows")]
    Index {
        /// Requested index.
        index: usize,
        /// Arrow count.
        len: usize,
    },
    /// An arrow was compared with itself.
    #[error("arrow {0} compared with itself")]
    SameArrow(usize),
}

/// Which end of an arrow sits at a position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum End {
    /// The tail (over passage).
    Tail,
    /// The head (under passage).
    Head,
}

/// A Gauss diagram with endpoint positions `0..2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussDiagram {
    arrows: Vec<Arrow>,
}

impl GaussDiagram {
    /// The zero-crossing unknot diagram.
    pub fn unknot() -> Self {
        Self::default()
    }

    /// Builds a diagram after checking that the endpoints are exactly `0..2n`.
    pub fn new(arrows: Vec<Arrow>) -> Result<Self, GaussError> {
        let positions = 2 * arrows.len();
        let mut seen = alloc::vec![false; positions];
        for a in &arrows {
            for p in [a.tail, a.head] {
                if p >= positions || seen[p] {
                    return Err(GaussError::Positions { positions });
                }
                seen[p] = true;
            }
        }
        Ok(GaussDiagram { arrows })
    }

    /// The arrows in label order.
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Number of arrows.
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    /// True for the zero-crossing diagram.
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Number of endpoint positions, `2n`.
    pub fn positions(&self) -> usize {
        2 * self.arrows.len()
    }

    /// For each position, the arrow and end found there.
    pub fn endpoints(&self) -> Vec<(usize, End)> {
        let mut out = alloc::vec![(0, End::Tail); self.positions()];
        for (i, a) in self.arrows.iter().enumerate() {
            out[a.tail] = (i, End::Tail);
            out[a.head] = (i, End::Head);
        }
        out
    }

    /// Whether arrows `i` and `j` interleave.
    pub fn arrows_cross(&self, i: usize, j: usize) -> Result<bool, GaussError> {
        let len = self.len();
        for index in [i, j] {
            if index >= len {
                return Err(GaussError::Index { index, len });
            }
        }
        if i == j {
            return Err(GaussError::SameArrow(i));
        }
        Ok(chords_cross(&self.arrows[i], &self.arrows[j], self.positions()))
    }

    /// All crossing pairs `(i, j)` with `i < j`.
    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        let n2 = self.positions();
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if chords_cross(&self.arrows[i], &self.arrows[j], n2) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Moves the base point: every position shifts by `k` around the circle.
    pub fn rotate(&self, k: usize) -> Self {
        let n2 = self.positions();
        if n2 == 0 {
            return self.clone();
        }
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { tail: (a.tail + k) % n2, head: (a.head + k) % n2, sign: a.sign })
            .collect();
        GaussDiagram { arrows }
    }

    /// A uniformly shuffled diagram with `k` arrows and random signs.
    pub fn random<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Self {
        let mut pos: Vec<usize> = (0..2 * k).collect();
        for i in (1..pos.len()).rev() {
            let j = rng.gen_range(0..=i);
            pos.swap(i, j);
        }
        let arrows = pos
            .chunks(2)
            .map(|c| Arrow {
                tail: c[0],
                head: c[1],
                sign: if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative },
            })
            .collect();
        GaussDiagram { arrows }
    }
}

/// Interleaving test on a circle of `n2` positions.
#[inline]
pub(crate) fn chords_cross(a: &Arrow, b: &Arrow, n2: usize) -> bool {
    let span = (a.head + n2 - a.tail) % n2;
    let inside = |q: usize| {
        let d = (q + n2 - a.tail) % n2;
        d > 0 && d < span
    };
    inside(b.tail) != inside(b.head)
}
