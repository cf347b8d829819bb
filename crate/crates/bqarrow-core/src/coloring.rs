//! Biquandle colorings of Gauss diagrams.
//!
//! Segment `j` runs from position `j` to position `j + 1` (mod `2n`), so the
//! segments entering an arrow's tail and head are `t - 1` and `h - 1` and the
//! segments leaving are `t` and `h`. At a positive arrow
//!
//! ```text
//! s[t] = s[t-1] ⊳̄ s[h-1]      s[h] = s[h-1] ⊳̲ s[t-1]
//! ```
//!
//! and at a negative arrow the same relations hold with incoming and outgoing
//! segments exchanged.

use crate::algebra::Biquandle;
use crate::gauss::{Arrow, GaussDiagram, Sign};
use alloc::vec::Vec;

/// Segment colors; a single entry for the zero-crossing diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring(pub Vec<usize>);

/// Per-arrow color pair and sign.
pub type ArrowColors = Vec<(usize, usize, Sign)>;

/// Errors for coloring checks.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    /// Wrong number of segment colors.
    #[error("expected {expected} segment colors, found {found}")]
    Size {
        /// Required length.
        expected: usize,
        /// Given length.
        found: usize,
    },
    /// A color is not an element of the biquandle.
    #[error("segment {segment} has color {color} outside the biquandle")]
    Color {
        /// Segment index.
        segment: usize,
        /// Offending color.
        color: usize,
    },
    /// The coloring breaks the rule at some arrow.
    #[error("coloring violates the rule at arrow {0}")]
    Invalid(usize),
}

#[inline]
fn prev(p: usize, n2: usize) -> usize {
    (p + n2 - 1) % n2
}

/// Outgoing (over, under) colors of an arrow from its incoming ones.
#[inline]
fn outgoing(b: &Biquandle, sign: Sign, over_in: usize, under_in: usize) -> (usize, usize) {
    match sign {
        Sign::Positive => (b.over(over_in, under_in), b.under(under_in, over_in)),
        Sign::Negative => {
            let (under_out, over_out) = b.sideways_inv(over_in, under_in);
            (over_out, under_out)
        }
    }
}

fn arrow_ok(b: &Biquandle, a: &Arrow, s: &[usize]) -> bool {
    let n2 = s.len();
    let (ti, hi) = (s[prev(a.tail, n2)], s[prev(a.head, n2)]);
    let (to, ho) = (s[a.tail], s[a.head]);
    match a.sign {
        Sign::Positive => to == b.over(ti, hi) && ho == b.under(hi, ti),
        Sign::Negative => ti == b.over(to, ho) && hi == b.under(ho, to),
    }
}

fn check_shape(d: &GaussDiagram, b: &Biquandle, c: &Coloring) -> Result<(), ColoringError> {
    let expected = d.positions().max(1);
    if c.0.len() != expected {
        return Err(ColoringError::Size { expected, found: c.0.len() });
    }
    if let Some((segment, &color)) = c.0.iter().enumerate().find(|(_, &v)| v >= b.size()) {
        return Err(ColoringError::Color { segment, color });
    }
    Ok(())
}

/// Whether `c` satisfies the rule at every arrow.
pub fn check_coloring(d: &GaussDiagram, b: &Biquandle, c: &Coloring) -> Result<bool, ColoringError> {
    check_shape(d, b, c)?;
    Ok(d.arrows().iter().all(|a| arrow_ok(b, a, &c.0)))
}

/// Every coloring of `d` by `b`, in lexicographic order.
///
/// Segments are assigned in circle order starting from the last one. When the
/// second endpoint of an arrow is reached both incoming colors are known, so
/// both outgoing colors are forced; only first endpoints branch.
pub fn enumerate_colorings(d: &GaussDiagram, b: &Biquandle) -> Vec<Coloring> {
    let n = b.size();
    let n2 = d.positions();
    if n2 == 0 {
        return (0..n).map(|x| Coloring(alloc::vec![x])).collect();
    }
    let ends = d.endpoints();
    // second[p] = Some(q) when p is the later endpoint of an arrow whose earlier one is q
    let second: Vec<Option<usize>> = (0..n2)
        .map(|p| {
            let a = d.arrows()[ends[p].0];
            let q = if a.tail == p { a.head } else { a.tail };
            (q < p).then_some(q)
        })
        .collect();

    struct Search<'a> {
        b: &'a Biquandle,
        d: &'a GaussDiagram,
        ends: &'a [(usize, crate::gauss::End)],
        second: &'a [Option<usize>],
        s: Vec<usize>,
        out: Vec<Coloring>,
    }

    impl Search<'_> {
        fn forced(&self, p: usize) -> (usize, usize) {
            let n2 = self.s.len();
            let a = self.d.arrows()[self.ends[p].0];
            let (oo, uo) = outgoing(self.b, a.sign, self.s[prev(a.tail, n2)], self.s[prev(a.head, n2)]);
            if a.tail == p {
                (oo, uo)
            } else {
                (uo, oo)
            }
        }

        fn run(&mut self, p: usize) {
            let n2 = self.s.len();
            if p == n2 {
                self.out.push(Coloring(self.s.clone()));
                return;
            }
            match self.second[p] {
                Some(q) => {
                    let (here, there) = self.forced(p);
                    if self.s[q] != there || (p == n2 - 1 && self.s[p] != here) {
                        return;
                    }
                    let keep = self.s[p];
                    self.s[p] = here;
                    self.run(p + 1);
                    self.s[p] = keep;
                }
                None if p == n2 - 1 => self.run(p + 1),
                None => {
                    for v in 0..self.b.size() {
                        self.s[p] = v;
                        self.run(p + 1);
                    }
                }
            }
        }
    }

    let mut search = Search { b, d, ends: &ends, second: &second, s: alloc::vec![0; n2], out: Vec::new() };
    for last in 0..n {
        search.s[n2 - 1] = last;
        search.run(0);
    }
    let mut out = search.out;
    out.sort_unstable();
    out
}

/// Number of colorings.
pub fn counting_invariant(d: &GaussDiagram, b: &Biquandle) -> usize {
    enumerate_colorings(d, b).len()
}

/// The color pair of each arrow.
///
/// A positive arrow carries (outgoing under color, incoming over color),
/// i.e. `(s[h], s[t-1])`; a negative arrow carries `(s[h-1], s[t])`.
pub fn extract_pairs(d: &GaussDiagram, b: &Biquandle, c: &Coloring) -> Result<ArrowColors, ColoringError> {
    check_shape(d, b, c)?;
    let n2 = d.positions();
    let s = &c.0;
    d.arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            if !arrow_ok(b, a, s) {
                return Err(ColoringError::Invalid(i));
            }
            Ok(match a.sign {
                Sign::Positive => (s[a.head], s[prev(a.tail, n2)], a.sign),
                Sign::Negative => (s[prev(a.head, n2)], s[a.tail], a.sign),
            })
        })
        .collect()
}
