//! Finite biquandles.
//!
//! Elements are `0..n`. `under(x, y)` is x ⊳̲ y and `over(x, y)` is x ⊳̄ y,
//! with the left operand as row. Text formats use `1..=n`.

use alloc::vec::Vec;
use core::fmt;

/// Which biquandle axiom failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// x ⊳̲ x = x ⊳̄ x.
    Diagonal,
    /// The column maps and the sideways map are bijections.
    Invertible,
    /// The three exchange laws.
    Exchange,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Diagonal => "i",
            Axiom::Invertible => "ii",
            Axiom::Exchange => "iii",
        })
    }
}

/// Witnessing elements of a failed axiom, stored 0-indexed and shown 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness(pub Vec<usize>);

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 3] = ["x", "y", "z"];
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}={}", NAMES.get(i).copied().unwrap_or("?"), v + 1)?;
        }
        f.write_str(")")
    }
}

/// Errors raised while validating operation tables.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    /// Tables are not square or differ in size.
    #[error("operation tables must be square and of the same size")]
    Shape,
    /// A table entry is not an element.
    #[error("{table} table entry {value} at row {row}, column {col} is outside 1..={n}", row = .row + 1, col = .col + 1)]
    Range {
        /// `"under"` or `"over"`.
        table: &'static str,
        /// Row (left operand), 0-indexed.
        row: usize,
        /// Column (right operand), 0-indexed.
        col: usize,
        /// Offending value as given (1-indexed for text input).
        value: i64,
        /// Element count.
        n: usize,
    },
    /// A biquandle axiom fails.
    #[error("axiom ({axiom}) fails at {witness}")]
    AxiomViolation {
        /// The failed axiom.
        axiom: Axiom,
        /// First witness in lexicographic scan order.
        witness: Witness,
    },
}

/// A validated finite biquandle with precomputed inverse lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biquandle {
    n: usize,
    under: Vec<usize>,
    over: Vec<usize>,
    // inv_*[y * n + x] = z with op(z, x) = y
    inv_under: Vec<usize>,
    inv_over: Vec<usize>,
    // s_inv[a * n + b] = (x, y) with S(x, y) = (a, b)
    s_inv: Vec<(usize, usize)>,
}

impl Biquandle {
    /// Validates 0-indexed tables, row = left operand.
    pub fn new(under: &[Vec<usize>], over: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let to_i64 =
            |t: &[Vec<usize>]| -> Vec<Vec<i64>> { t.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect() };
        Self::from_signed(&to_i64(under), &to_i64(over), 0)
    }

    /// Validates 1-indexed tables as printed in operation-table form.
    pub fn from_one_indexed(under: &[Vec<i64>], over: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        Self::from_signed(under, over, 1)
    }

    fn from_signed(under: &[Vec<i64>], over: &[Vec<i64>], base: i64) -> Result<Self, AlgebraError> {
        let n = under.len();
        if over.len() != n || under.iter().chain(over).any(|r| r.len() != n) {
            return Err(AlgebraError::Shape);
        }
        let flat = |t: &[Vec<i64>], table: &'static str| -> Result<Vec<usize>, AlgebraError> {
            let mut out = Vec::with_capacity(n * n);
            for (row, r) in t.iter().enumerate() {
                for (col, &value) in r.iter().enumerate() {
                    let v = value - base;
                    if v < 0 || v >= n as i64 {
                        return Err(AlgebraError::Range { table, row, col, value, n });
                    }
                    out.push(v as usize);
                }
            }
            Ok(out)
        };
        let under = flat(under, "under")?;
        let over = flat(over, "over")?;
        Self::validate(n, under, over)
    }

    /// The trivial biquandle on `n` elements: both operations return the left operand.
    pub fn trivial(n: usize) -> Self {
        let t: Vec<usize> = (0..n * n).map(|i| i / n.max(1)).collect();
        Self::validate(n, t.clone(), t).expect("projections satisfy every axiom")
    }

    fn validate(n: usize, under: Vec<usize>, over: Vec<usize>) -> Result<Self, AlgebraError> {
        let u = |x: usize, y: usize| under[x * n + y];
        let o = |x: usize, y: usize| over[x * n + y];
        let fail = |axiom, w: &[usize]| AlgebraError::AxiomViolation { axiom, witness: Witness(w.to_vec()) };

        for x in 0..n {
            if u(x, x) != o(x, x) {
                return Err(fail(Axiom::Diagonal, &[x]));
            }
        }

        let mut inv_under = alloc::vec![usize::MAX; n * n];
        let mut inv_over = alloc::vec![usize::MAX; n * n];
        for x in 0..n {
            for y in 0..n {
                let a = &mut inv_over[o(y, x) * n + x];
                if *a != usize::MAX {
                    return Err(fail(Axiom::Invertible, &[x, y]));
                }
                *a = y;
                let b = &mut inv_under[u(y, x) * n + x];
                if *b != usize::MAX {
                    return Err(fail(Axiom::Invertible, &[x, y]));
                }
                *b = y;
            }
        }
        let mut s_inv = alloc::vec![(usize::MAX, usize::MAX); n * n];
        for x in 0..n {
            for y in 0..n {
                let slot = &mut s_inv[o(y, x) * n + u(x, y)];
                if slot.0 != usize::MAX {
                    return Err(fail(Axiom::Invertible, &[x, y]));
                }
                *slot = (x, y);
            }
        }

        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let first = u(u(x, y), u(z, y)) == u(u(x, z), o(y, z));
                    let second = o(u(x, y), u(z, y)) == u(o(x, z), o(y, z));
                    let third = o(o(x, y), o(z, y)) == o(o(x, z), u(y, z));
                    if !(first && second && third) {
                        return Err(fail(Axiom::Exchange, &[x, y, z]));
                    }
                }
            }
        }

        Ok(Biquandle { n, under, over, inv_under, inv_over, s_inv })
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.n
    }

    /// x ⊳̲ y.
    #[inline]
    pub fn under(&self, x: usize, y: usize) -> usize {
        self.under[x * self.n + y]
    }

    /// x ⊳̄ y.
    #[inline]
    pub fn over(&self, x: usize, y: usize) -> usize {
        self.over[x * self.n + y]
    }

    /// The unique z with z ⊳̲ x = y.
    #[inline]
    pub fn inv_under(&self, y: usize, x: usize) -> usize {
        self.inv_under[y * self.n + x]
    }

    /// The unique z with z ⊳̄ x = y.
    #[inline]
    pub fn inv_over(&self, y: usize, x: usize) -> usize {
        self.inv_over[y * self.n + x]
    }

    /// S(x, y) = (y ⊳̄ x, x ⊳̲ y).
    #[inline]
    pub fn sideways(&self, x: usize, y: usize) -> (usize, usize) {
        (self.over(y, x), self.under(x, y))
    }

    /// The pair (x, y) with S(x, y) = (a, b).
    #[inline]
    pub fn sideways_inv(&self, a: usize, b: usize) -> (usize, usize) {
        self.s_inv[a * self.n + b]
    }

    /// The ⊳̲ table as rows, 0-indexed.
    pub fn under_rows(&self) -> Vec<Vec<usize>> {
        self.under.chunks(self.n.max(1)).map(<[usize]>::to_vec).take(self.n).collect()
    }

    /// The ⊳̄ table as rows, 0-indexed.
    pub fn over_rows(&self) -> Vec<Vec<usize>> {
        self.over.chunks(self.n.max(1)).map(<[usize]>::to_vec).take(self.n).collect()
    }
}
