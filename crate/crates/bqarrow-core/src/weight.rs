//! Arrow weights: 4-tensors φ((x, y), (u, v)) over ℤ_m.
//!
//! The entry for `((i, j), (k, l))` sits at row `k`, column `l` of the block at
//! row `i`, column `j`. The four axioms are homogeneous linear conditions, so
//! the full set of weights for a biquandle is a submodule of ℤ_m^(n⁴) and is
//! solved exactly by diagonal reduction.

use crate::algebra::Biquandle;
use crate::zmod::{diagonalize, gcd};
use alloc::vec::Vec;
use core::fmt;

/// The four weight axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightAxiom {
    /// Symmetry in the two arrows.
    Symmetric,
    /// Zero on equal pairs.
    Diagonal,
    /// First triangle condition.
    TriangleFirst,
    /// Second triangle condition.
    TriangleSecond,
}

impl fmt::Display for WeightAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightAxiom::Symmetric => "i",
            WeightAxiom::Diagonal => "ii",
            WeightAxiom::TriangleFirst => "iii",
            WeightAxiom::TriangleSecond => "iv",
        })
    }
}

/// Witness elements, 0-indexed, shown 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tuple(pub Vec<usize>);

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str(")")
    }
}

/// Weight construction, verification and solving errors.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    /// Tensor shape does not match the biquandle.
    #[error("tensor must be {expected}x{expected}x{expected}x{expected}")]
    Dimension {
        /// Required side length.
        expected: usize,
    },
    /// Modulus out of range.
    #[error("modulus {0} is not allowed here")]
    Modulus(u64),
    /// Entry not reduced modulo `m`.
    #[error("entry {value} at {at} is outside 0..{m}")]
    Entry {
        /// Offending value.
        value: i64,
        /// Position `(i,j,k,l)`.
        at: Tuple,
        /// Modulus.
        m: u64,
    },
    /// Index outside the tensor.
    #[error("index {0} outside the tensor")]
    Index(Tuple),
    /// An axiom fails.
    #[error("axiom ({axiom}) fails at {witness}")]
    Violation {
        /// The failed axiom.
        axiom: WeightAxiom,
        /// `(x,y,u,v)`, `(x,y)` or `(x,y,z)`.
        witness: Tuple,
    },
    /// Enumeration would exceed the limit.
    #[error("weight space has {count} elements, more than the limit {limit}")]
    TooMany {
        /// Number of elements (saturated).
        count: u128,
        /// Requested limit.
        limit: usize,
    },
}

/// An n×n×n×n tensor of residues mod `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArrowWeight {
    n: usize,
    m: u64,
    entries: Vec<u64>,
}

impl ArrowWeight {
    /// The zero tensor.
    pub fn zero(n: usize, m: u64) -> Result<Self, WeightError> {
        if m == 0 {
            return Err(WeightError::Modulus(m));
        }
        Ok(ArrowWeight { n, m, entries: alloc::vec![0; n * n * n * n] })
    }

    /// Builds from the nested `[i][j][k][l]` layout.
    pub fn from_nested(m: u64, t: &[Vec<Vec<Vec<i64>>>]) -> Result<Self, WeightError> {
        let mut w = Self::zero(t.len(), m)?;
        let n = w.n;
        for (i, a) in t.iter().enumerate() {
            if a.len() != n {
                return Err(WeightError::Dimension { expected: n });
            }
            for (j, b) in a.iter().enumerate() {
                if b.len() != n {
                    return Err(WeightError::Dimension { expected: n });
                }
                for (k, c) in b.iter().enumerate() {
                    if c.len() != n {
                        return Err(WeightError::Dimension { expected: n });
                    }
                    for (l, &value) in c.iter().enumerate() {
                        if value < 0 || value as u64 >= m {
                            return Err(WeightError::Entry { value, at: Tuple(alloc::vec![i, j, k, l]), m });
                        }
                        let at = w.index(i, j, k, l);
                        w.entries[at] = value as u64;
                    }
                }
            }
        }
        Ok(w)
    }

    /// The nested `[i][j][k][l]` layout.
    pub fn to_nested(&self) -> Vec<Vec<Vec<Vec<u64>>>> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| (0..n).map(|l| self.get(i, j, k, l)).collect()).collect()).collect())
            .collect()
    }

    fn from_flat(n: usize, m: u64, entries: Vec<u64>) -> Self {
        ArrowWeight { n, m, entries }
    }

    #[inline]
    fn index(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        ((i * self.n + j) * self.n + k) * self.n + l
    }

    /// Side length.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Modulus.
    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// Flat entries in `[i][j][k][l]` order.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// φ((x, y), (u, v)) without bounds reporting.
    #[inline]
    pub fn get(&self, x: usize, y: usize, u: usize, v: usize) -> u64 {
        self.entries[self.index(x, y, u, v)]
    }

    /// φ((x, y), (u, v)), checking indices.
    pub fn lookup(&self, first: (usize, usize), second: (usize, usize)) -> Result<u64, WeightError> {
        let idx = [first.0, first.1, second.0, second.1];
        if idx.iter().any(|&v| v >= self.n) {
            return Err(WeightError::Index(Tuple(idx.to_vec())));
        }
        Ok(self.get(idx[0], idx[1], idx[2], idx[3]))
    }

    /// `self + c·other` mod `m`.
    pub fn add_scaled(&self, c: u64, other: &ArrowWeight) -> ArrowWeight {
        let m = self.m;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| ((u128::from(a) + u128::from(c % m) * u128::from(b)) % u128::from(m)) as u64)
            .collect();
        ArrowWeight::from_flat(self.n, m, entries)
    }

    /// Replaces one entry, reducing mod `m`.
    pub fn with_entry(&self, first: (usize, usize), second: (usize, usize), value: u64) -> ArrowWeight {
        let mut w = self.clone();
        let at = w.index(first.0, first.1, second.0, second.1);
        w.entries[at] = value % w.m;
        w
    }
}

/// One axiom instance: Σ coef · entry ≡ 0.
struct Instance {
    axiom: WeightAxiom,
    witness: Vec<usize>,
    terms: [(i64, usize); 3],
}

/// Every axiom instance in scan order: (i) over (x,y,u,v), (ii) over (x,y),
/// then (iii) and (iv) over (x,y,z).
fn instances(b: &Biquandle) -> impl Iterator<Item = Instance> + '_ {
    let n = b.size();
    let idx = move |x: usize, y: usize, u: usize, v: usize| ((x * n + y) * n + u) * n + v;
    let (under, over) = (move |x, y| b.under(x, y), move |x, y| b.over(x, y));
    let sym = (0..n * n * n * n).map(move |f| {
        let (x, y, u, v) = (f / (n * n * n), f / (n * n) % n, f / n % n, f % n);
        Instance {
            axiom: WeightAxiom::Symmetric,
            witness: alloc::vec![x, y, u, v],
            terms: [(1, idx(x, y, u, v)), (-1, idx(u, v, x, y)), (0, 0)],
        }
    });
    let diag = (0..n * n).map(move |f| {
        let (x, y) = (f / n, f % n);
        Instance {
            axiom: WeightAxiom::Diagonal,
            witness: alloc::vec![x, y],
            terms: [(1, idx(x, y, x, y)), (0, 0), (0, 0)],
        }
    });
    let triples = move || (0..n * n * n).map(move |f| (f / (n * n), f / n % n, f % n));
    let first = triples().map(move |(x, y, z)| Instance {
        axiom: WeightAxiom::TriangleFirst,
        witness: alloc::vec![x, y, z],
        terms: [
            (1, idx(x, y, y, z)),
            (-1, idx(x, z, over(y, x), over(z, x))),
            (-1, idx(x, z, under(x, z), under(y, z))),
        ],
    });
    let second = triples().map(move |(x, y, z)| {
        let (a, c) = (under(x, y), over(z, y));
        Instance {
            axiom: WeightAxiom::TriangleSecond,
            witness: alloc::vec![x, y, z],
            terms: [
                (1, idx(under(x, z), under(y, z), over(y, x), over(z, x))),
                (-1, idx(x, y, a, c)),
                (-1, idx(y, z, a, c)),
            ],
        }
    });
    sym.chain(diag).chain(first).chain(second)
}

/// Number of axiom instances for an `n`-element biquandle.
pub fn axiom_instance_count(n: usize) -> usize {
    n.pow(4) + n * n + 2 * n.pow(3)
}

/// Checks all four axioms. On success returns the number of instances evaluated.
pub fn verify_weight(b: &Biquandle, w: &ArrowWeight) -> Result<usize, WeightError> {
    if w.n != b.size() {
        return Err(WeightError::Dimension { expected: b.size() });
    }
    let m = i128::from(w.m);
    let mut count = 0;
    for inst in instances(b) {
        count += 1;
        let s: i128 = inst.terms.iter().map(|&(c, i)| i128::from(c) * i128::from(w.entries[i])).sum();
        if s.rem_euclid(m) != 0 {
            return Err(WeightError::Violation { axiom: inst.axiom, witness: Tuple(inst.witness) });
        }
    }
    Ok(count)
}

/// All arrow weights of a biquandle modulo `m`, as a direct sum of cyclic pieces.
#[derive(Clone, Debug)]
pub struct WeightSpace {
    n: usize,
    m: u64,
    generators: Vec<ArrowWeight>,
    orders: Vec<u64>,
    // coordinate map: row k of C⁻¹ and the step m / gcd(d_k, m) for every column
    inv_rows: Vec<Vec<u64>>,
    steps: Vec<u64>,
}

/// Solves the axiom system over ℤ_m.
pub fn solve_weight_space(b: &Biquandle, m: u64) -> Result<WeightSpace, WeightError> {
    if m < 2 {
        return Err(WeightError::Modulus(m));
    }
    let n = b.size();
    let cols = n.pow(4);
    let rows: Vec<Vec<u64>> = instances(b)
        .map(|inst| {
            let mut row = alloc::vec![0u64; cols];
            for (c, i) in inst.terms {
                if c != 0 {
                    row[i] = (i128::from(row[i]) + i128::from(c)).rem_euclid(i128::from(m)) as u64;
                }
            }
            row
        })
        .collect();
    let dg = diagonalize(rows, cols, m);
    let steps: Vec<u64> = dg.diag.iter().map(|&d| m / gcd(d, m)).collect();
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for (k, col) in dg.cols.iter().enumerate() {
        let order = m / steps[k];
        if order > 1 {
            let entries =
                col.iter().map(|&v| ((u128::from(v) * u128::from(steps[k])) % u128::from(m)) as u64).collect();
            generators.push(ArrowWeight::from_flat(n, m, entries));
            orders.push(order);
        }
    }
    Ok(WeightSpace { n, m, generators, orders, inv_rows: dg.inv_rows, steps })
}

impl WeightSpace {
    /// Modulus.
    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// Generators of the cyclic summands.
    pub fn generators(&self) -> &[ArrowWeight] {
        &self.generators
    }

    /// Order of each generator; every order divides `m`.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of weights, saturating at `u128::MAX`.
    pub fn count(&self) -> u128 {
        self.orders.iter().fold(1u128, |acc, &o| acc.saturating_mul(u128::from(o)))
    }

    /// The weight with coefficient `coeffs[i]` on generator `i`.
    pub fn combine(&self, coeffs: &[u64]) -> ArrowWeight {
        let zero = ArrowWeight::from_flat(self.n, self.m, alloc::vec![0; self.n.pow(4)]);
        self.generators.iter().zip(coeffs).fold(zero, |acc, (g, &c)| acc.add_scaled(c, g))
    }

    /// Generator coefficients of `w`, or `None` when `w` is not a weight.
    pub fn coordinates(&self, w: &ArrowWeight) -> Option<Vec<u64>> {
        if w.n != self.n || w.m != self.m {
            return None;
        }
        let m = u128::from(self.m);
        let mut out = Vec::with_capacity(self.generators.len());
        for (row, &step) in self.inv_rows.iter().zip(&self.steps) {
            let y =
                (row.iter().zip(&w.entries).map(|(&a, &b)| u128::from(a) * u128::from(b) % m).sum::<u128>() % m) as u64;
            if !y.is_multiple_of(step) {
                return None;
            }
            if step < self.m {
                out.push(y / step);
            }
        }
        Some(out)
    }

    /// Whether `w` lies in the space.
    pub fn contains(&self, w: &ArrowWeight) -> bool {
        self.coordinates(w).is_some()
    }

    /// All weights in coefficient order, at most `limit` of them.
    ///
    /// With `truncate` false an oversized space is an error.
    pub fn enumerate(&self, limit: usize, truncate: bool) -> Result<Vec<ArrowWeight>, WeightError> {
        let count = self.count();
        if count > limit as u128 && !truncate {
            return Err(WeightError::TooMany { count, limit });
        }
        let take = count.min(limit as u128) as usize;
        let mut coeffs = alloc::vec![0u64; self.orders.len()];
        let mut out = Vec::with_capacity(take);
        for _ in 0..take {
            out.push(self.combine(&coeffs));
            for (c, &o) in coeffs.iter_mut().zip(&self.orders).rev() {
                *c += 1;
                if *c < o {
                    break;
                }
                *c = 0;
            }
        }
        Ok(out)
    }
}
