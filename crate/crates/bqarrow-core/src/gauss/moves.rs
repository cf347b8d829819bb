//! Reidemeister moves on Gauss diagrams.
//!
//! The generating set is: four RI moves (sign × endpoint order), four RII
//! moves (crossing or nested × direction) and one RIII move with three
//! positive arrows. Arc `k` is the gap just before position `k`; arc `2n`
//! is the gap after the last position.
//!
//! The RIII configuration uses three strands: top, middle and bottom. Arrow
//! `a` runs top to middle, `b` top to bottom and `c` middle to bottom. Before
//! the move the endpoint pairs read `(a.tail, b.tail)`, `(a.head, c.tail)` and
//! `(b.head, c.head)` around the circle; the move reverses all three pairs.

use super::{Arrow, End, GaussDiagram, Sign};
use alloc::vec::Vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One Reidemeister move with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveSpec {
    /// Adds an isolated arrow with adjacent endpoints in `arc`.
    RiInsert {
        /// Gap receiving both endpoints.
        arc: usize,
        /// Sign of the new arrow.
        sign: Sign,
        /// Place the head before the tail.
        head_first: bool,
    },
    /// Removes an arrow whose endpoints are adjacent.
    RiRemove {
        /// Arrow index.
        arrow: usize,
    },
    /// Adds a positive and a negative arrow, both with tails in `from_arc`
    /// and heads in `to_arc`.
    RiiInsert {
        /// Gap receiving the two tails (positive first).
        from_arc: usize,
        /// Gap receiving the two heads.
        to_arc: usize,
        /// Interleave the heads so that the new arrows cross.
        crossing: bool,
    },
    /// Removes two opposite-signed arrows with adjacent tails and adjacent heads.
    RiiRemove {
        /// First arrow index.
        first: usize,
        /// Second arrow index.
        second: usize,
    },
    /// Reverses the three endpoint pairs of a positive triangle.
    Riii {
        /// Arrows top→middle, top→bottom, middle→bottom.
        arrows: [usize; 3],
    },
}

/// A move whose geometric precondition fails.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    /// Arc index beyond `2n`.
    #[error("arc {arc} out of range 0..={max}")]
    Arc {
        /// Requested arc.
        arc: usize,
        /// Largest arc index.
        max: usize,
    },
    /// Arrow index out of range or repeated.
    #[error("arrow index {0} is out of range or repeated")]
    Arrow(usize),
    /// The endpoints of the arrow are not adjacent.
    #[error("arrow {0} does not have adjacent endpoints")]
    NotAKink(usize),
    /// The pair does not form an RII configuration.
    #[error("arrows {0} and {1} do not form a removable RII pair")]
    NotABigon(usize, usize),
    /// The triple does not form the RIII configuration.
    #[error("arrows {0:?} do not form the RIII configuration")]
    NotATriangle([usize; 3]),
}

#[inline]
fn adjacent(p: usize, q: usize, n2: usize) -> bool {
    (p + 1) % n2 == q
}

fn check_arrows(d: &GaussDiagram, idx: &[usize]) -> Result<(), MoveError> {
    for (k, &i) in idx.iter().enumerate() {
        if i >= d.len() || idx[..k].contains(&i) {
            return Err(MoveError::Arrow(i));
        }
    }
    Ok(())
}

/// Inserts new endpoints into gaps and appends the new arrows.
/// `gaps[k]` lists `(new arrow, end)` in the order they appear inside arc `k`.
fn insert(d: &GaussDiagram, gaps: &[(usize, &[(usize, End)])], signs: &[Sign]) -> GaussDiagram {
    let n2 = d.positions();
    let added: usize = gaps.iter().map(|(_, items)| items.len()).sum();
    let mut shift = alloc::vec![0usize; n2 + 1];
    let mut new_pos = alloc::vec![(0usize, 0usize); signs.len()];
    let mut placed = 0;
    let mut arc_items: Vec<&[(usize, End)]> = alloc::vec![&[]; n2 + 1];
    for &(arc, items) in gaps {
        arc_items[arc] = items;
    }
    for p in 0..=n2 {
        for &(a, end) in arc_items[p] {
            let slot = p + placed;
            match end {
                End::Tail => new_pos[a].0 = slot,
                End::Head => new_pos[a].1 = slot,
            }
            placed += 1;
        }
        shift[p] = placed;
    }
    debug_assert_eq!(placed, added);
    let mut arrows: Vec<Arrow> = d
        .arrows()
        .iter()
        .map(|a| Arrow { tail: a.tail + shift[a.tail], head: a.head + shift[a.head], sign: a.sign })
        .collect();
    arrows.extend(signs.iter().zip(&new_pos).map(|(&sign, &(tail, head))| Arrow { tail, head, sign }));
    GaussDiagram::new(arrows).expect("insertion keeps positions a permutation")
}

fn remove(d: &GaussDiagram, gone: &[usize]) -> GaussDiagram {
    let n2 = d.positions();
    let mut dead = alloc::vec![false; n2];
    for &i in gone {
        dead[d.arrows()[i].tail] = true;
        dead[d.arrows()[i].head] = true;
    }
    let mut rank = alloc::vec![0usize; n2];
    let mut next = 0;
    for p in 0..n2 {
        rank[p] = next;
        if !dead[p] {
            next += 1;
        }
    }
    let arrows = d
        .arrows()
        .iter()
        .enumerate()
        .filter(|(i, _)| !gone.contains(i))
        .map(|(_, a)| Arrow { tail: rank[a.tail], head: rank[a.head], sign: a.sign })
        .collect();
    GaussDiagram::new(arrows).expect("removal keeps positions a permutation")
}

fn is_kink(d: &GaussDiagram, i: usize) -> bool {
    let (a, n2) = (d.arrows()[i], d.positions());
    adjacent(a.tail, a.head, n2) || adjacent(a.head, a.tail, n2)
}

fn is_bigon(d: &GaussDiagram, i: usize, j: usize) -> bool {
    let (a, b, n2) = (d.arrows()[i], d.arrows()[j], d.positions());
    let adj = |p, q| adjacent(p, q, n2) || adjacent(q, p, n2);
    a.sign != b.sign && adj(a.tail, b.tail) && adj(a.head, b.head)
}

/// `Some(true)` if the triple is in the before form, `Some(false)` for the after form.
fn triangle_form(d: &GaussDiagram, t: [usize; 3]) -> Option<bool> {
    let n2 = d.positions();
    let [a, b, c] = t.map(|i| d.arrows()[i]);
    if [a, b, c].iter().any(|x| x.sign != Sign::Positive) {
        return None;
    }
    let pairs = [(a.tail, b.tail), (a.head, c.tail), (b.head, c.head)];
    if pairs.iter().all(|&(p, q)| adjacent(p, q, n2)) {
        Some(true)
    } else if pairs.iter().all(|&(p, q)| adjacent(q, p, n2)) {
        Some(false)
    } else {
        None
    }
}

impl GaussDiagram {
    /// Arrows removable by RI.
    pub fn kinks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| is_kink(self, i)).collect()
    }

    /// Pairs removable by RII, as `(i, j)` with `i < j`.
    pub fn bigons(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if is_bigon(self, i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Ordered triples matching the RIII configuration in either form.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a != b && b != c && a != c && triangle_form(self, [a, b, c]).is_some() {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Applies a move after checking its precondition.
    pub fn apply_move(&self, m: &MoveSpec) -> Result<GaussDiagram, MoveError> {
        let max = self.positions();
        let arc_ok = |arc: usize| if arc > max { Err(MoveError::Arc { arc, max }) } else { Ok(()) };
        match *m {
            MoveSpec::RiInsert { arc, sign, head_first } => {
                arc_ok(arc)?;
                let items: &[(usize, End)] =
                    if head_first { &[(0, End::Head), (0, End::Tail)] } else { &[(0, End::Tail), (0, End::Head)] };
                Ok(insert(self, &[(arc, items)], &[sign]))
            }
            MoveSpec::RiRemove { arrow } => {
                check_arrows(self, &[arrow])?;
                if !is_kink(self, arrow) {
                    return Err(MoveError::NotAKink(arrow));
                }
                Ok(remove(self, &[arrow]))
            }
            MoveSpec::RiiInsert { from_arc, to_arc, crossing } => {
                arc_ok(from_arc)?;
                arc_ok(to_arc)?;
                let heads: [(usize, End); 2] =
                    if crossing { [(0, End::Head), (1, End::Head)] } else { [(1, End::Head), (0, End::Head)] };
                let tails = [(0, End::Tail), (1, End::Tail)];
                let signs = [Sign::Positive, Sign::Negative];
                if from_arc == to_arc {
                    let all = [tails[0], tails[1], heads[0], heads[1]];
                    Ok(insert(self, &[(from_arc, &all)], &signs))
                } else {
                    Ok(insert(self, &[(from_arc, &tails), (to_arc, &heads)], &signs))
                }
            }
            MoveSpec::RiiRemove { first, second } => {
                check_arrows(self, &[first, second])?;
                if !is_bigon(self, first, second) {
                    return Err(MoveError::NotABigon(first, second));
                }
                Ok(remove(self, &[first, second]))
            }
            MoveSpec::Riii { arrows } => {
                check_arrows(self, &arrows)?;
                if triangle_form(self, arrows).is_none() {
                    return Err(MoveError::NotATriangle(arrows));
                }
                let mut out = self.arrows.clone();
                let [a, b, c] = arrows;
                let (at, bt) = (out[a].tail, out[b].tail);
                out[a].tail = bt;
                out[b].tail = at;
                let (ah, ct) = (out[a].head, out[c].tail);
                out[a].head = ct;
                out[c].tail = ah;
                let (bh, ch) = (out[b].head, out[c].head);
                out[b].head = ch;
                out[c].head = bh;
                Ok(GaussDiagram::new(out).expect("swapping endpoints keeps a permutation"))
            }
        }
    }
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

fn draw_move<R: Rng + ?Sized>(d: &GaussDiagram, rng: &mut R) -> MoveSpec {
    let max = d.positions();
    loop {
        match rng.gen_range(0..5) {
            0 => {
                return MoveSpec::RiInsert {
                    arc: rng.gen_range(0..=max),
                    sign: random_sign(rng),
                    head_first: rng.gen(),
                }
            }
            1 => {
                let k = d.kinks();
                if !k.is_empty() {
                    return MoveSpec::RiRemove { arrow: k[rng.gen_range(0..k.len())] };
                }
            }
            2 => {
                return MoveSpec::RiiInsert {
                    from_arc: rng.gen_range(0..=max),
                    to_arc: rng.gen_range(0..=max),
                    crossing: rng.gen(),
                }
            }
            3 => {
                let b = d.bigons();
                if !b.is_empty() {
                    let (first, second) = b[rng.gen_range(0..b.len())];
                    return MoveSpec::RiiRemove { first, second };
                }
            }
            _ => {
                let t = d.triangles();
                if !t.is_empty() {
                    return MoveSpec::Riii { arrows: t[rng.gen_range(0..t.len())] };
                }
            }
        }
    }
}

/// Applies `steps` random applicable moves, returning the diagram and the moves used.
pub fn walk_with_trace<R: Rng + ?Sized>(d: &GaussDiagram, steps: usize, rng: &mut R) -> (GaussDiagram, Vec<MoveSpec>) {
    let mut cur = d.clone();
    let mut trace = Vec::with_capacity(steps);
    for _ in 0..steps {
        let m = draw_move(&cur, rng);
        cur = cur.apply_move(&m).expect("drawn moves satisfy their preconditions");
        trace.push(m);
    }
    (cur, trace)
}

/// Applies `steps` random applicable moves, deterministically per `seed`.
pub fn random_move_walk(d: &GaussDiagram, steps: usize, seed: u64) -> GaussDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    walk_with_trace(d, steps, &mut rng).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{parse_gauss_code, serialize_gauss_code};

    #[test]
    fn kink_round_trip() {
        let u = GaussDiagram::unknot();
        let k = u.apply_move(&MoveSpec::RiInsert { arc: 0, sign: Sign::Positive, head_first: false }).unwrap();
        assert_eq!(serialize_gauss_code(&k), "O1+U1+");
        assert_eq!(k.apply_move(&MoveSpec::RiRemove { arrow: 0 }).unwrap(), u);
    }

    #[test]
    fn bigon_removal() {
        let d = parse_gauss_code("O1+U2-U1+O2-").unwrap();
        assert_eq!(d.bigons(), alloc::vec![(0, 1)]);
        assert!(d.apply_move(&MoveSpec::RiiRemove { first: 0, second: 1 }).unwrap().is_empty());
        let same = parse_gauss_code("O1+U2+U1+O2+").unwrap();
        assert_eq!(same.apply_move(&MoveSpec::RiiRemove { first: 0, second: 1 }), Err(MoveError::NotABigon(0, 1)));
    }

    #[test]
    fn bigon_insert_patterns() {
        let base = parse_gauss_code("O1+U1+").unwrap();
        let x = base.apply_move(&MoveSpec::RiiInsert { from_arc: 0, to_arc: 1, crossing: true }).unwrap();
        assert_eq!(serialize_gauss_code(&x), "O1+O2-O3+U1+U2-U3+");
        assert!(x.arrows_cross(1, 2).unwrap());
        let y = base.apply_move(&MoveSpec::RiiInsert { from_arc: 0, to_arc: 1, crossing: false }).unwrap();
        assert!(!y.arrows_cross(1, 2).unwrap());
        assert_eq!(y.bigons(), alloc::vec![(1, 2)]);
    }

    #[test]
    fn triangle_swaps_back() {
        let d = parse_gauss_code("O1+O2+U1+O3+U2+U3+").unwrap();
        let t = d.triangles();
        assert_eq!(t, alloc::vec![[0, 1, 2]]);
        let e = d.apply_move(&MoveSpec::Riii { arrows: [0, 1, 2] }).unwrap();
        assert_eq!(e.triangles(), alloc::vec![[0, 1, 2]]);
        assert_eq!(e.apply_move(&MoveSpec::Riii { arrows: [0, 1, 2] }).unwrap(), d);
    }

    #[test]
    fn zero_steps_is_identity() {
        let d = parse_gauss_code("O1+U2+O3+U1+O2+U3+").unwrap();
        assert_eq!(random_move_walk(&d, 0, 7), d);
    }
}
