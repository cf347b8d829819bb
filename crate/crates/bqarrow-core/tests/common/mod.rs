//! Shared fixtures and naive oracles for the integration tests.
#![allow(dead_code)]

use bqarrow_core::{ArrowWeight, Biquandle, GaussDiagram, Sign};
use std::collections::HashSet;

/// The two-element biquandle of the worked example: both operations swap 1 and 2.
pub fn flip() -> Biquandle {
    Biquandle::from_one_indexed(&[vec![2, 2], vec![1, 1]], &[vec![2, 2], vec![1, 1]]).unwrap()
}

/// Fox tricoloring quandle, over operation trivial.
pub fn tricolor() -> Biquandle {
    Biquandle::from_one_indexed(
        &[vec![1, 3, 2], vec![3, 2, 1], vec![2, 1, 3]],
        &[vec![1, 1, 1], vec![2, 2, 2], vec![3, 3, 3]],
    )
    .unwrap()
}

/// Dihedral quandle on `p` elements: under(x, y) = 2y - x, over trivial.
pub fn dihedral(p: usize) -> Biquandle {
    let under: Vec<Vec<usize>> = (0..p).map(|x| (0..p).map(|y| (2 * y + p - x) % p).collect()).collect();
    let over: Vec<Vec<usize>> = (0..p).map(|x| vec![x; p]).collect();
    Biquandle::new(&under, &over).unwrap()
}

/// Biquandles satisfying both the stated laws and Yang–Baxter.
pub fn move_safe_biquandles() -> Vec<(&'static str, Biquandle)> {
    vec![("flip", flip()), ("tricolor", tricolor()), ("trivial2", Biquandle::trivial(2)), ("dihedral5", dihedral(5))]
}

pub const Z8_TENSOR: [[[[i64; 2]; 2]; 2]; 2] =
    [[[[0, 2], [6, 4]], [[2, 0], [0, 2]]], [[[6, 0], [0, 6]], [[4, 2], [6, 0]]]];
pub const W1_TENSOR: [[[[i64; 2]; 2]; 2]; 2] =
    [[[[0, 1], [1, 0]], [[1, 0], [2, 3]]], [[[1, 2], [0, 3]], [[0, 3], [3, 0]]]];
pub const W2_TENSOR: [[[[i64; 2]; 2]; 2]; 2] =
    [[[[0, 1], [3, 2]], [[1, 0], [0, 1]]], [[[3, 0], [0, 3]], [[2, 1], [3, 0]]]];
pub const TRICOLOR_TENSOR: [[[[i64; 3]; 3]; 3]; 3] = [
    [[[0, 0, 0], [0, 0, 0], [2, 2, 0]], [[0, 0, 2], [0, 0, 0], [0, 0, 0]], [[0, 2, 0], [0, 0, 0], [2, 0, 0]]],
    [[[0, 0, 0], [0, 2, 2], [0, 0, 2]], [[0, 0, 0], [2, 0, 0], [2, 2, 0]], [[0, 0, 0], [2, 0, 0], [0, 1, 2]]],
    [[[2, 0, 2], [0, 2, 0], [0, 2, 2]], [[2, 0, 0], [0, 2, 1], [2, 0, 2]], [[0, 0, 0], [2, 0, 2], [2, 2, 0]]],
];

fn nested<const N: usize>(t: &[[[[i64; N]; N]; N]; N]) -> Vec<Vec<Vec<Vec<i64>>>> {
    t.iter().map(|a| a.iter().map(|b| b.iter().map(|c| c.to_vec()).collect()).collect()).collect()
}

pub fn z8() -> ArrowWeight {
    ArrowWeight::from_nested(8, &nested(&Z8_TENSOR)).unwrap()
}

pub fn w1() -> ArrowWeight {
    ArrowWeight::from_nested(4, &nested(&W1_TENSOR)).unwrap()
}

pub fn w2() -> ArrowWeight {
    ArrowWeight::from_nested(4, &nested(&W2_TENSOR)).unwrap()
}

pub fn tricolor_z3() -> ArrowWeight {
    ArrowWeight::from_nested(3, &nested(&TRICOLOR_TENSOR)).unwrap()
}

pub const TREFOIL: &str = "O1+U2+O3+U1+O2+U3+";
pub const VIRTUAL_TREFOIL: &str = "O1-O2-U1-U2-";
pub const V4_72: &str = "O1+O2-O3-O4+U3-U1+U4+U2-";

/// Literal reading of the biquandle definition on raw tables.
pub fn naive_is_biquandle(n: usize, u: &[Vec<usize>], o: &[Vec<usize>]) -> bool {
    let diag = (0..n).all(|x| u[x][x] == o[x][x]);
    let perm = |f: &dyn Fn(usize) -> usize| (0..n).map(f).collect::<HashSet<_>>().len() == n;
    let cols = (0..n).all(|x| perm(&|y| o[y][x]) && perm(&|y| u[y][x]));
    let s: HashSet<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (o[y][x], u[x][y]))).collect();
    let mut ex = true;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                ex &= u[u[x][y]][u[z][y]] == u[u[x][z]][o[y][z]];
                ex &= o[u[x][y]][u[z][y]] == u[o[x][z]][o[y][z]];
                ex &= o[o[x][y]][o[z][y]] == o[o[x][z]][u[y][z]];
            }
        }
    }
    diag && cols && s.len() == n * n && ex
}

/// The coloring rule read straight off its definition.
pub fn naive_coloring_ok(d: &GaussDiagram, b: &Biquandle, s: &[usize]) -> bool {
    let n2 = s.len();
    let before = |p: usize| s[(p + n2 - 1) % n2];
    d.arrows().iter().all(|a| match a.sign {
        Sign::Positive => {
            s[a.tail] == b.over(before(a.tail), before(a.head)) && s[a.head] == b.under(before(a.head), before(a.tail))
        }
        Sign::Negative => {
            before(a.tail) == b.over(s[a.tail], s[a.head]) && before(a.head) == b.under(s[a.head], s[a.tail])
        }
    })
}

/// Every assignment of colors to the `2n` segments, filtered through `naive_coloring_ok`.
pub fn naive_colorings(d: &GaussDiagram, b: &Biquandle) -> Vec<Vec<usize>> {
    let n = b.size();
    let len = d.positions().max(1);
    let mut out = Vec::new();
    let mut s = vec![0; len];
    loop {
        if d.is_empty() || naive_coloring_ok(d, b, &s) {
            out.push(s.clone());
        }
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            s[i] += 1;
            if s[i] < n {
                break;
            }
            s[i] = 0;
        }
    }
}

/// The four weight axioms evaluated term by term.
pub fn naive_weight_ok(b: &Biquandle, w: &ArrowWeight) -> bool {
    let n = b.size();
    let m = w.modulus() as i64;
    let f = |x: usize, y: usize, u: usize, v: usize| w.get(x, y, u, v) as i64;
    let (ud, ov) = (|x, y| b.under(x, y), |x, y| b.over(x, y));
    for x in 0..n {
        for y in 0..n {
            if f(x, y, x, y) != 0 {
                return false;
            }
            for u in 0..n {
                for v in 0..n {
                    if f(x, y, u, v) != f(u, v, x, y) {
                        return false;
                    }
                }
            }
            for z in 0..n {
                let lhs = f(x, y, y, z);
                let rhs = f(x, z, ov(y, x), ov(z, x)) + f(x, z, ud(x, z), ud(y, z));
                if (lhs - rhs).rem_euclid(m) != 0 {
                    return false;
                }
                let lhs = f(ud(x, z), ud(y, z), ov(y, x), ov(z, x));
                let rhs = f(x, y, ud(x, y), ov(z, y)) + f(y, z, ud(x, y), ov(z, y));
                if (lhs - rhs).rem_euclid(m) != 0 {
                    return false;
                }
            }
        }
    }
    true
}
