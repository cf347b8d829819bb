//! Diagonal reduction of integer matrices modulo `m`.

use alloc::vec::Vec;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, s, t)` with `s*a + t*b = g = gcd(a, b)`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    // exact division keeps the pivot row or column untouched
    if a != 0 && b % a == 0 {
        return (a, 1, 0);
    }
    let (mut r0, mut r1, mut s0, mut s1, mut t0, mut t1) = (a, b, 1i128, 0i128, 0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0, s0, t0)
}

/// Result of reducing `A` to diagonal form `R·A·C = D` over ℤ_m.
pub(crate) struct Diagonal {
    /// Diagonal entries `D[k][k]`, one per column (zero past the rank).
    pub diag: Vec<u64>,
    /// Column transform `C`, stored by column: `cols[k]` is column `k`.
    pub cols: Vec<Vec<u64>>,
    /// `C⁻¹`, stored by row.
    pub inv_rows: Vec<Vec<u64>>,
}

/// Diagonalizes `rows` (each of length `ncols`) over ℤ_m using unimodular
/// 2×2 row and column operations.
pub(crate) fn diagonalize(mut a: Vec<Vec<u64>>, ncols: usize, m: u64) -> Diagonal {
    let mi = i128::from(m);
    let red = |x: i128| x.rem_euclid(mi) as u64;
    let mut cols: Vec<Vec<u64>> = (0..ncols).map(|k| unit(k, ncols)).collect();
    let mut inv_rows: Vec<Vec<u64>> = (0..ncols).map(|k| unit(k, ncols)).collect();
    a.retain(|r| r.iter().any(|&v| v != 0));
    let nrows = a.len();
    let mut diag = alloc::vec![0u64; ncols];

    // Combine vectors u, v with the unimodular matrix [[s, t], [-b/g, a/g]].
    let combine = |u: &mut Vec<u64>, v: &mut Vec<u64>, s: i128, t: i128, p: i128, q: i128| {
        for (x, y) in u.iter_mut().zip(v.iter_mut()) {
            let (xi, yi) = (i128::from(*x), i128::from(*y));
            *x = red(s * xi + t * yi);
            *y = red(p * xi + q * yi);
        }
    };

    for k in 0..ncols.min(nrows) {
        // pivot: any nonzero entry in the remaining block
        let Some((pr, pc)) = (k..nrows).find_map(|r| (k..ncols).find(|&c| a[r][c] != 0).map(|c| (r, c))) else {
            break;
        };
        a.swap(k, pr);
        if pc != k {
            for row in a.iter_mut() {
                row.swap(k, pc);
            }
            cols.swap(k, pc);
            inv_rows.swap(k, pc);
        }
        loop {
            let mut changed = false;
            for r in k + 1..nrows {
                if a[r][k] == 0 {
                    continue;
                }
                let (x, y) = (i128::from(a[k][k]), i128::from(a[r][k]));
                let (g, s, t) = ext_gcd(x, y);
                let (head, tail) = a.split_at_mut(r);
                combine(&mut head[k], &mut tail[0], s, t, -y / g, x / g);
                changed = true;
            }
            for c in k + 1..ncols {
                if a[k][c] == 0 {
                    continue;
                }
                let (x, y) = (i128::from(a[k][k]), i128::from(a[k][c]));
                let (g, s, t) = ext_gcd(x, y);
                let (p, q) = (-y / g, x / g);
                for row in a.iter_mut() {
                    let (u, v) = (i128::from(row[k]), i128::from(row[c]));
                    row[k] = red(s * u + t * v);
                    row[c] = red(p * u + q * v);
                }
                let (head, tail) = cols.split_at_mut(c);
                combine(&mut head[k], &mut tail[0], s, t, p, q);
                // inverse of [[s, p], [t, q]] acting on rows k, c of C⁻¹ is [[q, -p], [-t, s]]
                let (head, tail) = inv_rows.split_at_mut(c);
                combine(&mut head[k], &mut tail[0], q, -p, -t, s);
                changed = true;
            }
            if !changed || (k + 1..nrows).all(|r| a[r][k] == 0) && (k + 1..ncols).all(|c| a[k][c] == 0) {
                break;
            }
        }
        diag[k] = a[k][k];
    }
    Diagonal { diag, cols, inv_rows }
}

fn unit(k: usize, n: usize) -> Vec<u64> {
    let mut v = alloc::vec![0; n];
    v[k] = 1;
    v
}
