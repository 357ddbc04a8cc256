//! Exact dense linear algebra over the rationals and integers, sized for
//! Cartan matrices (rank at most a few dozen). No floating point anywhere.

use num::{BigInt, One, Signed, Zero};

pub type Q = num::BigRational;

/// Rational zero, shorthand for matrix builders.
pub fn q0() -> Q {
    Q::zero()
}

/// Rational one.
pub fn q1() -> Q {
    Q::one()
}

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational p/q; panics if q == 0.
pub fn qr(p: i64, q: i64) -> Q {
    assert!(q != 0, "zero denominator");
    Q::new(BigInt::from(p), BigInt::from(q))
}

/// Invert a square rational matrix by Gauss-Jordan elimination with exact
/// pivoting. Returns `None` when the matrix is singular.
pub fn invert(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    // Augment with the identity and reduce in place.
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { q1() } else { q0() }));
            r
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot_row);
        let pivot = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= pivot.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..2 * n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Multiply a rational matrix by a column vector.
pub fn mat_vec(a: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).fold(q0(), |s, t| s + t))
        .collect()
}

/// Determinant of an integer matrix, by exact rational elimination.
pub fn det_int(a: &[Vec<i64>]) -> BigInt {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .map(|row| row.iter().map(|&x| qi(x)).collect())
        .collect();
    let mut det = q1();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot_row != col {
            m.swap(col, pivot_row);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= pivot.clone();
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let factor = &m[r][col] / &pivot;
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    assert!(det.is_integer(), "integer matrix has integer determinant");
    det.to_integer()
}

/// Smith normal form of a nonsingular integer matrix. Returns `(u, d)` where
/// `u` is the unimodular row transform and `d` the invariant factors, i.e.
/// `u * a * v = diag(d)` for some unimodular `v` (not returned) with
/// `d[k] | d[k+1]`. Callers use `u` and `d` to present the cokernel
/// `Z^n / a Z^n` as a direct sum of cyclic groups.
pub fn smith_normal_form(a: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let n = a.len();
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();

    let row_sub = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, q: &BigInt| {
        for c in 0..n {
            let dm = q * &m[src][c];
            m[dst][c] -= dm;
            let du = q * &u[src][c];
            u[dst][c] -= du;
        }
    };

    for k in 0..n {
        'step: loop {
            // Move the smallest-magnitude nonzero entry of the trailing
            // block to the pivot position.
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if !m[i][j].is_zero()
                        && best
                            .map(|(bi, bj)| m[i][j].magnitude() < m[bi][bj].magnitude())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break 'step };
            m.swap(k, bi);
            u.swap(k, bi);
            for row in m.iter_mut() {
                row.swap(k, bj);
            }

            // Reduce column k below the pivot, then row k right of it.
            let mut dirty = false;
            for i in k + 1..n {
                if !m[i][k].is_zero() {
                    let q = &m[i][k] / &m[k][k];
                    row_sub(&mut m, &mut u, i, k, &q);
                    if !m[i][k].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..n {
                if !m[k][j].is_zero() {
                    let q = &m[k][j] / &m[k][k];
                    for i in 0..n {
                        let delta = &q * &m[i][k];
                        m[i][j] -= delta;
                    }
                    if !m[k][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'step;
            }

            if m[k][k].is_negative() {
                for c in 0..n {
                    m[k][c] = -m[k][c].clone();
                    u[k][c] = -u[k][c].clone();
                }
            }

            // Divisibility: fold any non-multiple into the pivot's row and
            // re-run this step; the pivot gcd strictly shrinks, so this ends.
            for i in k + 1..n {
                for j in k + 1..n {
                    if !(&m[i][j] % &m[k][k]).is_zero() {
                        let minus_one = -BigInt::one();
                        row_sub(&mut m, &mut u, k, i, &minus_one);
                        continue 'step;
                    }
                }
            }
            break 'step;
        }
    }

    let d = (0..n).map(|i| m[i][i].clone()).collect();
    (u, d)
}
