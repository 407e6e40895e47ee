//! Small dense exact linear algebra over the rationals.

use num_traits::Zero;

use super::scalar::{self, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut a);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let k = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = Scalar::zero();
                    for t in 0..k {
                        s += &row[t] * &b[t][j];
                    }
                    s
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    #[test]
    fn inverse_of_unimodular() {
        let m = vec![vec![int(2), int(1)], vec![int(1), int(1)]];
        let inv = inverse(&m).unwrap();
        let id = mat_mul(&m, &inv);
        assert_eq!(id, vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
        assert!(inverse(&vec![vec![int(1), int(2)], vec![int(2), int(4)]]).is_none());
        assert_eq!(rank(&vec![vec![int(1), int(2)], vec![int(2), int(4)]]), 1);
    }
}
