//! Exact integer determinants by fraction-free (Bareiss) elimination.

use alloc::vec::Vec;

/// Leading principal minors `det(M[..1,..1]), det(M[..2,..2]), …` of a square
/// integer matrix.
///
/// Bareiss elimination without pivoting produces the `k`-th minor as the
/// `k`-th pivot. If a pivot vanishes the remaining minors are computed
/// directly.
pub fn leading_principal_minors(m: &[Vec<i64>]) -> Vec<i128> {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|row| row.iter().map(|&x| x as i128).collect()).collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev: i128 = 1;
    for k in 0..n {
        let pivot = a[k][k];
        minors.push(pivot);
        if pivot == 0 {
            for size in k + 2..=n {
                let sub: Vec<Vec<i64>> = m[..size].iter().map(|row| row[..size].to_vec()).collect();
                minors.push(determinant(&sub));
            }
            return minors;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = pivot;
    }
    minors
}

/// Determinant of a square integer matrix, with row pivoting.
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|row| row.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
