//! Dense matrices as row vectors over any [`Scalar`].

use super::scalar::Scalar;

pub type Mat<T> = Vec<Vec<T>>;

pub fn identity<T: Scalar>(like: &T, n: usize) -> Mat<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { like.one_like() } else { like.zero_like() }).collect())
        .collect()
}

pub fn zeros<T: Scalar>(like: &T, r: usize, c: usize) -> Mat<T> {
    vec![vec![like.zero_like(); c]; r]
}

pub fn mat_mul<T: Scalar>(a: &Mat<T>, b: &Mat<T>) -> Mat<T> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    assert!(a.iter().all(|r| r.len() == k), "inner dimensions differ");
    let like = &b[0][0];
    let mut out = zeros(like, n, m);
    for i in 0..n {
        for j in 0..m {
            let mut s = like.zero_like();
            for l in 0..k {
                s = s + a[i][l].clone() * b[l][j].clone();
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn transpose<T: Clone>(a: &Mat<T>) -> Mat<T> {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_vec<T: Scalar>(a: &Mat<T>, v: &[T]) -> Vec<T> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(v[0].zero_like(), |s, (x, y)| s + x.clone() * y.clone())
        })
        .collect()
}

pub fn max_abs<T: Scalar>(a: &Mat<T>) -> f64 {
    a.iter().flatten().map(|x| x.abs_f64()).fold(0.0, f64::max)
}

pub fn max_abs_diff<T: Scalar>(a: &Mat<T>, b: &Mat<T>) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x.clone() - y.clone()).abs_f64())
        .fold(0.0, f64::max)
}

/// Rank by Gaussian elimination with exact zero tests.
pub fn rank_exact<T: Scalar>(a: &Mat<T>) -> usize {
    let mut m = a.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone() * inv.clone();
                for j in c..cols {
                    let v = m[i][j].clone() - f.clone() * m[r][j].clone();
                    m[i][j] = v;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    #[test]
    fn rank_of_dependent_rows() {
        let q = |n: i64| Rational::from_integer(n.into());
        let a = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(rank_exact(&a), 2);
        let i = identity(&q(0), 3);
        assert_eq!(mat_mul(&a, &i), a);
    }
}
