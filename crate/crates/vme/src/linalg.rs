//! Small dense real linear algebra used by the variational core.
//!
//! Everything here works on square matrices of dimension at most 16, stored
//! row-major. Nothing is tuned for size.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Condition-number ceiling above which a solve is reported as singular.
pub const COND_LIMIT: f64 = 1e9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mat {
    n: usize,
    a: Vec<f64>,
}

impl Mat {
    pub fn zeros(n: usize) -> Self {
        Mat { n, a: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n);
        for k in 0..n {
            m[(k, k)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut m = Mat::zeros(n);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix rows must be square");
            for (c, v) in row.iter().enumerate() {
                m[(r, c)] = *v;
            }
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = Mat::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|r| self.a[r * self.n..(r + 1) * self.n].to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.n, |r, c| self[(c, r)])
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        debug_assert_eq!(v.len(), self.n);
        (0..self.n).map(|r| dot(&self.a[r * self.n..(r + 1) * self.n], v)).collect()
    }

    /// `xᵀ · self · y`
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        dot(x, &self.mul_vec(y))
    }

    pub fn sub_scaled_identity(&self, s: f64) -> Mat {
        let mut m = self.clone();
        for k in 0..self.n {
            m[(k, k)] -= s;
        }
        m
    }

    pub fn scale(&self, s: f64) -> Mat {
        Mat { n: self.n, a: self.a.iter().map(|x| x * s).collect() }
    }

    pub fn max_abs(&self) -> f64 {
        self.a.iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = f64;
    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.a[r * self.n + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        &mut self.a[r * self.n + c]
    }
}

pub fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn norm(x: &[f64]) -> f64 {
    dot(x, x).sqrt()
}

pub fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Solves `m · x = b` by Gaussian elimination with partial pivoting.
///
/// The condition estimate is the ratio of the largest to the smallest pivot
/// magnitude, scaled by the matrix norm; it is crude but adequate for the
/// tiny systems handled here.
pub fn solve(m: &Mat, b: &[f64]) -> Result<Vec<f64>, Error> {
    let n = m.dim();
    if b.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.len() });
    }
    let scale = m.max_abs();
    if n == 0 {
        return Ok(Vec::new());
    }
    if scale == 0.0 || !scale.is_finite() {
        return Err(Error::SingularSystem);
    }
    let mut a = m.clone();
    let mut x = b.to_vec();
    let mut min_pivot = f64::INFINITY;
    let mut max_pivot: f64 = 0.0;
    for col in 0..n {
        let (piv, pval) = (col..n)
            .map(|r| (r, a[(r, col)].abs()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        min_pivot = min_pivot.min(pval);
        max_pivot = max_pivot.max(pval);
        if pval <= scale / COND_LIMIT {
            return Err(Error::SingularSystem);
        }
        if piv != col {
            for c in 0..n {
                let t = a[(col, c)];
                a[(col, c)] = a[(piv, c)];
                a[(piv, c)] = t;
            }
            x.swap(col, piv);
        }
        for r in col + 1..n {
            let f = a[(r, col)] / a[(col, col)];
            if f == 0.0 {
                continue;
            }
            for c in col..n {
                a[(r, c)] -= f * a[(col, c)];
            }
            x[r] -= f * x[col];
        }
    }
    if max_pivot / min_pivot > COND_LIMIT {
        return Err(Error::SingularSystem);
    }
    for r in (0..n).rev() {
        let mut s = x[r];
        for c in r + 1..n {
            s -= a[(r, c)] * x[c];
        }
        x[r] = s / a[(r, r)];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_recovers_known_solution() {
        let m = Mat::from_rows(&[vec![0.0, 2.0, 1.0], vec![1.0, -1.0, 0.0], vec![3.0, 0.0, 4.0]]);
        let x = vec![1.0, -2.0, 0.5];
        let b = m.mul_vec(&x);
        let got = solve(&m, &b).unwrap();
        for (g, e) in got.iter().zip(&x) {
            assert!((g - e).abs() < 1e-14);
        }
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let m = Mat::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(matches!(solve(&m, &[1.0, 1.0]), Err(Error::SingularSystem)));
        assert!(matches!(solve(&Mat::zeros(2), &[0.0, 0.0]), Err(Error::SingularSystem)));
    }

    #[test]
    fn bilinear_matches_manual_sum() {
        let m = Mat::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert_eq!(m.bilinear(&[1.0, 0.0], &[0.0, 1.0]), 2.0);
        assert_eq!(m.bilinear(&[0.0, 1.0], &[1.0, 0.0]), 3.0);
    }
}
