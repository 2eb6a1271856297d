//! Compressed sparse row storage for Hermitian operators.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Field of operator entries: real for the Dirichlet Laplacian, complex for
/// magnetic operators.
pub trait Scalar: nalgebra::ComplexField<RealField = f64> + Copy + Send + Sync + 'static {
    fn sample(rng: &mut ChaCha8Rng) -> Self;
    fn conj_s(self) -> Self;
    fn re_f64(self) -> f64;
    fn abs2(self) -> f64;
}

impl Scalar for f64 {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        rng.random::<f64>() - 0.5
    }
    fn conj_s(self) -> Self {
        self
    }
    fn re_f64(self) -> f64 {
        self
    }
    fn abs2(self) -> f64 {
        self * self
    }
}

impl Scalar for Complex64 {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
    }
    fn conj_s(self) -> Self {
        self.conj()
    }
    fn re_f64(self) -> f64 {
        self.re
    }
    fn abs2(self) -> f64 {
        self.norm_sqr()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SparseOperator<T> {
    n: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<T>,
}

impl<T: Scalar> SparseOperator<T> {
    /// Build from `(row, col, value)` triplets; duplicates are summed and
    /// each row is sorted by column.
    pub fn from_triplets(n: usize, mut triplets: Vec<(usize, usize, T)>) -> Self {
        triplets.sort_by_key(|t| (t.0, t.1));
        let mut row_ptr = vec![0; n + 1];
        let mut cols = Vec::with_capacity(triplets.len());
        let mut vals: Vec<T> = Vec::with_capacity(triplets.len());
        let mut last: Option<(usize, usize)> = None;
        for (r, c, v) in triplets {
            assert!(r < n && c < n, "triplet ({r},{c}) out of range for n={n}");
            if last == Some((r, c)) {
                let x = vals.last_mut().unwrap();
                *x += v;
            } else {
                cols.push(c);
                vals.push(v);
                row_ptr[r + 1] += 1;
                last = Some((r, c));
            }
        }
        for i in 0..n {
            row_ptr[i + 1] += row_ptr[i];
        }
        SparseOperator { n, row_ptr, cols, vals }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    /// Column indices and values of row `i`.
    pub fn row(&self, i: usize) -> (&[usize], &[T]) {
        let r = self.row_ptr[i]..self.row_ptr[i + 1];
        (&self.cols[r.clone()], &self.vals[r])
    }

    pub fn entry(&self, i: usize, j: usize) -> T {
        let (c, v) = self.row(i);
        match c.binary_search(&j) {
            Ok(k) => v[k],
            Err(_) => T::zero(),
        }
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.n).map(|i| self.entry(i, i)).collect()
    }

    /// `y = A x`.
    pub fn apply(&self, x: &[T], y: &mut [T]) {
        for (i, yi) in y.iter_mut().enumerate() {
            let (c, v) = self.row(i);
            let mut s = T::zero();
            for (&j, &a) in c.iter().zip(v) {
                s += a * x[j];
            }
            *yi = s;
        }
    }

    pub fn apply_vec(&self, x: &[T]) -> Vec<T> {
        let mut y = vec![T::zero(); self.n];
        self.apply(x, &mut y);
        y
    }

    /// Largest `|a_ij − conj(a_ji)|` over stored entries.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.n {
            let (c, v) = self.row(i);
            for (&j, &a) in c.iter().zip(v) {
                worst = worst.max((a - self.entry(j, i).conj_s()).abs2().sqrt());
            }
        }
        worst
    }

    pub fn to_dense(&self) -> DMatrix<T> {
        let mut m = DMatrix::from_element(self.n, self.n, T::zero());
        for i in 0..self.n {
            let (c, v) = self.row(i);
            for (&j, &a) in c.iter().zip(v) {
                m[(i, j)] = a;
            }
        }
        m
    }

    /// Entrywise scaling, used for the exact `s⁻²` scaling law.
    pub fn scaled(&self, s: f64) -> Self {
        SparseOperator { vals: self.vals.iter().map(|v| v.scale(s)).collect(), ..self.clone() }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> SparseOperator<U> {
        SparseOperator {
            n: self.n,
            row_ptr: self.row_ptr.clone(),
            cols: self.cols.clone(),
            vals: self.vals.iter().map(|&v| f(v)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_are_merged() {
        let a = SparseOperator::from_triplets(2, vec![(0, 0, 1.0), (0, 0, 2.0), (1, 0, -1.0), (0, 1, -1.0), (1, 1, 4.0)]);
        assert_eq!(a.entry(0, 0), 3.0);
        assert_eq!(a.nnz(), 4);
        assert_eq!(a.apply_vec(&[1.0, 1.0]), vec![2.0, 3.0]);
        assert_eq!(a.hermitian_defect(), 0.0);
    }
}
