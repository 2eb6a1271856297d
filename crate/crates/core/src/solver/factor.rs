// Envelope (skyline) Cholesky factorization A = L Lᴴ of a sparse Hermitian
// positive definite matrix, after a reverse Cuthill-McKee reordering.
//
// Grid Laplacians have bandwidth about sqrt(N) after RCM, so the factor costs
// O(N²) flops and O(N^1.5) memory. That is plenty for the mesh sizes here and
// keeps the code dependency free.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::solver::operator::{Scalar, SparseOperator};

/// Reverse Cuthill-McKee ordering; `perm[new] = old`.
pub fn reverse_cuthill_mckee<T: Scalar>(a: &SparseOperator<T>) -> Vec<usize> {
    let n = a.dim();
    let degree = |i: usize| a.row(i).0.len();
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        // Start each component from a pseudo-peripheral node.
        let seed = (0..n).filter(|&i| !visited[i]).min_by_key(|&i| degree(i)).unwrap();
        let start = pseudo_peripheral(a, seed, &visited);
        visited[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let mut nb: Vec<usize> = a.row(v).0.iter().copied().filter(|&w| !visited[w]).collect();
            nb.sort_by_key(|&w| (degree(w), w));
            for w in nb {
                visited[w] = true;
                queue.push_back(w);
            }
        }
    }
    order.reverse();
    order
}

fn pseudo_peripheral<T: Scalar>(a: &SparseOperator<T>, seed: usize, blocked: &[bool]) -> usize {
    let mut v = seed;
    let mut ecc = 0;
    for _ in 0..8 {
        let (far, depth) = bfs_far(a, v, blocked);
        if depth <= ecc {
            break;
        }
        ecc = depth;
        v = far;
    }
    v
}

fn bfs_far<T: Scalar>(a: &SparseOperator<T>, s: usize, blocked: &[bool]) -> (usize, usize) {
    let n = a.dim();
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    let mut last = (s, 0);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v];
        if dv > last.1 || (dv == last.1 && a.row(v).0.len() < a.row(last.0).0.len()) {
            last = (v, dv);
        }
        for &w in a.row(v).0 {
            if !blocked[w] && dist[w] == usize::MAX {
                dist[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    last
}

/// Lower-triangular envelope factor in the permuted ordering.
#[derive(Debug, Clone)]
pub struct Cholesky<T> {
    perm: Vec<usize>,
    /// `first[i]`: first stored column of row `i`.
    first: Vec<usize>,
    /// `start[i]`: offset of row `i` in `data`; row `i` holds columns
    /// `first[i]..=i`.
    start: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> Cholesky<T> {
    pub fn factor(a: &SparseOperator<T>) -> Result<Self> {
        let n = a.dim();
        let perm = reverse_cuthill_mckee(a);
        let mut inv = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut first = vec![0; n];
        for i in 0..n {
            let cols = a.row(perm[i]).0;
            first[i] = cols.iter().map(|&c| inv[c]).filter(|&c| c <= i).min().unwrap_or(i);
        }
        let mut start = vec![0; n + 1];
        for i in 0..n {
            start[i + 1] = start[i] + (i - first[i] + 1);
        }
        let mut data = vec![T::zero(); start[n]];
        for i in 0..n {
            let (cols, vals) = a.row(perm[i]);
            for (&c, &v) in cols.iter().zip(vals) {
                let j = inv[c];
                if j <= i {
                    data[start[i] + j - first[i]] = v;
                }
            }
        }

        for i in 0..n {
            let fi = first[i];
            for j in fi..i {
                let fj = first[j];
                let lo = fi.max(fj);
                let ri = &data[start[i] + lo - fi..start[i] + j - fi];
                let rj = &data[start[j] + lo - fj..start[j] + j - fj];
                let mut s = T::zero();
                for (&x, &y) in ri.iter().zip(rj) {
                    s += x * y.conj_s();
                }
                let ljj = data[start[j] + j - fj];
                let idx = start[i] + j - fi;
                data[idx] = (data[idx] - s) / ljj;
            }
            let row = &data[start[i]..start[i] + i - fi];
            let s: f64 = row.iter().map(|x| x.abs2()).sum();
            let d = data[start[i] + i - fi].re_f64() - s;
            if !(d > 0.0) || !d.is_finite() {
                return Err(Error::NotPositiveDefinite { pivot: perm[i], value: d });
            }
            data[start[i] + i - fi] = T::from_real(d.sqrt());
        }
        start.truncate(n);
        Ok(Cholesky { perm, first, start, data })
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// Solve `A x = b`.
    pub fn solve(&self, b: &[T]) -> Vec<T> {
        let n = self.dim();
        let mut y: Vec<T> = self.perm.iter().map(|&p| b[p]).collect();
        // forward: L y = b
        for i in 0..n {
            let fi = self.first[i];
            let row = &self.data[self.start[i]..self.start[i] + i - fi];
            let mut s = T::zero();
            for (k, &l) in row.iter().enumerate() {
                s += l * y[fi + k];
            }
            let lii = self.data[self.start[i] + i - fi];
            y[i] = (y[i] - s) / lii;
        }
        // backward: Lᴴ x = y, column sweep
        for i in (0..n).rev() {
            let fi = self.first[i];
            let lii = self.data[self.start[i] + i - fi];
            let xi = y[i] / lii;
            y[i] = xi;
            let row = &self.data[self.start[i]..self.start[i] + i - fi];
            for (k, &l) in row.iter().enumerate() {
                y[fi + k] -= l.conj_s() * xi;
            }
        }
        let mut x = vec![T::zero(); n];
        for (new, &old) in self.perm.iter().enumerate() {
            x[old] = y[new];
        }
        x
    }

    /// Solve for several right-hand sides in parallel.
    pub fn solve_many(&self, rhs: &[Vec<T>]) -> Vec<Vec<T>> {
        rhs.par_iter().map(|b| self.solve(b)).collect()
    }

    /// Stored entries of the factor.
    pub fn envelope_size(&self) -> usize {
        self.data.len()
    }
}
