//! Lowest eigenpairs of a sparse Hermitian positive definite operator.
//!
//! Small problems go straight to a dense eigendecomposition. Larger ones use
//! shift-invert block Krylov iteration: the basis grows by `A⁻¹` applied to
//! the residuals of unconverged Ritz vectors, Rayleigh-Ritz is done with `A`
//! itself, and the basis is thickly restarted on the current Ritz block when
//! it gets too large. Every new block is orthogonalized twice against the
//! basis.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::solver::factor::Cholesky;
use crate::solver::operator::{Scalar, SparseOperator};

/// Problems up to this size are solved densely.
pub const DENSE_LIMIT: usize = 150;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Relative residual target: `‖A v − λ v‖ ≤ tol · |λ|`.
    pub tol: f64,
    pub max_iter: usize,
    pub seed: u64,
    /// Extra vectors carried beyond the requested count.
    pub block: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { tol: 1e-10, max_iter: 300, seed: 0x5eed_1234, block: 4 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair<T> {
    pub value: f64,
    /// Unit Euclidean norm.
    pub vector: Vec<T>,
    /// `‖A v − λ v‖`.
    pub residual: f64,
}

/// The `j` smallest eigenpairs in nondecreasing order.
pub fn lowest_eigenpairs<T: Scalar>(op: &SparseOperator<T>, j: usize, config: &SolverConfig) -> Result<Vec<EigenPair<T>>> {
    let n = op.dim();
    if j == 0 || j > n {
        return Err(Error::InvalidInput(format!("requested {j} eigenpairs of an operator of size {n}")));
    }
    let mut pairs = if n <= DENSE_LIMIT { dense(op, j)? } else { krylov(op, j, config)? };
    for p in &mut pairs {
        fix_phase(&mut p.vector);
    }
    Ok(pairs)
}

/// Smallest eigenvalue only.
pub fn lowest_eigenvalue<T: Scalar>(op: &SparseOperator<T>, config: &SolverConfig) -> Result<f64> {
    Ok(lowest_eigenpairs(op, 1, config)?[0].value)
}

/// Rotate so that the entry of largest modulus is real and positive. For a
/// ground state this makes every entry positive.
fn fix_phase<T: Scalar>(v: &mut [T]) {
    let mut best = (0.0, T::one());
    for &x in v.iter() {
        let m = x.abs2();
        if m > best.0 {
            best = (m, x);
        }
    }
    if best.0 == 0.0 {
        return;
    }
    let phase = best.1.conj_s().scale(1.0 / best.0.sqrt());
    for x in v.iter_mut() {
        *x *= phase;
    }
}

fn residual_norm<T: Scalar>(op: &SparseOperator<T>, v: &[T], lambda: f64) -> f64 {
    let av = op.apply_vec(v);
    av.iter().zip(v).map(|(&a, &x)| (a - x.scale(lambda)).abs2()).sum::<f64>().sqrt()
}

fn dense<T: Scalar>(op: &SparseOperator<T>, j: usize) -> Result<Vec<EigenPair<T>>> {
    let eig = op.to_dense().symmetric_eigen();
    let mut idx: Vec<usize> = (0..op.dim()).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let out: Vec<EigenPair<T>> = idx[..j]
        .iter()
        .map(|&k| {
            let value = eig.eigenvalues[k];
            let vector: Vec<T> = eig.eigenvectors.column(k).iter().copied().collect();
            let residual = residual_norm(op, &vector, value);
            EigenPair { value, vector, residual }
        })
        .collect();
    if let Some(p) = out.first() {
        if p.value <= 0.0 {
            return Err(Error::NotPositiveDefinite { pivot: 0, value: p.value });
        }
    }
    Ok(out)
}

fn norm<T: Scalar>(v: &[T]) -> f64 {
    v.iter().map(|x| x.abs2()).sum::<f64>().sqrt()
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    // ⟨a, b⟩ = Σ conj(a_i) b_i
    let mut s = T::zero();
    for (&x, &y) in a.iter().zip(b) {
        s += x.conj_s() * y;
    }
    s
}

/// Orthogonalize `v` against `basis` twice, then normalize. Returns `None`
/// when `v` is numerically inside the span.
fn orthonormalize<T: Scalar>(basis: &[Vec<T>], mut v: Vec<T>) -> Option<Vec<T>> {
    let before = norm(&v);
    if before == 0.0 {
        return None;
    }
    for _ in 0..2 {
        for q in basis {
            let c = dot(q, &v);
            for (x, &y) in v.iter_mut().zip(q) {
                *x -= y * c;
            }
        }
    }
    let after = norm(&v);
    if after < 1e-10 * before {
        return None;
    }
    for x in v.iter_mut() {
        *x = x.scale(1.0 / after);
    }
    Some(v)
}

fn krylov<T: Scalar>(op: &SparseOperator<T>, j: usize, config: &SolverConfig) -> Result<Vec<EigenPair<T>>> {
    let n = op.dim();
    let chol = Cholesky::factor(op)?;
    let p = (j + config.block).min(n);
    let m_max = n.min((3 * p).max(p + 40));

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let start: Vec<Vec<T>> = (0..p).map(|_| (0..n).map(|_| T::sample(&mut rng)).collect()).collect();
    let mut basis: Vec<Vec<T>> = Vec::with_capacity(m_max);
    let mut images: Vec<Vec<T>> = Vec::with_capacity(m_max);
    for v in chol.solve_many(&start) {
        if let Some(q) = orthonormalize(&basis, v) {
            images.push(op.apply_vec(&q));
            basis.push(q);
        }
    }

    let mut best: Vec<f64> = Vec::new();
    let mut worst = f64::INFINITY;
    for _iter in 0..config.max_iter {
        let m = basis.len();
        // H = Vᴴ A V
        let mut h = DMatrix::from_element(m, m, T::zero());
        for a in 0..m {
            for b in a..m {
                let v = dot(&basis[a], &images[b]);
                h[(a, b)] = v;
                h[(b, a)] = v.conj_s();
            }
        }
        let eig = h.symmetric_eigen();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let keep = p.min(m);

        let mut ritz = Vec::with_capacity(keep);
        let mut ritz_images = Vec::with_capacity(keep);
        let mut residuals = Vec::with_capacity(keep);
        let mut values = Vec::with_capacity(keep);
        for &k in &order[..keep] {
            let y = eig.eigenvectors.column(k);
            let mut u = vec![T::zero(); n];
            let mut au = vec![T::zero(); n];
            for (c, &yc) in y.iter().enumerate() {
                for ((ui, aui), (&bi, &ai)) in u.iter_mut().zip(au.iter_mut()).zip(basis[c].iter().zip(&images[c])) {
                    *ui += bi * yc;
                    *aui += ai * yc;
                }
            }
            let theta = eig.eigenvalues[k];
            let r: Vec<T> = au.iter().zip(&u).map(|(&a, &x)| a - x.scale(theta)).collect();
            residuals.push(r);
            values.push(theta);
            ritz.push(u);
            ritz_images.push(au);
        }
        let rnorms: Vec<f64> = residuals.iter().map(|r| norm(r)).collect();
        let converged: Vec<bool> = (0..keep).map(|i| rnorms[i] <= config.tol * values[i].abs()).collect();
        best = values[..j.min(keep)].to_vec();
        worst = (0..j.min(keep)).map(|i| rnorms[i] / values[i].abs()).fold(0.0, f64::max);
        if keep >= j && converged[..j].iter().all(|&c| c) {
            if values[0] <= 0.0 {
                return Err(Error::NotPositiveDefinite { pivot: 0, value: values[0] });
            }
            return Ok((0..j).map(|i| EigenPair { value: values[i], vector: ritz[i].clone(), residual: rnorms[i] }).collect());
        }

        let expand: Vec<Vec<T>> = (0..keep).filter(|&i| !converged[i]).map(|i| residuals[i].clone()).collect();
        let expand = chol.solve_many(&expand);
        if basis.len() + expand.len() > m_max {
            basis = ritz;
            images = ritz_images;
        }
        let mut added = 0;
        for v in expand {
            if let Some(q) = orthonormalize(&basis, v) {
                images.push(op.apply_vec(&q));
                basis.push(q);
                added += 1;
            }
        }
        if added == 0 {
            // Stagnation: refresh with random directions.
            for _ in 0..config.block.max(1) {
                let v: Vec<T> = (0..n).map(|_| T::sample(&mut rng)).collect();
                if let Some(q) = orthonormalize(&basis, chol.solve(&v)) {
                    images.push(op.apply_vec(&q));
                    basis.push(q);
                }
            }
        }
    }
    Err(Error::NotConverged { iterations: config.max_iter, worst_residual: worst, best })
}
