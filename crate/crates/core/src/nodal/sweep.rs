//! Nodal counts across two-dimensional eigenspaces of the square and of
//! rectangles.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{DomainSpec, GridMask};
use crate::nodal::domains::nodal_domains;
use crate::rect::{courant_sharp_scan, CourantEntry, Rectangle};

/// `cos θ φ_p + sin θ φ_q` on the rectangle `(0, aπ) × (0, bπ)`, where
/// `φ_{m,n}(x, y) = sin(m x / a) sin(n y / b)`.
pub fn combine_rect_eigenfunctions(p: (u32, u32), q: (u32, u32), theta: f64, a: f64, b: f64, mask: &GridMask) -> Vec<f64> {
    let (c, s) = (theta.cos(), theta.sin());
    (0..mask.len())
        .map(|k| {
            let [x, y] = mask.point(k);
            let f = |m: u32, n: u32| (m as f64 * x / a).sin() * (n as f64 * y / b).sin();
            c * f(p.0, p.1) + s * f(q.0, q.1)
        })
        .collect()
}

/// `Φ_{m,n,θ} = cos θ φ_{m,n} + sin θ φ_{n,m}` on `(0, π)²`.
pub fn combine_square_eigenfunctions(m: u32, n: u32, theta: f64, mask: &GridMask) -> Vec<f64> {
    combine_rect_eigenfunctions((m, n), (n, m), theta, 1.0, 1.0, mask)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub max_mu: usize,
    /// Smallest θ attaining the maximum.
    pub argmax: f64,
    /// `(θ, μ)` sorted by θ, uniform samples and refinements together.
    pub table: Vec<(f64, usize)>,
}

/// Samples added on each side of a refined sample.
const REFINE: usize = 16;

/// Sweep θ over `[0, π)` on the square.
pub fn theta_sweep_max_domains(m: u32, n: u32, theta_count: usize, mask: &GridMask) -> Result<SweepResult> {
    theta_sweep_pair((m, n), (n, m), 1.0, 1.0, theta_count, mask)
}

/// Sweep of `cos θ φ_p + sin θ φ_q` over `θ ∈ [0, π)`: a uniform grid
/// `θ_i = iπ/count`, then `REFINE` extra samples on each side of every sample
/// where the count changes or peaks.
pub fn theta_sweep_pair(p: (u32, u32), q: (u32, u32), a: f64, b: f64, theta_count: usize, mask: &GridMask) -> Result<SweepResult> {
    if theta_count < 64 {
        return Err(Error::InvalidInput(format!("θ sweep needs at least 64 samples, got {theta_count}")));
    }
    let mu = |t: f64| nodal_domains(&combine_rect_eigenfunctions(p, q, t, a, b, mask), mask).count;
    let step = PI / theta_count as f64;
    let uniform: Vec<(f64, usize)> = (0..theta_count).into_par_iter().map(|i| (i as f64 * step, mu(i as f64 * step))).collect();

    let mut extra_thetas = Vec::new();
    for i in 0..theta_count {
        let prev = uniform[(i + theta_count - 1) % theta_count].1;
        let next = uniform[(i + 1) % theta_count].1;
        let here = uniform[i].1;
        let peak = here >= prev && here >= next && (here > prev || here > next);
        if peak || here != prev || here != next {
            for r in 1..=REFINE {
                let d = step * r as f64 / (REFINE + 1) as f64;
                extra_thetas.push((uniform[i].0 - d).rem_euclid(PI));
                extra_thetas.push(uniform[i].0 + d);
            }
        }
    }
    let extra: Vec<(f64, usize)> = extra_thetas.into_par_iter().map(|t| (t, mu(t))).collect();
    let mut table = uniform;
    table.extend(extra);
    table.sort_by(|x, y| x.0.total_cmp(&y.0));
    table.dedup_by(|x, y| x.0 == y.0);

    let max_mu = table.iter().map(|e| e.1).max().unwrap_or(0);
    let argmax = table.iter().find(|e| e.1 == max_mu).map(|e| e.0).unwrap_or(0.0);
    Ok(SweepResult { max_mu, argmax, table })
}

/// Grid used for square sweeps: nodes at `kπ/(N+1)` with `N + 1` a multiple
/// of every frequency up to `max_freq`, so that symmetric nodal lines fall on
/// nodes.
pub fn square_sweep_mask(max_freq: u32) -> Result<GridMask> {
    let cells = 24 * max_freq.max(1) as usize;
    GridMask::rasterize(&DomainSpec::pi_square(), PI / cells as f64)
}

/// Courant-sharp classification of the square `(0, π)²` up to `lambda_max`,
/// with two-dimensional eigenspaces resolved by θ-sweeps.
pub fn square_courant_scan(lambda_max: f64, theta_count: usize) -> Result<Vec<CourantEntry>> {
    let rect = Rectangle::unit_square();
    courant_sharp_scan(&rect, lambda_max, |p, q| {
        let mask = square_sweep_mask(p.0.max(p.1).max(q.0).max(q.1))?;
        Ok(theta_sweep_pair(p, q, 1.0, 1.0, theta_count, &mask)?.max_mu as u64)
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScaledFamily {
    pub k: u32,
    /// `10 · 4^k`.
    pub eigenvalue: f64,
    /// `4^{k+1}`.
    pub mu: u64,
    /// Grid count of `u_k`, when computed.
    pub mu_grid: Option<usize>,
    /// Last index of the eigenvalue's eigenspace.
    pub rank: usize,
    /// First index of the eigenspace.
    pub first_rank: usize,
    /// `μ / rank`.
    pub quotient: f64,
}

/// `u_k(x, y) = Φ_{1,3,3π/4}(2^k x, 2^k y)` on the square: nodal count over
/// rank. The rank is the last index of the eigenspace of `10 · 4^k`, computed
/// by exact lattice counting; with `verify` the count `4^{k+1}` is confirmed on
/// a grid (allowed for `k ≤ 4`).
pub fn scaled_family_quotient(k: u32, verify: bool) -> Result<ScaledFamily> {
    if k > 20 {
        return Err(Error::InvalidInput(format!("k = {k} overflows the lattice count")));
    }
    let s = 1u32 << k;
    let eigenvalue = 10.0 * 4f64.powi(k as i32);
    let rect = Rectangle::unit_square();
    let below = rect.counting_function(eigenvalue);
    let rank = below + rect.multiplicity(eigenvalue);
    let mu = 4u64.pow(k + 1);
    let mu_grid = if verify {
        if k > 4 {
            return Err(Error::Resolution(format!("grid verification of u_{k} needs more than the default resolution")));
        }
        let mask = square_sweep_mask(3 * s)?;
        let values = combine_square_eigenfunctions(s, 3 * s, 3.0 * PI / 4.0, &mask);
        Some(nodal_domains(&values, &mask).count)
    } else {
        None
    };
    Ok(ScaledFamily { k, eigenvalue, mu, mu_grid, rank, first_rank: below + 1, quotient: mu as f64 / rank as f64 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nodal::boundary::{boundary_set, dual_point};

    #[test]
    fn theta_zero_and_half_pi() {
        let mask = square_sweep_mask(3).unwrap();
        let a = combine_square_eigenfunctions(1, 3, 0.0, &mask);
        let b = combine_square_eigenfunctions(1, 3, PI / 2.0, &mask);
        assert_eq!(nodal_domains(&a, &mask).count, 3);
        assert_eq!(nodal_domains(&b, &mask).count, 3);
    }

    #[test]
    fn diagonals_at_three_quarters() {
        let mask = square_sweep_mask(3).unwrap();
        let v = combine_square_eigenfunctions(1, 3, 3.0 * PI / 4.0, &mask);
        let part = nodal_domains(&v, &mask);
        assert_eq!(part.count, 4);
        // every zero node lies on a diagonal
        let scale = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        for (k, x) in v.iter().enumerate() {
            if x.abs() < 1e-10 * scale {
                let [x, y] = mask.point(k);
                assert!((x - y).abs() < mask.h || (x + y - PI).abs() < mask.h);
            }
        }
        for e in boundary_set(&part, &mask).edges {
            let [x, y] = dual_point(&mask, e.from);
            assert!((x - y).abs() < 2.0 * mask.h || (x + y - PI).abs() < 2.0 * mask.h);
        }
    }

    #[test]
    fn sweep_is_pi_periodic() {
        let mask = square_sweep_mask(4).unwrap();
        for t in [0.1, 0.7, 1.3, 2.9] {
            let a = nodal_domains(&combine_square_eigenfunctions(1, 4, t, &mask), &mask).count;
            let b = nodal_domains(&combine_square_eigenfunctions(1, 4, t + PI, &mask), &mask).count;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn scaled_family_small_k() {
        let f0 = scaled_family_quotient(0, true).unwrap();
        assert_eq!(f0.mu_grid, Some(4));
        assert_eq!(f0.eigenvalue, 10.0);
        let f1 = scaled_family_quotient(1, true).unwrap();
        assert_eq!(f1.mu_grid, Some(16));
        assert_eq!(f1.eigenvalue, 40.0);
    }
}
