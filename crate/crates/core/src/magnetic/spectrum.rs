//! Spectrum of the Aharonov-Bohm Laplacian and its K_X-real eigenfunctions.
//!
//! The antilinear symmetry of the flux-π operator means every eigenspace has
//! a basis of K_X-real functions: in a branch-cut gauge these are simply real
//! vectors that change sign across the cuts. Eigenvectors from the complex
//! solver are mapped into the branch-cut gauge (`w = e^{−iφ/2} u` for the
//! smooth gauge), stripped of their global phase, and checked for reality.
//! Inside a degenerate cluster the solver may return complex mixtures; there
//! the real and imaginary parts span the eigenspace and a real Rayleigh-Ritz
//! step picks a real basis.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{DomainSpec, GridMask, Point};
use crate::magnetic::operator::{assemble_ab_laplacian_with, CutDirection, Gauge, MagneticOperator};
use crate::magnetic::poles::PoleConfig;
use crate::nodal::domains::{label_components, signs};
use crate::nodal::NodalPartition;
use crate::solver::{lowest_eigenpairs, BoundaryTreatment, SolverConfig, SparseOperator};

/// Eigenvalues closer than this (relative) are treated as one cluster.
pub const CLUSTER_TOLERANCE: f64 = 1e-6;
/// Largest imaginary part, relative to the largest modulus, still counted
/// as real.
pub const REALITY_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct AbEigenpair {
    pub value: f64,
    /// K_X-real representative in the branch-cut gauge, unit norm.
    pub real: Vec<f64>,
    /// `max |Im w| / max |w|` before any cluster rotation.
    pub reality_residual: f64,
    /// The solver returned a complex mixture that needed the cluster step.
    pub mixed: bool,
}

#[derive(Debug, Clone)]
pub struct AbSpectrum {
    pub pairs: Vec<AbEigenpair>,
    /// Direction of the cuts in which `real` is expressed.
    pub cut: CutDirection,
    /// `±1` per node and direction in that gauge.
    pub cut_signs: Vec<[f64; 4]>,
    pub operator: MagneticOperator,
}

/// Sum of pole angles, each on the branch whose jump lies on the cut ray.
pub fn gauge_angle(poles: &[Point], cut: CutDirection, p: Point) -> f64 {
    let a = cut.angle();
    poles.iter().map(|x| a + ((p[1] - x[1]).atan2(p[0] - x[0]) - a).rem_euclid(2.0 * PI)).sum()
}

pub fn ab_spectrum(mask: &GridMask, poles: &PoleConfig, j: usize) -> Result<AbSpectrum> {
    ab_spectrum_with(mask, poles, j, Gauge::default(), BoundaryTreatment::default(), &SolverConfig::default())
}

pub fn ab_spectrum_with(
    mask: &GridMask,
    poles: &PoleConfig,
    j: usize,
    gauge: Gauge,
    treatment: BoundaryTreatment,
    solver: &SolverConfig,
) -> Result<AbSpectrum> {
    let operator = assemble_ab_laplacian_with(mask, poles, gauge, treatment)?;
    if j > mask.len() {
        return Err(Error::Resolution(format!("{j} eigenpairs requested on {} nodes", mask.len())));
    }
    let cut = match gauge {
        Gauge::BranchCut(d) => d,
        Gauge::Smooth => CutDirection::PosX,
    };
    let cut_gauge = assemble_ab_laplacian_with(mask, poles, Gauge::BranchCut(cut), treatment)?;
    let real_op: SparseOperator<f64> = cut_gauge.op.map(|z| z.re);
    let cut_signs: Vec<[f64; 4]> = cut_gauge.phases.iter().map(|p| std::array::from_fn(|d| p[d].re)).collect();

    let raw = lowest_eigenpairs(&operator.op, j, solver)?;
    // into the branch-cut gauge, with the global phase removed
    let mut vectors: Vec<Vec<Complex64>> = Vec::with_capacity(j);
    let mut residuals = Vec::with_capacity(j);
    for pair in &raw {
        let mut w: Vec<Complex64> = match gauge {
            Gauge::BranchCut(_) => pair.vector.clone(),
            Gauge::Smooth => (0..mask.len())
                .map(|n| pair.vector[n] * Complex64::from_polar(1.0, -0.5 * gauge_angle(&poles.poles, cut, mask.point(n))))
                .collect(),
        };
        let s: Complex64 = w.iter().map(|z| z * z).sum();
        let rot = Complex64::from_polar(1.0, -0.5 * s.arg());
        for z in w.iter_mut() {
            *z *= rot;
        }
        let top = w.iter().fold(0.0_f64, |m, z| m.max(z.norm()));
        let im = w.iter().fold(0.0_f64, |m, z| m.max(z.im.abs()));
        residuals.push(im / top);
        vectors.push(w);
    }

    let mut pairs = Vec::with_capacity(j);
    let mut start = 0;
    while start < j {
        let mut end = start + 1;
        while end < j && (raw[end].value - raw[end - 1].value).abs() <= CLUSTER_TOLERANCE * raw[end].value.abs() {
            end += 1;
        }
        let mixed = residuals[start..end].iter().any(|&r| r > REALITY_TOLERANCE);
        if !mixed {
            for i in start..end {
                pairs.push(AbEigenpair {
                    value: raw[i].value,
                    real: normalized(vectors[i].iter().map(|z| z.re).collect()),
                    reality_residual: residuals[i],
                    mixed: false,
                });
            }
        } else {
            let rotated = real_basis(&real_op, &vectors[start..end])?;
            for (i, (value, v)) in (start..end).zip(rotated) {
                pairs.push(AbEigenpair { value, real: v, reality_residual: residuals[i], mixed: true });
            }
        }
        start = end;
    }
    Ok(AbSpectrum { pairs, cut, cut_signs, operator })
}

fn normalized(mut v: Vec<f64>) -> Vec<f64> {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if n > 0.0 {
        v.iter_mut().for_each(|x| *x /= n);
    }
    v
}

/// Real Rayleigh-Ritz on the span of the real and imaginary parts of a
/// cluster. Parts much smaller than their vector are rounding noise and are
/// left out.
fn real_basis(op: &SparseOperator<f64>, cluster: &[Vec<Complex64>]) -> Result<Vec<(f64, Vec<f64>)>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for w in cluster {
        let full = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for part in [w.iter().map(|z| z.re).collect::<Vec<f64>>(), w.iter().map(|z| z.im).collect()] {
            let mut v = part;
            let before = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if before < 1e-6 * full {
                continue;
            }
            for _ in 0..2 {
                for q in &basis {
                    let c: f64 = q.iter().zip(&v).map(|(a, b)| a * b).sum();
                    v.iter_mut().zip(q).for_each(|(x, y)| *x -= c * y);
                }
            }
            let after = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if after > 1e-6 * before {
                basis.push(v.into_iter().map(|x| x / after).collect());
            }
        }
    }
    let m = cluster.len();
    if basis.len() < m {
        return Err(Error::Invariant(format!("cluster of {m} K-real vectors spans only {} dimensions", basis.len())));
    }
    let images: Vec<Vec<f64>> = basis.iter().map(|q| op.apply_vec(q)).collect();
    let r = basis.len();
    let h = DMatrix::from_fn(r, r, |a, b| basis[a].iter().zip(&images[b]).map(|(x, y)| x * y).sum::<f64>());
    let h = (&h + h.transpose()) * 0.5;
    let eig = h.symmetric_eigen();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    Ok(order[..m]
        .iter()
        .map(|&k| {
            let y = eig.eigenvectors.column(k);
            let mut v = vec![0.0; op.dim()];
            for (c, q) in basis.iter().enumerate() {
                v.iter_mut().zip(q).for_each(|(x, &b)| *x += y[c] * b);
            }
            (eig.eigenvalues[k], normalized(v))
        })
        .collect())
}

impl AbSpectrum {
    /// Nodal domains of eigenfunction `idx`: neighbors belong together when
    /// the sign agrees after undoing the cut flip on their edge.
    pub fn nodal_domains(&self, mask: &GridMask, idx: usize) -> NodalPartition {
        ab_nodal_domains(&self.pairs[idx].real, mask, &self.cut_signs, &self.operator.poles)
    }

    /// Sign changes of eigenfunction `idx` on the square ring of nodes at
    /// `radius` steps around `pole`: the number of nodal lines meeting it.
    pub fn pole_valence(&self, mask: &GridMask, idx: usize, pole: Point, radius: i64) -> Result<usize> {
        pole_valence(&self.pairs[idx].real, mask, &self.cut_signs, pole, radius)
    }
}

/// Nodal domains of a K_X-real vector in the branch-cut gauge. The four edges
/// of each pole plaquette never join: the eigenfunction vanishes like `r^½`
/// at a pole, so the signs on those corners are unreliable and would let
/// domains that only meet at the pole leak into each other.
pub fn ab_nodal_domains(w: &[f64], mask: &GridMask, cut_signs: &[[f64; 4]], poles: &PoleConfig) -> NodalPartition {
    let s = signs(w);
    let plaquettes: Vec<(i64, i64)> = poles.poles.iter().filter_map(|&p| PoleConfig::plaquette(mask, p).ok()).collect();
    let on_pole_plaquette = |a: usize, b: usize| {
        let ((ai, aj), (bi, bj)) = (mask.coords(a), mask.coords(b));
        let (lo_i, lo_j) = (ai.min(bi) as i64, aj.min(bj) as i64);
        if ai == bi {
            // vertical edge: west or east side of a plaquette
            plaquettes.contains(&(lo_i, lo_j)) || plaquettes.contains(&(lo_i - 1, lo_j))
        } else {
            plaquettes.contains(&(lo_i, lo_j)) || plaquettes.contains(&(lo_i, lo_j - 1))
        }
    };
    label_components(
        mask,
        &s,
        |a, b, d| (s[a] as f64) * (s[b] as f64) * cut_signs[a][d] > 0.0 && !on_pole_plaquette(a, b),
        "K-real eigenfunction",
    )
}

pub fn pole_valence(w: &[f64], mask: &GridMask, cut_signs: &[[f64; 4]], pole: Point, radius: i64) -> Result<usize> {
    let (pi, pj) = PoleConfig::plaquette(mask, pole)?;
    let r = radius.max(1);
    // nodes (pi − r + 1 ..= pi + r) × (pj − r + 1 ..= pj + r), boundary walked counter-clockwise
    let (lo_i, hi_i, lo_j, hi_j) = (pi - r + 1, pi + r, pj - r + 1, pj + r);
    let mut ring = Vec::new();
    for i in lo_i..hi_i {
        ring.push((i, lo_j));
    }
    for j in lo_j..hi_j {
        ring.push((hi_i, j));
    }
    for i in (lo_i + 1..=hi_i).rev() {
        ring.push((i, hi_j));
    }
    for j in (lo_j + 1..=hi_j).rev() {
        ring.push((lo_i, j));
    }
    let nodes: Vec<usize> = ring
        .iter()
        .map(|&(i, j)| mask.index_of(i, j))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Resolution(format!("ring of radius {r} around the pole leaves the domain")))?;
    let s = signs(w);
    // signs along two laps, with the cut flips accumulated so that the values
    // follow the continuous function
    let len = nodes.len();
    let mut vals = Vec::with_capacity(2 * len);
    let mut flip = 1.0;
    for step in 0..2 * len {
        let a = nodes[step % len];
        if step > 0 {
            let prev = nodes[(step - 1) % len];
            let d = (0..4).find(|&d| mask.neighbor(prev, d) == Some(a)).expect("ring nodes are neighbors");
            flip *= cut_signs[prev][d];
        }
        vals.push(s[a] as f64 * flip);
    }
    let Some(first) = vals[..len].iter().position(|&v| v != 0.0) else {
        return Ok(0);
    };
    let mut changes = 0;
    let mut current = vals[first];
    for &v in &vals[first + 1..=first + len] {
        if v != 0.0 {
            if v != current {
                changes += 1;
            }
            current = v;
        }
    }
    Ok(changes)
}

/// Three-level fit `λ(h) = λ₀ + c₁ h + c₂ h²` of the ground energy of the
/// disk of radius `radius` with one pole at its center, on grids
/// `h = 2 radius / (2n + 1)` that put the center on a plaquette center.
#[derive(Debug, Clone, PartialEq)]
pub struct AbExtrapolation {
    pub value: f64,
    /// `(h, λ₁(h))` per level.
    pub levels: Vec<(f64, f64)>,
}

pub fn centered_disk_ground_energy(radius: f64, ns: [usize; 3]) -> Result<AbExtrapolation> {
    let domain = DomainSpec::Disk { radius };
    let mut levels = Vec::new();
    for n in ns {
        let h = 2.0 * radius / (2 * n + 1) as f64;
        let mask = GridMask::rasterize(&domain, h)?;
        let spec = ab_spectrum(&mask, &PoleConfig::new(vec![[0.0, 0.0]])?, 1)?;
        levels.push((h, spec.pairs[0].value));
    }
    let a = DMatrix::from_fn(3, 3, |r, c| levels[r].0.powi(c as i32));
    let b = nalgebra::DVector::from_fn(3, |r, _| levels[r].1);
    let x = a.lu().solve(&b).ok_or_else(|| Error::InvalidInput("extrapolation levels must be distinct".into()))?;
    Ok(AbExtrapolation { value: x[0], levels })
}
