//! k-partitions of grid domains and their energies.
//!
//! A partition labels every interior node with a cell `1..=k`. Each cell is
//! solved as its own Dirichlet problem, with interfaces to other cells placed
//! midway between nodes.

mod bipartite_approx;
mod checkpoint;
mod optimize;
mod tiling_bound;

pub use bipartite_approx::{bipartite_approximation, bipartite_approximation_with};
pub use checkpoint::{read_checkpoint, write_checkpoint, Checkpoint};
pub use optimize::{optimize_minimal_partition, optimize_on_mask, OptimizerConfig};
pub use tiling_bound::{tiling_upper_bound, TilingBound, NODES_PER_TILE_SIDE};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::GridMask;
use crate::nodal::NodalPartition;
use crate::solver::{assemble_subset, lowest_eigenpairs, BoundaryTreatment, SolverConfig};

/// One evaluation of the optimizer.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord {
    pub restart: usize,
    pub p: f64,
    pub iteration: usize,
    /// `Λ^p` of the proposed labeling.
    pub lambda_p: f64,
    pub lambda_max: f64,
    pub accepted: bool,
}

/// Result of one annealing stage.
#[derive(Debug, Clone, PartialEq)]
pub struct StageSummary {
    pub p: f64,
    pub lambda_p: f64,
    pub lambda_max: f64,
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone)]
pub struct Partition {
    pub mask: GridMask,
    /// `1..=k` per node.
    pub labels: Vec<usize>,
    pub k: usize,
    /// Ground energy per cell, index `ℓ − 1`.
    pub energies: Vec<f64>,
    pub treatment: BoundaryTreatment,
    pub history: Vec<IterationRecord>,
    pub stages: Vec<StageSummary>,
    /// Seed of the run that produced this partition, if any.
    pub seed: Option<u64>,
    /// False when the optimizer hit its iteration cap in some stage.
    pub converged: bool,
    /// `λ_1 … λ_k` of the whole mask, when the optimizer computed them.
    pub reference: Vec<f64>,
}

impl Partition {
    /// Build from labels, checking the invariants and solving every cell.
    pub fn new(mask: GridMask, labels: Vec<usize>, k: usize, treatment: BoundaryTreatment, solver: &SolverConfig) -> Result<Self> {
        check_labels(&mask, &labels, k)?;
        let energies = cell_energies(&mask, &labels, k, treatment, solver)?;
        Ok(Partition {
            mask,
            labels,
            k,
            energies,
            treatment,
            history: Vec::new(),
            stages: Vec::new(),
            seed: None,
            converged: true,
            reference: Vec::new(),
        })
    }

    /// Node lists per cell.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        cells_of(&self.labels, self.k)
    }

    /// `Λ = max_i λ(D_i)`.
    pub fn lambda(&self) -> f64 {
        self.energies.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn as_nodal(&self) -> NodalPartition {
        NodalPartition { labels: self.labels.clone(), count: self.k, source: "partition".into() }
    }

    /// Solve every cell again and compare with the stored energies.
    pub fn verify_energies(&self, solver: &SolverConfig) -> Result<f64> {
        let fresh = cell_energies(&self.mask, &self.labels, self.k, self.treatment, solver)?;
        Ok(fresh.iter().zip(&self.energies).map(|(a, b)| (a - b).abs() / a.abs()).fold(0.0, f64::max))
    }

    /// Grid area of each cell.
    pub fn cell_areas(&self) -> Vec<f64> {
        let h2 = self.mask.h * self.mask.h;
        self.cells().iter().map(|c| c.len() as f64 * h2).collect()
    }
}

pub(crate) fn cells_of(labels: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); k];
    for (n, &l) in labels.iter().enumerate() {
        if (1..=k).contains(&l) {
            out[l - 1].push(n);
        }
    }
    out
}

/// Every label in `1..=k`, every cell nonempty and 4-connected.
pub fn check_labels(mask: &GridMask, labels: &[usize], k: usize) -> Result<()> {
    if labels.len() != mask.len() {
        return Err(Error::InvalidInput(format!("{} labels for {} nodes", labels.len(), mask.len())));
    }
    if k == 0 {
        return Err(Error::InvalidInput("a partition needs at least one cell".into()));
    }
    if let Some(n) = labels.iter().position(|&l| l == 0 || l > k) {
        return Err(Error::Invariant(format!("node {n} has label {} outside 1..={k}", labels[n])));
    }
    for (i, cell) in cells_of(labels, k).iter().enumerate() {
        if cell.is_empty() {
            return Err(Error::Invariant(format!("cell {} is empty", i + 1)));
        }
        let parts = mask.components(|n| labels[n] == i + 1).len();
        if parts != 1 {
            return Err(Error::Invariant(format!("cell {} has {parts} components", i + 1)));
        }
    }
    Ok(())
}

/// Ground state of one cell: energy and ℓ²-normalized positive vector, row
/// `r` belonging to node `members[r]`.
pub fn cell_ground_state(
    mask: &GridMask,
    members: &[usize],
    treatment: BoundaryTreatment,
    solver: &SolverConfig,
) -> Result<(f64, Vec<f64>)> {
    if members.is_empty() {
        return Err(Error::Invariant("empty cell".into()));
    }
    let op = assemble_subset(mask, members, treatment)?;
    let mut pair = lowest_eigenpairs(&op, 1, solver)?;
    let p = pair.remove(0);
    Ok((p.value, p.vector))
}

/// Per-cell ground energies, solved in parallel.
pub fn cell_energies(mask: &GridMask, labels: &[usize], k: usize, treatment: BoundaryTreatment, solver: &SolverConfig) -> Result<Vec<f64>> {
    cells_of(labels, k)
        .par_iter()
        .enumerate()
        .map(|(i, c)| {
            cell_ground_state(mask, c, treatment, solver).map(|r| r.0).map_err(|e| match e {
                Error::Invariant(_) => Error::Invariant(format!("cell {} is empty", i + 1)),
                e => e,
            })
        })
        .collect()
}

/// Power mean `(Σ λ_i^p / k)^{1/p}`; `p = ∞` gives the maximum.
pub fn power_mean(energies: &[f64], p: f64) -> f64 {
    let max = energies.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if p.is_infinite() {
        return max;
    }
    // factor out the maximum so that large p does not overflow
    let k = energies.len() as f64;
    let s: f64 = energies.iter().map(|&l| (l / max).powf(p)).sum();
    max * (s / k).powf(1.0 / p)
}

/// `(Λ, Λ^p)` of a partition, `p ∈ [1, ∞]`.
pub fn energy(partition: &Partition, p: f64) -> Result<(f64, f64)> {
    if !(p >= 1.0) {
        return Err(Error::InvalidInput(format!("p must lie in [1, ∞], got {p}")));
    }
    if partition.energies.len() != partition.k {
        return Err(Error::Invariant("energy list does not match the cell count".into()));
    }
    Ok((partition.lambda(), power_mean(&partition.energies, p)))
}

/// `spread = (max λ_i − min λ_i) / Λ`; an equipartition when below `tol`.
pub fn equipartition_check(partition: &Partition, tol: f64) -> (bool, f64) {
    let max = partition.lambda();
    let min = partition.energies.iter().copied().fold(f64::INFINITY, f64::min);
    let spread = (max - min) / max;
    (spread < tol, spread)
}
