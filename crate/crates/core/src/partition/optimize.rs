//! Search for minimal k-partitions.
//!
//! Each restart starts from a Lloyd-relaxed Voronoi labeling and then runs an
//! annealing schedule over `p`. Within a stage the labeling moves by node
//! transfers across interfaces, driven by the interface balance
//! `λ_i^{p−1} |∂u_i|² = λ_j^{p−1} |∂u_j|²` that a minimizer of `Σ λ_i^p`
//! satisfies. On the grid, the normal derivative of the ground state of cell
//! `i` at an interface node `y` is proportional to `u_i(y)`, so a node `x` of
//! cell `j` next to `y` is worth moving when
//! `w_i u_i(y)² > w_j u_j(x)²` with `w = λ^{p−1}` and ℓ²-normalized states.
//! A batch of the best moves is tried; it is kept only if `Λ^p` strictly
//! drops, otherwise the batch is halved. A stage ends when no move helps or
//! the batch size reaches zero.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{DomainSpec, GridMask};
use crate::partition::{cell_ground_state, cells_of, check_labels, power_mean, IterationRecord, Partition, StageSummary};
use crate::solver::{assemble_laplacian, lowest_eigenpairs, BoundaryTreatment, SolverConfig};

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerConfig {
    /// Annealing exponents; `64` stands in for `p = ∞`.
    pub p_schedule: Vec<f64>,
    pub restarts: usize,
    /// Evaluations per stage.
    pub max_iter: usize,
    pub seed: u64,
    /// Grid spacing; defaults to a twentieth of the inradius.
    pub h: Option<f64>,
    pub lloyd_iterations: usize,
    pub treatment: BoundaryTreatment,
    pub solver: SolverConfig,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            p_schedule: vec![1.0, 8.0, 64.0],
            restarts: 4,
            max_iter: 200,
            seed: 1,
            h: None,
            lloyd_iterations: 20,
            treatment: BoundaryTreatment::default(),
            solver: SolverConfig { tol: 1e-9, ..SolverConfig::default() },
        }
    }
}

pub fn optimize_minimal_partition(domain: &DomainSpec, k: usize, config: &OptimizerConfig) -> Result<Partition> {
    let h = config.h.unwrap_or(domain.inradius() / 20.0);
    let mask = GridMask::rasterize(domain, h)?;
    optimize_on_mask(&mask, k, config)
}

/// Best of `config.restarts` independent runs (lowest `Λ`, ties to the
/// earlier restart). Every run is checked against `Λ ≥ λ_k` on the whole
/// mask, and its `p = 1` stage against `k Λ^1 ≥ Σ_{ℓ≤k} λ_ℓ`.
pub fn optimize_on_mask(mask: &GridMask, k: usize, config: &OptimizerConfig) -> Result<Partition> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if k > mask.len() {
        return Err(Error::Resolution(format!("{k} cells requested on {} nodes", mask.len())));
    }
    if config.p_schedule.is_empty() || config.p_schedule.iter().any(|&p| !(p >= 1.0)) {
        return Err(Error::InvalidInput("p schedule must be nonempty with every p ≥ 1".into()));
    }
    let op = assemble_laplacian(mask, config.treatment)?;
    let reference: Vec<f64> = lowest_eigenpairs(&op, k, &config.solver)?.iter().map(|p| p.value).collect();

    // a run that collapses at initialization yields `None`; any error is fatal
    let runs: Vec<Option<Partition>> =
        (0..config.restarts.max(1)).into_par_iter().map(|r| run(mask, k, config, r, &reference)).collect::<Result<_>>()?;

    let mut history = Vec::new();
    let mut best: Option<Partition> = None;
    for p in runs.into_iter().flatten() {
        history.extend(p.history.iter().cloned());
        if best.as_ref().is_none_or(|b| p.lambda() < b.lambda()) {
            best = Some(p);
        }
    }
    let mut best = best.ok_or_else(|| Error::Invariant("every restart collapsed to an empty cell".into()))?;
    best.history = history;
    Ok(best)
}

/// Energies and the ground state value at every node (each node belongs to
/// exactly one cell, so one vector holds all cells).
fn solve_cells(mask: &GridMask, labels: &[usize], k: usize, config: &OptimizerConfig) -> Result<(Vec<f64>, Vec<f64>)> {
    let cells = cells_of(labels, k);
    let solved: Vec<(f64, Vec<f64>)> =
        cells.par_iter().map(|c| cell_ground_state(mask, c, config.treatment, &config.solver)).collect::<Result<_>>()?;
    let mut u = vec![0.0; mask.len()];
    let mut energies = Vec::with_capacity(k);
    for (cell, (e, v)) in cells.iter().zip(solved) {
        energies.push(e);
        for (&n, x) in cell.iter().zip(v) {
            u[n] = x;
        }
    }
    Ok((energies, u))
}

fn run(mask: &GridMask, k: usize, config: &OptimizerConfig, restart: usize, reference: &[f64]) -> Result<Option<Partition>> {
    let seed = config.seed.wrapping_add(restart as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels = None;
    for _attempt in 0..10 {
        let mut l = voronoi_labels(mask, k, config.lloyd_iterations, &mut rng);
        repair_connectivity(mask, &mut l, k, None);
        if cells_of(&l, k).iter().all(|c| !c.is_empty()) {
            labels = Some(l);
            break;
        }
    }
    let Some(mut labels) = labels else {
        return Ok(None);
    };
    let (mut energies, mut u) = solve_cells(mask, &labels, k, config)?;

    let mut history = Vec::new();
    let mut stages = Vec::new();
    let mut all_converged = true;
    for &p in &config.p_schedule {
        let mut j_cur = power_mean(&energies, p);
        let mut budget = usize::MAX;
        let mut converged = false;
        let mut iterations = 0;
        while iterations < config.max_iter {
            let moves = candidate_moves(mask, &labels, &energies, &u, p);
            if moves.is_empty() {
                converged = true;
                break;
            }
            budget = budget.min(moves.len());
            let mut trial = labels.clone();
            apply_moves(mask, &mut trial, k, &moves, budget);
            repair_connectivity(mask, &mut trial, k, Some(&energies));
            iterations += 1;
            let (e_new, u_new) = solve_cells(mask, &trial, k, config)?;
            let j_new = power_mean(&e_new, p);
            let accepted = j_new < j_cur;
            history.push(IterationRecord {
                restart,
                p,
                iteration: iterations,
                lambda_p: j_new,
                lambda_max: power_mean(&e_new, f64::INFINITY),
                accepted,
            });
            if accepted {
                labels = trial;
                energies = e_new;
                u = u_new;
                j_cur = j_new;
            } else {
                budget /= 2;
                if budget == 0 {
                    converged = true;
                    break;
                }
            }
        }
        all_converged &= converged;
        let lambda_max = power_mean(&energies, f64::INFINITY);
        if p == 1.0 {
            let bound: f64 = reference.iter().sum::<f64>() / k as f64;
            if j_cur < bound * (1.0 - 1e-9) {
                return Err(Error::Invariant(format!("Λ^1 = {j_cur} below the spectral bound {bound}")));
            }
        }
        stages.push(StageSummary { p, lambda_p: j_cur, lambda_max, iterations, converged });
    }

    check_labels(mask, &labels, k)?;
    let lambda = power_mean(&energies, f64::INFINITY);
    let lk = reference[k - 1];
    if lambda < lk * (1.0 - 1e-9) {
        return Err(Error::Invariant(format!("Λ = {lambda} below λ_k = {lk} of the whole mask")));
    }
    Ok(Some(Partition {
        mask: mask.clone(),
        labels,
        k,
        energies,
        treatment: config.treatment,
        history,
        stages,
        seed: Some(seed),
        converged: all_converged,
        reference: reference.to_vec(),
    }))
}

/// Lloyd iteration on the nodes from `k` random seeds.
fn voronoi_labels(mask: &GridMask, k: usize, iterations: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = mask.len();
    let mut seeds: Vec<[f64; 2]> = Vec::with_capacity(k);
    while seeds.len() < k {
        let p = mask.point(rng.random_range(0..n));
        if !seeds.contains(&p) {
            seeds.push(p);
        }
    }
    let assign = |seeds: &[[f64; 2]]| -> Vec<usize> {
        (0..n)
            .map(|a| {
                let p = mask.point(a);
                let d = |s: &[f64; 2]| (p[0] - s[0]).powi(2) + (p[1] - s[1]).powi(2);
                1 + (0..k).min_by(|&x, &y| d(&seeds[x]).total_cmp(&d(&seeds[y]))).unwrap()
            })
            .collect()
    };
    let mut labels = assign(&seeds);
    for _ in 0..iterations {
        let mut sum = vec![[0.0, 0.0, 0.0]; k];
        for (a, &l) in labels.iter().enumerate() {
            let p = mask.point(a);
            sum[l - 1][0] += p[0];
            sum[l - 1][1] += p[1];
            sum[l - 1][2] += 1.0;
        }
        for (s, acc) in seeds.iter_mut().zip(&sum) {
            if acc[2] > 0.0 {
                *s = [acc[0] / acc[2], acc[1] / acc[2]];
            } else {
                *s = mask.point(rng.random_range(0..n));
            }
        }
        labels = assign(&seeds);
    }
    labels
}

/// `(benefit, node, new label)` for every profitable interface move, best
/// first.
fn candidate_moves(mask: &GridMask, labels: &[usize], energies: &[f64], u: &[f64], p: f64) -> Vec<(f64, usize, usize)> {
    let top = energies.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let w: Vec<f64> = energies.iter().map(|&e| (e / top).powf(p - 1.0)).collect();
    let mut moves = Vec::new();
    for x in 0..mask.len() {
        let j = labels[x];
        let cost = w[j - 1] * u[x] * u[x];
        let mut best: Option<(f64, usize)> = None;
        for y in mask.neighbors(x).into_iter().flatten() {
            let i = labels[y];
            if i != j {
                let gain = w[i - 1] * u[y] * u[y] - cost;
                if gain > 0.0 && best.is_none_or(|b| gain > b.0) {
                    best = Some((gain, i));
                }
            }
        }
        if let Some((g, i)) = best {
            moves.push((g, x, i));
        }
    }
    moves.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    moves
}

/// Apply up to `budget` moves, skipping any node next to one already moved
/// and never emptying a cell.
fn apply_moves(mask: &GridMask, labels: &mut [usize], k: usize, moves: &[(f64, usize, usize)], budget: usize) {
    let mut size = vec![0usize; k];
    for &l in labels.iter() {
        size[l - 1] += 1;
    }
    let mut touched = vec![false; mask.len()];
    let mut done = 0;
    for &(_, x, i) in moves {
        if done == budget {
            break;
        }
        if touched[x] || mask.neighbors(x).into_iter().flatten().any(|y| touched[y]) {
            continue;
        }
        let j = labels[x];
        if size[j - 1] <= 1 {
            continue;
        }
        size[j - 1] -= 1;
        size[i - 1] += 1;
        labels[x] = i;
        touched[x] = true;
        done += 1;
    }
}

/// Keep the largest component of every cell and hand the other components to
/// a neighboring cell: the one with the highest energy when energies are
/// known (it gains the most), otherwise the one sharing the longest border.
pub(crate) fn repair_connectivity(mask: &GridMask, labels: &mut [usize], k: usize, energies: Option<&[f64]>) {
    for cell in 1..=k {
        let mut parts = mask.components(|n| labels[n] == cell);
        if parts.len() <= 1 {
            continue;
        }
        parts.sort_by_key(|c| std::cmp::Reverse(c.len()));
        for part in parts.into_iter().skip(1) {
            let mut border = vec![0usize; k + 1];
            for &a in &part {
                for b in mask.neighbors(a).into_iter().flatten() {
                    if labels[b] != cell {
                        border[labels[b]] += 1;
                    }
                }
            }
            let target = (1..=k).filter(|&l| border[l] > 0).max_by(|&a, &b| match energies {
                Some(e) => e[a - 1].total_cmp(&e[b - 1]).then(border[a].cmp(&border[b])),
                None => border[a].cmp(&border[b]),
            });
            if let Some(t) = target {
                for &a in &part {
                    labels[a] = t;
                }
            }
        }
    }
}
