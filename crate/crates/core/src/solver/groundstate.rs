//! Ground energies of domains with Richardson extrapolation in `h`.

use crate::error::{Error, Result};
use crate::geometry::{DomainSpec, GridMask};
use crate::solver::assembly::{assemble_laplacian, BoundaryTreatment};
use crate::solver::eigen::{lowest_eigenpairs, EigenPair, SolverConfig};

/// Lowest `j` eigenpairs of the domain at spacing `h`.
pub fn solve_domain(
    domain: &DomainSpec,
    h: f64,
    j: usize,
    treatment: BoundaryTreatment,
    solver: &SolverConfig,
) -> Result<(GridMask, Vec<EigenPair<f64>>)> {
    let mask = GridMask::rasterize(domain, h)?;
    let op = assemble_laplacian(&mask, treatment)?;
    if j > op.dim() {
        return Err(Error::Resolution(format!("{j} eigenpairs requested but only {} nodes at h = {h}", op.dim())));
    }
    let pairs = lowest_eigenpairs(&op, j, solver)?;
    Ok((mask, pairs))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroundConfig {
    /// Relative accuracy target for the error estimate.
    pub target: f64,
    /// Coarsest spacing; defaults to a tenth of the inradius.
    pub h0: Option<f64>,
    /// Refinement stops before a level would exceed this many nodes.
    pub max_nodes: usize,
    pub treatment: BoundaryTreatment,
    pub solver: SolverConfig,
}

impl Default for GroundConfig {
    fn default() -> Self {
        GroundConfig {
            target: 1e-3,
            h0: None,
            max_nodes: 250_000,
            treatment: BoundaryTreatment::default(),
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroundEstimate {
    /// Extrapolated value `(4 λ(h/2) − λ(h)) / 3`.
    pub value: f64,
    /// `|value − λ(h/2)|`.
    pub error: f64,
    /// `(h, λ₁(h), nodes)` for every level solved.
    pub levels: Vec<(f64, f64, usize)>,
    pub reached_target: bool,
}

impl GroundEstimate {
    pub fn relative_error(&self) -> f64 {
        self.error / self.value.abs()
    }
}

pub fn groundstate_energy(domain: &DomainSpec, target_accuracy: f64) -> Result<GroundEstimate> {
    groundstate_energy_with(domain, &GroundConfig { target: target_accuracy, ..GroundConfig::default() })
}

pub fn groundstate_energy_with(domain: &DomainSpec, config: &GroundConfig) -> Result<GroundEstimate> {
    domain.validate()?;
    let mut h = config.h0.unwrap_or(domain.inradius() / 10.0);
    let level = |h: f64| -> Result<(f64, f64, usize)> {
        let (mask, pairs) = solve_domain(domain, h, 1, config.treatment, &config.solver)?;
        Ok((h, pairs[0].value, mask.len()))
    };
    let mut levels = vec![level(h)?];
    let mut best: Option<GroundEstimate> = None;
    loop {
        let projected = levels.last().unwrap().2 * 4;
        if projected > config.max_nodes {
            break;
        }
        h *= 0.5;
        levels.push(level(h)?);
        let (coarse, fine) = (levels[levels.len() - 2].1, levels[levels.len() - 1].1);
        let value = (4.0 * fine - coarse) / 3.0;
        let error = (value - fine).abs();
        let reached = error < config.target * value.abs();
        best = Some(GroundEstimate { value, error, levels: levels.clone(), reached_target: reached });
        if reached {
            break;
        }
    }
    best.ok_or_else(|| Error::Resolution("node budget too small for two levels".into()))
}
