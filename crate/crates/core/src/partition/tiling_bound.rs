//! Upper bounds for the minimal k-partition energy from congruent tilings.
//!
//! The k tiles plus the uncovered remainder form a partition of the domain
//! once every leftover piece is glued to a tile it touches. A tile that
//! receives leftover area only grows, so its energy cannot exceed that of a
//! bare tile, and for `k ≥ 2` the bound is the ground energy of one tile. That
//! energy is computed on the tile polygon itself with Richardson
//! extrapolation. The glued partition is also built on a grid, for export and
//! as an independent check.

use crate::error::{Error, Result};
use crate::geometry::domain::polygon_signed_distance;
use crate::geometry::{build_tiling, CellKind, DomainSpec, GridMask, Tiling};
use crate::partition::Partition;
use crate::solver::{groundstate_energy_with, BoundaryTreatment, GroundConfig, SolverConfig};

/// Grid nodes across one tile in the glued partition.
pub const NODES_PER_TILE_SIDE: f64 = 10.0;

#[derive(Debug, Clone)]
pub struct TilingBound {
    pub k: usize,
    pub cell_kind: CellKind,
    /// Upper bound for the minimal k-partition energy.
    pub lambda: f64,
    /// Ground energy of one bare tile.
    pub tile_energy: f64,
    /// `A(Ω) · Λ / k`.
    pub normalized: f64,
    pub tiling: Tiling,
    /// Tiles with the leftover glued on, solved on a grid.
    pub partition: Partition,
}

pub fn tiling_upper_bound(domain: &DomainSpec, k: usize, kind: CellKind) -> Result<TilingBound> {
    let tiling = build_tiling(domain, k, kind)?;
    let ground = GroundConfig { target: 1e-4, ..GroundConfig::default() };
    let tile = DomainSpec::polygon(tiling.cells[0].clone())?;
    let tile_energy = groundstate_energy_with(&tile, &ground)?.value;
    let lambda = if k == 1 { groundstate_energy_with(domain, &ground)?.value } else { tile_energy };
    let partition = glued_partition(domain, &tiling)?;
    Ok(TilingBound { k, cell_kind: kind, lambda, tile_energy, normalized: domain.area() * lambda / k as f64, tiling, partition })
}

/// Grid partition with one cell per tile. The lattice is offset by half a
/// step so that tile edges aligned with the domain fall between nodes.
fn glued_partition(domain: &DomainSpec, tiling: &Tiling) -> Result<Partition> {
    let k = tiling.cells.len();
    let h = (tiling.cell_area.sqrt() / NODES_PER_TILE_SIDE).min(domain.inradius() / 2.0);
    let (lo, _) = domain.bounding_box();
    let mask = GridMask::rasterize_with_origin(domain, h, [lo[0] - 0.5 * h, lo[1] - 0.5 * h])?;

    let reach = tiling.cells[0].iter().map(|v| (v[0] - tiling.centers[0][0]).hypot(v[1] - tiling.centers[0][1])).fold(0.0, f64::max);
    let mut labels = vec![0usize; mask.len()];
    for (n, l) in labels.iter_mut().enumerate() {
        let p = mask.point(n);
        for (c, (center, cell)) in tiling.centers.iter().zip(&tiling.cells).enumerate() {
            if (p[0] - center[0]).hypot(p[1] - center[1]) <= reach && polygon_signed_distance(cell, p) > 0.0 {
                *l = c + 1;
                break;
            }
        }
    }
    for c in 1..=k {
        if !labels.contains(&c) {
            return Err(Error::Resolution(format!("tile {c} holds no grid node")));
        }
    }
    // each leftover piece joins the tile it borders most
    for piece in mask.components(|n| labels[n] == 0) {
        let mut border = vec![0usize; k + 1];
        for &a in &piece {
            for b in mask.neighbors(a).into_iter().flatten() {
                border[labels[b]] += 1;
            }
        }
        let target = (1..=k)
            .max_by(|&a, &b| border[a].cmp(&border[b]).then(b.cmp(&a)))
            .filter(|&t| border[t] > 0)
            .ok_or_else(|| Error::Invariant("leftover region touches no tile".into()))?;
        for a in piece {
            labels[a] = target;
        }
    }
    Partition::new(mask, labels, k, BoundaryTreatment::default(), &SolverConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::equipartition_check;
    use std::f64::consts::PI;

    #[test]
    fn perfect_square_tiling() {
        let d = DomainSpec::unit_area_square();
        let b = tiling_upper_bound(&d, 9, CellKind::Square).unwrap();
        let exact = 2.0 * PI * PI * 9.0;
        assert!((b.lambda - exact).abs() / exact < 1e-5, "{} vs {exact}", b.lambda);
        assert!((b.normalized - 2.0 * PI * PI).abs() < 1e-3);
        let (ok, spread) = equipartition_check(&b.partition, 1e-9);
        assert!(ok, "spread {spread}");
    }

    #[test]
    fn single_tile_is_the_domain() {
        let d = DomainSpec::unit_area_disk();
        let b = tiling_upper_bound(&d, 1, CellKind::Square).unwrap();
        assert!((b.lambda - crate::bessel::lambda_disk_unit_area()).abs() < 1e-3);
    }
}
