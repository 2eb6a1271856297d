//! Bipartite approximation of a partition by shrinking.
//!
//! Cells `2..k` are replaced by their inner parallel sets
//! `D_i(ε) = {x ∈ D_i : dist(x, ∂D_i) > ε}` and everything removed goes to cell
//! 1, which thereby absorbs a tube of width ε around the interfaces and the
//! outer boundary. Every node next to an interface lies within `h/2` of it, so
//! with `ε ≥ 2h` the shrunken cells only ever touch cell 1 and the neighbor
//! graph is a star.

use crate::error::{Error, Result};
use crate::geometry::{GridMask, Point};
use crate::nodal::{boundary::boundary_of_labels, boundary::dual_point};
use crate::partition::{check_labels, Partition};
use crate::solver::SolverConfig;

fn segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 { 0.0 } else { (((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2).clamp(0.0, 1.0) };
    (p[0] - a[0] - t * dx).hypot(p[1] - a[1] - t * dy)
}

/// Does some interface reach the outer boundary? A dual vertex touches it
/// when one of the four nodes around it is missing from the mask.
fn interfaces_meet_boundary(mask: &GridMask, labels: &[usize]) -> bool {
    let around = |(p, q): (i64, i64)| [(p - 1, q - 1), (p, q - 1), (p - 1, q), (p, q)];
    boundary_of_labels(labels, mask)
        .edges
        .iter()
        .any(|e| [e.from, e.to].into_iter().any(|v| around(v).iter().any(|&(i, j)| !mask.is_inside(i, j))))
}

pub fn bipartite_approximation(partition: &Partition, eps: f64) -> Result<Partition> {
    bipartite_approximation_with(partition, eps, &SolverConfig::default())
}

pub fn bipartite_approximation_with(partition: &Partition, eps: f64, solver: &SolverConfig) -> Result<Partition> {
    let mask = &partition.mask;
    if !(eps >= 2.0 * mask.h * (1.0 - 1e-12)) {
        return Err(Error::InvalidInput(format!("ε = {eps} is below 2h = {}", 2.0 * mask.h)));
    }
    check_labels(mask, &partition.labels, partition.k)?;
    let k = partition.k;
    if k == 1 {
        return Ok(partition.clone());
    }
    let labels = &partition.labels;
    let edges = boundary_of_labels(labels, mask).edges;
    // When the interfaces stay away from ∂Ω, the outer boundary is not part of
    // the tube and cells are only shrunk away from their interfaces.
    let use_outer = interfaces_meet_boundary(mask, labels);

    let mut out = labels.clone();
    for cell in 2..=k {
        let segs: Vec<(Point, Point)> = edges
            .iter()
            .filter(|e| e.labels.0 == cell || e.labels.1 == cell)
            .map(|e| (dual_point(mask, e.from), dual_point(mask, e.to)))
            .collect();
        let mut kept = 0;
        for n in 0..mask.len() {
            if labels[n] != cell {
                continue;
            }
            let p = mask.point(n);
            let mut d = segs.iter().map(|&(a, b)| segment_distance(p, a, b)).fold(f64::INFINITY, f64::min);
            if use_outer {
                d = d.min(mask.domain.signed_distance(p));
            }
            if d > eps {
                kept += 1;
            } else {
                out[n] = 1;
            }
        }
        if kept == 0 {
            return Err(Error::InvalidInput(format!("ε = {eps} removes all of cell {cell}")));
        }
        // a shrunken cell may split; its smaller pieces join the tube
        let mut parts = mask.components(|n| out[n] == cell);
        parts.sort_by_key(|c| std::cmp::Reverse(c.len()));
        for part in parts.into_iter().skip(1) {
            for n in part {
                out[n] = 1;
            }
        }
    }
    // pieces of cell 1 cut off from the main body go back to their cells
    let mut ones = mask.components(|n| out[n] == 1);
    ones.sort_by_key(|c| std::cmp::Reverse(c.len()));
    for part in ones.into_iter().skip(1) {
        for n in part {
            out[n] = labels[n];
        }
    }
    Partition::new(mask.clone(), out, k, partition.treatment, solver)
}
