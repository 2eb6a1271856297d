//! Empirical left side of the uncertainty principle for partitions:
//! `Σ (D(Ω_i) + 𝒜(Ω_i)) A(Ω_i)/A(Ω)`. The universal constant on the right is
//! unknown, so the report only records the value.

use crate::bounds::BoundReport;
use crate::geometry::{pixel_set_asymmetry, Point};
use crate::partition::Partition;

/// Per-cell terms of the audit.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditTerms {
    pub areas: Vec<f64>,
    pub asymmetries: Vec<f64>,
    /// `1 − min_j A_j / A_i`
    pub deficits: Vec<f64>,
    pub total: f64,
}

/// Terms for cells given as pixel centers of side `h`.
pub fn audit_cells(cells: &[Vec<Point>], h: f64) -> AuditTerms {
    let areas: Vec<f64> = cells.iter().map(|c| c.len() as f64 * h * h).collect();
    let asymmetries: Vec<f64> = cells.iter().map(|c| pixel_set_asymmetry(c, h)).collect();
    let min = areas.iter().cloned().fold(f64::INFINITY, f64::min);
    let deficits: Vec<f64> = areas.iter().map(|a| 1.0 - min / a).collect();
    let whole: f64 = areas.iter().sum();
    let total = (0..cells.len()).map(|i| (deficits[i] + asymmetries[i]) * areas[i] / whole).sum();
    AuditTerms { areas, asymmetries, deficits, total }
}

pub fn uncertainty_principle_audit(partition: &Partition) -> BoundReport {
    let mask = &partition.mask;
    let cells: Vec<Vec<Point>> = partition.cells().iter().map(|c| c.iter().map(|&a| mask.point(a)).collect()).collect();
    let terms = audit_cells(&cells, mask.h);
    let max_d = terms.deficits.iter().cloned().fold(0.0, f64::max);
    let mean_a = terms.asymmetries.iter().sum::<f64>() / terms.asymmetries.len() as f64;
    BoundReport::new("uncertainty principle", 0.0, terms.total, "Σ (D(Ω_i) + 𝒜(Ω_i)) A(Ω_i)/A(Ω) ≥ c")
        .with_input("k", partition.k as f64)
        .with_input("max_deficit", max_d)
        .with_input("mean_asymmetry", mean_a)
        .with_note("right side is the empirical value; the universal constant c is not known and 0 stands in for it")
}
