//! Eigenvalue counts against the Weyl term `A λ / 4π`.
//!
//! Rectangles are counted exactly on the lattice; other domains are counted
//! from the grid solver, with the Bessel-zero count alongside for disks. The
//! two-term expansion `A λ/4π − L √λ/4π` is recorded as well, since at
//! moderate λ the perimeter term explains most of the gap.

use std::f64::consts::PI;

use crate::bessel::disk_eigenvalues_below;
use crate::bounds::BoundReport;
use crate::error::{Error, Result};
use crate::geometry::DomainSpec;
use crate::rect::Rectangle;
use crate::solver::{solve_domain, BoundaryTreatment, SolverConfig};

/// Fewest eigenvalues below λ for the count to be meaningful.
pub const MIN_COUNT: usize = 20;
/// Grid step as a multiple of the local wavelength scale `1/√λ`.
const STEPS_PER_WAVELENGTH: f64 = 0.2;
/// Grid solves beyond this many nodes are refused.
const MAX_NODES: usize = 60_000;

pub fn perimeter(domain: &DomainSpec) -> f64 {
    match domain {
        DomainSpec::Rectangle { a, b } => 2.0 * PI * (a + b),
        DomainSpec::Disk { radius } => 2.0 * PI * radius,
        other => {
            let v = other.outline().expect("polygonal domains have an outline");
            (0..v.len())
                .map(|i| {
                    let (p, q) = (v[i], v[(i + 1) % v.len()]);
                    (q[0] - p[0]).hypot(q[1] - p[1])
                })
                .sum()
        }
    }
}

/// `#{n : λ_n < λ}` from the grid solver at a spacing fine enough for λ.
pub fn grid_count(domain: &DomainSpec, lambda: f64) -> Result<usize> {
    let h = (STEPS_PER_WAVELENGTH / lambda.sqrt()).min(domain.inradius() / 10.0);
    let nodes = (domain.area() / (h * h)) as usize;
    if nodes > MAX_NODES {
        return Err(Error::Resolution(format!("λ = {lambda} needs about {nodes} nodes (limit {MAX_NODES})")));
    }
    let weyl = domain.area() * lambda / (4.0 * PI);
    let mut want = (1.25 * weyl) as usize + 10;
    loop {
        let (_, pairs) =
            solve_domain(domain, h, want, BoundaryTreatment::default(), &SolverConfig { tol: 1e-8, ..SolverConfig::default() })?;
        let below = pairs.iter().filter(|p| p.value < lambda).count();
        if below < pairs.len() {
            return Ok(below);
        }
        want *= 2;
        if want > nodes {
            return Err(Error::Resolution(format!("cannot resolve every eigenvalue below {lambda}")));
        }
    }
}

pub fn weyl_check(domain: &DomainSpec, lambda: f64) -> Result<BoundReport> {
    domain.validate()?;
    let area = domain.area();
    let weyl = area * lambda / (4.0 * PI);
    let two_term = weyl - perimeter(domain) * lambda.max(0.0).sqrt() / (4.0 * PI);
    let (count, source) = match domain {
        DomainSpec::Rectangle { a, b } => (Rectangle::new(*a, *b)?.counting_function(lambda), "exact lattice count"),
        _ => (grid_count(domain, lambda)?, "grid solver"),
    };
    let gap = (count as f64 - weyl).abs() / weyl;
    let mut r = BoundReport::new("Weyl", gap, 0.0, "N(λ) ∼ (A/4π) λ")
        .with_input("lambda", lambda)
        .with_input("count", count as f64)
        .with_input("weyl_term", weyl)
        .with_input("two_term", two_term)
        .with_note(source);
    if let DomainSpec::Disk { radius } = domain {
        r = r.with_input("bessel_count", disk_eigenvalues_below(*radius, lambda)?.len() as f64);
    }
    if count < MIN_COUNT {
        r = r.with_note(if count == 0 {
            "λ too small: nothing below it".to_string()
        } else {
            format!("λ too small: only {count} eigenvalues below")
        });
    }
    Ok(r)
}
