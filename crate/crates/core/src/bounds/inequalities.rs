//! Isoperimetric-type lower bounds on `A·λ₁`: Faber-Krahn, its quantitative
//! forms by Hansen-Nadirashvili and by Brasco-De Philippis-Velichkov.

use crate::bessel::lambda_disk_unit_area;
use crate::bounds::BoundReport;
use crate::error::Result;
use crate::geometry::{fraenkel_asymmetry, DomainSpec};
use crate::solver::groundstate_energy;

/// Relative accuracy of every `λ₁` computed here.
pub const GROUND_TARGET: f64 = 1e-4;
/// Slack allowed for discretization, as a fraction of `λ(Disk₁)`.
pub const FK_ALLOWANCE: f64 = 0.02;

/// `A(Ω)·λ₁(Ω)`, from the extrapolated grid solver.
pub fn normalized_ground_energy(domain: &DomainSpec) -> Result<f64> {
    Ok(domain.area() * groundstate_energy(domain, GROUND_TARGET)?.value)
}

fn is_disk(domain: &DomainSpec) -> bool {
    matches!(domain, DomainSpec::Disk { .. })
}

pub fn faber_krahn_check(domain: &DomainSpec) -> Result<BoundReport> {
    let disk = lambda_disk_unit_area();
    let al = normalized_ground_energy(domain)?;
    let mut r = BoundReport::new("Faber-Krahn", disk, al, "A(D) λ(D) ≥ λ(Disk₁)")
        .with_input("area", domain.area())
        .with_input("lambda1", al / domain.area())
        .with_input("allowance", FK_ALLOWANCE * disk);
    if is_disk(domain) {
        r = r.with_note("equality case: the domain is a disk");
    }
    Ok(r)
}

/// `1 + (1/250)(1 − r_i/r₀)²` with inradius `r_i` and equal-area radius `r₀`.
pub fn hansen_nadirashvili_factor(domain: &DomainSpec) -> f64 {
    let t = 1.0 - domain.inradius() / domain.equivalent_radius();
    1.0 + t * t / 250.0
}

pub fn hansen_nadirashvili_check(domain: &DomainSpec) -> Result<BoundReport> {
    let disk = lambda_disk_unit_area();
    let factor = hansen_nadirashvili_factor(domain);
    let al = normalized_ground_energy(domain)?;
    let mut r = BoundReport::new("Hansen-Nadirashvili", factor * disk, al, "A λ ≥ (1 + (1/250)(1 − r_i/r₀)²) λ(Disk₁)")
        .with_input("factor", factor)
        .with_input("inradius", domain.inradius())
        .with_input("equivalent_radius", domain.equivalent_radius());
    if is_disk(domain) {
        r = r.with_note("factor is 1: reduces to the Faber-Krahn equality");
    }
    Ok(r)
}

/// The quantitative Faber-Krahn inequality with a caller-supplied constant
/// `c`, since no explicit value is known. Also records the largest constant
/// that would keep the inequality true for this domain.
pub fn bdpv_check(domain: &DomainSpec, c: f64) -> Result<BoundReport> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(crate::Error::InvalidInput(format!("constant C must be positive, got {c}")));
    }
    let disk = lambda_disk_unit_area();
    let asym = fraenkel_asymmetry(domain, domain.inradius() / 200.0)?;
    let right = normalized_ground_energy(domain)? - disk;
    let left = c * asym * asym * disk;
    let mut r = BoundReport::new("BDPV", left, right, "A λ − λ(Disk₁) ≥ C 𝒜² λ(Disk₁)").with_input("C", c).with_input("asymmetry", asym);
    if asym == 0.0 {
        r = r.with_note(format!("vacuous, 0 ≥ 0 (the measured gap {right:.2e} is discretization)"));
    } else {
        r = r.with_input("largest_tight_C", right / (asym * asym * disk));
    }
    Ok(r)
}
