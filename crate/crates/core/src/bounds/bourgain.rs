//! Bourgain's improvement of Pleijel's constant: the threshold `δ₀` from the
//! packing density and the gain factor `b(δ)`.
//!
//! `b(δ) − 1` is of order 1e-9, so it is evaluated in the rearranged form
//! `δ³ (1 − q (1−δ)⁻²) / (q δ³ (1−δ)⁻² + 250)` with `q = π/√12`, which loses
//! nothing to cancellation.

use std::f64::consts::PI;

use crate::bounds::BoundReport;
use crate::error::{Error, Result};

/// Disk packing constant used for the threshold.
pub const PACKING_CONSTANT: f64 = 0.743;
/// Default number of interior samples in the search for `sup b`.
pub const SUP_GRID: usize = 2000;

const GOLDEN: f64 = 0.618_033_988_749_894_8;

fn hex_density() -> f64 {
    PI / 12f64.sqrt()
}

/// Root of `δ³/250 = ((1−δ)/p)² − 1` in `(0, 1−p)`. The right side is
/// written as `(1−p−δ)(1+p−δ)/p²` so that it vanishes exactly at the upper
/// end of the bracket even when `p` is within rounding of 1.
pub fn bourgain_delta0(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidInput(format!("packing constant must lie in (0, 1), got {p}")));
    }
    let q = 1.0 - p;
    let f = |d: f64| d.powi(3) / 250.0 - (q - d) * (1.0 + p - d) / (p * p);
    let (mut lo, mut hi) = (0.0, q);
    if f(lo) * f(hi) >= 0.0 {
        return Err(Error::InvalidInput(format!("no sign change of the threshold equation on (0, {hi})")));
    }
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `b(δ) − 1`, without cancellation. Defined for every `δ ∈ (0, 1)`.
pub fn bourgain_excess(delta: f64) -> f64 {
    let q = hex_density();
    let d3 = delta.powi(3);
    let s = q / (1.0 - delta).powi(2);
    d3 * (1.0 - s) / (d3 * s + 250.0)
}

/// `b(δ) = (1 + 250 δ⁻³) (π/√12 (1−δ)⁻² + 250 δ⁻³)⁻¹` for `δ ∈ (0, δ₀(p))`.
pub fn bourgain_b(delta: f64, p: f64) -> Result<f64> {
    let d0 = bourgain_delta0(p)?;
    if !(delta > 0.0 && delta < d0) {
        return Err(Error::InvalidInput(format!("δ = {delta} outside (0, δ₀ = {d0:.6})")));
    }
    Ok(1.0 + bourgain_excess(delta))
}

/// `b(δ) > 1` exactly when `(1−δ)² > π/√12`.
pub fn bourgain_break_even() -> f64 {
    1.0 - hex_density().sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BourgainSup {
    pub delta0: f64,
    pub argmax: f64,
    /// `sup b − 1`
    pub excess: f64,
    pub value: f64,
}

pub fn bourgain_sup(p: f64) -> Result<BourgainSup> {
    bourgain_sup_with(p, SUP_GRID)
}

/// Dense scan of `n` interior points, then golden-section refinement on the
/// two cells around the best sample.
pub fn bourgain_sup_with(p: f64, n: usize) -> Result<BourgainSup> {
    if n < 3 {
        return Err(Error::InvalidInput("the search grid needs at least 3 points".into()));
    }
    let d0 = bourgain_delta0(p)?;
    let step = d0 / (n + 1) as f64;
    let best = (1..=n).map(|i| i as f64 * step).max_by(|a, b| bourgain_excess(*a).total_cmp(&bourgain_excess(*b))).expect("nonempty grid");
    let (mut a, mut b) = ((best - step).max(0.0), (best + step).min(d0));
    let mut x1 = b - GOLDEN * (b - a);
    let mut x2 = a + GOLDEN * (b - a);
    let (mut f1, mut f2) = (bourgain_excess(x1), bourgain_excess(x2));
    while b - a > 1e-13 {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + GOLDEN * (b - a);
            f2 = bourgain_excess(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - GOLDEN * (b - a);
            f1 = bourgain_excess(x1);
        }
    }
    let argmax = 0.5 * (a + b);
    let excess = bourgain_excess(argmax);
    Ok(BourgainSup { delta0: d0, argmax, excess, value: 1.0 + excess })
}

/// `sup b ≤ λ(Hexa₁)/λ(Disk₁)`: the most any such argument can gain.
pub fn bourgain_limit_check(p: f64, lambda_hexagon: f64, lambda_disk: f64) -> Result<BoundReport> {
    let sup = bourgain_sup(p)?;
    Ok(BoundReport::new("Bourgain limit", sup.value, lambda_hexagon / lambda_disk, "λ(Hexa₁)/λ(Disk₁) ≥ sup b(δ) > 1")
        .with_input("p", p)
        .with_input("delta0", sup.delta0)
        .with_input("argmax", sup.argmax)
        .with_input("sup_excess", sup.excess))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rearranged_excess_matches_the_formula() {
        let q = hex_density();
        for d in [0.01, 0.03, 0.1, 0.2] {
            let d3: f64 = 250.0 / (d * d * d);
            let direct = (1.0 + d3) / (q / (1.0 - d) / (1.0 - d) + d3) - 1.0;
            assert!((direct - bourgain_excess(d)).abs() < 1e-14, "{d}");
        }
    }

    #[test]
    fn threshold_rejects_bad_p() {
        assert!(bourgain_delta0(1.0).is_err());
        assert!(bourgain_delta0(0.0).is_err());
        assert!(bourgain_b(0.3, 0.743).is_err());
    }
}
