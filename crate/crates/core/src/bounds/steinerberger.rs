//! The two-case improvement factor obtained from the uncertainty principle.

use crate::bessel::lambda_disk_unit_area;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteinerbergerFactor {
    /// `1 − c/2`
    pub first: f64,
    /// `1 − C c³ / (216 + 6 C c²)`
    pub second: f64,
    pub factor: f64,
    /// `λ(Disk₁) / factor`, the implied lower bound on `A · liminf 𝔏_k / k`.
    pub implied_lower: f64,
}

pub fn steinerberger_factor(c: f64, big_c: f64) -> Result<SteinerbergerFactor> {
    if !(c > 0.0 && c < 2.0) {
        return Err(Error::InvalidInput(format!("c must lie in (0, 2), got {c}")));
    }
    if !(big_c > 0.0 && big_c.is_finite()) {
        return Err(Error::InvalidInput(format!("C must be positive, got {big_c}")));
    }
    let first = 1.0 - 0.5 * c;
    let second = 1.0 - big_c * c.powi(3) / (216.0 + 6.0 * big_c * c * c);
    let factor = first.max(second);
    Ok(SteinerbergerFactor { first, second, factor, implied_lower: lambda_disk_unit_area() / factor })
}

/// Where `1 − c/2` and the second branch cross in `(0, 2)`, found by
/// bisection of their difference on a sign change. `None` if the difference
/// keeps one sign on the whole interval.
pub fn steinerberger_crossing(big_c: f64) -> Result<Option<f64>> {
    let g = |c: f64| -> Result<f64> {
        let f = steinerberger_factor(c, big_c)?;
        Ok(f.first - f.second)
    };
    let samples: Vec<f64> = (1..400).map(|i| 2.0 * i as f64 / 400.0).collect();
    for w in samples.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (glo, ghi) = (g(lo)?, g(hi)?);
        if glo == 0.0 {
            return Ok(Some(lo));
        }
        if glo * ghi < 0.0 {
            let mut flo = glo;
            while hi - lo > 1e-13 {
                let mid = 0.5 * (lo + hi);
                let fm = g(mid)?;
                if fm * flo > 0.0 {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            return Ok(Some(0.5 * (lo + hi)));
        }
    }
    Ok(None)
}
