//! Pole configurations and the half-winding vector potential.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{GridMask, Point};

/// Poles carrying flux π each.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PoleConfig {
    pub poles: Vec<Point>,
}

impl PoleConfig {
    pub fn new(poles: Vec<Point>) -> Result<Self> {
        for (i, a) in poles.iter().enumerate() {
            if !(a[0].is_finite() && a[1].is_finite()) {
                return Err(Error::InvalidInput(format!("pole {} is not finite", i + 1)));
            }
            if poles[..i].contains(a) {
                return Err(Error::InvalidInput(format!("pole {} repeats an earlier pole", i + 1)));
            }
        }
        Ok(PoleConfig { poles })
    }

    pub fn none() -> Self {
        PoleConfig { poles: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.poles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }

    /// Lattice coordinates `(i, j)` of the plaquette whose center holds the
    /// pole: the square with corner nodes `(i, j)` and `(i+1, j+1)`.
    pub fn plaquette(mask: &GridMask, pole: Point) -> Result<(i64, i64)> {
        let fx = (pole[0] - mask.origin[0]) / mask.h - 1.5;
        let fy = (pole[1] - mask.origin[1]) / mask.h - 1.5;
        let (i, j) = (fx.round(), fy.round());
        if (fx - i).abs() > 1e-6 || (fy - j).abs() > 1e-6 {
            let on_node = ((fx + 0.5) - (fx + 0.5).round()).abs() < 1e-6 && ((fy + 0.5) - (fy + 0.5).round()).abs() < 1e-6;
            let what = if on_node { "sits on a grid node" } else { "is not at a plaquette center" };
            return Err(Error::InvalidInput(format!("pole ({}, {}) {what}", pole[0], pole[1])));
        }
        Ok((i as i64, j as i64))
    }

    /// Move every pole to the nearest plaquette center.
    pub fn snapped(&self, mask: &GridMask) -> PoleConfig {
        let snap = |v: f64, o: f64| o + ((v - o) / mask.h - 1.5).round() * mask.h + 1.5 * mask.h;
        PoleConfig { poles: self.poles.iter().map(|p| [snap(p[0], mask.origin[0]), snap(p[1], mask.origin[1])]).collect() }
    }

    /// Plaquette placement, and clearance of more than `2h` from the boundary
    /// and between poles.
    pub fn validate(&self, mask: &GridMask) -> Result<()> {
        let h = mask.h;
        for (i, &p) in self.poles.iter().enumerate() {
            Self::plaquette(mask, p)?;
            let d = mask.domain.signed_distance(p);
            if d <= 2.0 * h {
                return Err(Error::InvalidInput(format!("pole {} lies within 2h of the boundary (distance {d:.4})", i + 1)));
            }
            for (j, q) in self.poles[..i].iter().enumerate() {
                if (p[0] - q[0]).hypot(p[1] - q[1]) <= 2.0 * h {
                    return Err(Error::InvalidInput(format!("poles {} and {} are within 2h", j + 1, i + 1)));
                }
            }
        }
        Ok(())
    }
}

/// `A(x) = Σ_j ½ (−(y−y_j), x−x_j) / r_j²`.
pub fn vector_potential(poles: &[Point], p: Point) -> Result<[f64; 2]> {
    let mut a = [0.0, 0.0];
    for x in poles {
        let (dx, dy) = (p[0] - x[0], p[1] - x[1]);
        let r2 = dx * dx + dy * dy;
        if r2 == 0.0 {
            return Err(Error::InvalidInput(format!("vector potential is singular at the pole ({}, {})", x[0], x[1])));
        }
        a[0] += -0.5 * dy / r2;
        a[1] += 0.5 * dx / r2;
    }
    Ok(a)
}

/// `∫ A · dl` along the straight segment `a → b`, in closed form: half the
/// angle the segment subtends at each pole.
pub fn line_integral(poles: &[Point], a: Point, b: Point) -> f64 {
    poles
        .iter()
        .map(|x| {
            let (ax, ay) = (a[0] - x[0], a[1] - x[1]);
            let (bx, by) = (b[0] - x[0], b[1] - x[1]);
            0.5 * (ax * by - ay * bx).atan2(ax * bx + ay * by)
        })
        .sum()
}

/// `∮ A · dl` around a closed polygon by composite Gauss-Legendre quadrature
/// (`panels` panels of five points per edge).
pub fn circulation(poles: &[Point], polygon: &[Point], panels: usize) -> Result<f64> {
    const X: [f64; 5] = [0.0, -0.538_469_310_105_683_1, 0.538_469_310_105_683_1, -0.906_179_845_938_664, 0.906_179_845_938_664];
    const W: [f64; 5] =
        [0.568_888_888_888_888_9, 0.478_628_670_499_366_5, 0.478_628_670_499_366_5, 0.236_926_885_056_189_1, 0.236_926_885_056_189_1];
    let n = polygon.len();
    let mut total = 0.0;
    for e in 0..n {
        let (a, b) = (polygon[e], polygon[(e + 1) % n]);
        let d = [b[0] - a[0], b[1] - a[1]];
        for k in 0..panels {
            let (t0, t1) = (k as f64 / panels as f64, (k + 1) as f64 / panels as f64);
            for (&x, &w) in X.iter().zip(&W) {
                let t = 0.5 * (t0 + t1) + 0.5 * (t1 - t0) * x;
                let v = vector_potential(poles, [a[0] + t * d[0], a[1] + t * d[1]])?;
                total += 0.5 * (t1 - t0) * w * (v[0] * d[0] + v[1] * d[1]);
            }
        }
    }
    Ok(total)
}

/// Circulation in units of π, rounded: the number of enclosed poles.
pub fn enclosed_poles(poles: &[Point], polygon: &[Point]) -> usize {
    let n = polygon.len();
    let total: f64 = (0..n).map(|e| line_integral(poles, polygon[e], polygon[(e + 1) % n])).sum();
    (total / PI).round().abs() as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn potential_at_unit_point() {
        let a = vector_potential(&[[0.0, 0.0]], [1.0, 0.0]).unwrap();
        assert_eq!(a, [0.0, 0.5]);
        assert!(vector_potential(&[[0.0, 0.0]], [0.0, 0.0]).is_err());
    }

    #[test]
    fn one_pole_circulation_is_pi() {
        let square = [[-1.0, -1.0], [2.0, -1.0], [2.0, 1.5], [-1.0, 1.5]];
        let c = circulation(&[[0.2, 0.1]], &square, 64).unwrap();
        assert!((c - PI).abs() < 1e-6, "{c}");
        // a loop that misses the pole
        let far = [[3.0, 3.0], [4.0, 3.0], [4.0, 4.0]];
        assert!(circulation(&[[0.2, 0.1]], &far, 64).unwrap().abs() < 1e-6);
    }

    #[test]
    fn two_poles_add() {
        let square = [[-2.0, -2.0], [2.0, -2.0], [2.0, 2.0], [-2.0, 2.0]];
        let poles = [[0.5, 0.0], [-0.5, 0.3]];
        let c = circulation(&poles, &square, 64).unwrap();
        assert!((c - 2.0 * PI).abs() < 1e-6, "{c}");
        assert_eq!(enclosed_poles(&poles, &square), 2);
    }
}
