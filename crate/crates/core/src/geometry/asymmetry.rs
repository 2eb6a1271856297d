//! Fraenkel asymmetry: the normalized area of the symmetric difference to the
//! closest disk of equal area.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::clip::polygon_disk_intersection_area;
use crate::geometry::domain::{DomainSpec, Point};

const COARSE: usize = 33;
const GOLDEN: f64 = 0.618_033_988_749_894_8;

/// Asymmetry of a domain. Areas are exact; `resolution` sets the accuracy of
/// the center search and must be below `inradius / 8`.
pub fn fraenkel_asymmetry(domain: &DomainSpec, resolution: f64) -> Result<f64> {
    domain.validate()?;
    if !(resolution > 0.0 && resolution < domain.inradius() / 8.0) {
        return Err(Error::InvalidInput(format!("asymmetry resolution {resolution} must lie in (0, inradius/8)")));
    }
    if let DomainSpec::Disk { .. } = domain {
        return Ok(0.0);
    }
    let area = domain.area();
    let r = (area / PI).sqrt();
    let bbox = domain.bounding_box();
    let overlap = |c: Point| domain.disk_intersection_area(c, r);
    Ok(search(area, bbox, resolution, overlap))
}

/// Asymmetry of the union of axis-aligned pixels of side `h` centered at `points`.
pub fn pixel_set_asymmetry(points: &[Point], h: f64) -> f64 {
    assert!(!points.is_empty(), "empty pixel set");
    let area = points.len() as f64 * h * h;
    let r = (area / PI).sqrt();
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for p in points {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k] - 0.5 * h);
            hi[k] = hi[k].max(p[k] + 0.5 * h);
        }
    }
    let overlap = |c: Point| points.iter().map(|&p| pixel_disk_area(p, h, c, r)).sum::<f64>();
    search(area, (lo, hi), h, overlap)
}

fn pixel_disk_area(p: Point, h: f64, c: Point, r: f64) -> f64 {
    let half = 0.5 * h;
    let dx = (p[0] - c[0]).abs();
    let dy = (p[1] - c[1]).abs();
    let far = (dx + half).hypot(dy + half);
    if far <= r {
        return h * h;
    }
    let near = (dx - half).max(0.0).hypot((dy - half).max(0.0));
    if near >= r {
        return 0.0;
    }
    let sq = [[p[0] - half, p[1] - half], [p[0] + half, p[1] - half], [p[0] + half, p[1] + half], [p[0] - half, p[1] + half]];
    polygon_disk_intersection_area(&sq, c, r)
}

/// Maximize the overlap over disk centers: a coarse grid over the bounding box
/// followed by alternating golden-section line searches.
fn search(area: f64, bbox: (Point, Point), resolution: f64, overlap: impl Fn(Point) -> f64) -> f64 {
    let (lo, hi) = bbox;
    let step = [(hi[0] - lo[0]) / (COARSE - 1) as f64, (hi[1] - lo[1]) / (COARSE - 1) as f64];
    let mut best = (f64::NEG_INFINITY, lo);
    for i in 0..COARSE {
        for j in 0..COARSE {
            let c = [lo[0] + i as f64 * step[0], lo[1] + j as f64 * step[1]];
            let v = overlap(c);
            if v > best.0 {
                best = (v, c);
            }
        }
    }
    let (mut fbest, mut c) = best;
    let tol = 1e-6 * resolution;
    for _ in 0..8 {
        let before = fbest;
        for axis in 0..2 {
            let at = |t: f64| {
                let mut q = c;
                q[axis] = t;
                q
            };
            let (mut a, mut b) = (c[axis] - step[axis], c[axis] + step[axis]);
            let mut x1 = b - GOLDEN * (b - a);
            let mut x2 = a + GOLDEN * (b - a);
            let mut f1 = overlap(at(x1));
            let mut f2 = overlap(at(x2));
            while b - a > tol {
                if f1 < f2 {
                    a = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = a + GOLDEN * (b - a);
                    f2 = overlap(at(x2));
                } else {
                    b = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = b - GOLDEN * (b - a);
                    f1 = overlap(at(x1));
                }
            }
            let t = 0.5 * (a + b);
            let ft = overlap(at(t));
            if ft > fbest {
                fbest = ft;
                c = at(t);
            }
        }
        if fbest - before <= 1e-15 * area {
            break;
        }
    }
    (2.0 * (1.0 - fbest / area)).clamp(0.0, 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Centered disk against the unit square: four circular caps protrude.
    fn square_closed_form() -> f64 {
        let r = (1.0 / PI).sqrt();
        let alpha = (0.5 / r).acos();
        let cap = r * r * (alpha - alpha.sin() * alpha.cos());
        2.0 * 4.0 * cap
    }

    #[test]
    fn disk_is_symmetric() {
        assert_eq!(fraenkel_asymmetry(&DomainSpec::Disk { radius: 2.0 }, 0.01).unwrap(), 0.0);
    }

    #[test]
    fn unit_square_matches_caps() {
        let a = fraenkel_asymmetry(&DomainSpec::unit_area_square(), 0.01).unwrap();
        assert_relative_eq!(a, square_closed_form(), epsilon = 1e-9);
        assert!((a - 0.1811).abs() < 1e-3);
    }

    #[test]
    fn resolution_precondition() {
        assert!(fraenkel_asymmetry(&DomainSpec::unit_area_square(), 0.1).is_err());
    }

    #[test]
    fn pixelated_square_converges() {
        let n = 40;
        let h = 1.0 / n as f64;
        let pts: Vec<Point> = (0..n).flat_map(|i| (0..n).map(move |j| [(i as f64 + 0.5) * h, (j as f64 + 0.5) * h])).collect();
        assert_relative_eq!(pixel_set_asymmetry(&pts, h), square_closed_form(), epsilon = 1e-9);
    }
}
