// Exact areas of disk intersections with polygons and with other disks.
//
// The polygon case sums, edge by edge, the signed area of the triangle
// (center, a, b) clipped to the disk. Each edge is split at its crossings with
// the circle; pieces inside contribute a straight triangle, pieces outside a
// circular sector.

use std::f64::consts::PI;

use super::domain::Point;

fn cross(a: Point, b: Point) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn dot(a: Point, b: Point) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

/// Signed area of triangle (0, a, b) intersected with the disk of radius `r` at 0.
fn triangle_disk_signed(a: Point, b: Point, r: f64) -> f64 {
    let d = [b[0] - a[0], b[1] - a[1]];
    let qa = dot(d, d);
    if qa == 0.0 {
        return 0.0;
    }
    let qb = 2.0 * dot(a, d);
    let qc = dot(a, a) - r * r;
    let mut cuts = vec![0.0];
    let disc = qb * qb - 4.0 * qa * qc;
    if disc > 0.0 {
        let s = disc.sqrt();
        for t in [(-qb - s) / (2.0 * qa), (-qb + s) / (2.0 * qa)] {
            if t > 0.0 && t < 1.0 {
                cuts.push(t);
            }
        }
    }
    cuts.push(1.0);

    let at = |t: f64| [a[0] + t * d[0], a[1] + t * d[1]];
    let mut total = 0.0;
    for w in cuts.windows(2) {
        let (p, q) = (at(w[0]), at(w[1]));
        let m = at(0.5 * (w[0] + w[1]));
        if dot(m, m) <= r * r {
            total += 0.5 * cross(p, q);
        } else {
            total += 0.5 * r * r * cross(p, q).atan2(dot(p, q));
        }
    }
    total
}

/// Area of `polygon ∩ disk(c, r)` for a simple polygon of either orientation.
pub fn polygon_disk_intersection_area(polygon: &[Point], c: Point, r: f64) -> f64 {
    let n = polygon.len();
    let mut s = 0.0;
    for k in 0..n {
        let a = polygon[k];
        let b = polygon[(k + 1) % n];
        s += triangle_disk_signed([a[0] - c[0], a[1] - c[1]], [b[0] - c[0], b[1] - c[1]], r);
    }
    s.abs()
}

/// Area of the lens between two disks.
pub fn disk_disk_intersection_area(c1: Point, r1: f64, c2: Point, r2: f64) -> f64 {
    let d = (c1[0] - c2[0]).hypot(c1[1] - c2[1]);
    if d >= r1 + r2 {
        return 0.0;
    }
    if d <= (r1 - r2).abs() {
        let r = r1.min(r2);
        return PI * r * r;
    }
    let a1 = ((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1)).clamp(-1.0, 1.0).acos();
    let a2 = ((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2)).clamp(-1.0, 1.0).acos();
    let k = ((-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2)).max(0.0);
    r1 * r1 * a1 + r2 * r2 * a2 - 0.5 * k.sqrt()
}
