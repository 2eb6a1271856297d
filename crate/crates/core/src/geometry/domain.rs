//! Planar domains with closed-form geometry where it exists.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::clip::{disk_disk_intersection_area, polygon_disk_intersection_area};

pub type Point = [f64; 2];

/// A bounded open planar domain.
///
/// `Rectangle { a, b }` is the open box `(0, aπ) × (0, bπ)`; the regular
/// polygon is centered at the origin with a horizontal bottom edge; the disk
/// is centered at the origin.
#[derive(Debug, Clone, PartialEq)]
pub enum DomainSpec {
    Rectangle { a: f64, b: f64 },
    Disk { radius: f64 },
    RegularPolygon { sides: usize, area: f64 },
    Polygon { vertices: Vec<Point> },
}

impl DomainSpec {
    /// Square of area one, `(0,1)²`.
    pub fn unit_area_square() -> Self {
        DomainSpec::Rectangle { a: 1.0 / PI, b: 1.0 / PI }
    }

    pub fn unit_area_hexagon() -> Self {
        DomainSpec::RegularPolygon { sides: 6, area: 1.0 }
    }

    pub fn unit_area_triangle() -> Self {
        DomainSpec::RegularPolygon { sides: 3, area: 1.0 }
    }

    pub fn unit_area_disk() -> Self {
        DomainSpec::Disk { radius: (1.0 / PI).sqrt() }
    }

    /// The square `(0,π)²`.
    pub fn pi_square() -> Self {
        DomainSpec::Rectangle { a: 1.0, b: 1.0 }
    }

    /// Build a general polygon, normalizing to counter-clockwise orientation
    /// and validating simplicity.
    pub fn polygon(vertices: Vec<Point>) -> Result<Self> {
        let mut vertices = vertices;
        if signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }
        let d = DomainSpec::Polygon { vertices };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        let finite_pos = |v: f64| v.is_finite() && v > 0.0;
        match self {
            DomainSpec::Rectangle { a, b } => {
                if !finite_pos(*a) || !finite_pos(*b) {
                    return Err(Error::InvalidDomain(format!("rectangle sides must be positive (a={a}, b={b})")));
                }
            }
            DomainSpec::Disk { radius } => {
                if !finite_pos(*radius) {
                    return Err(Error::InvalidDomain(format!("disk radius must be positive (r={radius})")));
                }
            }
            DomainSpec::RegularPolygon { sides, area } => {
                if *sides < 3 || !finite_pos(*area) {
                    return Err(Error::InvalidDomain(format!("regular polygon needs >= 3 sides and positive area (n={sides}, A={area})")));
                }
            }
            DomainSpec::Polygon { vertices } => validate_polygon(vertices)?,
        }
        Ok(())
    }

    pub fn area(&self) -> f64 {
        match self {
            DomainSpec::Rectangle { a, b } => a * b * PI * PI,
            DomainSpec::Disk { radius } => PI * radius * radius,
            DomainSpec::RegularPolygon { area, .. } => *area,
            DomainSpec::Polygon { vertices } => signed_area(vertices).abs(),
        }
    }

    /// Radius of the largest inscribed disk.
    pub fn inradius(&self) -> f64 {
        match self {
            DomainSpec::Rectangle { a, b } => 0.5 * PI * a.min(*b),
            DomainSpec::Disk { radius } => *radius,
            DomainSpec::RegularPolygon { sides, area } => {
                let n = *sides as f64;
                circumradius(*sides, *area) * (PI / n).cos()
            }
            DomainSpec::Polygon { vertices } => polygon_inradius(vertices),
        }
    }

    /// Radius of the disk with the same area.
    pub fn equivalent_radius(&self) -> f64 {
        (self.area() / PI).sqrt()
    }

    pub fn centroid(&self) -> Point {
        match self {
            DomainSpec::Rectangle { a, b } => [0.5 * a * PI, 0.5 * b * PI],
            DomainSpec::Disk { .. } | DomainSpec::RegularPolygon { .. } => [0.0, 0.0],
            DomainSpec::Polygon { vertices } => polygon_centroid(vertices),
        }
    }

    /// Axis-aligned bounding box as `(min, max)`.
    pub fn bounding_box(&self) -> (Point, Point) {
        match self {
            DomainSpec::Disk { radius } => ([-radius, -radius], [*radius, *radius]),
            _ => {
                let outline = self.outline().expect("polygonal domain");
                let mut lo = [f64::INFINITY; 2];
                let mut hi = [f64::NEG_INFINITY; 2];
                for p in &outline {
                    for k in 0..2 {
                        lo[k] = lo[k].min(p[k]);
                        hi[k] = hi[k].max(p[k]);
                    }
                }
                (lo, hi)
            }
        }
    }

    /// Counter-clockwise vertex list for polygonal domains, `None` for the disk.
    pub fn outline(&self) -> Option<Vec<Point>> {
        match self {
            DomainSpec::Rectangle { a, b } => {
                let (w, h) = (a * PI, b * PI);
                Some(vec![[0.0, 0.0], [w, 0.0], [w, h], [0.0, h]])
            }
            DomainSpec::Disk { .. } => None,
            DomainSpec::RegularPolygon { sides, area } => {
                let r = circumradius(*sides, *area);
                let n = *sides as f64;
                Some(
                    (0..*sides)
                        .map(|k| {
                            let t = -0.5 * PI + PI / n + 2.0 * PI * k as f64 / n;
                            [r * t.cos(), r * t.sin()]
                        })
                        .collect(),
                )
            }
            DomainSpec::Polygon { vertices } => Some(vertices.clone()),
        }
    }

    /// Signed distance to the boundary, positive inside.
    pub fn signed_distance(&self, p: Point) -> f64 {
        match self {
            DomainSpec::Rectangle { a, b } => {
                let (w, h) = (a * PI, b * PI);
                let inside = p[0] > 0.0 && p[0] < w && p[1] > 0.0 && p[1] < h;
                if inside {
                    p[0].min(w - p[0]).min(p[1]).min(h - p[1])
                } else {
                    let dx = (-p[0]).max(p[0] - w).max(0.0);
                    let dy = (-p[1]).max(p[1] - h).max(0.0);
                    let d = dx.hypot(dy);
                    if d == 0.0 {
                        0.0
                    } else {
                        -d
                    }
                }
            }
            DomainSpec::Disk { radius } => radius - p[0].hypot(p[1]),
            _ => {
                let outline = self.outline().expect("polygonal domain");
                polygon_signed_distance(&outline, p)
            }
        }
    }

    /// True when `p` lies inside with clearance greater than `eps`.
    pub fn contains(&self, p: Point, eps: f64) -> bool {
        self.signed_distance(p) > eps
    }

    /// Distance `t ∈ (0, max_len]` along the unit vector `dir` from an interior
    /// point `p` to the first boundary crossing, if one occurs within `max_len`.
    pub fn boundary_crossing(&self, p: Point, dir: Point, max_len: f64) -> Option<f64> {
        match self {
            DomainSpec::Disk { radius } => {
                // |p + t d|² = r² with |d| = 1
                let b = p[0] * dir[0] + p[1] * dir[1];
                let c = p[0] * p[0] + p[1] * p[1] - radius * radius;
                let disc = b * b - c;
                if disc < 0.0 {
                    return None;
                }
                let t = -b + disc.sqrt();
                (t > 0.0 && t <= max_len * (1.0 + 1e-12)).then_some(t.min(max_len))
            }
            _ => {
                let outline = self.outline().expect("polygonal domain");
                let q = [p[0] + max_len * dir[0], p[1] + max_len * dir[1]];
                let mut best: Option<f64> = None;
                for k in 0..outline.len() {
                    let a = outline[k];
                    let b = outline[(k + 1) % outline.len()];
                    if let Some(s) = segment_intersection_param(p, q, a, b) {
                        if s > 0.0 {
                            let t = s * max_len;
                            best = Some(best.map_or(t, |b: f64| b.min(t)));
                        }
                    }
                }
                best
            }
        }
    }

    /// Exact area of the intersection with the disk of radius `r` centered at `c`.
    pub fn disk_intersection_area(&self, c: Point, r: f64) -> f64 {
        match self {
            DomainSpec::Disk { radius } => disk_disk_intersection_area([0.0, 0.0], *radius, c, r),
            _ => polygon_disk_intersection_area(&self.outline().expect("polygonal domain"), c, r),
        }
    }

    /// The same domain as an explicit polygon (the disk is not polygonal).
    pub fn to_polygon(&self) -> Option<DomainSpec> {
        self.outline().map(|vertices| DomainSpec::Polygon { vertices })
    }

    /// Apply a similarity transform `p ↦ s·R(θ)·p + t` to a polygonal domain.
    pub fn transformed(&self, scale: f64, angle: f64, shift: Point) -> Option<DomainSpec> {
        let (sn, cs) = angle.sin_cos();
        self.outline().map(|v| DomainSpec::Polygon {
            vertices: v.iter().map(|p| [scale * (cs * p[0] - sn * p[1]) + shift[0], scale * (sn * p[0] + cs * p[1]) + shift[1]]).collect(),
        })
    }

    /// The domain scaled by `s` about the origin, keeping its variant.
    pub fn scaled(&self, s: f64) -> DomainSpec {
        match self {
            DomainSpec::Rectangle { a, b } => DomainSpec::Rectangle { a: a * s, b: b * s },
            DomainSpec::Disk { radius } => DomainSpec::Disk { radius: radius * s },
            DomainSpec::RegularPolygon { sides, area } => DomainSpec::RegularPolygon { sides: *sides, area: area * s * s },
            DomainSpec::Polygon { vertices } => DomainSpec::Polygon { vertices: vertices.iter().map(|p| [p[0] * s, p[1] * s]).collect() },
        }
    }
}

fn circumradius(sides: usize, area: f64) -> f64 {
    let n = sides as f64;
    (2.0 * area / (n * (2.0 * PI / n).sin())).sqrt()
}

pub(crate) fn signed_area(v: &[Point]) -> f64 {
    let n = v.len();
    let mut s = 0.0;
    for k in 0..n {
        let a = v[k];
        let b = v[(k + 1) % n];
        s += a[0] * b[1] - b[0] * a[1];
    }
    0.5 * s
}

fn polygon_centroid(v: &[Point]) -> Point {
    let n = v.len();
    let a = signed_area(v);
    let (mut cx, mut cy) = (0.0, 0.0);
    for k in 0..n {
        let p = v[k];
        let q = v[(k + 1) % n];
        let w = p[0] * q[1] - q[0] * p[1];
        cx += (p[0] + q[0]) * w;
        cy += (p[1] + q[1]) * w;
    }
    [cx / (6.0 * a), cy / (6.0 * a)]
}

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Parameter `s ∈ [0,1]` along `p→q` where it meets segment `a→b`, if it does.
fn segment_intersection_param(p: Point, q: Point, a: Point, b: Point) -> Option<f64> {
    let r = [q[0] - p[0], q[1] - p[1]];
    let e = [b[0] - a[0], b[1] - a[1]];
    let denom = r[0] * e[1] - r[1] * e[0];
    if denom.abs() < 1e-300 {
        return None;
    }
    let ap = [a[0] - p[0], a[1] - p[1]];
    let s = (ap[0] * e[1] - ap[1] * e[0]) / denom;
    let u = (ap[0] * r[1] - ap[1] * r[0]) / denom;
    let tol = 1e-12;
    ((-tol..=1.0 + tol).contains(&s) && (-tol..=1.0 + tol).contains(&u)).then_some(s.clamp(0.0, 1.0))
}

fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let e = [b[0] - a[0], b[1] - a[1]];
    let len2 = e[0] * e[0] + e[1] * e[1];
    let t = if len2 > 0.0 { (((p[0] - a[0]) * e[0] + (p[1] - a[1]) * e[1]) / len2).clamp(0.0, 1.0) } else { 0.0 };
    (p[0] - a[0] - t * e[0]).hypot(p[1] - a[1] - t * e[1])
}

fn point_in_polygon(v: &[Point], p: Point) -> bool {
    let n = v.len();
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (v[i], v[j]);
        if (a[1] > p[1]) != (b[1] > p[1]) {
            let x = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
            if p[0] < x {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

pub(crate) fn polygon_signed_distance(v: &[Point], p: Point) -> f64 {
    let n = v.len();
    let d = (0..n).map(|k| point_segment_distance(p, v[k], v[(k + 1) % n])).fold(f64::INFINITY, f64::min);
    if point_in_polygon(v, p) {
        d
    } else {
        -d
    }
}

fn validate_polygon(v: &[Point]) -> Result<()> {
    let n = v.len();
    if n < 3 {
        return Err(Error::InvalidDomain("polygon needs at least 3 vertices".into()));
    }
    if v.iter().any(|p| !p[0].is_finite() || !p[1].is_finite()) {
        return Err(Error::InvalidDomain("polygon has non-finite vertices".into()));
    }
    let area = signed_area(v).abs();
    let scale = v.iter().map(|p| p[0].abs().max(p[1].abs())).fold(0.0_f64, f64::max).max(1e-300);
    if area <= 1e-12 * scale * scale {
        return Err(Error::InvalidDomain("degenerate polygon (zero area)".into()));
    }
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                continue;
            }
            let (a, b) = (v[i], v[(i + 1) % n]);
            let (c, d) = (v[j], v[(j + 1) % n]);
            let o1 = cross(a, b, c);
            let o2 = cross(a, b, d);
            let o3 = cross(c, d, a);
            let o4 = cross(c, d, b);
            if o1 * o2 <= 0.0 && o3 * o4 <= 0.0 {
                return Err(Error::InvalidDomain(format!("polygon is not simple: edges {i} and {j} intersect")));
            }
        }
    }
    Ok(())
}

/// Largest inscribed disk radius by grid search followed by compass refinement.
fn polygon_inradius(v: &[Point]) -> f64 {
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in v {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let f = |p: Point| polygon_signed_distance(v, p);
    let steps = 64;
    let mut best = (f64::NEG_INFINITY, [0.0, 0.0]);
    for i in 0..=steps {
        for j in 0..=steps {
            let p = [lo[0] + (hi[0] - lo[0]) * i as f64 / steps as f64, lo[1] + (hi[1] - lo[1]) * j as f64 / steps as f64];
            let d = f(p);
            if d > best.0 {
                best = (d, p);
            }
        }
    }
    let diam = (hi[0] - lo[0]).max(hi[1] - lo[1]);
    let mut step = diam / steps as f64;
    let (mut fb, mut pb) = best;
    while step > 1e-12 * diam {
        let mut moved = false;
        let r = std::f64::consts::FRAC_1_SQRT_2;
        for d in [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0], [r, r], [-r, r], [r, -r], [-r, -r]] {
            let q = [pb[0] + step * d[0], pb[1] + step * d[1]];
            let fq = f(q);
            if fq > fb {
                fb = fq;
                pb = q;
                moved = true;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    fb
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainSpec::Rectangle { a, b } => write!(f, "rectangle a={a} b={b}"),
            DomainSpec::Disk { radius } => write!(f, "disk radius={radius}"),
            DomainSpec::RegularPolygon { sides, area } => {
                write!(f, "regular-polygon sides={sides} area={area}")
            }
            DomainSpec::Polygon { vertices } => {
                write!(f, "polygon vertices=")?;
                for (k, p) in vertices.iter().enumerate() {
                    if k > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{},{}", p[0], p[1])?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for DomainSpec {
    type Err = Error;

    /// Accepts the key-value form produced by `Display` (`rectangle a=1 b=2`,
    /// `disk radius=1`, `regular-polygon sides=6 area=1`,
    /// `polygon vertices=0,0;1,0;0,1`) and the presets `square` (the square
    /// `(0,π)²`), `unit-square`, `unit-hexagon`, `unit-triangle`, `unit-disk`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "square" => return Ok(DomainSpec::pi_square()),
            "unit-square" => return Ok(DomainSpec::unit_area_square()),
            "unit-hexagon" => return Ok(DomainSpec::unit_area_hexagon()),
            "unit-triangle" => return Ok(DomainSpec::unit_area_triangle()),
            "unit-disk" => return Ok(DomainSpec::unit_area_disk()),
            _ => {}
        }
        let mut parts = s.split_whitespace();
        let kind = parts.next().ok_or_else(|| Error::InvalidDomain("empty domain string".into()))?;
        let mut kv = std::collections::BTreeMap::new();
        for p in parts {
            let (k, v) = p.split_once('=').ok_or_else(|| Error::InvalidDomain(format!("expected key=value, got `{p}`")))?;
            kv.insert(k.to_string(), v.to_string());
        }
        let num = |key: &str| -> Result<f64> {
            kv.get(key)
                .ok_or_else(|| Error::InvalidDomain(format!("missing `{key}` for {kind}")))?
                .parse::<f64>()
                .map_err(|e| Error::InvalidDomain(format!("bad `{key}`: {e}")))
        };
        let d = match kind {
            "rectangle" => DomainSpec::Rectangle { a: num("a")?, b: num("b")? },
            "disk" => DomainSpec::Disk { radius: num("radius")? },
            "regular-polygon" => DomainSpec::RegularPolygon { sides: num("sides")? as usize, area: num("area")? },
            "polygon" => {
                let raw = kv.get("vertices").ok_or_else(|| Error::InvalidDomain("missing `vertices`".into()))?;
                let mut vertices = Vec::new();
                for pair in raw.split(';') {
                    let (x, y) = pair.split_once(',').ok_or_else(|| Error::InvalidDomain(format!("bad vertex `{pair}`")))?;
                    let parse = |t: &str| t.parse::<f64>().map_err(|e| Error::InvalidDomain(format!("bad coordinate `{t}`: {e}")));
                    vertices.push([parse(x)?, parse(y)?]);
                }
                return DomainSpec::polygon(vertices);
            }
            other => return Err(Error::InvalidDomain(format!("unknown domain kind `{other}`"))),
        };
        d.validate()?;
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn closed_form_areas() {
        assert_relative_eq!(DomainSpec::pi_square().area(), PI * PI);
        assert_relative_eq!(DomainSpec::Disk { radius: 1.0 }.area(), PI);
        assert_relative_eq!(DomainSpec::unit_area_hexagon().area(), 1.0);
        // the regular polygon's outline reproduces its nominal area
        let hex = DomainSpec::unit_area_hexagon().to_polygon().unwrap();
        assert_relative_eq!(hex.area(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn inradius_examples() {
        assert_relative_eq!(DomainSpec::unit_area_square().inradius(), 0.5, epsilon = 1e-15);
        assert_relative_eq!(DomainSpec::Disk { radius: 0.7 }.inradius(), 0.7);
        let expected = (1.0 / (2.0 * 3f64.sqrt())).sqrt();
        assert_relative_eq!(DomainSpec::unit_area_hexagon().inradius(), expected, epsilon = 1e-12);
        assert!((expected - 0.53728).abs() < 1e-5);
        // the generic search agrees with the closed forms
        for d in [DomainSpec::unit_area_hexagon(), DomainSpec::unit_area_triangle(), DomainSpec::unit_area_square()] {
            let p = d.to_polygon().unwrap();
            assert_relative_eq!(p.inradius(), d.inradius(), epsilon = 1e-9);
        }
    }

    #[test]
    fn equivalent_radius_examples() {
        assert_relative_eq!(DomainSpec::Disk { radius: 1.0 }.equivalent_radius(), 1.0);
        assert_relative_eq!(DomainSpec::unit_area_square().equivalent_radius(), 0.564189583547756, epsilon = 1e-12);
        assert_relative_eq!(DomainSpec::pi_square().equivalent_radius(), PI.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn inradius_never_exceeds_equivalent_radius() {
        let domains = [
            DomainSpec::unit_area_square(),
            DomainSpec::unit_area_hexagon(),
            DomainSpec::unit_area_triangle(),
            DomainSpec::Rectangle { a: 1.0, b: 4.0 },
        ];
        for d in &domains {
            assert!(d.inradius() < d.equivalent_radius() - 1e-6, "{d}");
        }
        let disk = DomainSpec::unit_area_disk();
        assert_relative_eq!(disk.inradius(), disk.equivalent_radius(), epsilon = 1e-15);
    }

    #[test]
    fn rejects_degenerate_polygons() {
        assert!(DomainSpec::polygon(vec![[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]).is_err());
        assert!(DomainSpec::polygon(vec![[0.0, 0.0], [1.0, 0.0]]).is_err());
        // bow tie
        assert!(DomainSpec::polygon(vec![[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]]).is_err());
        assert!(DomainSpec::Rectangle { a: 0.0, b: 1.0 }.validate().is_err());
        assert!(DomainSpec::Disk { radius: -1.0 }.validate().is_err());
    }

    #[test]
    fn clockwise_input_is_normalized() {
        let d = DomainSpec::polygon(vec![[0.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, 0.0]]).unwrap();
        assert_relative_eq!(d.area(), 1.0);
        assert!(d.contains([0.5, 0.5], 0.0));
        assert!(!d.contains([1.5, 0.5], 0.0));
        assert_relative_eq!(d.centroid()[0], 0.5, epsilon = 1e-15);
    }

    #[test]
    fn parse_round_trip() {
        for d in [
            DomainSpec::Rectangle { a: 1.0, b: 4.0 },
            DomainSpec::Disk { radius: 0.5 },
            DomainSpec::unit_area_hexagon(),
            DomainSpec::polygon(vec![[0.0, 0.0], [2.0, 0.0], [0.0, 1.0]]).unwrap(),
        ] {
            let s = d.to_string();
            assert_eq!(s.parse::<DomainSpec>().unwrap(), d, "{s}");
        }
        assert_eq!("square".parse::<DomainSpec>().unwrap(), DomainSpec::pi_square());
        assert!("ellipse a=1".parse::<DomainSpec>().is_err());
    }

    #[test]
    fn disk_crossing() {
        let d = DomainSpec::Disk { radius: 1.0 };
        let t = d.boundary_crossing([0.5, 0.0], [1.0, 0.0], 1.0).unwrap();
        assert_relative_eq!(t, 0.5, epsilon = 1e-14);
        assert!(d.boundary_crossing([0.0, 0.0], [1.0, 0.0], 0.5).is_none());
        let sq = DomainSpec::unit_area_square();
        let t = sq.boundary_crossing([0.9, 0.5], [1.0, 0.0], 0.3).unwrap();
        assert_relative_eq!(t, 0.1, epsilon = 1e-12);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn rigid_motions_preserve_geometry(angle in -3.2f64..3.2, tx in -5.0f64..5.0, ty in -5.0f64..5.0, which in 0usize..3) {
                let d = [DomainSpec::unit_area_hexagon(), DomainSpec::Rectangle { a: 1.0, b: 2.5 }, DomainSpec::unit_area_triangle()][which].clone();
                let moved = d.transformed(1.0, angle, [tx, ty]).unwrap();
                prop_assert!((moved.area() - d.area()).abs() < 1e-12 * d.area());
                prop_assert!((moved.equivalent_radius() - d.equivalent_radius()).abs() < 1e-12);
                prop_assert!((moved.inradius() - d.inradius()).abs() < 1e-9 * d.inradius());
            }
        }
    }
}
