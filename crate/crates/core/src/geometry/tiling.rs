//! Congruent hexagonal or square cells packed inside a domain.
//!
//! Cells come from one lattice anchored at the domain centroid. The cell size
//! is the largest one (found by a geometric descent and then bisection) at
//! which at least `k` cells fit; extra cells are dropped starting with the one
//! farthest from the centroid.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::domain::{DomainSpec, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellKind {
    Hexagon,
    Square,
}

impl std::str::FromStr for CellKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hexagon" | "hex" => Ok(CellKind::Hexagon),
            "square" | "sq" => Ok(CellKind::Square),
            _ => Err(Error::InvalidInput(format!("unknown cell kind `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Layout {
    Square,
    HexPointy,
    HexFlat,
}

impl Layout {
    /// Cell area as a function of the scale (side for squares, circumradius
    /// for hexagons).
    fn area(self, s: f64) -> f64 {
        match self {
            Layout::Square => s * s,
            _ => 1.5 * 3f64.sqrt() * s * s,
        }
    }

    fn scale_for_area(self, a: f64) -> f64 {
        match self {
            Layout::Square => a.sqrt(),
            _ => (a / (1.5 * 3f64.sqrt())).sqrt(),
        }
    }

    fn shape(self, s: f64) -> Vec<Point> {
        match self {
            Layout::Square => {
                let q = 0.5 * s;
                vec![[-q, -q], [q, -q], [q, q], [-q, q]]
            }
            Layout::HexPointy | Layout::HexFlat => {
                let start = if self == Layout::HexPointy { PI / 6.0 } else { 0.0 };
                (0..6)
                    .map(|k| {
                        let t = start + k as f64 * PI / 3.0;
                        [s * t.cos(), s * t.sin()]
                    })
                    .collect()
            }
        }
    }

    /// Lattice basis vectors.
    fn basis(self, s: f64) -> (Point, Point) {
        let r3 = 3f64.sqrt();
        match self {
            Layout::Square => ([s, 0.0], [0.0, s]),
            Layout::HexPointy => ([r3 * s, 0.0], [0.5 * r3 * s, 1.5 * s]),
            Layout::HexFlat => ([1.5 * s, 0.5 * r3 * s], [0.0, r3 * s]),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Tiling {
    pub cell_kind: CellKind,
    pub cells: Vec<Vec<Point>>,
    pub centers: Vec<Point>,
    pub cell_area: f64,
}

impl Tiling {
    /// Fraction of the domain area covered, `k · cell_area / A`.
    pub fn fill_fraction(&self, domain: &DomainSpec) -> f64 {
        self.cells.len() as f64 * self.cell_area / domain.area()
    }
}

/// Place exactly `k` congruent cells of the given kind inside `domain`.
pub fn build_tiling(domain: &DomainSpec, k: usize, kind: CellKind) -> Result<Tiling> {
    domain.validate()?;
    if k == 0 {
        return Err(Error::InvalidInput("tiling needs k >= 1".into()));
    }
    let layouts: &[Layout] = match kind {
        CellKind::Square => &[Layout::Square],
        CellKind::Hexagon => &[Layout::HexPointy, Layout::HexFlat],
    };
    let mut best: Option<(f64, Layout, Vec<Point>)> = None;
    for &layout in layouts {
        if let Some((s, centers)) = largest_scale(domain, k, layout) {
            if best.as_ref().is_none_or(|b| s > b.0 * (1.0 + 1e-12)) {
                best = Some((s, layout, centers));
            }
        }
    }
    let (s, layout, mut centers) = best.ok_or_else(|| Error::Resolution(format!("could not fit {k} cells")))?;

    let c = domain.centroid();
    let dist = |p: &Point| (p[0] - c[0]).hypot(p[1] - c[1]);
    centers.sort_by(|a, b| dist(a).total_cmp(&dist(b)));
    centers.truncate(k);
    let shape = layout.shape(s);
    let cells = centers.iter().map(|p| shape.iter().map(|v| [p[0] + v[0], p[1] + v[1]]).collect()).collect();
    Ok(Tiling { cell_kind: kind, cells, centers, cell_area: layout.area(s) })
}

fn largest_scale(domain: &DomainSpec, k: usize, layout: Layout) -> Option<(f64, Vec<Point>)> {
    let s_max = layout.scale_for_area(domain.area() / k as f64);
    let shrink = 0.995;
    let mut s = s_max;
    let mut feasible = None;
    for _ in 0..2000 {
        let centers = fitting_centers(domain, layout, s);
        if centers.len() >= k {
            feasible = Some((s, centers));
            break;
        }
        s *= shrink;
    }
    let (mut lo, mut centers) = feasible?;
    if lo >= s_max {
        return Some((lo, centers));
    }
    let mut hi = (lo / shrink).min(s_max);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        let c = fitting_centers(domain, layout, mid);
        if c.len() >= k {
            lo = mid;
            centers = c;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-13 * s_max {
            break;
        }
    }
    Some((lo, centers))
}

/// Centers of every lattice cell contained in the closed domain, for the best
/// of the three anchor choices (cell center, cell vertex, edge midpoint at
/// the centroid).
fn fitting_centers(domain: &DomainSpec, layout: Layout, s: f64) -> Vec<Point> {
    let shape = layout.shape(s);
    let edge_mid = [0.5 * (shape[0][0] + shape[1][0]), 0.5 * (shape[0][1] + shape[1][1])];
    let anchors = [[0.0, 0.0], [-shape[0][0], -shape[0][1]], [-edge_mid[0], -edge_mid[1]]];
    let c = domain.centroid();
    let mut best: Vec<Point> = Vec::new();
    for off in anchors {
        let centers = lattice_cells_inside(domain, layout, s, [c[0] + off[0], c[1] + off[1]], &shape);
        if centers.len() > best.len() {
            best = centers;
        }
    }
    best
}

fn lattice_cells_inside(domain: &DomainSpec, layout: Layout, s: f64, anchor: Point, shape: &[Point]) -> Vec<Point> {
    let (u, v) = layout.basis(s);
    let (lo, hi) = domain.bounding_box();
    let det = u[0] * v[1] - u[1] * v[0];
    // Lattice coordinate range covering the bounding box.
    let mut imin = i64::MAX;
    let mut imax = i64::MIN;
    let mut jmin = i64::MAX;
    let mut jmax = i64::MIN;
    for p in [[lo[0], lo[1]], [hi[0], lo[1]], [hi[0], hi[1]], [lo[0], hi[1]]] {
        let d = [p[0] - anchor[0], p[1] - anchor[1]];
        let a = (d[0] * v[1] - d[1] * v[0]) / det;
        let b = (u[0] * d[1] - u[1] * d[0]) / det;
        imin = imin.min(a.floor() as i64 - 1);
        imax = imax.max(a.ceil() as i64 + 1);
        jmin = jmin.min(b.floor() as i64 - 1);
        jmax = jmax.max(b.ceil() as i64 + 1);
    }
    let tol = 1e-9 * s;
    let outline = domain.outline();
    let mut out = Vec::new();
    for j in jmin..=jmax {
        for i in imin..=imax {
            let p = [anchor[0] + i as f64 * u[0] + j as f64 * v[0], anchor[1] + i as f64 * u[1] + j as f64 * v[1]];
            if p[0] < lo[0] || p[0] > hi[0] || p[1] < lo[1] || p[1] > hi[1] {
                continue;
            }
            if cell_inside(domain, outline.as_deref(), p, shape, tol) {
                out.push(p);
            }
        }
    }
    out
}

fn cell_inside(domain: &DomainSpec, outline: Option<&[Point]>, c: Point, shape: &[Point], tol: f64) -> bool {
    let n = shape.len();
    for k in 0..n {
        let a = shape[k];
        let b = shape[(k + 1) % n];
        let v = [c[0] + a[0], c[1] + a[1]];
        let m = [c[0] + 0.5 * (a[0] + b[0]), c[1] + 0.5 * (a[1] + b[1])];
        if domain.signed_distance(v) < -tol || domain.signed_distance(m) < -tol {
            return false;
        }
    }
    // A reflex domain vertex poking into the cell also disqualifies it.
    if let Some(poly) = outline {
        let cell: Vec<Point> = shape.iter().map(|a| [c[0] + a[0], c[1] + a[1]]).collect();
        for &q in poly {
            if strictly_inside_convex(&cell, q, tol) {
                return false;
            }
        }
    }
    true
}

fn strictly_inside_convex(cell: &[Point], q: Point, tol: f64) -> bool {
    let n = cell.len();
    (0..n).all(|k| {
        let a = cell[k];
        let b = cell[(k + 1) % n];
        let e = [b[0] - a[0], b[1] - a[1]];
        let len = e[0].hypot(e[1]);
        (e[0] * (q[1] - a[1]) - e[1] * (q[0] - a[0])) / len > tol
    })
}
