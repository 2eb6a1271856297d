//! Uniform-grid discretization of a domain.

use std::collections::VecDeque;
use std::io::Write;

use crate::error::{Error, Result};
use crate::geometry::domain::{DomainSpec, Point};

/// Neighbor directions in the order used by every per-node array: east, west,
/// north, south.
pub const DIRECTIONS: [(i64, i64); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

pub const NO_NODE: usize = usize::MAX;

#[derive(Debug, Clone)]
pub struct GridMask {
    pub domain: DomainSpec,
    pub h: f64,
    /// Node `(i, j)` sits at `origin + ((i+1)h, (j+1)h)`.
    pub origin: Point,
    pub nx: usize,
    pub ny: usize,
    inside: Vec<bool>,
    index: Vec<usize>,
    nodes: Vec<(usize, usize)>,
    /// Fraction of a grid step to the boundary in each direction, 1 when the
    /// neighbor is itself interior.
    gaps: Vec<[f64; 4]>,
}

impl GridMask {
    /// Rasterize with the lattice anchored at the lower-left corner of the
    /// bounding box.
    pub fn rasterize(domain: &DomainSpec, h: f64) -> Result<GridMask> {
        let (lo, _) = domain.bounding_box();
        Self::rasterize_with_origin(domain, h, lo)
    }

    /// Rasterize with an explicit lattice origin, which must not lie to the
    /// right of or above any interior point.
    pub fn rasterize_with_origin(domain: &DomainSpec, h: f64, origin: Point) -> Result<GridMask> {
        domain.validate()?;
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::InvalidInput(format!("grid spacing must be positive, got {h}")));
        }
        let inradius = domain.inradius();
        if h > inradius {
            return Err(Error::Resolution(format!("spacing h = {h} exceeds the inradius {inradius:.6}")));
        }
        let (lo, hi) = domain.bounding_box();
        if origin[0] > lo[0] + 1e-12 || origin[1] > lo[1] + 1e-12 {
            return Err(Error::InvalidInput("lattice origin must lie below-left of the domain".into()));
        }
        let eps = 1e-9 * h;
        let count = |span: f64| ((span / h) - 1e-9).ceil().max(1.0) as usize - 1;
        let nx = count(hi[0] - origin[0]);
        let ny = count(hi[1] - origin[1]);

        let mut inside = vec![false; nx * ny];
        let mut index = vec![NO_NODE; nx * ny];
        let mut nodes = Vec::new();
        for j in 0..ny {
            for i in 0..nx {
                let p = [origin[0] + (i + 1) as f64 * h, origin[1] + (j + 1) as f64 * h];
                if domain.contains(p, eps) {
                    inside[j * nx + i] = true;
                    index[j * nx + i] = nodes.len();
                    nodes.push((i, j));
                }
            }
        }
        if nodes.is_empty() {
            return Err(Error::Resolution(format!("no interior nodes at h = {h}")));
        }

        let mut mask = GridMask { domain: domain.clone(), h, origin, nx, ny, inside, index, nodes, gaps: Vec::new() };
        mask.gaps = (0..mask.len())
            .map(|k| {
                let mut g = [1.0; 4];
                for (d, slot) in g.iter_mut().enumerate() {
                    if mask.neighbor(k, d).is_none() {
                        let dir = [DIRECTIONS[d].0 as f64, DIRECTIONS[d].1 as f64];
                        let t = domain.boundary_crossing(mask.point(k), dir, h).unwrap_or(h);
                        *slot = (t / h).clamp(0.0, 1.0);
                    }
                }
                g
            })
            .collect();

        if !mask.is_connected() {
            return Err(Error::Resolution(format!("mask is not 4-connected at h = {h}")));
        }
        Ok(mask)
    }

    /// Number of interior nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn coords(&self, k: usize) -> (usize, usize) {
        self.nodes[k]
    }

    pub fn point(&self, k: usize) -> Point {
        let (i, j) = self.nodes[k];
        self.lattice_point(i as f64, j as f64)
    }

    /// Position of fractional lattice coordinates `(i, j)`.
    pub fn lattice_point(&self, i: f64, j: f64) -> Point {
        [self.origin[0] + (i + 1.0) * self.h, self.origin[1] + (j + 1.0) * self.h]
    }

    pub fn index_of(&self, i: i64, j: i64) -> Option<usize> {
        if i < 0 || j < 0 || i >= self.nx as i64 || j >= self.ny as i64 {
            return None;
        }
        let k = self.index[j as usize * self.nx + i as usize];
        (k != NO_NODE).then_some(k)
    }

    pub fn is_inside(&self, i: i64, j: i64) -> bool {
        self.index_of(i, j).is_some()
    }

    /// Interior neighbor of node `k` in direction `d` (see [`DIRECTIONS`]).
    pub fn neighbor(&self, k: usize, d: usize) -> Option<usize> {
        let (i, j) = self.nodes[k];
        self.index_of(i as i64 + DIRECTIONS[d].0, j as i64 + DIRECTIONS[d].1)
    }

    pub fn neighbors(&self, k: usize) -> [Option<usize>; 4] {
        [0, 1, 2, 3].map(|d| self.neighbor(k, d))
    }

    /// Fractional distance to the boundary along direction `d`.
    pub fn gap(&self, k: usize, d: usize) -> f64 {
        self.gaps[k][d]
    }

    /// Area covered by the node cells, `N h²`.
    pub fn area_estimate(&self) -> f64 {
        self.len() as f64 * self.h * self.h
    }

    pub fn is_connected(&self) -> bool {
        self.components(|_| true).len() == 1
    }

    /// 4-connected components of the nodes selected by `keep`.
    pub fn components(&self, keep: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] || !keep(s) {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(a) = queue.pop_front() {
                for b in self.neighbors(a).into_iter().flatten() {
                    if !seen[b] && keep(b) {
                        seen[b] = true;
                        comp.push(b);
                        queue.push_back(b);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Same node layout on the domain scaled by `s` about the origin.
    pub fn scaled(&self, s: f64) -> GridMask {
        GridMask { domain: self.domain.scaled(s), h: self.h * s, origin: [self.origin[0] * s, self.origin[1] * s], ..self.clone() }
    }

    /// Write the mask as a plain portable graymap (interior white).
    pub fn write_pgm<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "P2\n{} {}\n255", self.nx, self.ny)?;
        for j in (0..self.ny).rev() {
            let row: Vec<&str> = (0..self.nx).map(|i| if self.inside[j * self.nx + i] { "255" } else { "0" }).collect();
            writeln!(w, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn pi_square_at_eighth() {
        let m = GridMask::rasterize(&DomainSpec::pi_square(), PI / 8.0).unwrap();
        assert_eq!(m.len(), 49);
        assert_eq!((m.nx, m.ny), (7, 7));
    }

    #[test]
    fn unit_disk_half_spacing() {
        // With the lattice anchored at (-1,-1) the nodes sit on {-0.5, 0, 0.5}²,
        // all nine strictly inside the unit disk.
        let d = DomainSpec::Disk { radius: 1.0 };
        let m = GridMask::rasterize(&d, 0.5).unwrap();
        assert_eq!(m.len(), 9);
        // Shifting the lattice to put nodes at ±0.25, ±0.75 gives 12.
        let m = GridMask::rasterize_with_origin(&d, 0.5, [-1.25, -1.25]).unwrap();
        let brute = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                let x = -0.75 + 0.5 * i as f64;
                let y = -0.75 + 0.5 * j as f64;
                x * x + y * y < 1.0
            })
            .count();
        assert_eq!(m.len(), brute);
        assert_eq!(brute, 12);
    }

    #[test]
    fn too_coarse_is_resolution_error() {
        let e = GridMask::rasterize(&DomainSpec::unit_area_square(), 0.6).unwrap_err();
        assert_eq!(e.family(), crate::error::ErrorFamily::Resolution);
    }

    #[test]
    fn gaps_are_exact_on_axis_aligned_square() {
        let m = GridMask::rasterize(&DomainSpec::pi_square(), PI / 8.0).unwrap();
        for k in 0..m.len() {
            for d in 0..4 {
                assert!((m.gap(k, d) - 1.0).abs() < 1e-9);
            }
        }
        let disk = GridMask::rasterize(&DomainSpec::Disk { radius: 1.0 }, 0.1).unwrap();
        for k in 0..disk.len() {
            for d in 0..4 {
                assert!(disk.gap(k, d) > 0.0 && disk.gap(k, d) <= 1.0);
            }
        }
    }

    #[test]
    fn area_drift_between_resolutions() {
        for d in [DomainSpec::unit_area_hexagon(), DomainSpec::unit_area_triangle(), DomainSpec::unit_area_disk()] {
            let r = d.inradius();
            let h = r / 10.0;
            let a1 = GridMask::rasterize(&d, h).unwrap().area_estimate();
            let a2 = GridMask::rasterize(&d, h / 2.0).unwrap().area_estimate();
            assert!(((a1 - a2) / a2).abs() < 4.0 * h / r, "{d}");
            assert!(((a2 - d.area()) / d.area()).abs() < 4.0 * h / r, "{d}");
        }
    }

    #[test]
    fn pgm_header() {
        let m = GridMask::rasterize(&DomainSpec::pi_square(), PI / 4.0).unwrap();
        let mut buf = Vec::new();
        m.write_pgm(&mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.starts_with("P2\n3 3\n255\n"));
    }
}
