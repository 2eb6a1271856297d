//! Boundary sets of partitions on the dual grid, and their critical points.
//!
//! Dual vertex `(p, q)` is the corner shared by nodes `(p−1, q−1)` and
//! `(p, q)`; it sits at `origin + ((p + ½)h, (q + ½)h)`. A dual edge separates
//! two 4-adjacent interior nodes with different labels.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::geometry::{GridMask, Point};
use crate::nodal::domains::NodalPartition;

pub type DualVertex = (i64, i64);

/// Radius, in grid steps, within which boundary-set vertices are merged.
pub const MERGE_RADIUS: f64 = 3.0;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DualEdge {
    pub from: DualVertex,
    pub to: DualVertex,
    /// The two labels separated, smaller first.
    pub labels: (usize, usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySet {
    pub edges: Vec<DualEdge>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPoint {
    pub position: Point,
    pub valence: usize,
    pub odd: bool,
}

/// Assign every zero node the label of the nearest labeled node (breadth
/// first, ties to the earlier node), so that the zero set collapses onto a
/// single interface.
pub fn filled_labels(partition: &NodalPartition, mask: &GridMask) -> Vec<usize> {
    let mut labels = partition.labels.clone();
    let mut queue: VecDeque<usize> = (0..labels.len()).filter(|&k| labels[k] > 0).collect();
    while let Some(a) = queue.pop_front() {
        for b in mask.neighbors(a).into_iter().flatten() {
            if labels[b] == 0 {
                labels[b] = labels[a];
                queue.push_back(b);
            }
        }
    }
    labels
}

/// Dual position of vertex `v`.
pub fn dual_point(mask: &GridMask, v: DualVertex) -> Point {
    mask.lattice_point(v.0 as f64 - 0.5, v.1 as f64 - 0.5)
}

/// Interfaces between differently labeled neighbors, after filling zeros.
pub fn boundary_set(partition: &NodalPartition, mask: &GridMask) -> BoundarySet {
    if partition.count <= 1 {
        return BoundarySet { edges: Vec::new() };
    }
    let labels = filled_labels(partition, mask);
    boundary_of_labels(&labels, mask)
}

/// Interfaces of a complete labeling (no zero handling).
pub fn boundary_of_labels(labels: &[usize], mask: &GridMask) -> BoundarySet {
    let mut edges = Vec::new();
    for a in 0..mask.len() {
        let (i, j) = mask.coords(a);
        let (i, j) = (i as i64, j as i64);
        for d in [0, 2] {
            if let Some(b) = mask.neighbor(a, d) {
                if labels[a] != labels[b] {
                    let (from, to) = if d == 0 { ((i + 1, j), (i + 1, j + 1)) } else { ((i, j + 1), (i + 1, j + 1)) };
                    let l = (labels[a].min(labels[b]), labels[a].max(labels[b]));
                    edges.push(DualEdge { from, to, labels: l });
                }
            }
        }
    }
    BoundarySet { edges }
}

impl BoundarySet {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn degrees(&self) -> BTreeMap<DualVertex, usize> {
        let mut deg = BTreeMap::new();
        for e in &self.edges {
            *deg.entry(e.from).or_insert(0) += 1;
            *deg.entry(e.to).or_insert(0) += 1;
        }
        deg
    }

    /// Number of dual edges shared by each pair of labels.
    pub fn shared_lengths(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for e in &self.edges {
            *out.entry(e.labels).or_insert(0) += 1;
        }
        out
    }
}

/// Points where three or more boundary curves meet. Dual vertices of degree
/// at least three are merged by single linkage within [`MERGE_RADIUS`]; the
/// valence of a merged point counts boundary edges leaving the disk-shaped
/// neighborhood of radius [`MERGE_RADIUS`] around it.
pub fn critical_points(boundary: &BoundarySet, mask: &GridMask) -> Vec<CriticalPoint> {
    let deg = boundary.degrees();
    let seeds: Vec<DualVertex> = deg.iter().filter(|(_, &d)| d >= 3).map(|(&v, _)| v).collect();
    let r2 = MERGE_RADIUS * MERGE_RADIUS;
    let close = |a: DualVertex, b: DualVertex| ((a.0 - b.0).pow(2) + (a.1 - b.1).pow(2)) as f64 <= r2;

    // single-linkage clusters
    let mut cluster_of = vec![usize::MAX; seeds.len()];
    let mut clusters: Vec<Vec<DualVertex>> = Vec::new();
    for s in 0..seeds.len() {
        if cluster_of[s] != usize::MAX {
            continue;
        }
        let id = clusters.len();
        cluster_of[s] = id;
        let mut members = vec![seeds[s]];
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for b in 0..seeds.len() {
                if cluster_of[b] == usize::MAX && close(seeds[a], seeds[b]) {
                    cluster_of[b] = id;
                    members.push(seeds[b]);
                    queue.push_back(b);
                }
            }
        }
        clusters.push(members);
    }

    let reach = MERGE_RADIUS.ceil() as i64;
    let mut out = Vec::new();
    for members in clusters {
        let mut region = BTreeSet::new();
        for &(p, q) in &members {
            for dp in -reach..=reach {
                for dq in -reach..=reach {
                    if ((dp * dp + dq * dq) as f64) <= r2 {
                        region.insert((p + dp, q + dq));
                    }
                }
            }
        }
        let valence = boundary.edges.iter().filter(|e| region.contains(&e.from) != region.contains(&e.to)).count();
        if valence >= 3 {
            let c = members.iter().fold((0.0, 0.0), |s, v| (s.0 + v.0 as f64, s.1 + v.1 as f64));
            let c = (c.0 / members.len() as f64, c.1 / members.len() as f64);
            out.push(CriticalPoint { position: mask.lattice_point(c.0 - 0.5, c.1 - 0.5), valence, odd: valence % 2 == 1 });
        }
    }
    out
}

/// `#X^odd`.
pub fn odd_count(points: &[CriticalPoint]) -> usize {
    points.iter().filter(|c| c.odd).count()
}

/// Euler-type bound `#X^odd ≤ 2k − 4` for a minimal k-partition, k ≥ 2.
pub fn euler_bound(k: usize) -> usize {
    (2 * k).saturating_sub(4)
}
