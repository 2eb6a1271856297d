//! Minimal partitions as nodal sets of Aharonov-Bohm eigenfunctions, and
//! nodal counts along the magnetic spectrum.

use std::f64::consts::PI;

use crate::bounds::BoundReport;
use crate::error::Result;
use crate::geometry::{GridMask, Point};
use crate::magnetic::operator::Gauge;
use crate::magnetic::poles::PoleConfig;
use crate::magnetic::spectrum::{ab_nodal_domains, ab_spectrum_with, AbSpectrum};
use crate::nodal::{boundary_set, critical_points, is_bipartite, NodalPartition};
use crate::partition::Partition;
use crate::solver::SolverConfig;

/// Relative energy agreement expected between `λ_k^AB` and `Λ`.
pub const ENERGY_TOLERANCE: f64 = 0.03;
/// Ring radius, in grid steps, used to count nodal lines at a pole.
pub const VALENCE_RADIUS: i64 = 3;
/// Rotations tried inside a degenerate eigenspace.
const ROTATIONS: usize = 180;

/// Fraction of nodes on which two labelings agree under the best one-to-one
/// matching of labels (greedy by overlap size). Zero-set nodes never match.
pub fn label_overlap(a: &NodalPartition, b: &NodalPartition) -> f64 {
    let n = a.labels.len();
    let mut counts = std::collections::BTreeMap::new();
    for (&x, &y) in a.labels.iter().zip(&b.labels) {
        if x > 0 && y > 0 {
            *counts.entry((x, y)).or_insert(0usize) += 1;
        }
    }
    let mut pairs: Vec<((usize, usize), usize)> = counts.into_iter().collect();
    pairs.sort_by(|p, q| q.1.cmp(&p.1).then(p.0.cmp(&q.0)));
    let (mut used_a, mut used_b) = (std::collections::BTreeSet::new(), std::collections::BTreeSet::new());
    let mut matched = 0;
    for ((x, y), c) in pairs {
        if !used_a.contains(&x) && !used_b.contains(&y) {
            used_a.insert(x);
            used_b.insert(y);
            matched += c;
        }
    }
    matched as f64 / n as f64
}

/// Within the near-eigenspace holding index `idx`, the real eigenfunction
/// whose nodal partition best matches `target`: a scan over rotations in
/// every plane spanned by two members of the cluster. A pole snapped half a
/// cell off a symmetry center splits a degenerate pair by far more than
/// rounding, so the cluster here uses [`ENERGY_TOLERANCE`] rather than the
/// solver's degeneracy test.
fn best_in_cluster(spec: &AbSpectrum, mask: &GridMask, idx: usize, target: &NodalPartition) -> (Vec<f64>, NodalPartition, f64) {
    let v = |i: usize| spec.pairs[i].value;
    let close = |i: usize| (v(i) - v(idx)).abs() <= ENERGY_TOLERANCE * v(idx);
    let cluster: Vec<usize> = (0..spec.pairs.len()).filter(|&i| close(i)).collect();
    let eval = |w: Vec<f64>| {
        let part = ab_nodal_domains(&w, mask, &spec.cut_signs, &spec.operator.poles);
        let o = label_overlap(&part, target);
        (w, part, o)
    };
    let mut best = eval(spec.pairs[idx].real.clone());
    for (x, &a) in cluster.iter().enumerate() {
        for &b in &cluster[x + 1..] {
            for r in 0..ROTATIONS {
                let t = PI * r as f64 / ROTATIONS as f64;
                let (c, s) = (t.cos(), t.sin());
                let w: Vec<f64> = spec.pairs[a].real.iter().zip(&spec.pairs[b].real).map(|(p, q)| c * p + s * q).collect();
                let cand = eval(w);
                if cand.2 > best.2 {
                    best = cand;
                }
            }
        }
    }
    best
}

/// Odd critical points of the partition's boundary set, snapped to
/// plaquette centers.
pub fn odd_poles(partition: &Partition) -> Result<PoleConfig> {
    let mask = &partition.mask;
    let nodal = partition.as_nodal();
    let cps = critical_points(&boundary_set(&nodal, mask), mask);
    let raw: Vec<Point> = cps.iter().filter(|c| c.odd).map(|c| c.position).collect();
    let snapped = PoleConfig::new(raw)?.snapped(mask);
    let mut unique: Vec<Point> = Vec::new();
    for p in snapped.poles {
        if !unique.contains(&p) {
            unique.push(p);
        }
    }
    PoleConfig::new(unique)
}

/// Poles at the odd critical points, then: (a) `|λ_k^AB − Λ| / Λ` as the left
/// side against [`ENERGY_TOLERANCE`], (b) the nodal count of the best
/// matching k-th K_X-real eigenfunction, (c) its node overlap with the input.
pub fn verify_magnetic_characterization(partition: &Partition) -> Result<BoundReport> {
    let mask = &partition.mask;
    let k = partition.k;
    let poles = odd_poles(partition)?;
    let nodal = partition.as_nodal();
    let bipartite = is_bipartite(&nodal, mask).is_bipartite();
    let applicable = !poles.is_empty() || bipartite;

    // one extra pair so a split partner of the k-th is available
    let want = (k + 1).min(mask.len());
    let spec = ab_spectrum_with(mask, &poles, want, Gauge::default(), partition.treatment, &SolverConfig::default())?;
    let lambda_ab = spec.pairs[k - 1].value;
    let lambda = partition.lambda();
    let (_, ab_part, overlap) = best_in_cluster(&spec, mask, k - 1, &nodal);

    let mut report = BoundReport::new(
        "magnetic characterization",
        (lambda_ab - lambda).abs() / lambda,
        ENERGY_TOLERANCE,
        "a minimal k-partition is the nodal partition of a k-th K_X-real Aharonov-Bohm eigenfunction with poles at its odd critical points",
    )
    .with_input("k", k as f64)
    .with_input("poles", poles.len() as f64)
    .with_input("lambda_ab", lambda_ab)
    .with_input("lambda_partition", lambda)
    .with_input("mu_ab", ab_part.count as f64)
    .with_input("overlap", overlap)
    .with_input("applicable", if applicable { 1.0 } else { 0.0 });
    for (i, p) in poles.poles.iter().enumerate() {
        report = report.with_input(format!("pole{}_x", i + 1), p[0]).with_input(format!("pole{}_y", i + 1), p[1]);
    }
    if !applicable {
        report = report.with_note("inapplicable: no odd critical points and the partition is not nodal");
    } else if poles.is_empty() {
        report = report.with_note("no odd critical points: the operator is the plain Dirichlet Laplacian");
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub n: usize,
    pub value: f64,
    pub mu: usize,
    pub ratio: f64,
    /// `max_{m ≥ n} μ_m / m` over the scanned ranks.
    pub tail_max: f64,
    /// Nodal lines meeting each pole.
    pub pole_valences: Vec<usize>,
}

/// Nodal counts of the first `n_max` K_X-real eigenfunctions.
pub fn ab_pleijel_scan(mask: &GridMask, poles: &PoleConfig, n_max: usize) -> Result<Vec<ScanRow>> {
    let spec = ab_spectrum_with(mask, poles, n_max, Gauge::default(), Default::default(), &SolverConfig::default())?;
    let mut rows = Vec::with_capacity(n_max);
    for (i, pair) in spec.pairs.iter().enumerate() {
        let mu = spec.nodal_domains(mask, i).count;
        let pole_valences = poles.poles.iter().map(|&p| spec.pole_valence(mask, i, p, VALENCE_RADIUS)).collect::<Result<_>>()?;
        rows.push(ScanRow { n: i + 1, value: pair.value, mu, ratio: mu as f64 / (i + 1) as f64, tail_max: 0.0, pole_valences });
    }
    let mut running = 0.0_f64;
    for row in rows.iter_mut().rev() {
        running = running.max(row.ratio);
        row.tail_max = running;
    }
    Ok(rows)
}
