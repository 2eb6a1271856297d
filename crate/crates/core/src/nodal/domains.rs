//! Nodal domains of grid functions.

use petgraph::unionfind::UnionFind;

use crate::geometry::GridMask;

/// Values within this fraction of the largest magnitude count as zero.
pub const ZERO_THRESHOLD: f64 = 1e-10;

/// A labeling of interior nodes. Label 0 marks the zero set or unassigned
/// nodes; components are numbered `1..=count` in order of their first node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodalPartition {
    pub labels: Vec<usize>,
    pub count: usize,
    pub source: String,
}

impl NodalPartition {
    pub fn from_labels(labels: Vec<usize>, source: impl Into<String>) -> Self {
        let count = labels.iter().copied().max().unwrap_or(0);
        NodalPartition { labels, count, source: source.into() }
    }

    /// All-zero input: no nodal domain at all.
    pub fn is_degenerate(&self) -> bool {
        self.count == 0
    }

    /// Node lists per label, index `ℓ − 1` for label `ℓ`.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (k, &l) in self.labels.iter().enumerate() {
            if l > 0 {
                out[l - 1].push(k);
            }
        }
        out
    }
}

/// Components of `{v > 0}` and `{v < 0}` under 4-connectivity.
pub fn nodal_domains(values: &[f64], mask: &GridMask) -> NodalPartition {
    let sign = signs(values);
    label_components(mask, &sign, |a, b, _| sign[a] == sign[b], "nodal domains")
}

/// Signs with the relative zero threshold applied.
pub fn signs(values: &[f64]) -> Vec<i8> {
    let scale = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    values
        .iter()
        .map(|&v| {
            if v.abs() <= ZERO_THRESHOLD * scale || scale == 0.0 {
                0
            } else if v > 0.0 {
                1
            } else {
                -1
            }
        })
        .collect()
}

/// Components of the nonzero nodes where neighbors `a`, `b` (direction `d`
/// from `a`) are joined when `joined(a, b, d)` holds.
pub fn label_components(mask: &GridMask, sign: &[i8], joined: impl Fn(usize, usize, usize) -> bool, source: &str) -> NodalPartition {
    let n = mask.len();
    assert_eq!(sign.len(), n, "one value per interior node");
    let mut uf = UnionFind::<usize>::new(n);
    for a in 0..n {
        if sign[a] == 0 {
            continue;
        }
        // east and north suffice to visit every link once
        for d in [0, 2] {
            if let Some(b) = mask.neighbor(a, d) {
                if sign[b] != 0 && joined(a, b, d) {
                    uf.union(a, b);
                }
            }
        }
    }
    let mut root_label = vec![0usize; n];
    let mut labels = vec![0usize; n];
    let mut count = 0;
    for a in 0..n {
        if sign[a] == 0 {
            continue;
        }
        let r = uf.find(a);
        if root_label[r] == 0 {
            count += 1;
            root_label[r] = count;
        }
        labels[a] = root_label[r];
    }
    NodalPartition { labels, count, source: source.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::DomainSpec;
    use std::f64::consts::PI;

    fn square(n: usize) -> GridMask {
        GridMask::rasterize(&DomainSpec::pi_square(), PI / (n + 1) as f64).unwrap()
    }

    fn phi(mask: &GridMask, m: f64, n: f64) -> Vec<f64> {
        (0..mask.len())
            .map(|k| {
                let p = mask.point(k);
                (m * p[0]).sin() * (n * p[1]).sin()
            })
            .collect()
    }

    #[test]
    fn ground_state_one_domain() {
        let m = square(31);
        assert_eq!(nodal_domains(&phi(&m, 1.0, 1.0), &m).count, 1);
    }

    #[test]
    fn product_counts() {
        let m = square(47);
        assert_eq!(nodal_domains(&phi(&m, 2.0, 3.0), &m).count, 6);
    }

    #[test]
    fn all_zero_is_degenerate() {
        let m = square(7);
        let p = nodal_domains(&vec![0.0; m.len()], &m);
        assert!(p.is_degenerate());
        assert!(p.labels.iter().all(|&l| l == 0));
    }

    #[test]
    fn saddle_stays_four_domains() {
        // φ_{2,2} on an even grid: the center is a zero node, and 4-connectivity
        // keeps the diagonal quadrants apart.
        let m = square(31);
        assert_eq!(nodal_domains(&phi(&m, 2.0, 2.0), &m).count, 4);
        let m = square(30);
        assert_eq!(nodal_domains(&phi(&m, 2.0, 2.0), &m).count, 4);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]
            #[test]
            fn invariant_under_scaling_and_sign(c in prop_oneof![-5.0f64..-0.1, 0.1f64..5.0], mm in 1u32..5, nn in 1u32..5, th in 0.0f64..std::f64::consts::PI) {
                let m = square(40);
                let v: Vec<f64> = (0..m.len()).map(|k| {
                    let p = m.point(k);
                    th.cos() * (mm as f64 * p[0]).sin() * (nn as f64 * p[1]).sin()
                        + th.sin() * (nn as f64 * p[0]).sin() * (mm as f64 * p[1]).sin()
                }).collect();
                let base = nodal_domains(&v, &m).count;
                let scaled: Vec<f64> = v.iter().map(|x| c * x).collect();
                prop_assert_eq!(nodal_domains(&scaled, &m).count, base);
                let neg: Vec<f64> = v.iter().map(|x| -x).collect();
                prop_assert_eq!(nodal_domains(&neg, &m).count, base);
            }
        }
    }
}
