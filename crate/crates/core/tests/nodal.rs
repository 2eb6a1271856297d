use std::f64::consts::PI;

use proptest::prelude::*;
use spectral_partitions::nodal::{boundary_set, combine_square_eigenfunctions, critical_points, nodal_domains, square_sweep_mask};
use spectral_partitions::{DomainSpec, GridMask};

#[test]
fn product_eigenfunctions_have_mn_domains() {
    for m in 1..=6u32 {
        for n in 1..=6u32 {
            let h = PI / (4.0 * m.max(n) as f64) * 0.9;
            let mask = GridMask::rasterize(&DomainSpec::pi_square(), h).unwrap();
            let values: Vec<f64> = (0..mask.len())
                .map(|k| {
                    let [x, y] = mask.point(k);
                    (m as f64 * x).sin() * (n as f64 * y).sin()
                })
                .collect();
            assert_eq!(nodal_domains(&values, &mask).count, (m * n) as usize, "({m}, {n}) at h = {h}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sweep_is_pi_periodic(theta in 0.0f64..PI, m in 1u32..5, n in 1u32..5) {
        let mask = square_sweep_mask(m.max(n)).unwrap();
        let a = nodal_domains(&combine_square_eigenfunctions(m, n, theta, &mask), &mask).count;
        let b = nodal_domains(&combine_square_eigenfunctions(m, n, theta + PI, &mask), &mask).count;
        prop_assert_eq!(a, b);
    }
}

/// `Σ (ν − 2)` over critical points, for a smooth input sampled at `h`.
fn excess_valence(m: u32, n: u32, theta: f64, h: f64) -> usize {
    let mask = GridMask::rasterize(&DomainSpec::pi_square(), h).unwrap();
    let part = nodal_domains(&combine_square_eigenfunctions(m, n, theta, &mask), &mask);
    critical_points(&boundary_set(&part, &mask), &mask).iter().map(|c| c.valence - 2).sum()
}

#[test]
fn excess_valence_survives_refinement() {
    for (m, n, theta) in [(1, 3, 0.75 * PI), (1, 2, 0.25 * PI), (2, 4, 0.3 * PI), (1, 3, 0.1 * PI)] {
        let h = PI / (24 * m.max(n)) as f64;
        let coarse = excess_valence(m, n, theta, h);
        let fine = excess_valence(m, n, theta, h / 2.0);
        assert_eq!(coarse, fine, "Φ({m},{n},{theta})");
    }
}
