use std::f64::consts::PI;

use proptest::prelude::*;
use spectral_partitions::nodal::{nodal_domains, square_courant_scan, square_sweep_mask};
use spectral_partitions::rect::{courant_sharp_scan, mu_product, MuMax, Rectangle};
use spectral_partitions::{DomainSpec, GridMask};

proptest! {
    #[test]
    fn counting_function_is_monotone(l in 0.0f64..400.0, d in 0.0f64..50.0, a in 0.3f64..3.0) {
        let r = Rectangle::new(a, 1.0).unwrap();
        prop_assert!(r.counting_function(l) <= r.counting_function(l + d));
    }
}

#[test]
fn counting_function_jumps_by_multiplicity() {
    let r = Rectangle::unit_square();
    for e in r.spectrum(60).unwrap() {
        // integer eigenvalues, so nothing else lies within half a unit
        let jump = r.counting_function(e.value + 0.5) - r.counting_function(e.value);
        assert_eq!(jump, e.multiplicity, "at {}", e.value);
        assert_eq!(r.multiplicity(e.value), e.multiplicity);
        assert_eq!(r.counting_function(e.value), e.rank - 1);
    }
}

/// Simple eigenvalues: the scan's count, the product `mn`, and the grid
/// count of `sin(mx) sin(ny)` all agree.
#[test]
fn simple_eigenvalues_three_way() {
    let entries = square_courant_scan(40.0, 64).unwrap();
    let mut simple = 0;
    for e in entries.iter().filter(|e| e.multiplicity == 1) {
        simple += 1;
        let MuMax::Product(mu) = e.mu_max else { panic!("rank {} is simple but not a product count", e.rank) };
        assert_eq!(mu, mu_product(e.m, e.n));
        let mask: GridMask = square_sweep_mask(e.m.max(e.n)).unwrap();
        let values: Vec<f64> = (0..mask.len())
            .map(|k| {
                let [x, y] = mask.point(k);
                (e.m as f64 * x).sin() * (e.n as f64 * y).sin()
            })
            .collect();
        assert_eq!(nodal_domains(&values, &mask).count as u64, mu, "({}, {})", e.m, e.n);
    }
    assert_eq!(simple, 4);
}

#[test]
fn generic_rectangle_is_all_products() {
    let (a, b) = (1.0, 1.3717);
    let rect = Rectangle::new(a, b).unwrap();
    let entries = courant_sharp_scan(&rect, 30.0, |p, q| panic!("unexpected double eigenvalue {p:?} {q:?}")).unwrap();
    assert!(entries.len() >= 10);
    let domain = DomainSpec::Rectangle { a, b };
    for e in entries {
        assert_eq!(e.mu_max, MuMax::Product(mu_product(e.m, e.n)));
        let mask = GridMask::rasterize(&domain, PI * a.min(b) / (24 * e.m.max(e.n)) as f64).unwrap();
        let values: Vec<f64> = (0..mask.len())
            .map(|k| {
                let [x, y] = mask.point(k);
                (e.m as f64 * x / a).sin() * (e.n as f64 * y / b).sin()
            })
            .collect();
        assert_eq!(nodal_domains(&values, &mask).count as u64, mu_product(e.m, e.n), "({}, {})", e.m, e.n);
    }
}
