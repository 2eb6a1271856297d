use proptest::prelude::*;
use spectral_partitions::geometry::{build_tiling, fraenkel_asymmetry, CellKind};
use spectral_partitions::DomainSpec;

fn named() -> Vec<(&'static str, DomainSpec)> {
    vec![
        ("square", DomainSpec::pi_square()),
        ("unit-square", DomainSpec::unit_area_square()),
        ("unit-hexagon", DomainSpec::unit_area_hexagon()),
        ("unit-triangle", DomainSpec::unit_area_triangle()),
        ("unit-disk", DomainSpec::unit_area_disk()),
    ]
}

#[test]
fn inradius_below_equivalent_radius_except_disk() {
    for (name, d) in named() {
        let (ri, r0) = (d.inradius(), d.equivalent_radius());
        match d {
            DomainSpec::Disk { .. } => assert!((ri - r0).abs() <= 1e-15 * r0, "{name}"),
            _ => assert!(ri < r0 * (1.0 - 1e-3), "{name}: {ri} vs {r0}"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn asymmetry_is_scale_invariant(s in 0.3f64..4.0, which in 0usize..3) {
        let d = [DomainSpec::unit_area_triangle(), DomainSpec::Rectangle { a: 1.0, b: 2.0 }, DomainSpec::unit_area_hexagon()][which].clone();
        let res = d.inradius() / 100.0;
        let a = fraenkel_asymmetry(&d, res).unwrap();
        let b = fraenkel_asymmetry(&d.scaled(s), res * s).unwrap();
        prop_assert!((a - b).abs() <= 2e-3, "{} vs {}", a, b);
    }
}

/// Two tiles overlap if some sample point lies strictly inside both.
#[test]
fn tiles_never_overlap() {
    for kind in [CellKind::Hexagon, CellKind::Square] {
        for k in [2usize, 5, 9] {
            let t = build_tiling(&DomainSpec::unit_area_square(), k, kind).unwrap();
            assert_eq!(t.cells.len(), k);
            let tiles: Vec<DomainSpec> = t.cells.iter().map(|c| DomainSpec::polygon(c.clone()).unwrap()).collect();
            let side = t.cell_area.sqrt();
            for (i, a) in tiles.iter().enumerate() {
                let (lo, hi) = a.bounding_box();
                for b in &tiles[i + 1..] {
                    let n = 60;
                    for x in 0..=n {
                        for y in 0..=n {
                            let p = [lo[0] + (hi[0] - lo[0]) * x as f64 / n as f64, lo[1] + (hi[1] - lo[1]) * y as f64 / n as f64];
                            let eps = 1e-9 * side;
                            assert!(!(a.signed_distance(p) > eps && b.signed_distance(p) > eps), "{kind:?} k={k} overlap at {p:?}");
                        }
                    }
                }
            }
        }
    }
}
