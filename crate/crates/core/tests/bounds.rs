use std::f64::consts::PI;

use proptest::prelude::*;
use spectral_partitions::bounds::{
    bdpv_check, bourgain_b, bourgain_break_even, bourgain_delta0, bourgain_excess, bourgain_sup_with, faber_krahn_check,
    hansen_nadirashvili_check, hansen_nadirashvili_factor, steinerberger_factor, BoundReport, FK_ALLOWANCE, SUP_GRID,
};
use spectral_partitions::DomainSpec;

proptest! {
    #[test]
    fn slack_is_right_minus_left(l in -1e6f64..1e6, r in -1e6f64..1e6) {
        let rep = BoundReport::new("x", l, r, "x ≤ y");
        prop_assert!(rep.is_consistent());
        prop_assert_eq!(rep.holds(0.0), l <= r);
    }

    #[test]
    fn uncertainty_factor_stays_below_one(c in 0.001f64..1.999, big_c in 0.001f64..1e4) {
        let f = steinerberger_factor(c, big_c).unwrap();
        prop_assert!(f.factor < 1.0 && f.factor > 0.0);
        prop_assert!(f.implied_lower > 18.0);
    }

    #[test]
    fn improvement_positive_below_break_even(t in 0.001f64..0.999) {
        let d = t * bourgain_break_even();
        prop_assert!(bourgain_excess(d) > 0.0);
        let beyond = bourgain_break_even() + t * (1.0 - bourgain_break_even()) * 0.99;
        prop_assert!(bourgain_excess(beyond) < 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn sup_is_stable_under_grid_refinement(p in 0.5f64..0.95) {
        let a = bourgain_sup_with(p, SUP_GRID).unwrap();
        let b = bourgain_sup_with(p, 10 * SUP_GRID).unwrap();
        prop_assert!((a.value - b.value).abs() < 1e-12, "{} vs {}", a.value, b.value);
    }

    #[test]
    fn faber_krahn_on_regular_polygons(sides in 3usize..10, area in 0.2f64..5.0) {
        let r = faber_krahn_check(&DomainSpec::RegularPolygon { sides, area }).unwrap();
        prop_assert!(r.holds(FK_ALLOWANCE * r.left), "{} {}", r.left, r.right);
        prop_assert!(r.is_consistent());
    }
}

#[test]
fn hansen_nadirashvili_on_the_unit_square() {
    let d = DomainSpec::unit_area_square();
    let t = 1.0 - 0.5 * PI.sqrt();
    let factor = 1.0 + t * t / 250.0;
    assert!((hansen_nadirashvili_factor(&d) - factor).abs() < 1e-15);
    assert!((factor - 1.000_051_8).abs() < 1e-7);
    let r = hansen_nadirashvili_check(&d).unwrap();
    // 2π² against λ(Disk₁)·factor
    assert!((r.right - 2.0 * PI * PI).abs() < 2e-3, "{}", r.right);
    assert!((r.slack - 1.57).abs() < 5e-3, "{}", r.slack);
}

#[test]
fn elongation_raises_the_factor_and_the_energy() {
    let sq = DomainSpec::unit_area_square();
    let long = DomainSpec::Rectangle { a: 0.5 / PI, b: 2.0 / PI };
    assert!(hansen_nadirashvili_factor(&long) > hansen_nadirashvili_factor(&sq));
    let thin = DomainSpec::Rectangle { a: 1.0 / (5f64.sqrt() * PI), b: 5f64.sqrt() / PI };
    let (a, b) = (faber_krahn_check(&sq).unwrap(), faber_krahn_check(&thin).unwrap());
    // A λ = π²(a/b + b/a) for the rectangle of sides a, b
    assert!((b.right - PI * PI * (5.0 + 0.2)).abs() < 1e-2, "{}", b.right);
    assert!(b.right > a.right);
}

#[test]
fn quantitative_faber_krahn_tightest_constant() {
    let r = bdpv_check(&DomainSpec::unit_area_square(), 1.0).unwrap();
    let tight = r.input("largest_tight_C").unwrap();
    assert!((tight - 2.6).abs() < 0.1, "{tight}");
    let at = bdpv_check(&DomainSpec::unit_area_square(), tight).unwrap();
    assert!(at.slack.abs() < 1e-9 * at.right, "{}", at.slack);
    assert!(bdpv_check(&DomainSpec::unit_area_square(), -1.0).is_err());
}

#[test]
fn admissible_range_and_break_even() {
    let ps = [0.5, 0.6, 0.7, 0.743, 0.8, 0.9];
    let d: Vec<f64> = ps.iter().map(|&p| bourgain_delta0(p).unwrap()).collect();
    assert!(d.windows(2).all(|w| w[1] < w[0]), "{d:?}");
    let be = bourgain_break_even();
    assert!((be - (1.0 - (PI / 12f64.sqrt()).sqrt())).abs() < 1e-15);
    assert!((be - 0.0477).abs() < 1e-4);
    let d0 = bourgain_delta0(0.743).unwrap();
    assert!(bourgain_b(0.5 * d0, 0.743).is_ok());
    assert!(bourgain_b(d0 * 1.01, 0.743).is_err());
}
