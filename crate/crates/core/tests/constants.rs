use divlat::constants::{estimate, grid_sup, limit_at_one, monotonicity_check, part_ratio, GRID_HI, GRID_LO};
use divlat::inequalities::{catalog_families, Family};

#[test]
fn sample_parts_recover_their_constants() {
    let parts = catalog_families(&[Family::TheoremPart]);
    for k in [1, 2, 12, 31, 59] {
        let est = estimate(&parts[k - 1], 2_000).unwrap();
        let beta = *est.claimed().numer() as f64 / *est.claimed().denom() as f64;
        assert!((est.limit - beta).abs() <= 1e-6 * beta, "part {k}: {}", est.limit);
        assert!(est.grid_sup <= beta * (1.0 + 1e-9), "part {k}: {}", est.grid_sup);
        assert!(est.monotone_ok && est.pass, "part {k}");
    }
}

#[test]
fn non_monotone_parts_still_respect_their_bound() {
    let parts = catalog_families(&[Family::TheoremPart]);
    for k in [43, 54] {
        let g = part_ratio(&parts[k - 1]).unwrap();
        assert!((limit_at_one(&g).unwrap() - 1.0).abs() < 1e-9);
        assert!(grid_sup(&g, GRID_LO, GRID_HI, 2_000).unwrap() <= 1.0 + 1e-9);
        assert!(g.eval(0.1) < 0.98 && g.eval(1e-6) > g.eval(0.1));
        assert!(!monotonicity_check(&g, 2_000));
    }
}

#[test]
fn part_one_ratio_at_four_is_finite() {
    let g = part_ratio(&catalog_families(&[Family::TheoremPart])[0]).unwrap();
    let v = g.eval(4.0);
    assert!(v.is_finite() && v > 0.0 && v < 1.0 / 36.0);
}
