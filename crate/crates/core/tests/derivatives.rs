mod common;

use common::{fd_first, fd_second};
use divlat::generators::{check_convexity, generating_function, MeasureId};
use divlat::numeric::log_grid;
use divlat::pyramid::{difference_generating_function, DifferenceId};
use divlat::GeneratingFunction;

fn assert_matches_fd(f: &GeneratingFunction, name: &str) {
    for x in log_grid(1e-3, 1e3, 100).into_iter().filter(|x| x.ln().abs() >= 0.1) {
        let (d1, d2) = (fd_first(|t| f.value(t), x), fd_second(|t| f.value(t), x));
        assert!(
            (f.d1(x) - d1).abs() <= 1e-6 * f.d1(x).abs(),
            "{name} d1 at {x}: {} vs {d1}",
            f.d1(x)
        );
        assert!(
            (f.d2(x) - d2).abs() <= 1e-6 * f.d2(x).abs(),
            "{name} d2 at {x}: {} vs {d2}",
            f.d2(x)
        );
    }
}

#[test]
fn generators_match_finite_differences() {
    for id in MeasureId::DIVERGENCES {
        assert_matches_fd(&generating_function(id).unwrap(), id.name());
    }
}

#[test]
fn differences_match_finite_differences() {
    for d in DifferenceId::all() {
        assert_matches_fd(&difference_generating_function(&d), &d.to_string());
    }
}

#[test]
fn generators_vanish_at_one_with_zero_slope() {
    for id in MeasureId::DIVERGENCES {
        let f = generating_function(id).unwrap();
        assert!(f.value(1.0).abs() < 1e-15, "{id}");
        assert!(f.d1(1.0).abs() < 1e-14, "{id}");
        assert!(check_convexity(&f, &log_grid(1e-4, 1e4, 200)).unwrap(), "{id}");
    }
}

#[test]
fn scaled_chain_has_equal_curvature_at_one() {
    for (id, c) in divlat::pyramid::CHAIN {
        let f = generating_function(id).unwrap().scaled(c);
        assert!((f.d2(1.0) - 0.25).abs() < 1e-14, "{id}: {}", f.d2(1.0));
    }
}

#[test]
fn mean_sums_have_no_generator() {
    for id in MeasureId::MEAN_SUMS {
        assert!(generating_function(id).is_err());
    }
}
