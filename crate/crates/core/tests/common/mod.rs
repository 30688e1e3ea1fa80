//! Shared oracles for integration tests.
#![allow(dead_code)]

use divlat::distribution::random_pairs;
use divlat::Distribution;

/// Ridders' extrapolation of a finite-difference estimate `est(h)` whose error is even in
/// `h`. Returns the extrapolated value and its error estimate.
pub fn ridders(est: impl Fn(f64) -> f64, h0: f64) -> (f64, f64) {
    const SHRINK: f64 = 1.4;
    const SHRINK2: f64 = SHRINK * SHRINK;
    const N: usize = 12;
    let mut table = [[0.0f64; N]; N];
    let mut h = h0;
    table[0][0] = est(h);
    let mut best = (table[0][0], f64::INFINITY);
    for i in 1..N {
        h /= SHRINK;
        table[0][i] = est(h);
        let mut fac = SHRINK2;
        for j in 1..=i {
            table[j][i] = (table[j - 1][i] * fac - table[j - 1][i - 1]) / (fac - 1.0);
            fac *= SHRINK2;
            let err = (table[j][i] - table[j - 1][i])
                .abs()
                .max((table[j][i] - table[j - 1][i - 1]).abs());
            if err <= best.1 {
                best = (table[j][i], err);
            }
        }
        if (table[i][i] - table[i - 1][i - 1]).abs() >= 2.0 * best.1 {
            break;
        }
    }
    best
}

/// Ridders over several starting steps, keeping the estimate with the smallest error.
fn ridders_best(est: impl Fn(f64) -> f64, x: f64) -> f64 {
    [0.1, 0.05, 0.02, 0.01, 0.005]
        .iter()
        .map(|&s| ridders(&est, s * x))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("nonempty")
        .0
}

/// Central first derivative of `f` at `x`.
pub fn fd_first(f: impl Fn(f64) -> f64, x: f64) -> f64 {
    ridders_best(|h| (f(x + h) - f(x - h)) / (2.0 * h), x)
}

/// Central second difference of `f` at `x`.
pub fn fd_second(f: impl Fn(f64) -> f64, x: f64) -> f64 {
    ridders_best(|h| (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h), x)
}

/// Forward second difference of `f` at `x` using only points at or above `x`, with one
/// Richardson step removing the first-order error.
pub fn fd_second_forward(f: impl Fn(f64) -> f64, x: f64) -> f64 {
    let h = 1e-4 * x;
    let fwd = |h: f64| (f(x + 2.0 * h) - 2.0 * f(x + h) + f(x)) / (h * h);
    2.0 * fwd(h) - fwd(2.0 * h)
}

/// Seeded pairs cycling over the given dimensions.
pub fn pairs_over(dims: &[usize], per_dim: usize, seed: u64) -> Vec<(Distribution, Distribution)> {
    dims.iter()
        .flat_map(|&n| random_pairs(n, per_dim, seed).expect("n >= 2"))
        .collect()
}

pub fn spot_pair() -> (Distribution, Distribution) {
    (
        Distribution::validate(&[0.5, 0.5]).unwrap(),
        Distribution::validate(&[0.25, 0.75]).unwrap(),
    )
}
