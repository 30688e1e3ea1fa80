//! Small numeric utilities shared across modules.

const PAIRWISE_BLOCK: usize = 8;

/// Pairwise (tree) summation; rounding error grows as `O(log n)` ulps.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= PAIRWISE_BLOCK {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Pairwise sum of `term(0) + … + term(len − 1)` without materialising the terms.
pub fn pairwise_sum_map<F: Fn(usize) -> f64>(len: usize, term: &F) -> f64 {
    fn go<F: Fn(usize) -> f64>(lo: usize, hi: usize, term: &F) -> f64 {
        if hi - lo <= PAIRWISE_BLOCK {
            return (lo..hi).map(term).sum();
        }
        let mid = lo + (hi - lo) / 2;
        go(lo, mid, term) + go(mid, hi, term)
    }
    go(0, len, term)
}

/// `n` points equally spaced in `ln x` over `[lo, hi]`, endpoints included.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    log_space(lo.ln(), hi.ln(), n).into_iter().map(f64::exp).collect()
}

/// `n` equally spaced values over `[a, b]` (the log-coordinates of [`log_grid`]).
pub fn log_space(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let step = (b - a) / (n - 1) as f64;
            (0..n)
                .map(|k| if k == n - 1 { b } else { a + step * k as f64 })
                .collect()
        }
    }
}

/// Round to 12 significant digits, the precision used by every report.
pub fn round_sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// `x` formatted with 12 significant digits in scientific notation.
pub fn fmt_sig12(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.11e}")
    } else {
        format!("{x}")
    }
}

/// Relative distance `|a - b| / max(|a|, |b|)`; zero when both are zero.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive_on_small_input() {
        let v = [1.0, 2.0, 3.0, 4.5];
        assert_eq!(pairwise_sum(&v), 10.5);
        assert_eq!(pairwise_sum(&[]), 0.0);
    }

    #[test]
    fn pairwise_is_accurate_on_long_input() {
        let v = vec![0.1; 1_000_000];
        assert!((pairwise_sum(&v) - 100_000.0).abs() < 1e-8);
    }

    #[test]
    fn mapped_sum_matches_slice_sum() {
        let v: Vec<f64> = (0..1000).map(|i| (i as f64).sin()).collect();
        assert_eq!(pairwise_sum_map(v.len(), &|i| v[i]), pairwise_sum(&v));
    }

    #[test]
    fn log_grid_hits_endpoints() {
        let g = log_grid(1e-3, 1e3, 7);
        assert_eq!(g.len(), 7);
        assert!((g[0] - 1e-3).abs() < 1e-18);
        assert!((g[3] - 1.0).abs() < 1e-15);
        assert!((g[6] - 1e3).abs() < 1e-10);
    }

    #[test]
    fn sig12_rounding() {
        assert_eq!(round_sig12(2.0 / 15.0), 0.133333333333);
        assert_eq!(fmt_sig12(1.0 / 36.0), "2.77777777778e-2");
        assert_eq!(round_sig12(0.0), 0.0);
    }
}
