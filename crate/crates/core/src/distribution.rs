//! Points of the probability simplex with strictly positive entries.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution as _, Exp1};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::pairwise_sum;

/// Maximum allowed `|Σ pᵢ − 1|` for a validated distribution.
pub const SUM_TOLERANCE: f64 = 1e-12;

/// A complete finite discrete distribution: `n ≥ 2` strictly positive entries summing to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    /// Accepts `raw` unchanged if it already is a valid simplex point.
    pub fn validate(raw: &[f64]) -> Result<Self> {
        check_entries(raw)?;
        let sum = pairwise_sum(raw);
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::SumNotOne { sum });
        }
        Ok(Self { probs: raw.to_vec() })
    }

    /// Divides positive weights (e.g. histogram counts) by their total.
    pub fn normalize(raw: &[f64]) -> Result<Self> {
        check_entries(raw)?;
        let sum = pairwise_sum(raw);
        if !sum.is_finite() {
            return Err(Error::SumNotOne { sum });
        }
        Ok(Self {
            probs: raw.iter().map(|v| v / sum).collect(),
        })
    }

    /// Uniform draw from the simplex (Dirichlet with unit concentration), deterministic in `seed`.
    ///
    /// Realised by normalising `n` independent unit-rate exponential variates.
    pub fn random(n: usize, seed: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooShort { len: n });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let draws: Vec<f64> = (0..n)
            .map(|_| loop {
                let e: f64 = Exp1.sample(&mut rng);
                if e > 0.0 {
                    break e;
                }
            })
            .collect();
        Self::normalize(&draws)
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Entrywise convex combination `λ·self + (1 − λ)·other`.
    pub fn mix(&self, other: &Self, lambda: f64) -> Result<Self> {
        ensure_same_len(self, other)?;
        let probs: Vec<f64> = self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| lambda * a + (1.0 - lambda) * b)
            .collect();
        Self::normalize(&probs)
    }
}

impl TryFrom<Vec<f64>> for Distribution {
    type Error = Error;

    fn try_from(raw: Vec<f64>) -> Result<Self> {
        Self::validate(&raw)
    }
}

impl From<Distribution> for Vec<f64> {
    fn from(d: Distribution) -> Self {
        d.probs
    }
}

impl AsRef<[f64]> for Distribution {
    fn as_ref(&self) -> &[f64] {
        &self.probs
    }
}

fn check_entries(raw: &[f64]) -> Result<()> {
    if raw.len() < 2 {
        return Err(Error::TooShort { len: raw.len() });
    }
    if let Some((index, &value)) = raw.iter().enumerate().find(|(_, v)| v.is_nan() || **v <= 0.0) {
        return Err(Error::NonPositiveEntry { index, value });
    }
    Ok(())
}

pub(crate) fn ensure_same_len(p: &Distribution, q: &Distribution) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    Ok(())
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for member `which` (0 = P, 1 = Q) of pair `index` in dimension `n`.
pub fn pair_seed(seed: u64, n: usize, index: usize, which: u64) -> u64 {
    let mut s = splitmix64(seed);
    s = splitmix64(s ^ n as u64);
    s = splitmix64(s ^ index as u64);
    splitmix64(s ^ which)
}

/// `count` reproducible random pairs in dimension `n`.
pub fn random_pairs(n: usize, count: usize, seed: u64) -> Result<Vec<(Distribution, Distribution)>> {
    (0..count)
        .map(|i| {
            Ok((
                Distribution::random(n, pair_seed(seed, n, i, 0))?,
                Distribution::random(n, pair_seed(seed, n, i, 1))?,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn validate_accepts_simplex_points() {
        assert_eq!(Distribution::validate(&[0.5, 0.5]).unwrap().len(), 2);
        assert_eq!(Distribution::validate(&[0.25, 0.75]).unwrap().probs(), &[0.25, 0.75]);
    }

    #[test]
    fn validate_rejects_bad_sum() {
        assert!(matches!(
            Distribution::validate(&[0.5, 0.5000001]),
            Err(Error::SumNotOne { .. })
        ));
    }

    #[test]
    fn validate_rejects_zero_and_short() {
        assert!(matches!(
            Distribution::validate(&[0.0, 1.0]),
            Err(Error::NonPositiveEntry { index: 0, .. })
        ));
        assert!(matches!(
            Distribution::validate(&[1.0]),
            Err(Error::TooShort { len: 1 })
        ));
        assert!(matches!(
            Distribution::validate(&[f64::NAN, 1.0]),
            Err(Error::NonPositiveEntry { .. })
        ));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            Distribution::normalize(&[1.0, 1.0, 2.0]).unwrap().probs(),
            &[0.25, 0.25, 0.5]
        );
        assert_eq!(Distribution::normalize(&[3.0, 1.0]).unwrap().probs(), &[0.75, 0.25]);
        assert!(matches!(
            Distribution::normalize(&[0.0, 1.0]),
            Err(Error::NonPositiveEntry { index: 0, .. })
        ));
        assert!(matches!(Distribution::normalize(&[2.0]), Err(Error::TooShort { .. })));
    }

    #[test]
    fn random_is_deterministic_and_seed_sensitive() {
        let a = Distribution::random(2, 7).unwrap();
        let b = Distribution::random(2, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(Distribution::random(5, 7).unwrap(), Distribution::random(5, 8).unwrap());
        assert!(matches!(Distribution::random(1, 7), Err(Error::TooShort { len: 1 })));
    }

    proptest! {
        #[test]
        fn random_outputs_satisfy_invariants(n in 2usize..200, seed in any::<u64>()) {
            let d = Distribution::random(n, seed).unwrap();
            prop_assert_eq!(d.len(), n);
            prop_assert!(d.probs().iter().all(|&p| p >= 1e-300));
            prop_assert!((pairwise_sum(d.probs()) - 1.0).abs() <= SUM_TOLERANCE);
            prop_assert!(Distribution::validate(d.probs()).is_ok());
        }

        #[test]
        fn normalize_is_idempotent(raw in prop::collection::vec(1e-6f64..1e6, 2..64)) {
            let once = Distribution::normalize(&raw).unwrap();
            let twice = Distribution::normalize(once.probs()).unwrap();
            for (a, b) in once.probs().iter().zip(twice.probs()) {
                prop_assert!((a - b).abs() <= 1e-15);
            }
            prop_assert!((pairwise_sum(once.probs()) - 1.0).abs() <= SUM_TOLERANCE);
        }
    }
}
