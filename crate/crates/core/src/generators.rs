//! Csiszár generating functions `f` for the eleven symmetric divergences.
//!
//! Each divergence is `C_f(P||Q) = Σ qᵢ f(pᵢ/qᵢ)` for a convex `f` with `f(1) = 0`.
//! First and second derivatives are closed forms derived by hand. The second
//! derivatives are algebraic in `√x` and `√((x+1)/2)` (no logarithms), which is what
//! lets [`GeneratingFunction::d2_in`] run them in double-double precision.
//!
//! | measure | f(x) |
//! |---------|------|
//! | Δ  | (x−1)²/(x+1) |
//! | I  | ½[x ln(2x/(x+1)) + ln(2/(x+1))] |
//! | M1 | √((x+1)/2)·(√x+1)/2 − ((√x+1)/2)² |
//! | M2 | √((x+1)/2)·(√x+1)/2 − √x |
//! | h  | (√x−1)²/2 |
//! | M3 | (x+1)/2 − √((x+1)/2)·(√x+1)/2 |
//! | J  | (x−1) ln x |
//! | T  | ((x+1)/2) ln((x+1)/(2√x)) |
//! | K0 | (x−1)²/√x |
//! | Ψ  | (x−1)²(x+1)/x |
//! | F  | (x²−1)²/(2x^{3/2}) |

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::dd::Real;
use crate::distribution::{ensure_same_len, Distribution};
use crate::error::{Error, Result};
use crate::numeric::pairwise_sum;

/// The eleven divergences (in chain order) followed by the four mean sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MeasureId {
    Delta,
    I,
    M1,
    M2,
    H,
    M3,
    J,
    T,
    K0,
    Psi,
    F,
    G,
    N1,
    N2,
    A,
}

impl MeasureId {
    pub const ALL: [MeasureId; 15] = [
        MeasureId::Delta,
        MeasureId::I,
        MeasureId::M1,
        MeasureId::M2,
        MeasureId::H,
        MeasureId::M3,
        MeasureId::J,
        MeasureId::T,
        MeasureId::K0,
        MeasureId::Psi,
        MeasureId::F,
        MeasureId::G,
        MeasureId::N1,
        MeasureId::N2,
        MeasureId::A,
    ];

    /// The eleven divergences, ordered as in the refined chain.
    pub const DIVERGENCES: [MeasureId; 11] = [
        MeasureId::Delta,
        MeasureId::I,
        MeasureId::M1,
        MeasureId::M2,
        MeasureId::H,
        MeasureId::M3,
        MeasureId::J,
        MeasureId::T,
        MeasureId::K0,
        MeasureId::Psi,
        MeasureId::F,
    ];

    pub const MEAN_SUMS: [MeasureId; 4] = [MeasureId::G, MeasureId::N1, MeasureId::N2, MeasureId::A];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_divergence(self) -> bool {
        self.index() < 11
    }

    pub fn name(self) -> &'static str {
        match self {
            MeasureId::Delta => "Delta",
            MeasureId::I => "I",
            MeasureId::M1 => "M1",
            MeasureId::M2 => "M2",
            MeasureId::H => "h",
            MeasureId::M3 => "M3",
            MeasureId::J => "J",
            MeasureId::T => "T",
            MeasureId::K0 => "K0",
            MeasureId::Psi => "Psi",
            MeasureId::F => "F",
            MeasureId::G => "G",
            MeasureId::N1 => "N1",
            MeasureId::N2 => "N2",
            MeasureId::A => "A",
        }
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeasureId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        MeasureId::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown measure `{s}`"))
    }
}

// Shared pieces of the mean-based generators: r = √x, s = √((x+1)/2).

fn n2_value(x: f64) -> f64 {
    let r = x.sqrt();
    let s = ((x + 1.0) / 2.0).sqrt();
    s * (r + 1.0) / 2.0
}

fn n2_d1(x: f64) -> f64 {
    let r = x.sqrt();
    let s = ((x + 1.0) / 2.0).sqrt();
    0.5 * ((r + 1.0) / (4.0 * s) + s / (2.0 * r))
}

fn n2_d2<R: Real>(x: R, r: R) -> R {
    let c = R::from_f64;
    let s = ((x + c(1.0)) / c(2.0)).sqrt();
    c(0.5) * (c(1.0) / (c(4.0) * s * r) - (r + c(1.0)) / (c(16.0) * s * s * s) - s / (c(4.0) * x * r))
}

fn kernel_value(id: MeasureId, x: f64) -> f64 {
    let r = x.sqrt();
    match id {
        MeasureId::Delta => (x - 1.0).powi(2) / (x + 1.0),
        MeasureId::I => 0.5 * (x * (2.0 * x / (x + 1.0)).ln() + (2.0 / (x + 1.0)).ln()),
        MeasureId::M1 => n2_value(x) - ((r + 1.0) / 2.0).powi(2),
        MeasureId::M2 => n2_value(x) - r,
        MeasureId::H => (r - 1.0).powi(2) / 2.0,
        MeasureId::M3 => (x + 1.0) / 2.0 - n2_value(x),
        MeasureId::J => (x - 1.0) * x.ln(),
        MeasureId::T => (x + 1.0) / 2.0 * ((x + 1.0) / (2.0 * r)).ln(),
        MeasureId::K0 => (x - 1.0).powi(2) / r,
        MeasureId::Psi => (x - 1.0).powi(2) * (x + 1.0) / x,
        MeasureId::F => (x * x - 1.0).powi(2) / (2.0 * x * r),
        _ => unreachable!("mean sums have no normalized generator"),
    }
}

fn kernel_d1(id: MeasureId, x: f64) -> f64 {
    let r = x.sqrt();
    match id {
        MeasureId::Delta => 1.0 - 4.0 / (x + 1.0).powi(2),
        MeasureId::I => 0.5 * (2.0 * x / (x + 1.0)).ln(),
        MeasureId::M1 => n2_d1(x) - (1.0 + 1.0 / r) / 4.0,
        MeasureId::M2 => n2_d1(x) - 1.0 / (2.0 * r),
        MeasureId::H => (1.0 - 1.0 / r) / 2.0,
        MeasureId::M3 => 0.5 - n2_d1(x),
        MeasureId::J => x.ln() + 1.0 - 1.0 / x,
        MeasureId::T => 0.5 * ((x + 1.0) / (2.0 * r)).ln() + (x - 1.0) / (4.0 * x),
        MeasureId::K0 => 1.5 * r - 1.0 / r - 0.5 / (x * r),
        MeasureId::Psi => 2.0 * x - 1.0 - 1.0 / (x * x),
        MeasureId::F => 1.25 * x * r - 0.5 / r - 0.75 / (x * x * r),
        _ => unreachable!("mean sums have no normalized generator"),
    }
}

fn kernel_d2<R: Real>(id: MeasureId, x: R) -> R {
    let c = R::from_f64;
    let one = c(1.0);
    let r = x.sqrt();
    match id {
        MeasureId::Delta => {
            let xp = x + one;
            c(8.0) / (xp * xp * xp)
        }
        MeasureId::I => one / (c(2.0) * x * (x + one)),
        MeasureId::M1 => n2_d2(x, r) + one / (c(8.0) * x * r),
        MeasureId::M2 => n2_d2(x, r) + one / (c(4.0) * x * r),
        MeasureId::H => one / (c(4.0) * x * r),
        MeasureId::M3 => -n2_d2(x, r),
        MeasureId::J => (x + one) / (x * x),
        MeasureId::T => (x * x + one) / (c(4.0) * x * x * (x + one)),
        MeasureId::K0 => c(0.75) / r + c(0.5) / (x * r) + c(0.75) / (x * x * r),
        MeasureId::Psi => c(2.0) + c(2.0) / (x * x * x),
        MeasureId::F => c(1.875) * r + c(0.25) / (x * r) + c(1.875) / (x * x * x * r),
        _ => unreachable!("mean sums have no normalized generator"),
    }
}

fn rational_to_f64(c: Rational64) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

fn rational_to_real<R: Real>(c: Rational64) -> R {
    R::from_f64(*c.numer() as f64) / R::from_f64(*c.denom() as f64)
}

/// A generating function: a rational linear combination of the divergence kernels.
///
/// Every kernel satisfies `f(1) = 0`, so every combination does too.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratingFunction {
    terms: Vec<(MeasureId, Rational64)>,
}

impl GeneratingFunction {
    /// Builds `Σ cᵢ f_{idᵢ}`; repeated ids are merged and zero coefficients dropped.
    pub fn linear<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MeasureId, Rational64)>,
    {
        let mut merged: Vec<(MeasureId, Rational64)> = Vec::new();
        for (id, c) in terms {
            if !id.is_divergence() {
                return Err(Error::NotADivergence(id));
            }
            match merged.iter_mut().find(|(m, _)| *m == id) {
                Some((_, acc)) => *acc += c,
                None => merged.push((id, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        merged.sort_by_key(|(id, _)| *id);
        if merged.is_empty() {
            return Err(Error::EmptyCombination);
        }
        Ok(Self { terms: merged })
    }

    pub fn terms(&self) -> &[(MeasureId, Rational64)] {
        &self.terms
    }

    pub fn scaled(&self, factor: Rational64) -> Self {
        Self {
            terms: self.terms.iter().map(|&(id, c)| (id, c * factor)).collect(),
        }
    }

    pub fn negated(&self) -> Self {
        self.scaled(Rational64::from_integer(-1))
    }

    pub fn value(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(id, c)| rational_to_f64(c) * kernel_value(id, x))
            .sum()
    }

    pub fn d1(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(id, c)| rational_to_f64(c) * kernel_d1(id, x))
            .sum()
    }

    pub fn d2(&self, x: f64) -> f64 {
        self.d2_in(x)
    }

    /// Second derivative evaluated in an arbitrary [`Real`] type.
    pub fn d2_in<R: Real>(&self, x: R) -> R {
        self.terms.iter().fold(R::from_f64(0.0), |acc, &(id, c)| {
            acc + rational_to_real::<R>(c) * kernel_d2(id, x)
        })
    }
}

/// The generating function of one of the eleven divergences.
pub fn generating_function(id: MeasureId) -> Result<GeneratingFunction> {
    GeneratingFunction::linear([(id, Rational64::from_integer(1))])
}

/// `C_f(P||Q) = Σ qᵢ f(pᵢ/qᵢ)`.
pub fn eval_csiszar(f: &GeneratingFunction, p: &Distribution, q: &Distribution) -> Result<f64> {
    ensure_same_len(p, q)?;
    let terms: Vec<f64> = p
        .probs()
        .iter()
        .zip(q.probs())
        .map(|(&pi, &qi)| qi * f.value(pi / qi))
        .collect();
    Ok(pairwise_sum(&terms))
}

/// True iff `f''(x) > 0` at every grid point.
pub fn check_convexity(f: &GeneratingFunction, grid: &[f64]) -> Result<bool> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if let Some(&bad) = grid.iter().find(|x| x.is_nan() || **x <= 0.0) {
        return Err(Error::NonPositiveGridPoint(bad));
    }
    Ok(grid.iter().all(|&x| f.d2(x) > 0.0))
}
