//! Recovery of tight constants as the supremum of a second-derivative ratio
//! `g(x) = f₁″(x) / f₂″(x)`.
//!
//! For every catalog ratio both generators are symmetric (`f(x) = x·f(1/x)`), which
//! gives `f″(1/x) = x³·f″(x)` and hence `g(1/x) = g(x)`. Near `x = 1` both second
//! derivatives usually vanish to second order, so `g` is always evaluated in
//! double-double arithmetic and its value at 1 is obtained by extrapolation.

use num_rational::Rational64;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::dd::{DoubleDouble, Real};
use crate::error::{Error, Result};
use crate::generators::GeneratingFunction;
use crate::inequalities::{catalog_families, Family, InequalityRecord, Operand};
use crate::numeric::log_space;

/// Default search range and sample count for [`grid_sup`].
pub const GRID_LO: f64 = 1e-6;
pub const GRID_HI: f64 = 1e6;
pub const GRID_POINTS: usize = 10_000;
pub const MIN_GRID_POINTS: usize = 100;

/// Golden-section refinement stops at this bracket width in `ln x`.
pub const GOLDEN_WIDTH: f64 = 1e-10;
/// Refinement never evaluates closer to `x = 1` than `|ln x| = U_MIN`: the ratio's
/// residual there is `O(u²)` against double-double roundoff of about `1e-32`.
pub const U_MIN: f64 = 1e-6;
/// Largest slope (per unit `ln x`) tolerated against the expected direction.
pub const SLOPE_TOL: f64 = 1e-9;
/// Extrapolation steps `h`, coarse to fine.
pub const LIMIT_STEPS: [f64; 3] = [1e-2, 1e-3, 1e-4];
/// Maximum relative disagreement between the two extrapolated limits.
pub const EXTRAPOLATION_TOL: f64 = 1e-6;

pub const LIMIT_REL_TOL: f64 = 1e-6;
pub const SUP_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct RatioFunction {
    pub numerator: GeneratingFunction,
    pub denominator: GeneratingFunction,
}

impl RatioFunction {
    /// Unchecked constructor; see [`ratio_function`] for the checked one.
    pub fn new(numerator: GeneratingFunction, denominator: GeneratingFunction) -> Self {
        Self { numerator, denominator }
    }

    pub fn eval_dd(&self, x: f64) -> DoubleDouble {
        let x = DoubleDouble::from(x);
        self.numerator.d2_in(x) / self.denominator.d2_in(x)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.eval_dd(x).to_f64()
    }

    pub fn reciprocal(&self) -> Self {
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    fn check_denominator(&self, x: f64) -> Result<()> {
        if self.denominator.d2_in(DoubleDouble::from(x)) > DoubleDouble::from(0.0) {
            Ok(())
        } else {
            Err(Error::DenominatorVanishes { x })
        }
    }
}

/// Ratio of the generators of two operands, with `f₂″ > 0` checked on the default grid.
pub fn ratio_function(numerator: &Operand, denominator: &Operand) -> Result<RatioFunction> {
    let g = RatioFunction::new(
        numerator.combo().generating_function()?,
        denominator.combo().generating_function()?,
    );
    for u in log_space(GRID_LO.ln(), GRID_HI.ln(), GRID_POINTS) {
        let x = u.exp();
        if x != 1.0 {
            g.check_denominator(x)?;
        }
    }
    Ok(g)
}

/// The ratio whose supremum is a theorem part's constant.
pub fn part_ratio(record: &InequalityRecord) -> Result<RatioFunction> {
    let (l, r) = record.sides.as_ref().ok_or(Error::EmptyCombination)?;
    ratio_function(&l.operand, &r.operand)
}

fn symmetric_average(g: &RatioFunction, h: f64) -> f64 {
    let two = DoubleDouble::from(2.0);
    ((g.eval_dd(1.0 + h) + g.eval_dd(1.0 - h)) / two).to_f64()
}

/// `lim_{x→1} g(x)`.
///
/// `a(h) = (g(1+h) + g(1−h))/2` is even in `h`, so one Richardson step in `h²` removes
/// the leading error term. Two such steps over the fixed `h` ladder must agree.
pub fn limit_at_one(g: &RatioFunction) -> Result<f64> {
    let a: Vec<f64> = LIMIT_STEPS.iter().map(|&h| symmetric_average(g, h)).collect();
    let richardson = |coarse: f64, fine: f64, hc: f64, hf: f64| {
        let r = (hc / hf).powi(2);
        (r * fine - coarse) / (r - 1.0)
    };
    let coarse = richardson(a[0], a[1], LIMIT_STEPS[0], LIMIT_STEPS[1]);
    let fine = richardson(a[1], a[2], LIMIT_STEPS[1], LIMIT_STEPS[2]);
    let ok = coarse.is_finite() && fine.is_finite() && (coarse - fine).abs() <= EXTRAPOLATION_TOL * fine.abs();
    if !ok {
        return Err(Error::ExtrapolationDiverged { coarse, fine });
    }
    Ok(fine)
}

fn eval_log(g: &RatioFunction, u: f64) -> f64 {
    let u = if u.abs() < U_MIN { U_MIN.copysign(u) } else { u };
    g.eval(u.exp())
}

/// Golden-section maximisation of a unimodal `φ` on `[a, b]`.
fn golden_max(phi: impl Fn(f64) -> f64, mut a: f64, mut b: f64, width: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (phi(c), phi(d));
    while b - a > width {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = phi(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = phi(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// `max g` over `n_points` log-spaced samples of `[lo, hi]`, refined by golden-section
/// search between the neighbours of the best sample.
pub fn grid_sup(g: &RatioFunction, lo: f64, hi: f64, n_points: usize) -> Result<f64> {
    if !(lo > 0.0 && lo < 1.0 && hi > 1.0 && hi.is_finite() && n_points >= MIN_GRID_POINTS) {
        return Err(Error::InvalidInterval {
            lo,
            hi,
            points: n_points,
        });
    }
    let us = log_space(lo.ln(), hi.ln(), n_points);
    let mut best = (0usize, f64::NEG_INFINITY);
    for (i, &u) in us.iter().enumerate() {
        let x = u.exp();
        if x == 1.0 {
            continue;
        }
        g.check_denominator(x)?;
        let v = g.eval(x);
        if v > best.1 {
            best = (i, v);
        }
    }
    let a = us[best.0.saturating_sub(1)];
    let b = us[(best.0 + 1).min(us.len() - 1)];
    let (_, refined) = golden_max(|u| eval_log(g, u), a, b, GOLDEN_WIDTH);
    Ok(best.1.max(refined))
}

/// True iff `g` rises on `(0, 1)` and falls on `(1, ∞)` up to [`SLOPE_TOL`].
///
/// Samples `n_points` log-spaced abscissae on each side within `[GRID_LO, GRID_HI]`;
/// counts below [`MIN_GRID_POINTS`] are raised to it.
pub fn monotonicity_check(g: &RatioFunction, n_points: usize) -> bool {
    let n = n_points.max(MIN_GRID_POINTS);
    let left: Vec<f64> = log_space(GRID_LO.ln(), 0.0, n + 1)[..n].to_vec();
    let right: Vec<f64> = log_space(0.0, GRID_HI.ln(), n + 1)[1..].to_vec();
    let slopes = |us: &[f64]| -> Vec<f64> {
        let vals: Vec<f64> = us.iter().map(|&u| g.eval(u.exp())).collect();
        us.windows(2)
            .zip(vals.windows(2))
            .map(|(u, v)| (v[1] - v[0]) / (u[1] - u[0]))
            .collect()
    };
    slopes(&left).iter().all(|&s| s >= -SLOPE_TOL) && slopes(&right).iter().all(|&s| s <= SLOPE_TOL)
}

/// Recovered constant for one theorem part.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantEstimate {
    pub part: usize,
    pub claimed_num: i64,
    pub claimed_den: i64,
    pub limit: f64,
    pub grid_sup: f64,
    pub monotone_ok: bool,
    pub pass: bool,
}

impl ConstantEstimate {
    pub fn claimed(&self) -> Rational64 {
        Rational64::new(self.claimed_num, self.claimed_den)
    }

    pub fn label(&self) -> String {
        format!("part {}", self.part)
    }
}

/// Limit, supremum and monotonicity for one theorem-part record.
pub fn estimate(record: &InequalityRecord, grid_points: usize) -> Result<ConstantEstimate> {
    let claimed = record.constant.ok_or(Error::EmptyCombination)?;
    let g = part_ratio(record)?;
    let limit = limit_at_one(&g)?;
    let sup = grid_sup(&g, GRID_LO, GRID_HI, grid_points)?;
    let monotone_ok = monotonicity_check(&g, grid_points);
    let beta = claimed.to_f64().unwrap_or(f64::NAN);
    let pass = (limit - beta).abs() <= LIMIT_REL_TOL * beta && sup <= beta * (1.0 + SUP_REL_TOL) && monotone_ok;
    Ok(ConstantEstimate {
        part: record.part.unwrap_or(0),
        claimed_num: *claimed.numer(),
        claimed_den: *claimed.denom(),
        limit,
        grid_sup: sup,
        monotone_ok,
        pass,
    })
}

/// All 59 theorem parts, in part order, evaluated in parallel.
pub fn constant_sweep(grid_points: usize) -> Result<Vec<ConstantEstimate>> {
    catalog_families(&[Family::TheoremPart])
        .par_iter()
        .map(|r| estimate(r, grid_points))
        .collect()
}
