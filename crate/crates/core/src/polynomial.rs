//! Exact integer polynomials and Sturm-sequence root counting.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients in ascending degree; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// From ascending coefficients, `[c0, c1, …]`.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// From the monic-or-not product `lead·Π(t − rᵢ)` with integer roots.
    pub fn from_roots(lead: i64, roots: &[i64]) -> Self {
        let mut p = Self::from_i64(&[lead]);
        for &r in roots {
            p = p.mul(&Self::from_i64(&[-r, 1]));
        }
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * t + BigRational::from_integer(c.clone())
        })
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || mag != BigInt::from(1) {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Coefficient sum `p(1)`.
pub fn eval_at_one(p: &IntegerPolynomial) -> BigInt {
    p.coeffs.iter().sum()
}

type RatPoly = Vec<BigRational>;

fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn derivative(p: &RatPoly) -> RatPoly {
    let mut d: RatPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
        .collect();
    trim(&mut d);
    d
}

/// Remainder of `a` divided by nonzero `b`.
fn rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = r[r.len() - 1].clone() / &lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &factor * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn sign(c: &BigRational) -> i8 {
    if c.is_positive() {
        1
    } else if c.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut prev = 0;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Number of distinct real roots in `(0, ∞)`.
///
/// Signs at `0⁺` come from the lowest nonzero coefficient and signs at `+∞` from the
/// leading one, so no endpoint is ever a root.
pub fn count_positive_roots(p: &IntegerPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let low = p.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let base: RatPoly = p.coeffs[low..]
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    if base.len() == 1 {
        return Ok(0);
    }
    let mut seq = vec![base.clone(), derivative(&base)];
    loop {
        let n = seq.len();
        let mut r = rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        let scale = r[r.len() - 1].abs();
        for c in r.iter_mut() {
            *c = -(&*c / &scale);
        }
        seq.push(r);
    }
    let at_zero = variations(
        seq.iter()
            .map(|q| sign(q.iter().find(|c| !c.is_zero()).expect("nonzero"))),
    );
    let at_inf = variations(seq.iter().map(|q| sign(q.last().expect("nonzero"))));
    Ok(at_zero - at_inf)
}

/// Ascending coefficients of `v(t)`, a degree-12 palindromic polynomial in `t = √x`.
pub const V_COEFFS: [i64; 13] = [4, -9, 24, -41, 60, 50, -48, 50, 60, -41, 24, -9, 4];

/// Ascending coefficients of `m(t)`, a degree-24 palindromic polynomial in `t = √x`.
pub const M_COEFFS: [i64; 25] = [
    2025, 9270, 14344, 8634, 27498, 15106, 9952, -2034, -9001, -9380, -12776, 1444, -36436, 1444, -12776, -9380, -9001,
    -2034, 9952, 15106, 27498, 8634, 14344, 9270, 2025,
];

pub const V_AT_ONE: i64 = 128;
pub const M_AT_ONE: i64 = 73728;

fn gated(coeffs: &[i64], at_one: i64, name: &str) -> IntegerPolynomial {
    let p = IntegerPolynomial::from_i64(coeffs);
    assert_eq!(
        eval_at_one(&p),
        BigInt::from(at_one),
        "{name}: coefficient table is corrupt"
    );
    p
}

/// `v(t)`; panics if the table does not satisfy `v(1) = 128`.
pub fn v_polynomial() -> IntegerPolynomial {
    gated(&V_COEFFS, V_AT_ONE, "v")
}

/// `m(t)`; panics if the table does not satisfy `m(1) = 73728`.
pub fn m_polynomial() -> IntegerPolynomial {
    gated(&M_COEFFS, M_AT_ONE, "m")
}
