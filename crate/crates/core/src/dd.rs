//! Double-double arithmetic and the `Real` abstraction used by second-derivative kernels.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Scalar type the derivative kernels are generic over.
pub trait Real:
    Copy
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
    fn sqrt(self) -> Self;

    fn recip(self) -> Self {
        Self::from_f64(1.0) / self
    }
}

impl Real for f64 {
    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Clone, Copy, Default, PartialEq, PartialOrd)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const fn new(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    fn renorm(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Self { hi, lo }
    }
}

impl From<f64> for DoubleDouble {
    fn from(v: f64) -> Self {
        Self { hi: v, lo: 0.0 }
    }
}

impl fmt::Debug for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DoubleDouble({:e} + {:e})", self.hi, self.lo)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Self::renorm(s, e + f)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        Self::renorm(p, e)
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Self::from(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Self::from(q2);
        let q3 = r.hi / rhs.hi;
        Self::renorm(q1, q2) + Self::from(q3)
    }
}

impl Real for DoubleDouble {
    fn from_f64(v: f64) -> Self {
        Self::from(v)
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Self::from(if self.hi == 0.0 { 0.0 } else { f64::NAN });
        }
        let q = self.hi.sqrt();
        let (p, e) = two_prod(q, q);
        let correction = ((self.hi - p) - e + self.lo) / (2.0 * q);
        Self::renorm(q, correction)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dd(v: f64) -> DoubleDouble {
        DoubleDouble::from(v)
    }

    #[test]
    fn third_times_three_is_one() {
        let third = dd(1.0) / dd(3.0);
        let back = third * dd(3.0) - dd(1.0);
        assert!(back.to_f64().abs() < 1e-31, "{back:?}");
        assert!((third.lo() - 1.850371707708594e-17).abs() < 1e-30);
    }

    #[test]
    fn sqrt_two_squares_back() {
        let s = dd(2.0).sqrt();
        let err = s * s - dd(2.0);
        assert!(err.to_f64().abs() < 1e-31, "{err:?}");
        assert_eq!(dd(0.0).sqrt().to_f64(), 0.0);
        assert!(dd(-1.0).sqrt().to_f64().is_nan());
    }

    #[test]
    fn cancellation_is_resolved() {
        // (1 + 1e-20) - 1 is invisible in f64 but not here.
        let x = dd(1.0) + DoubleDouble::new(1e-20, 0.0);
        assert!(((x - dd(1.0)).to_f64() - 1e-20).abs() < 1e-36);
    }

    #[test]
    fn ordering_uses_low_word() {
        let a = DoubleDouble::new(1.0, 1e-20);
        assert!(a > dd(1.0));
        assert!(-a < dd(-1.0));
    }
}
