//! Exact rational linear combinations of measures.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::generators::{GeneratingFunction, MeasureId};
use crate::measures::MeasureTable;

/// `Σ cᵢ·Xᵢ` with exact rational coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LinearCombo {
    terms: BTreeMap<MeasureId, Rational64>,
}

impl LinearCombo {
    /// Builds a nonempty combination, merging repeated measures.
    pub fn new<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MeasureId, Rational64)>,
    {
        let combo = Self::from_terms(terms);
        if combo.is_empty() {
            return Err(Error::EmptyCombination);
        }
        Ok(combo)
    }

    /// Integer coefficients, e.g. `[(Delta, 1), (M1, 128)]`.
    pub fn from_ints(terms: &[(MeasureId, i64)]) -> Result<Self> {
        Self::new(terms.iter().map(|&(id, c)| (id, Rational64::from_integer(c))))
    }

    pub fn single(id: MeasureId) -> Self {
        Self::from_terms([(id, Rational64::one())])
    }

    pub(crate) fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (MeasureId, Rational64)>,
    {
        let mut map = BTreeMap::new();
        for (id, c) in terms {
            *map.entry(id).or_insert_with(Rational64::zero) += c;
        }
        map.retain(|_, c: &mut Rational64| !c.is_zero());
        Self { terms: map }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, id: MeasureId) -> Rational64 {
        self.terms.get(&id).copied().unwrap_or_else(Rational64::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (MeasureId, Rational64)> + '_ {
        self.terms.iter().map(|(&id, &c)| (id, c))
    }

    pub fn scale(&self, factor: Rational64) -> Self {
        Self::from_terms(self.terms().map(|(id, c)| (id, c * factor)))
    }

    pub fn plus(&self, other: &Self) -> Self {
        Self::from_terms(self.terms().chain(other.terms()))
    }

    pub fn minus(&self, other: &Self) -> Self {
        Self::from_terms(self.terms().chain(other.terms().map(|(id, c)| (id, -c))))
    }

    /// Value of the combination and the largest `|cᵢ·Xᵢ|` term.
    pub fn evaluate_with_scale(&self, values: &MeasureTable) -> Result<(f64, f64)> {
        let mut total = 0.0;
        let mut scale: f64 = 0.0;
        for (id, c) in self.terms() {
            let t = to_f64(c) * values.require(id)?;
            total += t;
            scale = scale.max(t.abs());
        }
        Ok((total, scale))
    }

    pub fn evaluate(&self, values: &MeasureTable) -> Result<f64> {
        self.evaluate_with_scale(values).map(|(v, _)| v)
    }

    /// The matching Csiszár generator (divergence terms only).
    pub fn generating_function(&self) -> Result<GeneratingFunction> {
        GeneratingFunction::linear(self.terms())
    }

    /// Integer coefficients scaled by a positive factor to be coprime.
    ///
    /// Two inequalities `l ≤ r` and `l' ≤ r'` are equivalent up to positive scaling
    /// iff `r − l` and `r' − l'` have the same primitive form.
    pub fn primitive(&self) -> Vec<(MeasureId, i64)> {
        let lcm = self.terms.values().fold(1i64, |acc, c| acc.lcm(c.denom()));
        let ints: Vec<(MeasureId, i64)> = self
            .terms()
            .map(|(id, c)| (id, (c * Rational64::from_integer(lcm)).to_integer()))
            .collect();
        let gcd = ints.iter().fold(0i64, |acc, &(_, c)| acc.gcd(&c));
        if gcd == 0 {
            return ints;
        }
        ints.into_iter().map(|(id, c)| (id, c / gcd)).collect()
    }
}

fn to_f64(c: Rational64) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

/// Renders e.g. `1/4·Delta - I + 128·M1` (terms in chain order).
impl fmt::Display for LinearCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (k, (id, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}·")?;
            }
            write!(f, "{id}")?;
        }
        Ok(())
    }
}

/// Serialized as `[[measure, num, den], ...]`.
impl Serialize for LinearCombo {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (id, c) in self.terms() {
            seq.serialize_element(&(id.name(), *c.numer(), *c.denom()))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use MeasureId::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn merges_and_drops_zeros() {
        let c = LinearCombo::new([(I, r(1, 2)), (Delta, r(1, 1)), (I, r(-1, 2))]).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.coeff(I), r(0, 1));
        assert_eq!(
            LinearCombo::new([(I, r(1, 1)), (I, r(-1, 1))]),
            Err(Error::EmptyCombination)
        );
    }

    #[test]
    fn primitive_form() {
        let c = LinearCombo::new([(Delta, r(1, 36)), (M1, r(128, 36)), (I, r(-1, 1))]).unwrap();
        assert_eq!(c.primitive(), vec![(Delta, 1), (I, -36), (M1, 128)]);
        assert_eq!(c.scale(r(7, 3)).primitive(), c.primitive());
    }

    #[test]
    fn display() {
        let c = LinearCombo::new([(Delta, r(1, 4)), (I, r(-1, 1)), (M1, r(128, 1))]).unwrap();
        assert_eq!(c.to_string(), "1/4·Delta - I + 128·M1");
        assert_eq!(LinearCombo::default().to_string(), "0");
    }

    #[test]
    fn evaluates_against_table() {
        let mut t = MeasureTable::new();
        t.set(Delta, 0.4);
        t.set(I, 0.1);
        let c = LinearCombo::new([(Delta, r(1, 4)), (I, r(-3, 1))]).unwrap();
        let (v, s) = c.evaluate_with_scale(&t).unwrap();
        assert!((v - (0.1 - 0.3)).abs() < 1e-15);
        assert!((s - 0.3).abs() < 1e-15);
        assert_eq!(LinearCombo::single(J).evaluate(&t), Err(Error::IncompleteValues(J)));
    }
}
