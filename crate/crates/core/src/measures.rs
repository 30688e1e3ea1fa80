//! Closed-form divergence measures and mean sums.
//!
//! The mean divergences are summed termwise from cancellation-free forms. With
//! `m = (√p+√q)/2` and `s = √((p+q)/2)`, both `s − m` and `m² − √(pq)` are multiples of
//! `(√p−√q)² = (p−q)²/(√p+√q)²` (rewrite `a − b` as `(a²−b²)/(a+b)`), so `M1`, `M2`,
//! `M3` and `h` keep full relative precision even when `P ≈ Q`.

use serde::{Deserialize, Serialize};

use crate::distribution::{ensure_same_len, Distribution};
use crate::error::{Error, Result};
use crate::generators::MeasureId;
use crate::numeric::pairwise_sum_map;

/// One measure evaluated at a pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasureValue {
    pub id: MeasureId,
    pub value: f64,
}

/// Values keyed by [`MeasureId`]; possibly partial.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MeasureTable {
    values: [Option<f64>; 15],
}

impl MeasureTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, id: MeasureId) -> Option<f64> {
        self.values[id.index()]
    }

    /// Like [`get`](Self::get) but fails with [`Error::IncompleteValues`].
    pub fn require(&self, id: MeasureId) -> Result<f64> {
        self.get(id).ok_or(Error::IncompleteValues(id))
    }

    pub fn set(&mut self, id: MeasureId, value: f64) {
        self.values[id.index()] = Some(value);
    }

    pub fn remove(&mut self, id: MeasureId) {
        self.values[id.index()] = None;
    }

    pub fn len(&self) -> usize {
        self.values.iter().filter(|v| v.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_complete(&self) -> bool {
        self.len() == 15
    }

    /// Present entries in [`MeasureId::ALL`] order.
    pub fn iter(&self) -> impl Iterator<Item = MeasureValue> + '_ {
        MeasureId::ALL
            .into_iter()
            .filter_map(|id| self.get(id).map(|value| MeasureValue { id, value }))
    }
}

impl FromIterator<MeasureValue> for MeasureTable {
    fn from_iter<T: IntoIterator<Item = MeasureValue>>(iter: T) -> Self {
        let mut table = Self::new();
        for mv in iter {
            table.set(mv.id, mv.value);
        }
        table
    }
}

fn sqdiff_sqrt(p: f64, q: f64) -> f64 {
    // (√p − √q)² without cancellation.
    let d = p - q;
    let s = p.sqrt() + q.sqrt();
    (d / s) * (d / s)
}

fn term(id: MeasureId, p: f64, q: f64) -> f64 {
    let pq = p * q;
    match id {
        MeasureId::Delta => (p - q).powi(2) / (p + q),
        MeasureId::I => {
            let m = p + q;
            0.5 * (p * (2.0 * p / m).ln() + q * (2.0 * q / m).ln())
        }
        MeasureId::J => (p - q) * (p / q).ln(),
        MeasureId::T => (p + q) / 2.0 * ((p + q) / (2.0 * pq.sqrt())).ln(),
        MeasureId::H => sqdiff_sqrt(p, q) / 2.0,
        MeasureId::Psi => (p - q).powi(2) * (p + q) / pq,
        MeasureId::K0 => (p - q).powi(2) / pq.sqrt(),
        MeasureId::F => (p * p - q * q).powi(2) / (2.0 * pq * pq.sqrt()),
        MeasureId::G => pq.sqrt(),
        MeasureId::N1 => pq.sqrt() + sqdiff_sqrt(p, q) / 4.0,
        MeasureId::N2 => {
            let (m, s) = mean_pair(p, q);
            m * s
        }
        MeasureId::A => (p + q) / 2.0,
        MeasureId::M1 => {
            let (m, s) = mean_pair(p, q);
            m * s_minus_m(p, q, m, s)
        }
        MeasureId::M2 => {
            let (m, s) = mean_pair(p, q);
            m * s_minus_m(p, q, m, s) + sqdiff_sqrt(p, q) / 4.0
        }
        MeasureId::M3 => {
            let (m, s) = mean_pair(p, q);
            s * s_minus_m(p, q, m, s)
        }
    }
}

fn mean_pair(p: f64, q: f64) -> (f64, f64) {
    ((p.sqrt() + q.sqrt()) / 2.0, ((p + q) / 2.0).sqrt())
}

fn s_minus_m(p: f64, q: f64, m: f64, s: f64) -> f64 {
    // s² − m² = (√p − √q)²/4
    sqdiff_sqrt(p, q) / (4.0 * (s + m))
}

fn sum_terms(id: MeasureId, p: &Distribution, q: &Distribution) -> f64 {
    if id == MeasureId::A {
        return 1.0;
    }
    let (ps, qs) = (p.probs(), q.probs());
    pairwise_sum_map(ps.len(), &|i| term(id, ps[i], qs[i]))
}

/// Closed-form value of one measure. `A` is identically 1 on validated pairs.
pub fn evaluate(id: MeasureId, p: &Distribution, q: &Distribution) -> Result<MeasureValue> {
    ensure_same_len(p, q)?;
    Ok(MeasureValue {
        id,
        value: sum_terms(id, p, q),
    })
}

/// All 15 measures at once.
pub fn evaluate_all(p: &Distribution, q: &Distribution) -> Result<MeasureTable> {
    ensure_same_len(p, q)?;
    let mut table = MeasureTable::new();
    for id in MeasureId::ALL {
        table.set(id, sum_terms(id, p, q));
    }
    Ok(table)
}

/// Consecutive slacks of the refined chain at one pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChainSlacks {
    pub slacks: [f64; 10],
    pub holds: bool,
}

/// Slacks of `¼Δ ≤ I ≤ 4M1 ≤ (4/3)M2 ≤ h ≤ 4M3 ≤ ⅛J ≤ T ≤ ⅛K0 ≤ Ψ/16 ≤ F/16`.
pub fn check_chain5(values: &MeasureTable, tol: f64) -> Result<ChainSlacks> {
    let scaled: Vec<f64> = crate::pyramid::CHAIN
        .iter()
        .map(|&(id, c)| values.require(id).map(|v| *c.numer() as f64 / *c.denom() as f64 * v))
        .collect::<Result<_>>()?;
    let mut slacks = [0.0; 10];
    for (k, s) in slacks.iter_mut().enumerate() {
        *s = scaled[k + 1] - scaled[k];
    }
    Ok(ChainSlacks {
        slacks,
        holds: slacks.iter().all(|&s| s >= -tol),
    })
}
