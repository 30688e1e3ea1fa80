//! The 55 nonnegative differences between consecutive-or-not scaled members of the
//! refined chain, numbered line by line.
//!
//! Line `L` (1..=10) holds the differences whose upper member sits at chain position
//! `L + 1`; within the line `k = upper − lower` runs 1..=L and the index is
//! `L(L−1)/2 + k`.

use std::fmt::{self, Write as _};

use num_rational::Rational64;
use serde::Serialize;

use crate::combo::LinearCombo;
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::generators::{GeneratingFunction, MeasureId};
use crate::measures::{evaluate_all, MeasureTable};

const fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new_raw(n, d)
}

/// The refined chain with its normalising coefficients, position 1 first.
pub const CHAIN: [(MeasureId, Rational64); 11] = [
    (MeasureId::Delta, r(1, 4)),
    (MeasureId::I, r(1, 1)),
    (MeasureId::M1, r(4, 1)),
    (MeasureId::M2, r(4, 3)),
    (MeasureId::H, r(1, 1)),
    (MeasureId::M3, r(4, 1)),
    (MeasureId::J, r(1, 8)),
    (MeasureId::T, r(1, 1)),
    (MeasureId::K0, r(1, 8)),
    (MeasureId::Psi, r(1, 16)),
    (MeasureId::F, r(1, 16)),
];

pub const PYRAMID_SIZE: usize = 55;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainPosition {
    pub pos: usize,
    pub id: MeasureId,
    #[serde(serialize_with = "ser_rational")]
    pub coeff: Rational64,
}

fn ser_rational<S: serde::Serializer>(c: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

/// Chain position (1..=11) of a divergence.
pub fn chain_position(pos: usize) -> Option<ChainPosition> {
    (1..=11).contains(&pos).then(|| ChainPosition {
        pos,
        id: CHAIN[pos - 1].0,
        coeff: CHAIN[pos - 1].1,
    })
}

/// Position of `id` in the chain, if it is a divergence.
pub fn position_of(id: MeasureId) -> Option<usize> {
    CHAIN.iter().position(|&(m, _)| m == id).map(|i| i + 1)
}

/// One pyramid entry `upper.coeff·upper.id − lower.coeff·lower.id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DifferenceId {
    pub index: usize,
    pub upper: ChainPosition,
    pub lower: ChainPosition,
}

/// Pyramid entry for chain positions `upper > lower`.
pub fn difference_index(upper_pos: usize, lower_pos: usize) -> Result<DifferenceId> {
    let out = Error::OutOfRange {
        upper: upper_pos,
        lower: lower_pos,
    };
    if !(1 <= lower_pos && lower_pos < upper_pos && upper_pos <= 11) {
        return Err(out);
    }
    let line = upper_pos - 1;
    let k = upper_pos - lower_pos;
    Ok(DifferenceId {
        index: line * (line - 1) / 2 + k,
        upper: chain_position(upper_pos).ok_or(out.clone())?,
        lower: chain_position(lower_pos).ok_or(out)?,
    })
}

impl DifferenceId {
    /// Inverse of [`difference_index`].
    pub fn from_index(index: usize) -> Result<Self> {
        if !(1..=PYRAMID_SIZE).contains(&index) {
            return Err(Error::IndexOutOfRange(index));
        }
        let mut line = 1;
        while line * (line + 1) / 2 < index {
            line += 1;
        }
        let k = index - line * (line - 1) / 2;
        difference_index(line + 1, line + 1 - k)
    }

    /// Difference between two divergences, named upper first.
    pub fn between(upper: MeasureId, lower: MeasureId) -> Result<Self> {
        let (u, l) = (position_of(upper).unwrap_or(0), position_of(lower).unwrap_or(0));
        difference_index(u, l)
    }

    /// All 55 entries in index order.
    pub fn all() -> Vec<Self> {
        (1..=PYRAMID_SIZE)
            .map(|i| Self::from_index(i).expect("index in range"))
            .collect()
    }

    /// Pyramid line (1..=10).
    pub fn line(&self) -> usize {
        self.upper.pos - 1
    }

    /// Offset within the line (1..=line).
    pub fn offset(&self) -> usize {
        self.upper.pos - self.lower.pos
    }

    pub fn combo(&self) -> LinearCombo {
        LinearCombo::from_terms([(self.upper.id, self.upper.coeff), (self.lower.id, -self.lower.coeff)])
    }

    /// Evaluates against a precomputed measure table.
    pub fn value_in(&self, values: &MeasureTable) -> Result<f64> {
        self.combo().evaluate(values)
    }
}

impl fmt::Display for DifferenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}[{},{}]", self.index, self.upper.id, self.lower.id)
    }
}

pub fn evaluate_difference(d: &DifferenceId, p: &Distribution, q: &Distribution) -> Result<f64> {
    d.value_in(&evaluate_all(p, q)?)
}

pub fn difference_generating_function(d: &DifferenceId) -> GeneratingFunction {
    GeneratingFunction::linear([(d.upper.id, d.upper.coeff), (d.lower.id, -d.lower.coeff)])
        .expect("distinct divergences")
}

/// All 55 differences at one pair, index order.
pub fn pyramid_table(p: &Distribution, q: &Distribution) -> Result<Vec<f64>> {
    pyramid_from_table(&evaluate_all(p, q)?)
}

pub fn pyramid_from_table(values: &MeasureTable) -> Result<Vec<f64>> {
    DifferenceId::all().iter().map(|d| d.value_in(values)).collect()
}

/// Graphviz rendering of the pyramid: one rank per line, edges `D_k → D_{k+1}` for the
/// within-line ordering.
pub fn pyramid_dot(values: &[f64]) -> String {
    let mut out = String::from("digraph pyramid {\n  rankdir=TB;\n  node [shape=box];\n");
    for line in 1..=10 {
        let start = line * (line - 1) / 2 + 1;
        let ids: Vec<usize> = (start..start + line).collect();
        let _ = write!(out, "  {{ rank=same;");
        for i in &ids {
            let _ = write!(out, " D{i};");
        }
        out.push_str(" }\n");
        for &i in &ids {
            let d = DifferenceId::from_index(i).expect("index in range");
            let v = values.get(i - 1).copied().unwrap_or(f64::NAN);
            let _ = writeln!(
                out,
                "  D{i} [label=\"D{i} {}-{}\\n{}\"];",
                d.upper.id,
                d.lower.id,
                crate::numeric::fmt_sig12(v)
            );
        }
        for w in ids.windows(2) {
            let _ = writeln!(out, "  D{} -> D{} [label=\"<=\"];", w[0], w[1]);
        }
    }
    out.push_str("}\n");
    out
}
