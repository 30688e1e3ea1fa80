//! The inequality catalog and its verification against distribution pairs.
//!
//! Every record is stored as `lhs ≤ rhs` between two [`LinearCombo`]s over the measures.
//! Records built from pyramid differences also keep their structured form
//! `c_a·X_a ≤ c_b·X_b`, but evaluation always goes through the expanded combos.

mod catalog;

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

pub use catalog::{CHAIN13_TERMS, PARTS};

use crate::combo::LinearCombo;
use crate::distribution::Distribution;
use crate::error::Result;
use crate::measures::{evaluate_all, MeasureTable};
use crate::pyramid::DifferenceId;

/// Absolute slack floor: a record passes iff `slack ≥ −max(tol·scale, ABS_FLOOR)`.
pub const ABS_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    TheoremPart,
    Chain2,
    Chain13,
    Group1,
    Group2,
    Reverse14,
    Reverse15,
    Reverse16,
    PyramidLine,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::TheoremPart,
        Family::Chain2,
        Family::Chain13,
        Family::Group1,
        Family::Group2,
        Family::Reverse14,
        Family::Reverse15,
        Family::Reverse16,
        Family::PyramidLine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::TheoremPart => "theorem-part",
            Family::Chain2 => "chain2",
            Family::Chain13 => "chain13",
            Family::Group1 => "group1",
            Family::Group2 => "group2",
            Family::Reverse14 => "reverse14",
            Family::Reverse15 => "reverse15",
            Family::Reverse16 => "reverse16",
            Family::PyramidLine => "pyramid-line",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// What one side of a structured record scales.
#[derive(Debug, Clone, PartialEq)]
pub enum Operand {
    Difference(DifferenceId),
    Combo(LinearCombo),
}

impl Operand {
    pub fn combo(&self) -> LinearCombo {
        match self {
            Operand::Difference(d) => d.combo(),
            Operand::Combo(c) => c.clone(),
        }
    }
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::Difference(d) => write!(f, "D{}", d.index),
            Operand::Combo(c) => write!(f, "({c})"),
        }
    }
}

/// `coeff·operand`.
#[derive(Debug, Clone, PartialEq)]
pub struct Side {
    pub coeff: Rational64,
    pub operand: Operand,
}

impl Side {
    pub fn new(coeff: Rational64, operand: Operand) -> Self {
        Self { coeff, operand }
    }

    pub fn combo(&self) -> LinearCombo {
        self.operand.combo().scale(self.coeff)
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff == Rational64::from_integer(1) {
            write!(f, "{}", self.operand)
        } else {
            write!(f, "{}·{}", self.coeff, self.operand)
        }
    }
}

/// One inequality `lhs ≤ rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityRecord {
    pub label: String,
    pub family: Family,
    pub lhs: LinearCombo,
    pub rhs: LinearCombo,
    /// For theorem parts: the part number and its constant β.
    pub part: Option<usize>,
    pub constant: Option<Rational64>,
    /// Structured form, when the record compares two scaled operands.
    pub sides: Option<(Side, Side)>,
    /// Theorem parts this record restates (group records only).
    pub restates: Vec<usize>,
    /// Set when a coefficient differs from the source listing.
    pub amended: Option<String>,
    slack: LinearCombo,
}

impl InequalityRecord {
    pub fn from_combos(label: String, family: Family, lhs: LinearCombo, rhs: LinearCombo) -> Self {
        let slack = rhs.minus(&lhs);
        Self {
            label,
            family,
            lhs,
            rhs,
            part: None,
            constant: None,
            sides: None,
            restates: Vec::new(),
            amended: None,
            slack,
        }
    }

    pub fn from_sides(label: String, family: Family, lhs: Side, rhs: Side) -> Self {
        let mut rec = Self::from_combos(label, family, lhs.combo(), rhs.combo());
        rec.sides = Some((lhs, rhs));
        rec
    }

    pub(crate) fn with_part(mut self, part: usize, constant: Rational64) -> Self {
        self.part = Some(part);
        self.constant = Some(constant);
        self
    }

    /// `rhs − lhs` as a combination.
    pub fn slack_combo(&self) -> &LinearCombo {
        &self.slack
    }

    /// For structured records, `c_b / c_a`: the record reads `X_a ≤ ratio·X_b`.
    pub fn link_ratio(&self) -> Option<Rational64> {
        self.sides.as_ref().map(|(l, r)| r.coeff / l.coeff)
    }

    /// Evaluates the record against a measure table.
    pub fn check(&self, values: &MeasureTable, tol: f64) -> Result<Check> {
        let (l, ls) = self.lhs.evaluate_with_scale(values)?;
        let (r, rs) = self.rhs.evaluate_with_scale(values)?;
        let slack = r - l;
        let scale = ls.max(rs);
        let relative = slack / scale.max(ABS_FLOOR / tol);
        Ok(Check {
            slack,
            scale,
            relative,
            pass: relative >= -tol,
        })
    }
}

impl fmt::Display for InequalityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.sides {
            Some((l, r)) => write!(f, "{}: {} <= {}", self.label, l, r),
            None => write!(f, "{}: {} <= {}", self.label, self.lhs, self.rhs),
        }
    }
}

impl Serialize for InequalityRecord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("InequalityRecord", 8)?;
        st.serialize_field("label", &self.label)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("lhs", &self.lhs)?;
        st.serialize_field("rhs", &self.rhs)?;
        st.serialize_field("constant", &self.constant.map(|c| (*c.numer(), *c.denom())))?;
        st.serialize_field("form", &self.sides.as_ref().map(|(l, r)| format!("{l} <= {r}")))?;
        st.serialize_field("restates", &self.restates)?;
        st.serialize_field("amended", &self.amended)?;
        st.end()
    }
}

/// Outcome of one record at one pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Check {
    pub slack: f64,
    /// Largest absolute term `|cᵢ·Xᵢ|` on either side.
    pub scale: f64,
    /// `slack / max(scale, ABS_FLOOR / tol)`.
    pub relative: f64,
    pub pass: bool,
}

/// The full catalog, in a fixed order: theorem parts 1..=59, chain2, chain13, group1,
/// group2, reverse14, reverse15, reverse16, pyramid lines.
pub fn catalog() -> Vec<InequalityRecord> {
    catalog::build()
}

/// Catalog records of the given families, catalog order preserved.
pub fn catalog_families(families: &[Family]) -> Vec<InequalityRecord> {
    catalog().into_iter().filter(|r| families.contains(&r.family)).collect()
}

/// Raw slack `rhs − lhs` at one pair.
pub fn verify(record: &InequalityRecord, p: &Distribution, q: &Distribution) -> Result<f64> {
    record.slack.evaluate(&evaluate_all(p, q)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    /// Record-pair evaluations.
    pub total: usize,
    pub passed: usize,
    /// Smallest relative slack seen (0 when nothing was evaluated).
    pub worst_slack: f64,
    pub worst_record: Option<String>,
    pub worst_pair: Option<(Distribution, Distribution)>,
    pub tolerance: f64,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Copy)]
struct Worst {
    relative: f64,
    record: usize,
    pair: usize,
}

impl Worst {
    fn key(&self) -> (f64, usize, usize) {
        let r = if self.relative.is_nan() {
            f64::NEG_INFINITY
        } else {
            self.relative
        };
        (r, self.record, self.pair)
    }

    fn min(a: Option<Self>, b: Option<Self>) -> Option<Self> {
        match (a, b) {
            (Some(x), Some(y)) => {
                let (kx, ky) = (x.key(), y.key());
                let x_first = kx.0 < ky.0 || (kx.0 == ky.0 && (kx.1, kx.2) <= (ky.1, ky.2));
                Some(if x_first { x } else { y })
            }
            (x, None) => x,
            (None, y) => y,
        }
    }
}

/// Checks every record on every pair in parallel.
///
/// The worst record is the one with the smallest relative slack; ties go to the
/// earliest record in `records`, then the earliest pair, so the report does not depend
/// on scheduling.
pub fn verify_suite(
    records: &[InequalityRecord],
    pairs: &[(Distribution, Distribution)],
    tol: f64,
) -> Result<VerificationReport> {
    let per_pair = pairs
        .par_iter()
        .enumerate()
        .map(|(pi, (p, q))| -> Result<(usize, Option<Worst>)> {
            let table = evaluate_all(p, q)?;
            let mut passed = 0;
            let mut worst = None;
            for (ri, rec) in records.iter().enumerate() {
                let c = rec.check(&table, tol)?;
                passed += usize::from(c.pass);
                worst = Worst::min(
                    worst,
                    Some(Worst {
                        relative: c.relative,
                        record: ri,
                        pair: pi,
                    }),
                );
            }
            Ok((passed, worst))
        })
        .try_reduce(|| (0, None), |(pa, wa), (pb, wb)| Ok((pa + pb, Worst::min(wa, wb))))?;
    let (passed, worst) = per_pair;
    Ok(VerificationReport {
        total: records.len() * pairs.len(),
        passed,
        worst_slack: worst.map_or(0.0, |w| w.relative),
        worst_record: worst.map(|w| records[w.record].label.clone()),
        worst_pair: worst.map(|w| pairs[w.pair].clone()),
        tolerance: tol,
    })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::generators::MeasureId;

    fn spot() -> (Distribution, Distribution) {
        (
            Distribution::validate(&[0.5, 0.5]).unwrap(),
            Distribution::validate(&[0.25, 0.75]).unwrap(),
        )
    }

    fn find(label: &str) -> InequalityRecord {
        catalog().into_iter().find(|r| r.label == label).unwrap()
    }

    #[test]
    fn family_counts() {
        let cat = catalog();
        let count = |f| cat.iter().filter(|r| r.family == f).count();
        assert_eq!(count(Family::TheoremPart), 59);
        assert_eq!(count(Family::Chain2), 13);
        assert_eq!(count(Family::Chain13), 9);
        assert_eq!(count(Family::Group1), 16);
        assert_eq!(count(Family::Group2), 39);
        assert_eq!(count(Family::Reverse14), 19);
        assert_eq!(count(Family::Reverse15), 17);
        assert_eq!(count(Family::Reverse16), 13);
        assert_eq!(count(Family::PyramidLine), 100);
    }

    #[test]
    fn labels_are_unique() {
        let cat = catalog();
        let mut labels: Vec<&str> = cat.iter().map(|r| r.label.as_str()).collect();
        labels.sort_unstable();
        labels.dedup();
        assert_eq!(labels.len(), cat.len());
    }

    #[test]
    fn theorem_constants_in_order() {
        let want: [(i64, i64); 59] = [
            (1, 36),
            (9, 11),
            (11, 12),
            (4, 5),
            (5, 1),
            (15, 16),
            (2, 3),
            (1, 8),
            (3, 7),
            (7, 4),
            (4, 3),
            (1, 8),
            (3, 8),
            (1, 5),
            (3, 7),
            (3, 1),
            (8, 13),
            (15, 13),
            (13, 12),
            (4, 3),
            (12, 5),
            (5, 4),
            (3, 2),
            (9, 16),
            (1, 16),
            (1, 4),
            (16, 15),
            (15, 13),
            (13, 12),
            (4, 3),
            (3, 2),
            (1, 4),
            (1, 5),
            (6, 5),
            (3, 13),
            (40, 39),
            (39, 37),
            (37, 36),
            (9, 8),
            (12, 11),
            (11, 8),
            (4, 3),
            (1, 1),
            (1, 3),
            (3, 8),
            (9, 8),
            (64, 63),
            (63, 61),
            (61, 60),
            (15, 14),
            (20, 19),
            (19, 16),
            (7, 6),
            (1, 1),
            (2, 1),
            (4, 1),
            (1, 1),
            (9, 1),
            (1, 24),
        ];
        let parts = catalog_families(&[Family::TheoremPart]);
        for (k, (rec, (n, d))) in parts.iter().zip(want).enumerate() {
            assert_eq!(rec.part, Some(k + 1));
            assert_eq!(rec.constant, Some(Rational64::new(n, d)), "{}", rec.label);
        }
    }

    #[test]
    fn part2_and_first_records() {
        let p2 = find("part 2");
        assert_eq!(p2.to_string(), "part 2: D3 <= 9/11·D6");
        let g1 = find("group1 #1");
        assert_eq!(g1.lhs, catalog::parse_combo("80M1 + 16M3"));
        assert_eq!(g1.rhs, catalog::parse_combo("Delta + 20h"));
        let c13 = find("chain13 link 1");
        assert_eq!(c13.to_string(), "chain13 link 1: D1 <= 8/9·D3");
    }

    #[test]
    fn identical_pair_has_zero_slack() {
        let (p, _) = spot();
        for rec in catalog() {
            assert_eq!(verify(&rec, &p, &p).unwrap(), 0.0, "{}", rec.label);
        }
    }

    #[test]
    fn spot_slacks() {
        let (p, q) = spot();
        // part 1 slack scaled by 36: 128·M1 + Δ − 36·I
        let s1 = verify(&find("part 1"), &p, &q).unwrap() * 36.0;
        assert!((s1 - 1.088_341_405_604_024_6e-4).abs() < 1e-15, "{s1}");
        let s30 = verify(&find("group2 #30"), &p, &q).unwrap() * 3.0;
        assert!((s30 - 1.665_297_360_104_095_1e-4).abs() < 1e-15, "{s30}");
    }

    #[test]
    fn empty_inputs() {
        let r = verify_suite(&catalog(), &[], 1e-10).unwrap();
        assert_eq!((r.total, r.passed, r.worst_slack), (0, 0, 0.0));
        assert!(r.worst_record.is_none());
    }

    #[test]
    fn suite_on_identical_pair() {
        let (p, _) = spot();
        let cat = catalog();
        let r = verify_suite(&cat, &[(p.clone(), p)], 1e-10).unwrap();
        assert_eq!(r.passed, r.total);
        assert_eq!(r.worst_slack, 0.0);
        assert_eq!(r.worst_record.as_deref(), Some("part 1"));
    }

    #[test]
    fn failing_record_is_reported() {
        let bad = InequalityRecord::from_combos(
            "bad".into(),
            Family::Group1,
            LinearCombo::single(MeasureId::J),
            LinearCombo::single(MeasureId::Delta),
        );
        let (p, q) = spot();
        let r = verify_suite(&[bad], &[(p, q)], 1e-10).unwrap();
        assert_eq!((r.total, r.passed), (1, 0));
        assert!(r.worst_slack < -0.5);
    }

    #[test]
    fn tolerance_floor() {
        let mut t = MeasureTable::new();
        t.set(MeasureId::Delta, 1e-20);
        t.set(MeasureId::I, 1e-20 + 5e-13);
        let rec = InequalityRecord::from_combos(
            "floor".into(),
            Family::Group1,
            LinearCombo::single(MeasureId::I),
            LinearCombo::single(MeasureId::Delta),
        );
        assert!(rec.check(&t, 1e-10).unwrap().pass);
        t.set(MeasureId::I, 1e-20 + 2e-12);
        assert!(!rec.check(&t, 1e-10).unwrap().pass);
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("chain99".parse::<Family>().is_err());
    }
}
