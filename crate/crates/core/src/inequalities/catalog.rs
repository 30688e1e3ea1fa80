//! Catalog data. Differences are referred to by pyramid index.

use num_rational::Rational64;

use super::{Family, InequalityRecord, Operand, Side};
use crate::combo::LinearCombo;
use crate::generators::MeasureId;
use crate::pyramid::{DifferenceId, PYRAMID_SIZE};

/// Theorem parts 2..=59 as `(a, b, num, den)`: `D_a ≤ (num/den)·D_b`.
pub const PARTS: [(usize, usize, i64, i64); 58] = [
    (3, 6, 9, 11),
    (6, 10, 11, 12),
    (10, 15, 4, 5),
    (15, 8, 5, 1),
    (15, 21, 15, 16),
    (21, 28, 2, 3),
    (8, 28, 1, 8),
    (11, 14, 3, 7),
    (14, 9, 7, 4),
    (9, 5, 4, 3),
    (5, 36, 1, 8),
    (5, 22, 3, 8),
    (5, 26, 1, 5),
    (5, 19, 3, 7),
    (5, 2, 3, 1),
    (22, 25, 8, 13),
    (26, 25, 15, 13),
    (25, 24, 13, 12),
    (24, 23, 4, 3),
    (24, 18, 12, 5),
    (18, 17, 5, 4),
    (36, 35, 3, 2),
    (23, 35, 9, 16),
    (2, 35, 1, 16),
    (17, 35, 1, 4),
    (35, 34, 16, 15),
    (34, 33, 15, 13),
    (33, 32, 13, 12),
    (32, 31, 4, 3),
    (32, 30, 3, 2),
    (32, 45, 1, 4),
    (30, 44, 1, 5),
    (45, 44, 6, 5),
    (31, 43, 3, 13),
    (44, 43, 40, 39),
    (43, 42, 39, 37),
    (42, 41, 37, 36),
    (41, 39, 9, 8),
    (41, 40, 12, 11),
    (40, 37, 11, 8),
    (39, 37, 4, 3),
    (37, 38, 1, 1),
    (37, 55, 1, 3),
    (38, 54, 3, 8),
    (55, 54, 9, 8),
    (54, 53, 64, 63),
    (53, 52, 63, 61),
    (52, 51, 61, 60),
    (51, 49, 15, 14),
    (51, 50, 20, 19),
    (50, 47, 19, 16),
    (49, 47, 7, 6),
    (47, 48, 1, 1),
    (48, 46, 2, 1),
    (17, 16, 4, 1),
    (2, 16, 1, 1),
    (23, 16, 9, 1),
    (16, 46, 1, 24),
];

/// Part 1: `I ≤ (1/36)(Δ + 128·M1)`.
const PART1_CONSTANT: (i64, i64) = (1, 36);

type Link = ((i64, i64), usize, (i64, i64), usize);

/// `(c_a, a, c_b, b)`: `c_a·D_a ≤ c_b·D_b`.
const CHAIN2: [Link; 13] = [
    ((1, 1), 1, (2, 3), 10),
    ((2, 3), 10, (2, 1), 9),
    ((2, 3), 10, (1, 2), 21),
    ((1, 2), 21, (1, 3), 28),
    ((2, 1), 9, (1, 1), 22),
    ((1, 3), 28, (1, 1), 22),
    ((1, 1), 22, (2, 3), 24),
    ((2, 3), 24, (2, 1), 17),
    ((2, 1), 17, (1, 6), 45),
    ((1, 6), 45, (1, 5), 44),
    ((1, 5), 44, (2, 9), 41),
    ((2, 9), 41, (1, 4), 39),
    ((1, 4), 39, (1, 3), 38),
];

/// Terms of the increasing corner chain, `c·D_index`.
pub const CHAIN13_TERMS: [((i64, i64), usize); 10] = [
    ((1, 1), 1),
    ((8, 9), 3),
    ((8, 11), 6),
    ((2, 3), 10),
    ((8, 15), 15),
    ((1, 2), 21),
    ((1, 3), 28),
    ((1, 3), 36),
    ((1, 6), 45),
    ((1, 9), 55),
];

const REVERSE14: [Link; 10] = [
    ((1, 1), 55, (9, 8), 54),
    ((9, 8), 54, (8, 7), 53),
    ((8, 7), 53, (72, 61), 52),
    ((72, 61), 52, (6, 5), 51),
    ((6, 5), 51, (9, 7), 49),
    ((6, 5), 51, (24, 19), 50),
    ((9, 7), 49, (3, 2), 47),
    ((24, 19), 50, (3, 2), 47),
    ((3, 2), 47, (3, 2), 48),
    ((3, 2), 48, (3, 1), 46),
];

const REVERSE15: [Link; 9] = [
    ((1, 1), 45, (6, 5), 44),
    ((6, 5), 44, (16, 13), 43),
    ((16, 13), 43, (48, 37), 42),
    ((48, 37), 42, (4, 3), 41),
    ((4, 3), 41, (3, 2), 39),
    ((4, 3), 41, (16, 11), 40),
    ((3, 2), 39, (2, 1), 37),
    ((16, 11), 40, (2, 1), 37),
    ((2, 1), 37, (2, 1), 38),
];

const REVERSE16: [Link; 6] = [
    ((1, 1), 36, (3, 2), 35),
    ((3, 2), 35, (8, 5), 34),
    ((8, 5), 34, (24, 13), 33),
    ((24, 13), 33, (2, 1), 32),
    ((2, 1), 32, (3, 1), 30),
    ((2, 1), 32, (8, 3), 31),
];

/// `(lhs, rhs, restated part, amendment)`.
const GROUP1: [(&str, &str, Option<usize>, Option<&str>); 16] = [
    ("80M1 + 16M3", "Delta + 20h", Some(5), None),
    ("Delta + 32h", "4T + 128M1", Some(8), None),
    ("6Delta + 256M2", "192I + 3K0", Some(12), None),
    ("288M1 + 224M2", "168I + 9J", Some(15), None),
    (
        "12M1 + 20M2",
        "15I + 3T",
        Some(14),
        Some("coefficient of I set to 15; with 5 the inequality fails"),
    ),
    ("9J + 256M2", "192I + 72T", Some(13), None),
    ("10T + 32M2", "3J + 10h", Some(21), None),
    ("72I + 128T", "9K0 + 512M3", Some(24), None),
    ("8I + 4J", "K0 + 32h", Some(26), None),
    ("4Delta + 8K0", "Psi + 64h", Some(32), None),
    ("16I + 10K0", "Psi + 10J", Some(33), None),
    ("26K0 + 192M1", "3Psi + 832M3", Some(35), None),
    ("32M1 + 32M3", "J + 8T", None, None),
    ("4Delta + 3Psi", "F + 6K0", Some(44), None),
    ("48I + 8Psi", "3F + 128T", Some(45), None),
    ("48J + Psi", "2F + 1536M3", None, None),
];

/// `(measure, is_upper_bound, numerator, denominator, restated parts)`:
/// `X ≤ num/den` when `is_upper_bound`, else `X ≥ num/den`.
const GROUP2: [(&str, bool, &str, i64, &[usize]); 39] = [
    ("I", true, "Delta + 128M1", 36, &[1]),
    ("I", true, "4Delta + K0", 24, &[23]),
    ("I", true, "20Delta + Psi", 96, &[34]),
    ("I", true, "32Delta + F", 144, &[46]),
    ("M1", true, "Delta + 24M2", 88, &[2]),
    ("M1", true, "120I + K0", 512, &[25, 27]),
    ("M1", true, "624I + Psi", 2560, &[36]),
    ("M1", true, "1008I + F", 4096, &[47]),
    ("M1", false, "3I + 2M2", 18, &[16]),
    ("M2", true, "Delta + 44h", 64, &[3]),
    ("M2", true, "T + 26M1", 10, &[18]),
    ("M2", true, "K0 + 208M1", 80, &[28]),
    ("M2", true, "Psi + 1184M1", 416, &[37]),
    ("M2", true, "F + 1952M1", 672, &[48]),
    ("M2", false, "3I + 9h", 16, &[11]),
    ("h", true, "Delta + 64M3", 20, &[4]),
    ("h", true, "3J + 128M2", 120, &[22]),
    ("h", true, "T + 16M2", 13, &[19]),
    ("h", true, "K0 + 128M2", 104, &[29]),
    ("h", true, "Psi + 768M2", 592, &[38]),
    ("h", true, "F + 1280M2", 976, &[49]),
    ("h", false, "3I + 16M3", 7, &[9, 10]),
    ("M3", true, "2Delta + 15J", 512, &[6]),
    ("M3", true, "3J + 8h", 128, &[56]),
    ("M3", true, "T + 3h", 16, &[20]),
    ("M3", true, "K0 + 24h", 128, &[30]),
    ("M3", true, "F + 304h", 1280, &[51]),
    ("M3", true, "Psi + 176h", 768, &[40]),
    ("J", true, "K0 + 16h", 3, &[31]),
    ("J", true, "2Delta + 16T", 3, &[7]),
    ("J", true, "Psi + 128h", 18, &[39]),
    ("J", true, "F + 224h", 30, &[50]),
    ("J", false, "120T + 256M2", 39, &[17]),
    ("J", false, "8T + 256M3", 9, &[58]),
    ("K0", true, "6J + Psi", 8, &[42]),
    ("K0", true, "12J + F", 14, &[53]),
    ("K0", true, "3Psi + 512M3", 22, &[41]),
    ("K0", true, "3F + 1024M3", 38, &[52]),
    ("Psi", true, "F + 16T", 2, &[55]),
];

fn rat((n, d): (i64, i64)) -> Rational64 {
    Rational64::new(n, d)
}

fn diff(index: usize) -> DifferenceId {
    DifferenceId::from_index(index).expect("catalog index in range")
}

/// Parses `"80M1 + 16M3"`-style sums with integer coefficients.
pub(crate) fn parse_combo(text: &str) -> LinearCombo {
    let terms = text.split('+').map(|t| {
        let t = t.trim();
        let split = t.find(|c: char| !c.is_ascii_digit()).unwrap_or(t.len());
        let coeff = if split == 0 {
            1
        } else {
            t[..split].parse().expect("integer coefficient")
        };
        let id: MeasureId = t[split..].parse().expect("measure name");
        (id, Rational64::from_integer(coeff))
    });
    LinearCombo::new(terms).expect("nonempty")
}

fn link(family: Family, label: String, (ca, a, cb, b): Link) -> InequalityRecord {
    InequalityRecord::from_sides(
        label,
        family,
        Side::new(rat(ca), Operand::Difference(diff(a))),
        Side::new(rat(cb), Operand::Difference(diff(b))),
    )
}

fn theorem_parts() -> Vec<InequalityRecord> {
    let mut out = Vec::with_capacity(59);
    let first = InequalityRecord::from_sides(
        "part 1".into(),
        Family::TheoremPart,
        Side::new(
            Rational64::from_integer(1),
            Operand::Combo(LinearCombo::single(MeasureId::I)),
        ),
        Side::new(rat(PART1_CONSTANT), Operand::Combo(parse_combo("Delta + 128M1"))),
    )
    .with_part(1, rat(PART1_CONSTANT));
    out.push(first);
    for (k, &(a, b, n, d)) in PARTS.iter().enumerate() {
        let part = k + 2;
        let beta = Rational64::new(n, d);
        out.push(link(Family::TheoremPart, format!("part {part}"), ((1, 1), a, (n, d), b)).with_part(part, beta));
    }
    out
}

fn chain_links(family: Family, links: &[Link], offset: usize) -> Vec<InequalityRecord> {
    links
        .iter()
        .enumerate()
        .map(|(k, &l)| link(family, format!("{} link {}", family.name(), k + 1 + offset), l))
        .collect()
}

/// Forward pyramid-line links `D_i ≤ D_{i+1}` for `i` in `first..last`.
fn forward_links(first: usize, last: usize) -> Vec<Link> {
    (first..last).map(|i| ((1, 1), i, (1, 1), i + 1)).collect()
}

fn reverse_chain(family: Family, line_start: usize, line_end: usize, links: &[Link]) -> Vec<InequalityRecord> {
    let mut all = forward_links(line_start, line_end);
    all.extend_from_slice(links);
    chain_links(family, &all, 0)
}

fn group1() -> Vec<InequalityRecord> {
    GROUP1
        .iter()
        .enumerate()
        .map(|(k, &(l, r, part, amended))| {
            let mut rec = InequalityRecord::from_combos(
                format!("group1 #{}", k + 1),
                Family::Group1,
                parse_combo(l),
                parse_combo(r),
            );
            rec.restates = part.into_iter().collect();
            rec.amended = amended.map(str::to_owned);
            rec
        })
        .collect()
}

fn group2() -> Vec<InequalityRecord> {
    GROUP2
        .iter()
        .enumerate()
        .map(|(k, &(m, upper, num, den, parts))| {
            let single = LinearCombo::single(m.parse().expect("measure name"));
            let bound = parse_combo(num).scale(Rational64::new(1, den));
            let (lhs, rhs) = if upper { (single, bound) } else { (bound, single) };
            let mut rec = InequalityRecord::from_combos(format!("group2 #{}", k + 1), Family::Group2, lhs, rhs);
            rec.restates = parts.to_vec();
            rec
        })
        .collect()
}

fn pyramid_lines() -> Vec<InequalityRecord> {
    let mut out: Vec<InequalityRecord> = (1..=PYRAMID_SIZE)
        .map(|i| {
            let d = diff(i);
            InequalityRecord::from_combos(
                format!("pyramid {d} >= 0"),
                Family::PyramidLine,
                LinearCombo::single(d.lower.id).scale(d.lower.coeff),
                LinearCombo::single(d.upper.id).scale(d.upper.coeff),
            )
        })
        .collect();
    for i in 1..=PYRAMID_SIZE {
        let d = diff(i);
        if d.offset() < d.line() {
            out.push(link(
                Family::PyramidLine,
                format!("pyramid D{} <= D{}", i, i + 1),
                ((1, 1), i, (1, 1), i + 1),
            ));
        }
    }
    out
}

fn amend(records: &mut [InequalityRecord], label: &str, note: &str) {
    let rec = records.iter_mut().find(|r| r.label == label).expect("label in catalog");
    rec.amended = Some(note.to_owned());
}

pub(super) fn build() -> Vec<InequalityRecord> {
    let chain13_links: Vec<Link> = CHAIN13_TERMS
        .windows(2)
        .map(|w| (w[0].0, w[0].1, w[1].0, w[1].1))
        .collect();
    let mut all = theorem_parts();
    all.extend(chain_links(Family::Chain2, &CHAIN2, 0));
    all.extend(chain_links(Family::Chain13, &chain13_links, 0));
    all.extend(group1());
    all.extend(group2());
    all.extend(reverse_chain(Family::Reverse14, 46, 55, &REVERSE14));
    all.extend(reverse_chain(Family::Reverse15, 37, 45, &REVERSE15));
    all.extend(reverse_chain(Family::Reverse16, 29, 36, &REVERSE16));
    all.extend(pyramid_lines());
    amend(
        &mut all,
        "reverse15 link 10",
        "constant on D43 set to 16/13; with 16/15 the inequality fails",
    );
    all
}
