use std::collections::{BTreeMap, BTreeSet};

use divlat::inequalities::{catalog, catalog_families, Family, Operand};
use divlat::pyramid::DifferenceId;
use num_rational::Rational64;

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn difference_pair(rec: &divlat::InequalityRecord) -> Option<(usize, usize)> {
    let (a, b) = rec.sides.as_ref()?;
    match (&a.operand, &b.operand) {
        (Operand::Difference(x), Operand::Difference(y)) => Some((x.index, y.index)),
        _ => None,
    }
}

#[test]
fn family_sizes() {
    let mut counts = BTreeMap::new();
    for rec in catalog() {
        *counts.entry(rec.family.name()).or_insert(0) += 1;
    }
    let want = [
        ("theorem-part", 59),
        ("chain2", 13),
        ("chain13", 9),
        ("group1", 16),
        ("group2", 39),
        ("reverse14", 19),
        ("reverse15", 17),
        ("reverse16", 13),
        ("pyramid-line", 100),
    ];
    for (name, n) in want {
        assert_eq!(counts.get(name), Some(&n), "{name}");
    }
    assert_eq!(catalog().len(), 285);
}

#[test]
fn theorem_parts_carry_their_constants() {
    let parts = catalog_families(&[Family::TheoremPart]);
    let want = [
        r(1, 36),
        r(9, 11),
        r(11, 12),
        r(4, 5),
        r(5, 1),
        r(15, 16),
        r(2, 3),
        r(1, 8),
        r(3, 7),
        r(7, 4),
        r(4, 3),
        r(1, 8),
        r(3, 8),
        r(1, 5),
        r(3, 7),
        r(3, 1),
        r(8, 13),
        r(15, 13),
        r(13, 12),
        r(4, 3),
        r(12, 5),
        r(5, 4),
        r(3, 2),
        r(9, 16),
        r(1, 16),
        r(1, 4),
        r(16, 15),
        r(15, 13),
        r(13, 12),
        r(4, 3),
        r(3, 2),
        r(1, 4),
        r(1, 5),
        r(6, 5),
        r(3, 13),
        r(40, 39),
        r(39, 37),
        r(37, 36),
        r(9, 8),
        r(12, 11),
        r(11, 8),
        r(4, 3),
        r(1, 1),
        r(1, 3),
        r(3, 8),
        r(9, 8),
        r(64, 63),
        r(63, 61),
        r(61, 60),
        r(15, 14),
        r(20, 19),
        r(19, 16),
        r(7, 6),
        r(1, 1),
        r(2, 1),
        r(4, 1),
        r(1, 1),
        r(9, 1),
        r(1, 24),
    ];
    assert_eq!(parts.len(), want.len());
    for (k, (rec, beta)) in parts.iter().zip(want).enumerate() {
        assert_eq!(rec.part, Some(k + 1));
        assert_eq!(rec.constant, Some(beta), "{}", rec.label);
        assert_eq!(rec.link_ratio(), Some(beta), "{}", rec.label);
    }
}

#[test]
fn group_records_restate_their_parts_exactly() {
    let parts = catalog_families(&[Family::TheoremPart]);
    let mut covered = BTreeSet::new();
    for g in catalog_families(&[Family::Group1, Family::Group2]) {
        for &k in &g.restates {
            assert_eq!(
                g.slack_combo().primitive(),
                parts[k - 1].slack_combo().primitive(),
                "{} vs part {k}",
                g.label
            );
            covered.insert(k);
        }
    }
    assert_eq!(covered.len(), 55);
    let part1 = &parts[0];
    assert_eq!(part1.to_string(), "part 1: (I) <= 1/36·(Delta + 128·M1)");
}

#[test]
fn increasing_chain_links_compose() {
    let links = catalog_families(&[Family::Chain13]);
    let ratios: Vec<Rational64> = links.iter().map(|l| l.link_ratio().unwrap()).collect();
    let parts = catalog_families(&[Family::TheoremPart]);
    // the first link is D1 ≤ 8/9·D3 and the next five are parts 2, 3, 4, 6, 7
    assert_eq!(ratios[0], r(8, 9));
    for (ratio, k) in ratios[1..6].iter().zip([2, 3, 4, 6, 7]) {
        assert_eq!(Some(*ratio), parts[k - 1].constant, "part {k}");
    }
    // chained through, every term is compared with D1 at the product of the link ratios
    let mut product = r(1, 1);
    for (k, l) in links.iter().enumerate() {
        product *= ratios[k];
        let (first, _) = links[0].sides.as_ref().unwrap();
        let (_, last) = l.sides.as_ref().unwrap();
        assert_eq!(product, last.coeff / first.coeff, "{}", l.label);
    }
    assert_eq!(product, r(1, 9));
}

#[test]
fn difference_links_agree_with_theorem_parts() {
    let parts: BTreeMap<(usize, usize), Rational64> = catalog_families(&[Family::TheoremPart])
        .iter()
        .filter_map(|p| Some((difference_pair(p)?, p.constant?)))
        .collect();
    let mut matched = 0;
    for rec in catalog_families(&[Family::Chain13, Family::Reverse14, Family::Reverse15, Family::Reverse16]) {
        if let Some(beta) = difference_pair(&rec).and_then(|k| parts.get(&k)) {
            assert_eq!(rec.link_ratio().as_ref(), Some(beta), "{}", rec.label);
            matched += 1;
        }
    }
    assert!(matched >= 30, "{matched}");
}

#[test]
fn pyramid_line_records_cover_every_difference() {
    let recs = catalog_families(&[Family::PyramidLine]);
    let mut nonneg = BTreeSet::new();
    let mut ordered = 0;
    for rec in &recs {
        match rec.sides.as_ref() {
            Some(_) => ordered += 1,
            None => {
                let d = DifferenceId::all()
                    .into_iter()
                    .find(|d| &d.combo() == rec.slack_combo())
                    .unwrap();
                assert_eq!(rec.label, format!("pyramid {d} >= 0"));
                nonneg.insert(d.index);
            }
        }
    }
    assert_eq!(nonneg.len(), 55);
    assert_eq!(ordered, 45);
}

#[test]
fn amendments_are_recorded() {
    let amended: Vec<String> = catalog()
        .into_iter()
        .filter(|r| r.amended.is_some())
        .map(|r| r.label)
        .collect();
    assert_eq!(amended, ["group1 #5", "reverse15 link 10"]);
    let link = catalog_families(&[Family::Reverse15])
        .into_iter()
        .find(|r| r.label == "reverse15 link 10")
        .unwrap();
    assert_eq!(link.link_ratio(), Some(r(16, 13) / r(6, 5)));
}

#[test]
fn json_shape() {
    let parts = catalog_families(&[Family::TheoremPart]);
    let v = serde_json::to_value(&parts[1]).unwrap();
    assert_eq!(v["label"], "part 2");
    assert_eq!(v["family"], "theorem-part");
    assert_eq!(v["constant"], serde_json::json!([9, 11]));
    assert_eq!(v["form"], "D3 <= 9/11·D6");
    let all = serde_json::to_string(&catalog()).unwrap();
    let back: serde_json::Value = serde_json::from_str(&all).unwrap();
    assert_eq!(back.as_array().unwrap().len(), 285);
}
