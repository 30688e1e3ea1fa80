use std::fmt::Write as _;

use divlat::constants::{constant_sweep, MIN_GRID_POINTS};
use divlat::distribution::random_pairs;
use divlat::inequalities::{catalog_families, verify_suite, Family, InequalityRecord, VerificationReport};
use divlat::measures::{check_chain5, evaluate_all};
use divlat::pyramid::{pyramid_dot, pyramid_table};
use divlat::MeasureId;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::args::{CatalogArgs, ComputeArgs, ConstantsArgs, InputFormat, PyramidArgs, ReportFormat, VerifyArgs};
use crate::error::{CliError, CliResult};
use crate::input::{read_pairs, resolve_format, Pair};
use crate::output::{cell, csv, emit, json, num};

/// Whether the checks a command ran all passed.
pub type Verdict = bool;

fn check_tolerance(tol: f64) -> CliResult<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--tolerance must be a positive number, got {tol}"
        )))
    }
}

fn families_or_all(families: &[Family]) -> Vec<Family> {
    if families.is_empty() {
        Family::ALL.to_vec()
    } else {
        let mut out = families.to_vec();
        out.sort();
        out.dedup();
        out
    }
}

pub fn compute(args: &ComputeArgs) -> CliResult<Verdict> {
    check_tolerance(args.tolerance)?;
    let format = resolve_format(&args.input, args.format);
    let pairs = read_pairs(&args.input, format)?;
    let mut all_hold = true;
    let mut rows = Vec::new();
    let mut objects = Vec::new();
    for (k, (p, q)) in pairs.iter().enumerate() {
        let table = evaluate_all(p, q)?;
        let chain = check_chain5(&table, args.tolerance)?;
        all_hold &= chain.holds;
        let values: Vec<f64> = MeasureId::ALL
            .iter()
            .map(|&id| table.require(id))
            .collect::<Result<_, _>>()?;
        match format {
            InputFormat::Csv => {
                let mut row = vec![(k + 1).to_string()];
                row.extend(values.iter().map(|&v| cell(v)));
                row.extend(chain.slacks.iter().map(|&s| cell(s)));
                row.push(chain.holds.to_string());
                rows.push(row);
            }
            InputFormat::Json => {
                let measures: Map<String, Value> = MeasureId::ALL
                    .iter()
                    .zip(&values)
                    .map(|(id, &v)| (id.to_string(), json!(num(v))))
                    .collect();
                objects.push(json!({
                    "pair": k + 1,
                    "measures": measures,
                    "chain_slacks": chain.slacks.iter().map(|&s| num(s)).collect::<Vec<_>>(),
                    "holds": chain.holds,
                }));
            }
        }
    }
    let text = match format {
        InputFormat::Csv => {
            let names: Vec<String> = MeasureId::ALL.iter().map(|id| id.to_string()).collect();
            let slack_names: Vec<String> = (1..=10).map(|k| format!("slack{k}")).collect();
            let mut header = vec!["pair"];
            header.extend(names.iter().map(String::as_str));
            header.extend(slack_names.iter().map(String::as_str));
            header.push("holds");
            csv(&header, &rows)
        }
        InputFormat::Json => json(&objects),
    };
    emit(&text, None)?;
    Ok(all_hold)
}

#[derive(Serialize)]
struct FamilyRow {
    family: &'static str,
    records: usize,
    evaluations: usize,
    passed: usize,
    worst_relative_slack: f64,
    worst_record: Option<String>,
}

fn family_row(family: &'static str, records: usize, r: &VerificationReport) -> FamilyRow {
    FamilyRow {
        family,
        records,
        evaluations: r.total,
        passed: r.passed,
        worst_relative_slack: num(r.worst_slack),
        worst_record: r.worst_record.clone(),
    }
}

fn seeded_pairs(args: &VerifyArgs) -> CliResult<Vec<Pair>> {
    if args.pairs == 0 {
        return Err(CliError::Usage("--pairs must be at least 1".into()));
    }
    if args.dims.is_empty() || args.dims.iter().any(|&n| n < 2) {
        return Err(CliError::Usage(format!(
            "--dims entries must be at least 2, got {:?}",
            args.dims
        )));
    }
    let mut pairs = Vec::with_capacity(args.pairs * args.dims.len());
    for &n in &args.dims {
        let batch = random_pairs(n, args.pairs, args.seed)?;
        if args.identical {
            pairs.extend(batch.into_iter().map(|(p, _)| (p.clone(), p)));
        } else {
            pairs.extend(batch);
        }
    }
    Ok(pairs)
}

pub fn verify(args: &VerifyArgs) -> CliResult<Verdict> {
    check_tolerance(args.tolerance)?;
    let families = families_or_all(&args.families);
    let pairs = seeded_pairs(args)?;
    let mut rows = Vec::new();
    for &family in &families {
        let records = catalog_families(&[family]);
        let report = verify_suite(&records, &pairs, args.tolerance)?;
        rows.push(family_row(family.name(), records.len(), &report));
    }
    let records = catalog_families(&families);
    let overall = verify_suite(&records, &pairs, args.tolerance)?;
    let text = match args.format {
        ReportFormat::Json => {
            let worst_pair = overall.worst_pair.as_ref().map(|(p, q)| {
                json!({
                    "p": p.probs().iter().map(|&v| num(v)).collect::<Vec<_>>(),
                    "q": q.probs().iter().map(|&v| num(v)).collect::<Vec<_>>(),
                })
            });
            json(&json!({
                "config": {
                    "families": families.iter().map(|f| f.name()).collect::<Vec<_>>(),
                    "pairs": args.pairs,
                    "dims": args.dims,
                    "seed": args.seed,
                    "tolerance": args.tolerance,
                    "identical": args.identical,
                },
                "families": rows,
                "total": overall.total,
                "passed": overall.passed,
                "worst_relative_slack": num(overall.worst_slack),
                "worst_record": overall.worst_record,
                "worst_pair": worst_pair,
            }))
        }
        ReportFormat::Csv => {
            let mut out: Vec<Vec<String>> = rows.iter().map(family_cells).collect();
            out.push(family_cells(&family_row("all", records.len(), &overall)));
            csv(
                &[
                    "family",
                    "records",
                    "evaluations",
                    "passed",
                    "worst_relative_slack",
                    "worst_record",
                ],
                &out,
            )
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:<13} {:>4} records {:>10}/{:<10} passed  worst {} ({})",
                    r.family,
                    r.records,
                    r.passed,
                    r.evaluations,
                    cell(r.worst_relative_slack),
                    r.worst_record.as_deref().unwrap_or("-"),
                );
            }
            let _ = writeln!(
                s,
                "total: {}/{} passed at tolerance {:e}; worst relative slack {} at {}",
                overall.passed,
                overall.total,
                args.tolerance,
                cell(overall.worst_slack),
                overall.worst_record.as_deref().unwrap_or("-"),
            );
            s
        }
    };
    emit(&text, args.out.as_deref())?;
    Ok(overall.all_passed())
}

fn family_cells(r: &FamilyRow) -> Vec<String> {
    vec![
        r.family.to_owned(),
        r.records.to_string(),
        r.evaluations.to_string(),
        r.passed.to_string(),
        cell(r.worst_relative_slack),
        r.worst_record.clone().unwrap_or_default(),
    ]
}

#[derive(Serialize)]
struct ConstantRow {
    part: usize,
    claimed_num: i64,
    claimed_den: i64,
    limit: f64,
    grid_sup: f64,
    monotone_ok: bool,
    pass: bool,
}

pub fn constants(args: &ConstantsArgs) -> CliResult<Verdict> {
    if args.grid_points < MIN_GRID_POINTS {
        return Err(CliError::Usage(format!(
            "--grid-points must be at least {MIN_GRID_POINTS}, got {}",
            args.grid_points
        )));
    }
    let rows: Vec<ConstantRow> = constant_sweep(args.grid_points)?
        .into_iter()
        .map(|e| ConstantRow {
            part: e.part,
            claimed_num: e.claimed_num,
            claimed_den: e.claimed_den,
            limit: num(e.limit),
            grid_sup: num(e.grid_sup),
            monotone_ok: e.monotone_ok,
            pass: e.pass,
        })
        .collect();
    let text = match args.format {
        ReportFormat::Json => json(&rows),
        ReportFormat::Csv => csv(
            &[
                "part",
                "claimed_num",
                "claimed_den",
                "limit",
                "grid_sup",
                "monotone_ok",
                "pass",
            ],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.part.to_string(),
                        r.claimed_num.to_string(),
                        r.claimed_den.to_string(),
                        cell(r.limit),
                        cell(r.grid_sup),
                        r.monotone_ok.to_string(),
                        r.pass.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        ReportFormat::Text => {
            let mut s = String::new();
            for r in &rows {
                let _ = writeln!(
                    s,
                    "part {:>2}  claimed {:>7}  limit {}  sup {}  monotone {:<5}  {}",
                    r.part,
                    format!("{}/{}", r.claimed_num, r.claimed_den),
                    cell(r.limit),
                    cell(r.grid_sup),
                    r.monotone_ok,
                    if r.pass { "pass" } else { "FAIL" },
                );
            }
            let passed = rows.iter().filter(|r| r.pass).count();
            let _ = writeln!(s, "{passed}/{} parts pass", rows.len());
            s
        }
    };
    emit(&text, args.out.as_deref())?;
    Ok(rows.iter().all(|r| r.pass))
}

pub fn pyramid(args: &PyramidArgs) -> CliResult<Verdict> {
    let pairs = read_pairs(&args.input, resolve_format(&args.input, args.format))?;
    if args.dot.is_some() && pairs.len() != 1 {
        return Err(CliError::Usage(format!(
            "--dot needs exactly one pair, the input has {}",
            pairs.len()
        )));
    }
    let tables: Vec<Vec<f64>> = pairs
        .iter()
        .map(|(p, q)| pyramid_table(p, q))
        .collect::<Result<_, _>>()?;
    let rounded: Vec<Vec<f64>> = tables.iter().map(|t| t.iter().map(|&v| num(v)).collect()).collect();
    emit(&json(&rounded), None)?;
    if let Some(path) = &args.dot {
        emit(&pyramid_dot(&tables[0]), Some(path))?;
    }
    Ok(true)
}

pub fn catalog(args: &CatalogArgs) -> CliResult<Verdict> {
    let records: Vec<InequalityRecord> = catalog_families(&families_or_all(&args.families));
    let text = match args.format {
        ReportFormat::Json => json(&records),
        ReportFormat::Csv => csv(
            &["label", "family", "lhs", "rhs", "constant", "restates", "amended"],
            &records
                .iter()
                .map(|r| {
                    vec![
                        r.label.clone(),
                        r.family.name().to_owned(),
                        r.lhs.to_string(),
                        r.rhs.to_string(),
                        r.constant.map(|c| c.to_string()).unwrap_or_default(),
                        r.restates.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
                        r.amended.clone().unwrap_or_default(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        ReportFormat::Text => records.iter().map(|r| format!("{r}\n")).collect(),
    };
    emit(&text, None)?;
    Ok(true)
}
