//! Serialization: CSV for tables, JSON for reports and configurations.
//! Everything is byte-deterministic — JSON objects serialize with sorted
//! keys, rows ascend in t, and scalars print exactly (integers as numbers,
//! fractions as "a/b" strings).

use std::fmt::Write as _;
use std::path::Path;

use fatpoints::verify::{SupportSummary, VerifyReport};
use fatpoints::{FieldSpec, PointConfiguration, Scalar};
use serde_json::{json, Map, Value};

use crate::CliError;

/// Writes to the file when a path is given, otherwise to stdout.
pub fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

pub fn field_token(field: FieldSpec) -> String {
    match field {
        FieldSpec::Rationals => "rationals".to_string(),
        FieldSpec::Prime(p) => format!("F{p}"),
    }
}

fn field_json(field: FieldSpec) -> Value {
    match field {
        FieldSpec::Rationals => json!("rationals"),
        FieldSpec::Prime(p) => json!({ "prime": p }),
    }
}

/// Integers become JSON numbers, fractions "a/b" strings; both parse back
/// to the identical scalar.
fn scalar_json(scalar: &Scalar) -> Value {
    let text = scalar.to_string();
    match text.parse::<i64>() {
        Ok(n) => json!(n),
        Err(_) => json!(text),
    }
}

pub fn config_json(config: &PointConfiguration) -> Value {
    let points: Vec<Value> = config
        .points()
        .iter()
        .map(|p| Value::Array(p.coords().iter().map(scalar_json).collect()))
        .collect();
    let mut map = Map::new();
    map.insert("field".to_string(), field_json(config.field()));
    map.insert("points".to_string(), Value::Array(points));
    Value::Object(map)
}

pub fn verify_json(report: &VerifyReport) -> Value {
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|r| {
            json!({
                "t": r.t,
                "predicted": r.predicted,
                "oracle": r.oracle,
                "h1": r.h1,
                "matches": r.matches,
            })
        })
        .collect();
    json!({
        "all_match": report.all_match,
        "extrapolated": report.extrapolated,
        "field": field_json(report.field),
        "jump_iff_torsion": report.jump_iff_torsion,
        "jumps": report.jumps,
        "pencil": report.pencil,
        "points": report.points,
        "records": records,
        "torsion_bound": report.torsion_bound,
        "torsion_order": report.torsion_order,
    })
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

pub fn verify_table(report: &VerifyReport) -> String {
    let mut s = String::new();
    writeln!(s, "field          {}", field_token(report.field)).unwrap();
    writeln!(s, "points         {}", report.points.join("  ")).unwrap();
    writeln!(s, "pencil         {}", yes_no(report.pencil)).unwrap();
    match report.torsion_order {
        Some(d) => writeln!(s, "torsion order  {d}").unwrap(),
        None => writeln!(s, "torsion order  none up to {}", report.torsion_bound).unwrap(),
    }
    writeln!(s).unwrap();
    writeln!(s, "t   predicted  oracle  h1  match").unwrap();
    for r in &report.records {
        writeln!(
            s,
            "{:<4}{:<11}{:<8}{:<4}{}",
            r.t,
            r.predicted,
            r.oracle,
            r.h1,
            if r.matches { "yes" } else { "NO" }
        )
        .unwrap();
    }
    writeln!(s).unwrap();
    let jumps = if report.jumps.is_empty() {
        "none".to_string()
    } else {
        report
            .jumps
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    };
    writeln!(s, "h1 jumps at               {jumps}").unwrap();
    writeln!(
        s,
        "jump iff torsion reached  {}",
        yes_no(report.jump_iff_torsion)
    )
    .unwrap();
    writeln!(s, "prediction matches oracle {}", yes_no(report.all_match)).unwrap();
    s
}

pub fn alpha_csv(rows: &[(u32, Option<u32>)]) -> String {
    let mut s = String::from("t,alpha\n");
    for (t, alpha) in rows {
        match alpha {
            Some(a) => writeln!(s, "{t},{a}").unwrap(),
            None => writeln!(s, "{t},").unwrap(),
        }
    }
    s
}

pub fn support_csv(summary: &SupportSummary, t_max: u32) -> String {
    let mut s = String::from("order,field,first_jump,all_match");
    for t in 1..=t_max {
        write!(s, ",h0_{t}").unwrap();
    }
    s.push('\n');
    for r in &summary.records {
        write!(s, "{},{}", r.order, field_token(r.field)).unwrap();
        match r.first_jump {
            Some(j) => write!(s, ",{j}").unwrap(),
            None => write!(s, ",").unwrap(),
        }
        write!(s, ",{}", u8::from(r.all_match)).unwrap();
        for h0 in &r.h0_sequence {
            write!(s, ",{h0}").unwrap();
        }
        s.push('\n');
    }
    s
}
