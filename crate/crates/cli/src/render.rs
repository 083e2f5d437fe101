//! Output formatting. Results go to stdout in one of three formats; every
//! JSON object carries `schema_version: 1`. Big integers are JSON strings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use emdpoly::arith::{to_decimal, ExactRational};
use emdpoly::poly::IntPoly;

use crate::args::Format;
use crate::report::{Status, VerificationReport, SCHEMA_VERSION};

/// Plain form: coefficients from the lowest nonzero degree to the top,
/// then the degree range, e.g. `20 56 20 (degrees 1..3)`.
pub fn poly_plain(f: &IntPoly) -> String {
    let (Some(lo), Some(hi)) = (f.low_degree(), f.degree()) else {
        return "0".to_string();
    };
    let coeffs: Vec<String> = f.coeffs()[lo..=hi].iter().map(ToString::to_string).collect();
    format!("{} (degrees {lo}..{hi})", coeffs.join(" "))
}

/// `degree,coefficient` rows for every degree from 0 up.
pub fn poly_csv(f: &IntPoly) -> String {
    let mut out = String::from("degree,coefficient\n");
    if f.is_zero() {
        out.push_str("0,0\n");
    }
    for (k, c) in f.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{k},{c}");
    }
    out
}

pub fn json_object(fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    for (k, v) in fields {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

pub fn big_list(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(|c| Value::String(c.to_string())).collect())
}

/// Renders a polynomial with identifying metadata.
pub fn poly(format: Format, f: &IntPoly, meta: Vec<(&str, Value)>) -> String {
    match format {
        Format::Plain => format!("{}\n", poly_plain(f)),
        Format::Csv => poly_csv(f),
        Format::Json => {
            let mut fields = meta;
            fields.push(("coefficients", big_list(f.coeffs())));
            format!("{}\n", json_object(fields))
        }
    }
}

/// Reduced `p/q`; integers print without a denominator.
pub fn fraction(value: &ExactRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn rational(format: Format, value: &ExactRational, decimal: Option<usize>, meta: Vec<(&str, Value)>) -> String {
    let frac = fraction(value);
    let dec = decimal.map(|d| to_decimal(value, d));
    match format {
        Format::Plain => match dec {
            Some(d) => format!("{frac} ({d})\n"),
            None => format!("{frac}\n"),
        },
        Format::Csv => match dec {
            Some(d) => format!("value,decimal\n{frac},{d}\n"),
            None => format!("value\n{frac}\n"),
        },
        Format::Json => {
            let mut fields = meta;
            fields.push(("value", Value::String(frac)));
            if let Some(d) = dec {
                fields.push(("decimal", Value::String(d)));
            }
            format!("{}\n", json_object(fields))
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Reports in the chosen format. JSON is one object per line.
pub fn reports(format: Format, reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            for r in reports {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                };
                let _ = writeln!(out, "{tag}  {:<22} {}  ({} ms)", r.check, r.range_label(), r.elapsed_ms);
                if let Some(c) = &r.counterexample {
                    let at: Vec<String> = c.at.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let _ = writeln!(out, "      counterexample at {}: {}", at.join(" "), c.detail);
                }
            }
        }
        Format::Csv => {
            out.push_str("check,params,status,counterexample,elapsed_ms\n");
            for r in reports {
                let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let status = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                };
                let counter = r
                    .counterexample
                    .as_ref()
                    .map(|c| {
                        let at: Vec<String> = c.at.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        format!("{}: {}", at.join(";"), c.detail)
                    })
                    .unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.check,
                    params.join(";"),
                    status,
                    csv_field(&counter),
                    r.elapsed_ms
                );
            }
        }
        Format::Json => {
            for r in reports {
                let _ = writeln!(out, "{}", serde_json::to_string(r).expect("report serializes"));
            }
        }
    }
    out
}
