//! Report assembly and rendering.
//!
//! Every run emits one document with "artifact", "config", "results" and
//! "checks" sections. Numeric values are rounded to 12 significant digits
//! before serialization so identical configurations produce byte-identical
//! output; serde_json's default map keeps keys sorted, which makes the
//! rendering deterministic in every format.

use serde_json::{json, Map, Value};

pub const ARTIFACT_NAME: &str = "qbos";
pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Rounds to 12 significant digits; -0.0 normalizes to 0.0. Goes through
/// the decimal formatter so the rounding is exact in base 10.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().expect("formatter output parses")
}

/// A 12-significant-digit JSON number.
pub fn num(x: f64) -> Value {
    Value::from(sig12(x))
}

pub fn num_array(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|x| num(*x)).collect())
}

pub fn num_pair(pair: (f64, f64)) -> Value {
    num_array(&[pair.0, pair.1])
}

/// One named pass/fail check with its observed value and threshold.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub observed: f64,
    pub threshold: f64,
}

impl Check {
    /// Passes when |observed - target| <= tol.
    pub fn close(name: &'static str, observed: f64, target: f64, tol: f64) -> Self {
        Self { name, pass: (observed - target).abs() <= tol, observed, threshold: tol }
    }

    /// Passes when observed <= limit.
    pub fn at_most(name: &'static str, observed: f64, limit: f64) -> Self {
        Self { name, pass: observed <= limit, observed, threshold: limit }
    }

    /// Passes when observed >= limit.
    pub fn at_least(name: &'static str, observed: f64, limit: f64) -> Self {
        Self { name, pass: observed >= limit, observed, threshold: limit }
    }

    pub fn flag(name: &'static str, pass: bool) -> Self {
        Self { name, pass, observed: if pass { 1.0 } else { 0.0 }, threshold: 1.0 }
    }
}

/// The full run document.
pub struct Report {
    pub config: Value,
    pub results: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| !c.pass)
    }

    pub fn to_value(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "pass": c.pass,
                    "observed": num(c.observed),
                    "threshold": num(c.threshold),
                })
            })
            .collect();
        json!({
            "artifact": { "name": ARTIFACT_NAME, "version": ARTIFACT_VERSION },
            "config": self.config,
            "results": self.results,
            "checks": checks,
        })
    }

    pub fn render(&self, format: Format) -> String {
        let value = self.to_value();
        match format {
            Format::Json => {
                let mut out = serde_json::to_string_pretty(&value).expect("report serializes");
                out.push('\n');
                out
            }
            Format::Csv => {
                let mut rows = vec![("key".to_string(), "value".to_string())];
                flatten("", &value, &mut rows);
                rows.iter()
                    .map(|(k, v)| format!("{},{}\n", csv_escape(k), csv_escape(v)))
                    .collect()
            }
            Format::Table => {
                let mut rows = Vec::new();
                flatten("", &value, &mut rows);
                let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                rows.iter()
                    .map(|(k, v)| format!("{k:<width$}  {v}\n"))
                    .collect()
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Depth-first flattening into dotted-path rows; scalars render exactly as
/// in the JSON output so the formats carry identical numbers.
fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let path = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&path, v, rows);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Map builder that keeps call sites compact.
pub fn object(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig12_rounds_and_normalizes() {
        assert_eq!(sig12(0.0), 0.0);
        assert_eq!(sig12(-0.0), 0.0);
        assert_eq!(sig12(4.0), 4.0);
        assert_eq!(sig12(1.0 / 3.0), 0.333333333333);
        assert_eq!(sig12(-1.0 / 3.0), -0.333333333333);
        assert_eq!(sig12(123456789.0123456), 123456789.012);
    }

    #[test]
    fn formats_carry_identical_numbers() {
        let report = Report {
            config: json!({"seed": 42}),
            results: json!({"value": num(2.0 / 3.0)}),
            checks: vec![Check::close("demo", 1.0, 1.0, 1e-9)],
        };
        let json_out = report.render(Format::Json);
        let csv_out = report.render(Format::Csv);
        assert!(json_out.contains("0.666666666667"));
        assert!(csv_out.contains("results.value,0.666666666667"));
    }

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }
}
