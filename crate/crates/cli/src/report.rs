use serde::Serialize;
use serde_json::{Map, Value};
use tritab::CharacterTable;

use crate::error::CliError;
use crate::table_csv;

/// One named verification with its measured residual.
///
/// `residual` is `None` when the measurement itself was not finite; such a
/// check never passes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub residual: Option<f64>,
}

impl Check {
    /// Passes when `residual <= tolerance`.
    pub fn within(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        let finite = residual.is_finite();
        Self {
            name: name.into(),
            passed: finite && residual <= tolerance,
            residual: finite.then_some(residual),
        }
    }

    pub fn flag(name: impl Into<String>, passed: bool) -> Self {
        Self {
            name: name.into(),
            passed,
            residual: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: &'static str, inputs: Map<String, Value>) -> Self {
        Self {
            command,
            inputs,
            outputs: Map::new(),
            checks: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Payload written when `--format csv` is selected.
#[derive(Debug, Clone)]
pub enum Tabular {
    /// Index column counting from `start`, followed by one value column.
    Indexed {
        index: &'static str,
        start: usize,
        value: &'static str,
        values: Vec<f64>,
    },
    /// Two value columns.
    Pairs {
        left: &'static str,
        right: &'static str,
        rows: Vec<(f64, f64)>,
    },
    Characters(CharacterTable),
    Checks,
}

/// A finite JSON number, or an error naming `what`.
pub fn number(what: &str, x: f64) -> Result<Value, CliError> {
    if x.is_finite() {
        Ok(Value::from(x))
    } else {
        Err(CliError::non_finite(what))
    }
}

pub fn numbers(what: &str, xs: &[f64]) -> Result<Value, CliError> {
    xs.iter()
        .map(|&x| number(what, x))
        .collect::<Result<Vec<_>, _>>()
        .map(Value::Array)
}

pub fn rows(what: &str, rows: &[Vec<f64>]) -> Result<Value, CliError> {
    rows.iter()
        .map(|r| numbers(what, r))
        .collect::<Result<Vec<_>, _>>()
        .map(Value::Array)
}

/// Fixed-width scientific notation with 17 significant digits, which
/// round-trips every finite `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn render_json(report: &RunReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report values are finite");
    text.push('\n');
    text
}

pub fn render_csv(report: &RunReport, tabular: &Tabular) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    match tabular {
        Tabular::Indexed {
            index,
            start,
            value,
            values,
        } => {
            w.write_record([*index, *value])?;
            for (k, v) in values.iter().enumerate() {
                w.write_record([(start + k).to_string(), format_float(*v)])?;
            }
        }
        Tabular::Pairs { left, right, rows } => {
            w.write_record([*left, *right])?;
            for (l, r) in rows {
                w.write_record([format_float(*l), format_float(*r)])?;
            }
        }
        Tabular::Characters(table) => return Ok(table_csv::to_csv(table)),
        Tabular::Checks => {
            w.write_record(["name", "passed", "residual"])?;
            for c in &report.checks {
                w.write_record([
                    c.name.clone(),
                    c.passed.to_string(),
                    c.residual.map(format_float).unwrap_or_default(),
                ])?;
            }
        }
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::io(format!("CSV buffer: {e}")))?;
    Ok(String::from_utf8(bytes).expect("CSV output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_reject_non_finite_residuals() {
        let c = Check::within("x", f64::NAN, 1.0);
        assert!(!c.passed);
        assert_eq!(c.residual, None);
        let c = Check::within("x", 0.5, 1.0);
        assert!(c.passed);
        assert_eq!(c.residual, Some(0.5));
    }

    #[test]
    fn numbers_refuse_infinity() {
        assert!(number("v", f64::INFINITY).is_err());
        assert!(numbers("v", &[1.0, f64::NAN]).is_err());
        assert_eq!(number("v", 2.5).unwrap(), Value::from(2.5));
    }

    #[test]
    fn floats_carry_seventeen_digits() {
        assert_eq!(format_float(-22.0 / 9.0), "-2.4444444444444446e0");
        assert_eq!(format_float(0.1).parse::<f64>().unwrap(), 0.1);
    }

    #[test]
    fn checks_table_csv() {
        let mut report = RunReport::new("verify", Map::new());
        report.checks.push(Check::within("a", 0.25, 1.0));
        report.checks.push(Check::flag("b", false));
        let text = render_csv(&report, &Tabular::Checks).unwrap();
        assert_eq!(
            text,
            "name,passed,residual\na,true,2.5000000000000000e-1\nb,false,\n"
        );
    }
}
