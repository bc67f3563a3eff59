//! Deterministic run reports: JSON envelopes with 9-significant-digit
//! floats, CSV tables, and the sweep-grid parser.

use crate::error::{input, Result};
use serde::Serialize;
use serde_json::{Number, Value};
use std::fs;
use std::path::Path;

pub(crate) const SCHEMA_VERSION: u32 = 1;

/// Envelope printed by every subcommand: the command name, an echo of the
/// parsed inputs, the command-specific payload, and the crate version.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub parameters: Value,
    pub results: Value,
    pub version: String,
}

impl RunReport {
    pub fn new(command: &str, parameters: Value, results: Value) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            parameters,
            results,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// Renders the report as pretty JSON with every floating-point field
    /// rounded to 9 significant digits. Object keys serialize sorted, so
    /// identical runs produce identical bytes.
    pub fn render(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        round_floats(&mut value);
        serde_json::to_string_pretty(&value).expect("rounded report serializes")
    }
}

/// Rounds every f64 leaf in place to 9 significant digits; integer leaves
/// are left exact.
pub(crate) fn round_floats(value: &mut Value) {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("checked f64");
            *value = match Number::from_f64(round9(x)) {
                Some(n) => Value::Number(n),
                // Non-finite floats have no JSON form; none of the library
                // results produce them, but keep the report valid if one
                // ever leaks through.
                None => Value::String(x.to_string()),
            };
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// Nearest f64 to the 9-significant-digit decimal rounding of `x`.
/// Negative zero normalizes to zero.
pub(crate) fn round9(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{x:.8e}").parse().expect("scientific float reparses");
    r + 0.0
}

/// Shortest decimal form of the 9-significant-digit rounding, for CSV
/// cells.
pub(crate) fn fmt9(x: f64) -> String {
    format!("{}", round9(x))
}

/// Writes a CSV table: a mandatory header row, then one line per record.
/// Fields are comma-separated with `.` as the decimal mark.
pub(crate) fn write_csv(path: &Path, header: &str, rows: &[String]) -> Result<()> {
    let mut text = String::with_capacity(header.len() + 1 + 16 * rows.len());
    text.push_str(header);
    text.push('\n');
    for row in rows {
        text.push_str(row);
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| input(format!("cannot write {}: {e}", path.display())))
}

const MAX_SWEEP_POINTS: u64 = 10_000_000;

/// Parses `LO:HI:STEP` into the grid `LO, LO+STEP, ...`. The range is
/// half-open at `HI` unless `HI` lands on the grid (within 1e-9), in which
/// case `HI` itself is the last point. Each point is computed as
/// `LO + i*STEP`, so the grid carries no accumulated rounding.
pub(crate) fn parse_sweep(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [lo, hi, step] = parts[..] else {
        return Err(input(format!("sweep must be LO:HI:STEP, got {spec:?}")));
    };
    let parse = |tok: &str| {
        tok.trim()
            .parse::<f64>()
            .map_err(|_| input(format!("sweep bound {tok:?} is not a number")))
    };
    let (lo, hi, step) = (parse(lo)?, parse(hi)?, parse(step)?);
    if !lo.is_finite() || !hi.is_finite() || !(step > 0.0) || hi < lo {
        return Err(input(format!(
            "sweep needs finite LO <= HI and STEP > 0, got {spec:?}"
        )));
    }
    let count = ((hi - lo) / step).round();
    if count > MAX_SWEEP_POINTS as f64 {
        return Err(input(format!(
            "sweep {spec:?} has more than {MAX_SWEEP_POINTS} points"
        )));
    }
    let tol = 1e-9 * (1.0 + lo.abs().max(hi.abs()));
    let mut grid = Vec::new();
    if (lo + count * step - hi).abs() <= tol {
        for i in 0..count as u64 {
            grid.push(lo + i as f64 * step);
        }
        grid.push(hi);
    } else {
        for i in 0..MAX_SWEEP_POINTS {
            let p = lo + i as f64 * step;
            if p >= hi - tol {
                break;
            }
            grid.push(p);
        }
    }
    Ok(grid)
}
