//! CSV and JSON output with fixed float formatting.

use std::io::{self, Write};
use std::path::Path;

use fracmem::fraccalc::{GridFn, TimeGrid};
use fracmem::system::Control;
use serde::Serialize;
use serde_json::ser::Formatter;

use crate::problem::SchemaError;

pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Compact JSON with every float written to 17 significant digits and
/// non-finite values as null.
struct FixedFloats;

impl Formatter for FixedFloats {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            w.write_all(fmt_f64(value).as_bytes())
        } else {
            w.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedFloats);
    value.serialize(&mut ser).expect("in-memory JSON serialization");
    buf.push(b'\n');
    String::from_utf8(buf).expect("JSON is UTF-8")
}

fn cell(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

/// Columns of grid functions side by side, one row per node; undefined
/// values are empty cells.
pub fn write_columns(path: &Path, grid: TimeGrid, blocks: &[(&str, &GridFn)]) -> io::Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    let mut header = vec!["t".to_string()];
    for (name, f) in blocks {
        header.extend((1..=f.dim()).map(|k| format!("{name}_{k}")));
    }
    w.write_record(&header)?;
    for i in 0..=grid.intervals() {
        let mut row = vec![fmt_f64(grid.node(i))];
        for (_, f) in blocks {
            let v = f.value(i);
            row.extend((0..f.dim()).map(|k| cell(v.as_ref().map(|v| v[k]))));
        }
        w.write_record(&row)?;
    }
    w.flush()
}

/// Control CSV: `t, u_1..u_m`, and when the control carries an endpoint
/// exponent (u = (T-t)^e c), the factor columns `c_1..c_m` as well.
pub fn write_control(path: &Path, u: &Control) -> io::Result<()> {
    let f = u.samples();
    let grid = *f.grid();
    if f.trail() == 0.0 && f.lead() == 0.0 {
        return write_columns(path, grid, &[("u", f)]);
    }
    let factor = GridFn::from_samples(grid, f.dim(), f.factor_data().to_vec()).map_err(io::Error::other)?;
    write_columns(path, grid, &[("u", f), ("c", &factor)])
}

/// Reads a control CSV written by `write_control` (or by hand) on `grid`.
/// With factor columns present the control is (T-t)^trail c(t).
pub fn read_control(path: &Path, grid: TimeGrid, m: usize, trail: f64) -> Result<Control, SchemaError> {
    let bad = |msg: String| SchemaError(format!("{}: {msg}", path.display()));
    let mut r = csv::Reader::from_path(path).map_err(|e| bad(e.to_string()))?;
    let header: Vec<String> = r.headers().map_err(|e| bad(e.to_string()))?.iter().map(|h| h.trim().to_string()).collect();
    let col = |name: &str| header.iter().position(|h| h == name);
    if col("t") != Some(0) {
        return Err(bad("first column must be t".into()));
    }
    let u_cols: Vec<Option<usize>> = (1..=m).map(|k| col(&format!("u_{k}"))).collect();
    let c_cols: Vec<Option<usize>> = (1..=m).map(|k| col(&format!("c_{k}"))).collect();
    let factored = c_cols.iter().all(Option::is_some);
    let cols: Vec<usize> = if factored {
        c_cols.into_iter().flatten().collect()
    } else if u_cols.iter().all(Option::is_some) {
        u_cols.into_iter().flatten().collect()
    } else {
        return Err(bad(format!("expected columns u_1..u_{m}")));
    };
    let mut data = Vec::with_capacity((grid.intervals() + 1) * m);
    let mut rows = 0;
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| bad(e.to_string()))?;
        if i > grid.intervals() {
            return Err(bad(format!("grid mismatch: more than {} rows", grid.intervals() + 1)));
        }
        let parse = |j: usize| -> Result<f64, SchemaError> {
            let s = rec.get(j).unwrap_or("").trim();
            s.parse::<f64>().map_err(|_| bad(format!("row {}: cannot read {s:?} as a number", i + 1)))
        };
        let t = parse(0)?;
        if (t - grid.node(i)).abs() > 1e-9 * grid.horizon() {
            return Err(bad(format!("grid mismatch: row {} has t = {t}, expected {}", i + 1, grid.node(i))));
        }
        for &j in &cols {
            data.push(parse(j)?);
        }
        rows += 1;
    }
    if rows != grid.intervals() + 1 {
        return Err(bad(format!("grid mismatch: {rows} rows, the grid has {} nodes", grid.intervals() + 1)));
    }
    let samples = if factored {
        GridFn::factored(grid, m, data, 0.0, trail)
    } else {
        GridFn::from_samples(grid, m, data)
    }
    .map_err(|e| bad(e.to_string()))?;
    Ok(Control::piecewise_linear(samples))
}
