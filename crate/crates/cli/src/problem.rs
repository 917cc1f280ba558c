//! Problem description files.

use std::path::Path;

use fracmem::fraccalc::{GridFn, TimeGrid};
use fracmem::steering::{Method, SteeringProblem};
use fracmem::system::{Control, FracSystem, History, Hold};
use fracmem::{Mat, Vector};
use serde::Deserialize;

/// A matrix given either as nested rows or as a flat row-major list.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MatrixSpec {
    Rows(Vec<Vec<f64>>),
    Flat(Vec<f64>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum HistorySpec {
    Constant { a: Vec<f64> },
    /// ψ at every grid node, one row of n values per node.
    Sampled { values: Vec<Vec<f64>> },
}

#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HoldSpec {
    Constant,
    #[default]
    Linear,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ControlSpec {
    #[serde(default)]
    pub hold: HoldSpec,
    pub values: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub n: usize,
    pub m: usize,
    #[serde(rename = "A")]
    pub a: MatrixSpec,
    #[serde(rename = "B")]
    pub b: MatrixSpec,
    pub alpha: f64,
    #[serde(default)]
    pub beta: f64,
    #[serde(rename = "T")]
    pub horizon: f64,
    #[serde(rename = "N")]
    pub intervals: usize,
    pub history: HistorySpec,
    #[serde(default, rename = "b", alias = "target")]
    pub b_target: Option<Vec<f64>>,
    #[serde(default)]
    pub method: Option<String>,
    #[serde(default)]
    pub bump_order: Option<usize>,
    #[serde(default)]
    pub control: Option<ControlSpec>,
}

/// A schema or consistency problem in the input files (exit code 2).
#[derive(Debug)]
pub struct SchemaError(pub String);

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn schema<T>(msg: impl Into<String>) -> Result<T, SchemaError> {
    Err(SchemaError(msg.into()))
}

fn matrix(name: &str, spec: &MatrixSpec, rows: usize, cols: usize) -> Result<Mat, SchemaError> {
    let data: Vec<f64> = match spec {
        MatrixSpec::Rows(r) => {
            if r.len() != rows || r.iter().any(|row| row.len() != cols) {
                let shape = r.first().map_or(0, |row| row.len());
                return schema(format!(
                    "dimension mismatch: {name} must be {rows}x{cols}, got {}x{shape}",
                    r.len()
                ));
            }
            r.concat()
        }
        MatrixSpec::Flat(v) => {
            if v.len() != rows * cols {
                return schema(format!(
                    "dimension mismatch: {name} must have {rows}x{cols} = {} entries, got {}",
                    rows * cols,
                    v.len()
                ));
            }
            v.clone()
        }
    };
    if data.iter().any(|v| !v.is_finite()) {
        return schema(format!("{name} has non-finite entries"));
    }
    Ok(Mat::from_row_slice(rows, cols, &data))
}

fn node_rows(name: &str, rows: &[Vec<f64>], grid: TimeGrid, dim: usize) -> Result<Vec<f64>, SchemaError> {
    if rows.len() != grid.intervals() + 1 {
        return schema(format!(
            "grid mismatch: {name} has {} rows, the grid has {} nodes",
            rows.len(),
            grid.intervals() + 1
        ));
    }
    if let Some(i) = rows.iter().position(|r| r.len() != dim) {
        return schema(format!("dimension mismatch: {name} row {i} has {} values, expected {dim}", rows[i].len()));
    }
    Ok(rows.concat())
}

/// A validated problem ready for the library.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub sys: FracSystem,
    pub beta: f64,
    pub grid: TimeGrid,
    pub target: Vector,
    pub method: Method,
    pub bump_order: Option<usize>,
    pub control: Control,
}

impl Loaded {
    pub fn steering(&self) -> fracmem::Result<SteeringProblem> {
        SteeringProblem::new(self.sys.clone(), self.beta, self.target.clone(), self.grid)
    }
}

pub fn load(path: &Path, grid_override: Option<usize>, method_override: Option<&str>) -> Result<Loaded, SchemaError> {
    let text = std::fs::read_to_string(path).map_err(|e| SchemaError(format!("cannot read {}: {e}", path.display())))?;
    let spec: ProblemSpec =
        serde_json::from_str(&text).map_err(|e| SchemaError(format!("invalid problem file {}: {e}", path.display())))?;
    validate(spec, grid_override, method_override)
}

pub fn validate(spec: ProblemSpec, grid_override: Option<usize>, method_override: Option<&str>) -> Result<Loaded, SchemaError> {
    let (n, m) = (spec.n, spec.m);
    if n == 0 || m == 0 {
        return schema("n and m must be at least 1");
    }
    let a = matrix("A", &spec.a, n, n)?;
    let b = matrix("B", &spec.b, n, m)?;
    if !(spec.alpha > 0.0 && spec.alpha <= 1.0) {
        return schema(format!("alpha must lie in (0, 1], got {}", spec.alpha));
    }
    if !(spec.beta >= 0.0 && spec.beta.is_finite()) {
        return schema(format!("beta must be finite and nonnegative, got {}", spec.beta));
    }
    if !(spec.horizon > 0.0 && spec.horizon.is_finite()) {
        return schema(format!("T must be positive, got {}", spec.horizon));
    }
    let intervals = grid_override.unwrap_or(spec.intervals);
    let grid = TimeGrid::new(spec.horizon, intervals).map_err(|e| SchemaError(e.to_string()))?;
    let history = match &spec.history {
        HistorySpec::Constant { a } => {
            if a.len() != n {
                return schema(format!("dimension mismatch: history a has length {}, expected {n}", a.len()));
            }
            History::Constant(Vector::from_column_slice(a))
        }
        HistorySpec::Sampled { values } => {
            let data = node_rows("sampled history", values, grid, n)?;
            History::Sampled(GridFn::from_samples(grid, n, data).map_err(|e| SchemaError(e.to_string()))?)
        }
    };
    let target = match &spec.b_target {
        Some(v) if v.len() != n => return schema(format!("dimension mismatch: target b has length {}, expected {n}", v.len())),
        Some(v) if v.iter().any(|x| !x.is_finite()) => return schema("target b has non-finite entries"),
        Some(v) => Vector::from_column_slice(v),
        None => Vector::zeros(n),
    };
    let method = match method_override.or(spec.method.as_deref()) {
        Some(s) => s.parse().map_err(|e: fracmem::Error| SchemaError(e.to_string()))?,
        None => Method::GramianOptimal,
    };
    let control = match &spec.control {
        None => Control::zero(grid, m),
        Some(c) => {
            let data = node_rows("control", &c.values, grid, m)?;
            let samples = GridFn::from_samples(grid, m, data).map_err(|e| SchemaError(e.to_string()))?;
            Control::new(
                samples,
                match c.hold {
                    HoldSpec::Constant => Hold::Constant,
                    HoldSpec::Linear => Hold::Linear,
                },
            )
            .map_err(|e| SchemaError(e.to_string()))?
        }
    };
    let sys = FracSystem::new(a, b, spec.alpha, history).map_err(|e| SchemaError(e.to_string()))?;
    Ok(Loaded {
        sys,
        beta: spec.beta,
        grid,
        target,
        method,
        bump_order: spec.bump_order,
        control,
    })
}
