use crate::{Error, Mat, Result, Vector};

// Exponents closer than this are treated as equal.
pub(crate) const EXPONENT_EPS: f64 = 1e-12;

/// Uniform grid t_i = i T / N on [0, T].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    horizon: f64,
    intervals: usize,
}

impl TimeGrid {
    pub fn new(horizon: f64, intervals: usize) -> Result<Self> {
        if !(horizon > 0.0 && horizon.is_finite()) {
            return Err(Error::Grid(format!("horizon must be positive and finite, got {horizon}")));
        }
        if intervals < 8 {
            return Err(Error::Grid(format!("grid needs at least 8 intervals, got {intervals}")));
        }
        Ok(TimeGrid { horizon, intervals })
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    /// Number of intervals N; there are N + 1 nodes.
    pub fn intervals(&self) -> usize {
        self.intervals
    }

    pub fn step(&self) -> f64 {
        self.horizon / self.intervals as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        if i == self.intervals {
            self.horizon
        } else {
            i as f64 * self.step()
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.intervals).map(move |i| self.node(i))
    }

    pub fn refined(&self) -> Self {
        TimeGrid {
            horizon: self.horizon,
            intervals: 2 * self.intervals,
        }
    }
}

/// x^e with 0^0 = 1 and 0^e = 0 for e > 0.
pub(crate) fn pow0(x: f64, e: f64) -> f64 {
    if e.abs() < EXPONENT_EPS {
        1.0
    } else {
        x.powf(e)
    }
}

/// Vector-valued samples on a grid, in the factored form
///
/// ```text
/// f(t) = t^lead (T - t)^trail c(t)
/// ```
///
/// where c is stored at every node. Functions that blow up at an endpoint
/// (lead < 0 or trail < 0) keep the limit coefficient of c there, and the
/// plain sample at that node is undefined. Regular functions have both
/// exponents zero.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFn {
    grid: TimeGrid,
    dim: usize,
    factor: Vec<f64>,
    lead: f64,
    trail: f64,
}

impl GridFn {
    /// Regular function from row-major samples, `(N + 1) * dim` entries.
    pub fn from_samples(grid: TimeGrid, dim: usize, samples: Vec<f64>) -> Result<Self> {
        Self::factored(grid, dim, samples, 0.0, 0.0)
    }

    /// Factored function `t^lead (T-t)^trail c(t)` from samples of c.
    pub fn factored(grid: TimeGrid, dim: usize, factor: Vec<f64>, lead: f64, trail: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Dimension("grid function needs dim >= 1".into()));
        }
        if factor.len() != (grid.intervals() + 1) * dim {
            return Err(Error::Dimension(format!(
                "expected {} samples ({} nodes x {dim}), got {}",
                (grid.intervals() + 1) * dim,
                grid.intervals() + 1,
                factor.len()
            )));
        }
        if !(lead.is_finite() && trail.is_finite()) {
            return Err(Error::Domain("endpoint exponents must be finite".into()));
        }
        if let Some(bad) = factor.iter().position(|v| !v.is_finite()) {
            return Err(Error::Domain(format!(
                "non-finite sample at node {}, component {}",
                bad / dim,
                bad % dim
            )));
        }
        let snap = |e: f64| if e.abs() < EXPONENT_EPS { 0.0 } else { e };
        Ok(GridFn {
            grid,
            dim,
            factor,
            lead: snap(lead),
            trail: snap(trail),
        })
    }

    pub fn zeros(grid: TimeGrid, dim: usize) -> Self {
        GridFn {
            grid,
            dim,
            factor: vec![0.0; (grid.intervals() + 1) * dim],
            lead: 0.0,
            trail: 0.0,
        }
    }

    /// Samples a regular function at every node.
    pub fn from_fn(grid: TimeGrid, dim: usize, f: impl Fn(f64) -> Vector) -> Result<Self> {
        Self::from_factor_fn(grid, dim, 0.0, 0.0, f)
    }

    /// Samples the factor c of `t^lead (T-t)^trail c(t)` at every node.
    pub fn from_factor_fn(
        grid: TimeGrid,
        dim: usize,
        lead: f64,
        trail: f64,
        c: impl Fn(f64) -> Vector,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity((grid.intervals() + 1) * dim);
        for t in grid.nodes() {
            let v = c(t);
            if v.len() != dim {
                return Err(Error::Dimension(format!("sample has length {}, expected {dim}", v.len())));
            }
            data.extend(v.iter());
        }
        Self::factored(grid, dim, data, lead, trail)
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lead(&self) -> f64 {
        self.lead
    }

    pub fn trail(&self) -> f64 {
        self.trail
    }

    pub fn is_regular(&self) -> bool {
        self.lead == 0.0 && self.trail == 0.0
    }

    /// True when the sample at t = 0 is undefined.
    pub fn singular_at_start(&self) -> bool {
        self.lead < 0.0
    }

    pub fn singular_at_end(&self) -> bool {
        self.trail < 0.0
    }

    pub fn is_defined(&self, i: usize) -> bool {
        !(i == 0 && self.lead < 0.0 || i == self.grid.intervals() && self.trail < 0.0)
    }

    /// Stored factor c(t_i).
    pub fn factor(&self, i: usize) -> &[f64] {
        &self.factor[i * self.dim..(i + 1) * self.dim]
    }

    pub fn factor_data(&self) -> &[f64] {
        &self.factor
    }

    /// Scalar weight t^lead (T-t)^trail at node i (not meaningful where undefined).
    pub fn weight(&self, i: usize) -> f64 {
        let t = self.grid.node(i);
        let r = if i == self.grid.intervals() {
            0.0
        } else {
            self.grid.horizon() - t
        };
        pow0(t, self.lead) * pow0(r, self.trail)
    }

    /// (T - t_i)^trail alone.
    pub fn weight_trail(&self, i: usize) -> f64 {
        let r = if i == self.grid.intervals() {
            0.0
        } else {
            self.grid.horizon() - self.grid.node(i)
        };
        pow0(r, self.trail)
    }

    /// Plain sample f(t_i), or None at an undefined endpoint.
    pub fn value(&self, i: usize) -> Option<Vector> {
        if !self.is_defined(i) {
            return None;
        }
        let w = self.weight(i);
        Some(Vector::from_iterator(self.dim, self.factor(i).iter().map(|c| w * c)))
    }

    /// Component k of the plain sample at node i, NaN where undefined.
    pub fn value_component(&self, i: usize, k: usize) -> f64 {
        if !self.is_defined(i) {
            return f64::NAN;
        }
        self.weight(i) * self.factor(i)[k]
    }

    /// Value at the final node; the last row of the plain samples.
    pub fn last(&self) -> Option<Vector> {
        self.value(self.grid.intervals())
    }

    /// Plain samples with undefined endpoints set to NaN.
    pub fn to_plain(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.factor.len());
        for i in 0..=self.grid.intervals() {
            for k in 0..self.dim {
                out.push(self.value_component(i, k));
            }
        }
        out
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut out = self.clone();
        out.factor.iter_mut().for_each(|v| *v *= s);
        out
    }

    /// Linear combination `a self + b other`; exponents merge to the smaller one.
    pub fn combine(&self, a: f64, other: &GridFn, b: f64) -> Result<Self> {
        if self.grid != other.grid || self.dim != other.dim {
            return Err(Error::Dimension("grid functions live on different grids or dims".into()));
        }
        let lead = self.lead.min(other.lead);
        let trail = self.trail.min(other.trail);
        let n = self.grid.intervals();
        let shift = |f: &GridFn, i: usize| -> f64 {
            let t = self.grid.node(i);
            let r = if i == n { 0.0 } else { self.grid.horizon() - t };
            pow0(t, f.lead - lead) * pow0(r, f.trail - trail)
        };
        let mut data = Vec::with_capacity(self.factor.len());
        for i in 0..=n {
            let (sa, sb) = (a * shift(self, i), b * shift(other, i));
            for (x, y) in self.factor(i).iter().zip(other.factor(i)) {
                data.push(sa * x + sb * y);
            }
        }
        Self::factored(self.grid, self.dim, data, lead, trail)
    }

    pub fn add(&self, other: &GridFn) -> Result<Self> {
        self.combine(1.0, other, 1.0)
    }

    pub fn sub(&self, other: &GridFn) -> Result<Self> {
        self.combine(1.0, other, -1.0)
    }

    /// Time reversal t -> T - t; lead and trail swap.
    pub fn reversed(&self) -> Self {
        let n = self.grid.intervals();
        let mut data = Vec::with_capacity(self.factor.len());
        for i in (0..=n).rev() {
            data.extend_from_slice(self.factor(i));
        }
        GridFn {
            grid: self.grid,
            dim: self.dim,
            factor: data,
            lead: self.trail,
            trail: self.lead,
        }
    }

    /// Applies a constant matrix to every sample.
    pub fn map_matrix(&self, m: &Mat) -> Result<Self> {
        if m.ncols() != self.dim {
            return Err(Error::Dimension(format!(
                "cannot apply a {}x{} matrix to dimension {}",
                m.nrows(),
                m.ncols(),
                self.dim
            )));
        }
        let rows = m.nrows();
        let mut data = Vec::with_capacity((self.grid.intervals() + 1) * rows);
        for i in 0..=self.grid.intervals() {
            let c = self.factor(i);
            for r in 0..rows {
                data.push((0..self.dim).map(|k| m[(r, k)] * c[k]).sum());
            }
        }
        Self::factored(self.grid, rows, data, self.lead, self.trail)
    }

    /// Largest |f - g| over nodes where both are defined.
    pub fn max_abs_diff(&self, other: &GridFn) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..=self.grid.intervals() {
            if let (Some(a), Some(b)) = (self.value(i), other.value(i)) {
                worst = worst.max((a - b).amax());
            }
        }
        worst
    }
}
