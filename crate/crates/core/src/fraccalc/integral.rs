//! Product integration for weakly singular convolutions on a uniform grid.
//!
//! Every panel integral carries the algebraic factors exactly and
//! interpolates the remaining smooth part linearly. For regular inputs the
//! weights depend only on the panel distance (see [`MomentTable`]); inputs
//! with a factor τ^{lead} at 0 use per-node weights for τ^{lead} (t - τ)^{μ-1}.

use rayon::prelude::*;

use super::grid::{pow0, GridFn, TimeGrid, EXPONENT_EPS};
use crate::quadrature::{unit_rule, MomentTable};
use crate::specfun::{beta_fn, rgamma};
use crate::{Error, Mat, Result, Vector};

/// Convolution kernel K(s) = Σ_j s^{μ_j - 1} R_j(s), each R_j sampled at the
/// grid nodes. A single term is the common case; kernels whose smooth part
/// contains fractional powers are split so that every power is integrated
/// exactly.
#[derive(Debug, Clone)]
pub struct SingularKernel {
    grid: TimeGrid,
    rows: usize,
    cols: usize,
    terms: Vec<KernelTerm>,
}

#[derive(Debug, Clone)]
struct KernelTerm {
    mu: f64,
    samples: Vec<f64>,
}

fn flatten(blocks: &[Mat], rows: usize, cols: usize) -> Result<Vec<f64>> {
    let mut samples = Vec::with_capacity(blocks.len() * rows * cols);
    for b in blocks {
        if b.nrows() != rows || b.ncols() != cols {
            return Err(Error::Dimension(format!(
                "kernel sample is {}x{}, expected {rows}x{cols}",
                b.nrows(),
                b.ncols()
            )));
        }
        for i in 0..rows {
            for j in 0..cols {
                samples.push(b[(i, j)]);
            }
        }
    }
    Ok(samples)
}

impl SingularKernel {
    /// Single term s^{μ-1} r(s), with `r` sampled at s_k = k h, k = 0..=N.
    pub fn new<F>(grid: TimeGrid, mu: f64, rows: usize, cols: usize, r: F) -> Result<Self>
    where
        F: Fn(f64) -> Result<Mat> + Sync,
    {
        check_mu(mu)?;
        let blocks: Vec<Mat> = (0..=grid.intervals())
            .into_par_iter()
            .map(|k| r(grid.node(k)))
            .collect::<Result<_>>()?;
        Ok(SingularKernel {
            grid,
            rows,
            cols,
            terms: vec![KernelTerm {
                mu,
                samples: flatten(&blocks, rows, cols)?,
            }],
        })
    }

    /// Kernel s^{μ-1} r(s) where r(s) = Σ_k C_k s^{kδ} + O(s^{Kδ}), K = `coeffs.len()`.
    ///
    /// The listed powers become exact terms s^{μ+kδ-1} C_k; the remainder
    /// r(s) - Σ_k C_k s^{kδ} is interpolated as usual. Zero coefficients are dropped.
    pub fn expanded<F>(grid: TimeGrid, mu: f64, delta: f64, coeffs: &[Mat], r: F) -> Result<Self>
    where
        F: Fn(f64) -> Result<Mat> + Sync,
    {
        check_mu(mu)?;
        let Some(first) = coeffs.first() else {
            let any = r(0.0)?;
            return Self::new(grid, mu, any.nrows(), any.ncols(), r);
        };
        let (rows, cols) = first.shape();
        let blocks: Vec<Mat> = (0..=grid.intervals())
            .into_par_iter()
            .map(|k| {
                let s = grid.node(k);
                let mut v = r(s)?;
                for (j, c) in coeffs.iter().enumerate() {
                    let w = if j == 0 { 1.0 } else { s.powf(j as f64 * delta) };
                    v -= c * w;
                }
                Ok(v)
            })
            .collect::<Result<_>>()?;
        let mut terms = Vec::new();
        for (j, c) in coeffs.iter().enumerate() {
            if c.iter().all(|v| *v == 0.0) {
                continue;
            }
            let block = vec![c.clone(); grid.intervals() + 1];
            terms.push(KernelTerm {
                mu: mu + j as f64 * delta,
                samples: flatten(&block, rows, cols)?,
            });
        }
        let rest = flatten(&blocks, rows, cols)?;
        if rest.iter().any(|v| *v != 0.0) || terms.is_empty() {
            terms.push(KernelTerm { mu, samples: rest });
        }
        Ok(SingularKernel {
            grid,
            rows,
            cols,
            terms,
        })
    }

    /// Kernel c s^{μ-1} I_dim.
    pub fn scalar(grid: TimeGrid, mu: f64, c: f64, dim: usize) -> Result<Self> {
        let block = Mat::identity(dim, dim) * c;
        Self::new(grid, mu, dim, dim, |_| Ok(block.clone()))
    }

    /// Smallest exponent μ among the terms; the kernel behaves like s^{μ-1} at 0.
    pub fn mu(&self) -> f64 {
        self.terms.iter().map(|t| t.mu).fold(f64::INFINITY, f64::min)
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of separately integrated power terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// K(s_k) s_k^{1-μ} with μ = [`Self::mu`], i.e. the combined smooth part at node k.
    pub fn smooth_part(&self, k: usize) -> Mat {
        let sz = self.rows * self.cols;
        let s = self.grid.node(k);
        let mu = self.mu();
        let mut out = Mat::zeros(self.rows, self.cols);
        for t in &self.terms {
            let w = pow0(s, t.mu - mu);
            out += Mat::from_row_slice(self.rows, self.cols, &t.samples[k * sz..(k + 1) * sz]) * w;
        }
        out
    }

    fn apply(&self, term: usize, k: usize, coef: f64, g: &[f64], out: &mut [f64]) {
        let sz = self.rows * self.cols;
        let block = &self.terms[term].samples[k * sz..(k + 1) * sz];
        for (r, o) in out.iter_mut().enumerate() {
            let row = &block[r * self.cols..(r + 1) * self.cols];
            let dot: f64 = row.iter().zip(g).map(|(a, b)| a * b).sum();
            *o += coef * dot;
        }
    }
}

fn check_mu(mu: f64) -> Result<()> {
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(Error::NonIntegrable(format!(
            "kernel exponent mu - 1 = {} is not integrable at 0",
            mu - 1.0
        )));
    }
    Ok(())
}

/// Weight tables shared by all nodes of one convolution.
struct Plan {
    mu: f64,
    lead: f64,
    trail: f64,
    body: MomentTable,
    end: Option<MomentTable>,
    start: Option<ProductTables>,
    out_dim: usize,
}

/// Powers (j + y_q)^e at the 10 Gauss points y_q of [0, 1], for the panels
/// where both algebraic factors are smooth.
struct ProductTables {
    lead_pow: Vec<[f64; 10]>,
    body_pow: Vec<[f64; 10]>,
    end_pow: Option<Vec<[f64; 10]>>,
}

fn power_table(e: f64, len: usize) -> Vec<[f64; 10]> {
    let (y, _) = unit_rule();
    (0..len)
        .map(|j| std::array::from_fn(|q| (j as f64 + y[q]).powf(e)))
        .collect()
}

impl Plan {
    fn new(mu: f64, f: &GridFn, out_dim: usize) -> Result<Self> {
        check_mu(mu)?;
        let n = f.grid().intervals();
        let (lead, trail) = (f.lead(), f.trail());
        if lead <= -1.0 {
            return Err(Error::NonIntegrable(format!(
                "input behaves like t^{lead} at 0, which is not integrable"
            )));
        }
        if trail != 0.0 && mu - 1.0 + trail <= -1.0 {
            return Err(Error::NonIntegrable(format!(
                "kernel s^{} times input (T-t)^{trail} is not integrable at T",
                mu - 1.0
            )));
        }
        let start = (lead != 0.0).then(|| ProductTables {
            lead_pow: power_table(lead, n + 1),
            body_pow: power_table(mu - 1.0, n + 1),
            end_pow: (trail != 0.0).then(|| power_table(mu - 1.0 + trail, n + 1)),
        });
        Ok(Plan {
            mu,
            lead,
            trail,
            body: MomentTable::new(mu - 1.0, n + 1),
            end: (trail != 0.0).then(|| MomentTable::new(mu - 1.0 + trail, n + 1)),
            start,
            out_dim,
        })
    }

    /// Output exponent at t = 0.
    fn out_lead(&self) -> f64 {
        self.mu + self.lead
    }
}

// factor_j times the selected endpoint weights
fn partial(f: &GridFn, j: usize, with_lead: bool, with_trail: bool) -> Vec<f64> {
    let g = f.grid();
    let mut w = 1.0;
    if with_lead {
        w *= pow0(g.node(j), f.lead());
    }
    if with_trail {
        let r = if j == g.intervals() { 0.0 } else { g.horizon() - g.node(j) };
        w *= pow0(r, f.trail());
    }
    f.factor(j).iter().map(|c| c * w).collect()
}

/// ∫_0^1 y^a (k - y)^b {1, y} dy for k ≥ 2, by the binomial series in y/k.
fn end_panel_moments(a: f64, b: f64, k: f64) -> (f64, f64) {
    let (mut m0, mut m1) = (0.0, 0.0);
    let mut c = 1.0;
    for n in 0..400 {
        if n > 0 {
            c *= (n as f64 - 1.0 - b) / (n as f64 * k);
        }
        let nf = n as f64;
        let (d0, d1) = (c / (a + nf + 1.0), c / (a + nf + 2.0));
        m0 += d0;
        m1 += d1;
        if d0.abs() <= 1e-17 * m0.abs() && n > 2 {
            break;
        }
    }
    let s = k.powf(b);
    (m0 * s, m1 * s)
}

/// ∫_0^{t_i} s^{μ-1} R(s) f(t_i - s) ds for i ≥ 1, accumulated through `apply`.
fn node_integral<K>(plan: &Plan, f: &GridFn, i: usize, apply: &K) -> Vec<f64>
where
    K: Fn(usize, f64, &[f64], &mut [f64]),
{
    let grid = f.grid();
    let n = grid.intervals();
    let h = grid.step();
    let mut out = vec![0.0; plan.out_dim];

    let absorb = i == n && plan.trail != 0.0;
    let (table, p) = if absorb {
        (plan.end.as_ref().expect("end table"), plan.mu - 1.0 + plan.trail)
    } else {
        (&plan.body, plan.mu - 1.0)
    };

    let Some(tables) = plan.start.as_ref() else {
        let hp = h.powf(p + 1.0);
        for k in 0..=i {
            let g = partial(f, i - k, false, !absorb);
            apply(k, table.node_weight(k, i) * hp, &g, &mut out);
        }
        return out;
    };

    // weight τ^{e0} (t_i - τ)^p integrated exactly, R c interpolated linearly
    let e0 = plan.lead;
    let scale = h.powf(e0 + p + 1.0);
    let c = |j: usize| partial(f, j, false, !absorb);
    if i == 1 {
        let b0 = beta_fn(e0 + 1.0, p + 2.0).expect("positive arguments");
        let b1 = beta_fn(e0 + 2.0, p + 1.0).expect("positive arguments");
        apply(1, scale * b0, &c(0), &mut out);
        apply(0, scale * b1, &c(1), &mut out);
        return out;
    }
    let kpow = if absorb {
        tables.end_pow.as_ref().expect("end powers")
    } else {
        &tables.body_pow
    };
    let (_, gw) = unit_rule();
    let ki = i as f64;
    let mut panels = vec![(0.0, 0.0); i];
    let (m0, m1) = end_panel_moments(e0, p, ki);
    panels[0] = (m0 - m1, m1);
    let (m0, m1) = end_panel_moments(p, e0, ki);
    panels[i - 1] = (m1, m0 - m1);
    let (y, _) = unit_rule();
    for (j, panel) in panels.iter_mut().enumerate().take(i - 1).skip(1) {
        let a = &tables.lead_pow[j];
        let b = &kpow[i - j - 1];
        let (mut w0, mut w1) = (0.0, 0.0);
        for q in 0..10 {
            let v = gw[q] * a[q] * b[9 - q];
            w0 += v * (1.0 - y[q]);
            w1 += v * y[q];
        }
        *panel = (w0, w1);
    }
    for j in 0..=i {
        let mut w = 0.0;
        if j < i {
            w += panels[j].0;
        }
        if j >= 1 {
            w += panels[j - 1].1;
        }
        apply(i - j, scale * w, &c(j), &mut out);
    }
    out
}

/// Limit coefficient at t = 0 of the result divided by t^{μ+lead}: B(μ, lead+1) R(0) c(0).
fn start_limit<K>(plan: &Plan, f: &GridFn, apply: &K, out: &mut [f64])
where
    K: Fn(usize, f64, &[f64], &mut [f64]),
{
    let c0 = partial(f, 0, false, true);
    let b = beta_fn(plan.mu, plan.lead + 1.0).expect("positive arguments");
    apply(0, b, &c0, out);
}

/// One plan per kernel term; `apply(term, k, coef, g, out)` adds coef R_term(s_k) g.
fn convolve_all<K>(plans: &[Plan], out_dim: usize, f: &GridFn, apply: K) -> Result<GridFn>
where
    K: Fn(usize, usize, f64, &[f64], &mut [f64]) + Sync,
{
    let grid = *f.grid();
    let n = grid.intervals();
    let rows: Vec<Vec<f64>> = (1..=n)
        .into_par_iter()
        .map(|i| {
            let mut acc = vec![0.0; out_dim];
            for (ti, plan) in plans.iter().enumerate() {
                let v = node_integral(plan, f, i, &|k, c, g, o: &mut [f64]| apply(ti, k, c, g, o));
                acc.iter_mut().zip(v).for_each(|(a, b)| *a += b);
            }
            acc
        })
        .collect();
    let lam = plans.iter().map(Plan::out_lead).fold(f64::INFINITY, f64::min);
    let mut data = Vec::with_capacity((n + 1) * out_dim);
    data.extend(start_value(plans, out_dim, f, &apply, lam));
    if lam < -EXPONENT_EPS {
        for (idx, row) in rows.iter().enumerate() {
            let w = grid.node(idx + 1).powf(-lam);
            data.extend(row.iter().map(|v| v * w));
        }
        GridFn::factored(grid, out_dim, data, lam, 0.0)
    } else {
        for row in rows {
            data.extend(row);
        }
        GridFn::from_samples(grid, out_dim, data)
    }
}

// Limit coefficient (λ ≤ 0) or plain value 0 (λ > 0) at t = 0.
fn start_value<K>(plans: &[Plan], out_dim: usize, f: &GridFn, apply: &K, lam: f64) -> Vec<f64>
where
    K: Fn(usize, usize, f64, &[f64], &mut [f64]),
{
    let mut out = vec![0.0; out_dim];
    if lam > EXPONENT_EPS {
        return out;
    }
    for (ti, plan) in plans.iter().enumerate() {
        if (plan.out_lead() - lam).abs() <= EXPONENT_EPS {
            start_limit(plan, f, &|k, c, g, o: &mut [f64]| apply(ti, k, c, g, o), &mut out);
        }
    }
    out
}

fn convolve_at<K>(plans: &[Plan], out_dim: usize, f: &GridFn, i: usize, apply: K) -> Result<Vector>
where
    K: Fn(usize, usize, f64, &[f64], &mut [f64]),
{
    if i > f.grid().intervals() {
        return Err(Error::Grid(format!("node {i} outside the grid")));
    }
    if i == 0 {
        let lam = plans.iter().map(Plan::out_lead).fold(f64::INFINITY, f64::min);
        if lam < -EXPONENT_EPS {
            return Err(Error::Domain("convolution is singular at t = 0".into()));
        }
        return Ok(Vector::from_vec(start_value(plans, out_dim, f, &apply, lam)));
    }
    let mut acc = vec![0.0; out_dim];
    for (ti, plan) in plans.iter().enumerate() {
        let v = node_integral(plan, f, i, &|k, c, g, o: &mut [f64]| apply(ti, k, c, g, o));
        acc.iter_mut().zip(v).for_each(|(a, b)| *a += b);
    }
    Ok(Vector::from_vec(acc))
}

fn check_pair(kernel: &SingularKernel, f: &GridFn) -> Result<()> {
    if kernel.grid != *f.grid() {
        return Err(Error::Grid("kernel and input sampled on different grids".into()));
    }
    if kernel.cols != f.dim() {
        return Err(Error::Dimension(format!(
            "kernel has {} columns but input has dimension {}",
            kernel.cols,
            f.dim()
        )));
    }
    Ok(())
}

fn plans_for(kernel: &SingularKernel, f: &GridFn) -> Result<Vec<Plan>> {
    kernel
        .terms
        .iter()
        .map(|t| Plan::new(t.mu, f, kernel.rows))
        .collect()
}

/// (K * f)(t_i) = ∫_0^{t_i} K(t_i - τ) f(τ) dτ at every node, with f
/// interpolated piecewise linearly.
///
/// Endpoint exponents of `f` are honoured: the result carries lead exponent
/// μ + lead when that is negative.
pub fn conv_singular(kernel: &SingularKernel, f: &GridFn) -> Result<GridFn> {
    check_pair(kernel, f)?;
    let plans = plans_for(kernel, f)?;
    convolve_all(&plans, kernel.rows, f, |t, k, c, g, o| kernel.apply(t, k, c, g, o))
}

/// (K * f)(t_i) at a single node.
pub fn conv_singular_at(kernel: &SingularKernel, f: &GridFn, i: usize) -> Result<Vector> {
    check_pair(kernel, f)?;
    let plans = plans_for(kernel, f)?;
    convolve_at(&plans, kernel.rows, f, i, |t, k, c, g, o| kernel.apply(t, k, c, g, o))
}

fn hold_node(kernel: &SingularKernel, tables: &[MomentTable], u: &GridFn, i: usize) -> Vec<f64> {
    let mut out = vec![0.0; kernel.rows];
    for (ti, (term, table)) in kernel.terms.iter().zip(tables).enumerate() {
        let hmu = kernel.grid.step().powf(term.mu);
        // panel q in s holds u_{i-1-q}
        for q in 0..=i {
            if q < i {
                kernel.apply(ti, q, hmu * table.left[q], u.factor(i - 1 - q), &mut out);
            }
            if q >= 1 {
                kernel.apply(ti, q, hmu * table.right[q - 1], u.factor(i - q), &mut out);
            }
        }
    }
    out
}

fn check_hold(kernel: &SingularKernel, u: &GridFn) -> Result<Vec<MomentTable>> {
    check_pair(kernel, u)?;
    if !u.is_regular() {
        return Err(Error::Domain(
            "piecewise-constant hold needs a regular control".into(),
        ));
    }
    kernel
        .terms
        .iter()
        .map(|t| {
            check_mu(t.mu)?;
            Ok(MomentTable::new(t.mu - 1.0, kernel.grid.intervals() + 1))
        })
        .collect()
}

/// Convolution with a piecewise-constant input u(τ) = u_k on [t_k, t_{k+1}).
pub fn conv_piecewise_constant(kernel: &SingularKernel, u: &GridFn) -> Result<GridFn> {
    let tables = check_hold(kernel, u)?;
    let n = kernel.grid.intervals();
    let rows: Vec<Vec<f64>> = (1..=n)
        .into_par_iter()
        .map(|i| hold_node(kernel, &tables, u, i))
        .collect();
    let mut data = vec![0.0; kernel.rows];
    for r in rows {
        data.extend(r);
    }
    GridFn::from_samples(kernel.grid, kernel.rows, data)
}

/// Piecewise-constant convolution at a single node.
pub fn conv_piecewise_constant_at(kernel: &SingularKernel, u: &GridFn, i: usize) -> Result<Vector> {
    let tables = check_hold(kernel, u)?;
    if i > kernel.grid.intervals() {
        return Err(Error::Grid(format!("node {i} outside the grid")));
    }
    Ok(Vector::from_vec(hold_node(kernel, &tables, u, i)))
}

/// Left Riemann-Liouville integral I^α_{0+} f at every node by product
/// trapezoidal quadrature. α = 0 is the identity.
pub fn frac_integral_left(alpha: f64, f: &GridFn) -> Result<GridFn> {
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(Error::Order(format!("integral order must be >= 0, got {alpha}")));
    }
    if alpha == 0.0 {
        return Ok(f.clone());
    }
    let c = rgamma(alpha);
    let plan = Plan::new(alpha, f, f.dim())?;
    convolve_all(&[plan], f.dim(), f, move |_, _, coef, g, out| {
        for (o, v) in out.iter_mut().zip(g) {
            *o += coef * c * v;
        }
    })
}

/// Right Riemann-Liouville integral I^α_{T-} f = ∫_t^T (τ-t)^{α-1} f(τ) dτ / Γ(α).
pub fn frac_integral_right(alpha: f64, f: &GridFn) -> Result<GridFn> {
    Ok(frac_integral_left(alpha, &f.reversed())?.reversed())
}
