//! Riemann-Liouville derivatives D^α = d/dt I^{1-α} on a uniform grid.

use rayon::prelude::*;

use super::grid::{GridFn, EXPONENT_EPS};
use super::integral::frac_integral_left;
use crate::specfun::{gamma, rgamma};
use crate::{Error, Result};

/// Grünwald-Letnikov weights w_0 = 1, w_k = w_{k-1} (1 - (α+1)/k).
pub fn gl_weights(alpha: f64, len: usize) -> Vec<f64> {
    let mut w = Vec::with_capacity(len);
    let mut prev = 1.0;
    for k in 0..len {
        if k > 0 {
            prev *= 1.0 - (alpha + 1.0) / k as f64;
        }
        w.push(prev);
    }
    w
}

/// Left Riemann-Liouville derivative D^α_{0+} f for 0 < α ≤ 1.
///
/// Regular inputs use the Grünwald-Letnikov sum
/// h^{-α} Σ_k w_k f(t_{i-k}); if f(0) ≠ 0 the result behaves like t^{-α}
/// and is returned with that lead exponent. Inputs with a lead exponent
/// are integrated to F = I^{1-α} f first and F is differentiated in factored
/// form. α = 1 is the ordinary derivative.
pub fn rl_derivative(alpha: f64, f: &GridFn) -> Result<GridFn> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Order(format!("derivative order must lie in (0, 1], got {alpha}")));
    }
    if f.trail() < 0.0 {
        return Err(Error::Domain(
            "derivative of a function singular at the right end is not supported".into(),
        ));
    }
    if f.lead() == 0.0 {
        regular(alpha, f)
    } else {
        factored(alpha, f)
    }
}

fn regular(alpha: f64, f: &GridFn) -> Result<GridFn> {
    let grid = *f.grid();
    let (n, dim, h) = (grid.intervals(), f.dim(), grid.step());
    let plain = f.to_plain();
    let at = |i: usize| &plain[i * dim..(i + 1) * dim];

    if alpha == 1.0 {
        // second order: central inside, one-sided three-point at the ends
        let mut data = Vec::with_capacity(plain.len());
        for i in 0..=n {
            for k in 0..dim {
                let v = |j: usize| at(j)[k];
                data.push(if i == 0 {
                    (-3.0 * v(0) + 4.0 * v(1) - v(2)) / (2.0 * h)
                } else if i == n {
                    (3.0 * v(n) - 4.0 * v(n - 1) + v(n - 2)) / (2.0 * h)
                } else {
                    (v(i + 1) - v(i - 1)) / (2.0 * h)
                });
            }
        }
        return GridFn::from_samples(grid, dim, data);
    }

    let w = gl_weights(alpha, n + 1);
    let scale = h.powf(-alpha);
    let rows: Vec<Vec<f64>> = (0..=n)
        .into_par_iter()
        .map(|i| {
            let mut acc = vec![0.0; dim];
            for (k, wk) in w.iter().enumerate().take(i + 1) {
                for (a, v) in acc.iter_mut().zip(at(i - k)) {
                    *a += wk * v;
                }
            }
            acc.iter().map(|a| a * scale).collect()
        })
        .collect();

    if at(0).iter().all(|v| *v == 0.0) {
        return GridFn::from_samples(grid, dim, rows.concat());
    }
    // f(0) ≠ 0 leaves f(0) t^{-α}/Γ(1-α) in the derivative
    let mut data = Vec::with_capacity(plain.len());
    data.extend(at(0).iter().map(|v| v * rgamma(1.0 - alpha)));
    for (i, row) in rows.iter().enumerate().skip(1) {
        let tw = grid.node(i).powf(alpha);
        data.extend(row.iter().map(|v| v * tw));
    }
    GridFn::factored(grid, dim, data, -alpha, 0.0)
}

fn factored(alpha: f64, f: &GridFn) -> Result<GridFn> {
    let grid = *f.grid();
    let (n, dim, h) = (grid.intervals(), f.dim(), grid.step());
    let e0 = f.lead();
    let lam = e0 + 1.0 - alpha;
    let big = frac_integral_left(1.0 - alpha, f)?;

    // F = t^λ C with C_0 = c(0) Γ(e0+1)/Γ(e0+2-α)
    let ratio = gamma(e0 + 1.0)? * rgamma(e0 + 2.0 - alpha);
    let c0: Vec<f64> = f
        .factor(0)
        .iter()
        .map(|c| c * ratio * f.weight_trail(0))
        .collect();
    let mut c = Vec::with_capacity((n + 1) * dim);
    c.extend(&c0);
    for i in 1..=n {
        let t = grid.node(i);
        let w = big.weight(i) / t.powf(lam);
        c.extend(big.factor(i).iter().map(|v| v * w));
    }
    let cf = |i: usize, k: usize| c[i * dim + k];
    let deriv = |i: usize, k: usize| -> f64 {
        if i == 0 {
            (-3.0 * cf(0, k) + 4.0 * cf(1, k) - cf(2, k)) / (2.0 * h)
        } else if i == n {
            (3.0 * cf(n, k) - 4.0 * cf(n - 1, k) + cf(n - 2, k)) / (2.0 * h)
        } else {
            (cf(i + 1, k) - cf(i - 1, k)) / (2.0 * h)
        }
    };

    let mut data = Vec::with_capacity((n + 1) * dim);
    if lam.abs() <= EXPONENT_EPS {
        for i in 0..=n {
            for k in 0..dim {
                data.push(deriv(i, k));
            }
        }
        return GridFn::from_samples(grid, dim, data);
    }
    // d/dt (t^λ C) = t^{λ-1} (λ C + t C')
    for i in 0..=n {
        let t = grid.node(i);
        for k in 0..dim {
            data.push(lam * cf(i, k) + t * deriv(i, k));
        }
    }
    GridFn::factored(grid, dim, data, lam - 1.0, 0.0)
}

/// R^{α,j} f: j-fold application of [`rl_derivative`]; j = 0 is the identity.
pub fn rl_compose(alpha: f64, j: usize, f: &GridFn) -> Result<GridFn> {
    let mut out = f.clone();
    for _ in 0..j {
        out = rl_derivative(alpha, &out)?;
    }
    Ok(out)
}
