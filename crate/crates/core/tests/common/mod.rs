#![allow(dead_code)]

use fracmem::fraccalc::{GridFn, TimeGrid};
use fracmem::{Mat, Vector};

/// exp(M) by scaling and squaring with a degree-18 Taylor polynomial.
pub fn expm(m: &Mat) -> Mat {
    let n = m.nrows();
    let norm = m.norm();
    let s = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
    let x = m / 2f64.powi(s);
    let mut term = Mat::identity(n, n);
    let mut sum = Mat::identity(n, n);
    for k in 1..=18 {
        term = &term * &x / k as f64;
        sum += &term;
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

pub fn scalar_fn(grid: TimeGrid, f: impl Fn(f64) -> f64) -> GridFn {
    GridFn::from_fn(grid, 1, |t| Vector::from_element(1, f(t))).unwrap()
}

/// Least-squares slope of log(err) against log(h).
pub fn observed_order(ns: &[usize], errs: &[f64]) -> f64 {
    let xs: Vec<f64> = ns.iter().map(|n| -(*n as f64).ln()).collect();
    let ys: Vec<f64> = errs.iter().map(|e| e.ln()).collect();
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}

/// Composite trapezoid over the plain samples of a scalar grid function.
pub fn trapezoid(f: &GridFn) -> f64 {
    let n = f.grid().intervals();
    let h = f.grid().step();
    let mut s = 0.0;
    for i in 0..=n {
        let w = if i == 0 || i == n { 0.5 } else { 1.0 };
        s += w * f.value(i).unwrap()[0];
    }
    s * h
}
