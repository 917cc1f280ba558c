use rayon::prelude::*;

use super::problem::SteeringProblem;
use crate::quadrature::gauss_legendre;
use crate::specfun::{ml_matrix, Order};
use crate::{Mat, Result};

/// Number of graded Gauss panels used for the Gramian.
pub const GRAMIAN_PANELS: usize = 64;
const GRAMIAN_GRADING: f64 = 6.0;
const GRAMIAN_POINTS: usize = 10;
/// Condition estimate above which Q_T is treated as singular.
pub const GRAMIAN_COND_LIMIT: f64 = 1e12;

#[derive(Debug, Clone)]
pub struct GramianResult {
    pub q: Mat,
    /// λ_max / λ_min of the symmetrized Q (infinite if λ_min ≤ 0).
    pub condition: f64,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
}

/// β-controllability Gramian Q_T = ∫_0^T (T-t)^{2(1-α-β)} Φ_β(T-t) B B* Φ_β(T-t)* dt.
///
/// The algebraic factors cancel, leaving ∫_0^T E(s) B B* E(s)* ds with
/// E(s) = E_{α,α+β}(A s^α), which is integrated by Gauss-Legendre on panels
/// graded toward s = 0 (where E has an s^α term).
pub fn gramian(p: &SteeringProblem) -> Result<GramianResult> {
    gramian_of(p.system().a(), p.system().b(), p.order(), p.horizon(), GRAMIAN_PANELS)
}

pub(crate) fn gramian_of(a: &Mat, b: &Mat, ord: Order, t_end: f64, panels: usize) -> Result<GramianResult> {
    let (x, w) = gauss_legendre(GRAMIAN_POINTS);
    let (alpha, gb) = (ord.alpha(), ord.alpha() + ord.beta());
    let n = a.nrows();
    let parts: Vec<Mat> = (0..panels)
        .into_par_iter()
        .map(|j| {
            let lo = t_end * (j as f64 / panels as f64).powf(GRAMIAN_GRADING);
            let hi = t_end * ((j + 1) as f64 / panels as f64).powf(GRAMIAN_GRADING);
            let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
            let mut acc = Mat::zeros(n, n);
            for (xi, wi) in x.iter().zip(&w) {
                let eb = ml_matrix(alpha, gb, a, mid + half * xi)? * b;
                acc += &eb * eb.transpose() * (wi * half);
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let mut q = Mat::zeros(n, n);
    for part in parts {
        q += part;
    }
    let q = (&q + q.transpose()) * 0.5;
    let eig = q.clone().symmetric_eigen();
    let min = eig.eigenvalues.min();
    let max = eig.eigenvalues.max();
    let condition = if min > 0.0 { max / min } else { f64::INFINITY };
    Ok(GramianResult {
        q,
        condition,
        min_eigenvalue: min,
        max_eigenvalue: max,
    })
}
