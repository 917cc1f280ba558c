use crate::fraccalc::GridFn;
use crate::quadrature::{graded_gauss, QuadraticMoments};
use crate::specfun::Order;
use crate::system::{Control, Hold};
use crate::{Error, Result};

/// Modified energy ∫_0^T |(T-t)^{α+β-1} u(t)|² dt of a grid control.
///
/// The control is taken as the system sees it (constant or linear between
/// nodes); the algebraic weight, including a trail exponent of the control,
/// is integrated exactly on every panel.
pub fn energy(ord: Order, u: &Control) -> Result<f64> {
    energy_inner(ord, u, u)
}

/// Weighted inner product ∫_0^T (T-t)^{2(α+β-1)} ⟨u(t), v(t)⟩ dt.
pub fn energy_inner(ord: Order, u: &Control, v: &Control) -> Result<f64> {
    let (fu, fv) = (u.samples(), v.samples());
    if fu.grid() != fv.grid() || fu.dim() != fv.dim() {
        return Err(Error::Dimension("controls live on different grids or dimensions".into()));
    }
    if fu.lead() != 0.0 || fv.lead() != 0.0 {
        return Err(Error::NonIntegrable(
            "energy of a control singular at t = 0 is not supported".into(),
        ));
    }
    let mut w = 2.0 * ord.kernel_exponent() + fu.trail() + fv.trail();
    if w.abs() < 1e-12 {
        w = 0.0;
    }
    if w <= -1.0 {
        return Err(Error::NonIntegrable(format!(
            "energy weight (T-t)^{w} is not integrable at T"
        )));
    }
    let grid = fu.grid();
    let n = grid.intervals();
    let moments = QuadraticMoments::new(w, n);
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let mut total = 0.0;
    // panel k covers s = T - t in [k h, (k+1) h]; y = 0 at node n-k
    for k in 0..n {
        let (a0, a1) = ends(fu, u.hold(), n, k);
        let (b0, b1) = ends(fv, v.hold(), n, k);
        let [m0, m1, m2] = moments.m[k];
        total += dot(a0, b0) * (m0 - 2.0 * m1 + m2)
            + (dot(a0, b1) + dot(a1, b0)) * (m1 - m2)
            + dot(a1, b1) * m2;
    }
    Ok(total * grid.step().powf(w + 1.0))
}

fn ends(f: &GridFn, hold: Hold, n: usize, k: usize) -> (&[f64], &[f64]) {
    match hold {
        Hold::Constant => (f.factor(n - 1 - k), f.factor(n - 1 - k)),
        Hold::Linear => (f.factor(n - k), f.factor(n - k - 1)),
    }
}

/// ∫_0^T g(s) ds for a closed-form energy density, by a graded Gauss rule
/// independent of the Gramian's.
pub(crate) fn definition_integral<F>(t_end: f64, g: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let err = std::cell::RefCell::new(None);
    let v = graded_gauss(t_end, 40, 6.0, 16, 0.0, |s| match g(s) {
        Ok(v) => v,
        Err(e) => {
            err.borrow_mut().get_or_insert(e);
            0.0
        }
    });
    match err.into_inner() {
        Some(e) => Err(e),
        None => Ok(v),
    }
}
