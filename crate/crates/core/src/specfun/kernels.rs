use super::mittag_leffler::ml_matrix;
use super::order::Order;
use crate::{Error, Mat, Result};

/// α-exponential matrix e_α^{At} = t^{α-1} E_{α,α}(A t^α), t > 0.
///
/// This is the fundamental solution of D^α x = A x; for α = 1 it is exp(At).
pub fn alpha_exp(alpha: f64, a: &Mat, t: f64) -> Result<Mat> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!(
            "alpha-exponential is singular at t = 0 and requires t > 0, got {t}"
        )));
    }
    Ok(ml_matrix(alpha, alpha, a, t)? * t.powf(alpha - 1.0))
}

/// Memory kernel Φ_β(t) = t^{α+β-1} E_{α,α+β}(A t^α).
///
/// At t = 0 the kernel is 0 when α + β > 1, the identity when α + β = 1, and
/// undefined (domain error) when α + β < 1.
pub fn phi_beta(ord: Order, a: &Mat, t: f64) -> Result<Mat> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("phi_beta requires t >= 0, got {t}")));
    }
    let e = ord.kernel_exponent();
    let smooth = ml_matrix(ord.alpha(), ord.alpha() + ord.beta(), a, t)?;
    if t == 0.0 {
        if e > 0.0 {
            return Ok(Mat::zeros(a.nrows(), a.ncols()));
        }
        if e < 0.0 {
            return Err(Error::Domain(format!(
                "phi_beta is singular at t = 0 when alpha + beta < 1 (alpha + beta - 1 = {e})"
            )));
        }
        return Ok(smooth);
    }
    Ok(smooth * t.powf(e))
}
