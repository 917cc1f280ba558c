//! Two-parameter Mittag-Leffler function E_{α,β}(z) = Σ_k z^k / Γ(kα + β),
//! for real scalars and for matrix arguments A t^α.

use std::f64::consts::{FRAC_PI_2, PI};

use super::gamma::{ln_gamma, rgamma};
use crate::{Error, Mat, Result};

/// Relative stopping tolerance of the scalar series.
pub const ML_SCALAR_TOL: f64 = 1e-14;
/// Bound on the operator norm of the discarded matrix-series tail.
pub const ML_MATRIX_TOL: f64 = 1e-13;
/// Hard cap on the number of series terms.
pub const ML_TERM_CAP: usize = 10_000;

// Σ|terms| / |sum| above which the alternating series has lost too many digits.
const CANCELLATION_LIMIT: f64 = 1e3;

/// Neumaier-compensated running sum.
#[derive(Debug, Default, Clone, Copy)]
struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

struct Series {
    sum: f64,
    magnitude: f64,
}

enum SeriesFailure {
    Overflow,
    TermCap,
}

fn scalar_series(alpha: f64, beta: f64, z: f64) -> std::result::Result<Series, SeriesFailure> {
    let mut acc = Compensated::default();
    let mut magnitude = 0.0;
    let ln_abs = z.abs().ln();
    let mut previous = f64::INFINITY;
    let mut recurrence = rgamma(beta);

    for k in 0..ML_TERM_CAP {
        let term = if alpha == 1.0 {
            // z^k / Γ(k + β) by exact ratio
            if k > 0 {
                recurrence *= z / (k as f64 - 1.0 + beta);
            }
            recurrence
        } else {
            let arg = k as f64 * alpha + beta;
            let ln_mag = k as f64 * ln_abs - ln_gamma(arg).map_err(|_| SeriesFailure::Overflow)?;
            if ln_mag > 709.0 {
                return Err(SeriesFailure::Overflow);
            }
            let mag = ln_mag.exp();
            if z < 0.0 && k % 2 == 1 {
                -mag
            } else {
                mag
            }
        };
        if !term.is_finite() {
            return Err(SeriesFailure::Overflow);
        }
        acc.add(term);
        magnitude += term.abs();
        if !acc.value().is_finite() {
            return Err(SeriesFailure::Overflow);
        }
        if k > 0 && term.abs() <= previous && term.abs() < ML_SCALAR_TOL * (1.0 + acc.value().abs()) {
            return Ok(Series {
                sum: acc.value(),
                magnitude,
            });
        }
        previous = term.abs();
    }
    Err(SeriesFailure::TermCap)
}

/// E_{α,β}(-x) for 0 < α < 1, x > 0, from the Laplace-type representation
///
/// ```text
/// E_{α,β}(-x) = (1/(πx)) ∫_0^∞ e^{-s} s^{α-β} R(s^α / x) ds,
/// R(ρ) = (ρ sin βπ + sin (β-α)π) / (ρ² + 2ρ cos απ + 1),
/// ```
///
/// valid for 0 < β ≤ 1; larger β are lowered with
/// E_{α,β}(z) = (E_{α,β-α}(z) - 1/Γ(β-α)) / z.
fn negative_axis(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    if beta > 1.0 {
        let lower = negative_axis(alpha, beta - alpha, x)?;
        return Ok((lower - rgamma(beta - alpha)) / -x);
    }
    let sin_b = (beta * PI).sin();
    let sin_ba = ((beta - alpha) * PI).sin();
    let cos_a = (alpha * PI).cos();
    let power = 1.0 + alpha - beta;

    // exp-sinh substitution s = exp(π/2 sinh τ)
    let integrand = |tau: f64| -> (f64, f64) {
        let s = (FRAC_PI_2 * tau.sinh()).exp();
        if s == 0.0 || s > 745.0 {
            return (0.0, 0.0);
        }
        let rho = s.powf(alpha) / x;
        let rational = (rho * sin_b + sin_ba) / (rho * rho + 2.0 * rho * cos_a + 1.0);
        let v = (-s).exp() * s.powf(power) * rational * FRAC_PI_2 * tau.cosh();
        (v, v.abs())
    };

    const LO: f64 = -6.5;
    const HI: f64 = 3.0;
    let mut h = 0.5;
    let count = ((HI - LO) / h).round() as usize;
    let (mut sum, mut abs_sum) = (0.0, 0.0);
    for j in 0..=count {
        let (v, a) = integrand(LO + j as f64 * h);
        sum += v;
        abs_sum += a;
    }
    let mut estimate = sum * h;
    for level in 1..=11 {
        let points = count << (level - 1);
        for j in 0..points {
            let (v, a) = integrand(LO + (j as f64 + 0.5) * h);
            sum += v;
            abs_sum += a;
        }
        h *= 0.5;
        let refined = sum * h;
        if level >= 3 && (refined - estimate).abs() <= 1e-14 * abs_sum * h {
            return Ok(refined / (PI * x));
        }
        estimate = refined;
    }
    Err(Error::NonConvergence {
        what: "Mittag-Leffler integral representation",
        terms: count << 11,
    })
}

/// Scalar two-parameter Mittag-Leffler function E_{α,β}(z).
///
/// The power series is summed with compensation until the next term drops
/// below `1e-14 (1 + |partial sum|)` on the decreasing tail. On the negative
/// axis with 0 < α < 1 the alternating series can lose most of its digits to
/// cancellation; when that happens the value is taken from an integral
/// representation instead.
pub fn ml_scalar(alpha: f64, beta: f64, z: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha.is_finite()) || !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::Domain(format!(
            "Mittag-Leffler requires alpha, beta > 0, got ({alpha}, {beta})"
        )));
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!("Mittag-Leffler argument must be finite, got {z}")));
    }
    if z == 0.0 {
        return Ok(rgamma(beta));
    }
    let attempt = scalar_series(alpha, beta, z);
    if z > 0.0 || alpha >= 1.0 {
        return match attempt {
            Ok(s) => Ok(s.sum),
            Err(SeriesFailure::Overflow) => Err(Error::Overflow(format!(
                "E_{{{alpha},{beta}}}({z}) exceeds f64 range"
            ))),
            Err(SeriesFailure::TermCap) => Err(Error::NonConvergence {
                what: "scalar Mittag-Leffler series",
                terms: ML_TERM_CAP,
            }),
        };
    }
    match attempt {
        Ok(s) if s.magnitude <= CANCELLATION_LIMIT * s.sum.abs() => Ok(s.sum),
        _ => negative_axis(alpha, beta, -z),
    }
}

/// Matrix Mittag-Leffler function E_{α,β}(A t^α) = Σ_k A^k t^{kα} / Γ(kα + β).
///
/// Summation stops once a geometric bound on the Frobenius norm of the
/// remaining tail falls below [`ML_MATRIX_TOL`] (relative to the sum when it
/// exceeds one), or exactly when a power of `A t^α` vanishes.
pub fn ml_matrix(alpha: f64, beta: f64, a: &Mat, t: f64) -> Result<Mat> {
    ml_matrix_impl(alpha, beta, a, t, true)
}

pub(crate) fn ml_matrix_impl(alpha: f64, beta: f64, a: &Mat, t: f64, detect_nilpotent: bool) -> Result<Mat> {
    if !(alpha > 0.0 && alpha.is_finite()) || !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::Domain(format!(
            "Mittag-Leffler requires alpha, beta > 0, got ({alpha}, {beta})"
        )));
    }
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "matrix Mittag-Leffler needs a square matrix, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("matrix Mittag-Leffler requires t >= 0, got {t}")));
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("matrix has non-finite entries".into()));
    }
    let n = a.nrows();
    let mut sum = Mat::identity(n, n) * rgamma(beta);
    if t == 0.0 || n == 0 {
        return Ok(sum);
    }
    if n == 1 {
        // scalar path handles cancellation on the negative axis
        return Ok(Mat::from_element(1, 1, ml_scalar(alpha, beta, a[(0, 0)] * t.powf(alpha))?));
    }
    let x = a * t.powf(alpha);
    let norm = x.norm();
    if norm == 0.0 {
        return Ok(sum);
    }
    let ln_norm = norm.ln();
    let bound = |j: usize| -> f64 {
        let arg = j as f64 * alpha + beta;
        match ln_gamma(arg) {
            Ok(lg) => (j as f64 * ln_norm - lg).exp(),
            Err(_) => f64::INFINITY,
        }
    };

    // powers are kept at unit scale; |x|^k / Γ(kα+β) is folded in through logs
    let unit = &x / norm;
    let mut carry = Mat::zeros(n, n);
    let mut power = Mat::identity(n, n);
    for k in 1..ML_TERM_CAP {
        power = &power * &unit;
        if detect_nilpotent && power.iter().all(|v| *v == 0.0) {
            return Ok(sum + carry);
        }
        let coef = if k as f64 * ln_norm < 600.0 {
            norm.powi(k as i32) * rgamma(k as f64 * alpha + beta)
        } else {
            bound(k)
        };
        if !coef.is_finite() || power.iter().any(|v| !v.is_finite()) {
            return Err(Error::Overflow(format!("E_{{{alpha},{beta}}}(A t^alpha) at t = {t}")));
        }
        for ((s, c), p) in sum.iter_mut().zip(carry.iter_mut()).zip(power.iter()) {
            let term = p * coef;
            let total = *s + term;
            if s.abs() >= term.abs() {
                *c += (*s - total) + term;
            } else {
                *c += (term - total) + *s;
            }
            *s = total;
        }
        let b1 = bound(k + 1);
        let b2 = bound(k + 2);
        if b2 < b1 {
            let tail = b1 / (1.0 - b2 / b1);
            if tail <= ML_MATRIX_TOL * sum.norm().max(1.0) {
                return Ok(sum + carry);
            }
        }
    }
    Err(Error::NonConvergence {
        what: "matrix Mittag-Leffler series",
        terms: ML_TERM_CAP,
    })
}
