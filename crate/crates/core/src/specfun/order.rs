use crate::{Error, Result};

/// Tolerance used when deciding whether α + β sits exactly on 1.
const UNIT_SUM_TOL: f64 = 1e-12;

/// Fractional orders (α, β): α is the order of the system, β the order of the
/// memory that is observed and steered.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order {
    alpha: f64,
    beta: f64,
}

impl Order {
    /// Accepts 0 < α ≤ 1 and β ≥ 0. Short memories (β < 1 - α) are accepted
    /// here and flagged by [`Order::is_short_memory`].
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Order(format!("alpha must lie in (0, 1], got {alpha}")));
        }
        if !(beta >= 0.0) || !beta.is_finite() {
            return Err(Error::Order(format!("beta must be finite and >= 0, got {beta}")));
        }
        Ok(Self { alpha, beta })
    }

    /// Like [`Order::new`] but rejects β < 1 - α.
    pub fn memory(alpha: f64, beta: f64) -> Result<Self> {
        let ord = Self::new(alpha, beta)?;
        ord.require_memory()?;
        Ok(ord)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// β < 1 - α: the memory is not defined in the usual sense and only the
    /// Kalman steering law admits it.
    pub fn is_short_memory(&self) -> bool {
        self.beta < 1.0 - self.alpha - UNIT_SUM_TOL
    }

    pub fn require_memory(&self) -> Result<()> {
        if self.is_short_memory() {
            Err(Error::Order(format!(
                "memory of order beta = {} requires beta >= 1 - alpha = {}",
                self.beta,
                1.0 - self.alpha
            )))
        } else {
            Ok(())
        }
    }

    /// α + β - 1, snapped to exactly zero when α + β is 1 up to rounding.
    /// This is the algebraic exponent of the memory kernel Φ_β.
    pub fn kernel_exponent(&self) -> f64 {
        let e = self.alpha + self.beta - 1.0;
        if e.abs() < UNIT_SUM_TOL {
            0.0
        } else {
            e
        }
    }
}
