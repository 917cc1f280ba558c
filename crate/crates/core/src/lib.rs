//! Initialized fractional linear time-invariant systems with Riemann-Liouville
//! derivatives.
//!
//! The crate simulates the forward trajectory of
//!
//! ```text
//! D^α x(t) = A x(t) + B u(t),   0 < α ≤ 1,
//! ```
//!
//! together with an initialization function ψ carrying the pre-history of the
//! state, and it computes controls that steer the *memory of order β*
//! (the β-order fractional integral of the trajectory) to a prescribed value.
//!
//! Module map:
//!
//! * [`specfun`]: gamma, Mittag-Leffler (scalar and matrix), the α-exponential
//!   matrix and the memory kernel Φ_β.
//! * [`fraccalc`]: uniform time grids, left/right fractional integrals,
//!   Grünwald-Letnikov derivatives and weakly singular convolution quadrature.
//! * [`system`]: the initialized system, its trajectory and its memory.
//! * [`steering`]: the β-controllability Gramian, the minimum modified-energy
//!   control, the rank and Kalman steering laws and their verification.

pub mod error;
pub mod fraccalc;
pub mod quadrature;
pub mod specfun;
pub mod steering;
pub mod system;

pub use error::{Error, Result};

/// Dense real matrix used throughout the crate.
pub type Mat = nalgebra::DMatrix<f64>;
/// Dense real column vector.
pub type Vector = nalgebra::DVector<f64>;
