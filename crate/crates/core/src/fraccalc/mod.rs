//! Fractional integrals, Riemann-Liouville derivatives and weakly singular
//! convolutions on uniform grids.

mod derivative;
mod grid;
mod integral;

pub use derivative::{gl_weights, rl_compose, rl_derivative};
pub use grid::{GridFn, TimeGrid};
pub use integral::{
    conv_piecewise_constant, conv_piecewise_constant_at, conv_singular, conv_singular_at,
    frac_integral_left, frac_integral_right, SingularKernel,
};
