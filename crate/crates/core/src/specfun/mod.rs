//! Special functions: gamma, Mittag-Leffler and the kernels built from them.

mod gamma;
mod kernels;
mod mittag_leffler;
mod order;

pub use gamma::{beta_fn, gamma, ln_gamma, rgamma, MAX_GAMMA_ARG};
pub use kernels::{alpha_exp, phi_beta};
pub use mittag_leffler::{ml_matrix, ml_scalar, ML_MATRIX_TOL, ML_SCALAR_TOL, ML_TERM_CAP};
pub use order::Order;
