//! Steering the memory M_β(T) to a target: the β-controllability Gramian,
//! the minimum modified-energy control, the rank-condition and Kalman laws,
//! and simulation-based verification.

mod energy;
mod gramian;
mod laws;
mod problem;

pub use energy::{energy, energy_inner};
pub use gramian::{gramian, GramianResult, GRAMIAN_COND_LIMIT, GRAMIAN_PANELS};
pub use laws::{kalman_matrices, kalman_steering, optimal_control, rank_steering, KERNEL_COND_LIMIT};
pub use problem::{f_target, steer, verify_steering, Method, SteeringProblem, SteeringResult, VerifyReport};
