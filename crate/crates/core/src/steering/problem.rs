use std::fmt;
use std::str::FromStr;

use super::energy::energy;
use super::gramian::{gramian, GRAMIAN_COND_LIMIT};
use super::laws::{kalman_steering, optimal_control, rank_steering};
use crate::fraccalc::TimeGrid;
use crate::specfun::Order;
use crate::system::{memory_at_end, Control, FracSystem};
use crate::{Error, Result, Vector};

/// Steer M_β(T) of `sys` to `target` on `grid` (T is the grid horizon).
#[derive(Debug, Clone)]
pub struct SteeringProblem {
    sys: FracSystem,
    order: Order,
    target: Vector,
    grid: TimeGrid,
}

impl SteeringProblem {
    pub fn new(sys: FracSystem, beta: f64, target: Vector, grid: TimeGrid) -> Result<Self> {
        let order = Order::memory(sys.alpha(), beta)?;
        if target.len() != sys.n() {
            return Err(Error::Dimension(format!(
                "target has length {}, expected n = {}",
                target.len(),
                sys.n()
            )));
        }
        if target.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("target must be finite".into()));
        }
        Ok(SteeringProblem {
            sys,
            order,
            target,
            grid,
        })
    }

    pub fn system(&self) -> &FracSystem {
        &self.sys
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn beta(&self) -> f64 {
        self.order.beta()
    }

    pub fn target(&self) -> &Vector {
        &self.target
    }

    pub fn grid(&self) -> TimeGrid {
        self.grid
    }

    pub fn horizon(&self) -> f64 {
        self.grid.horizon()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    GramianOptimal,
    Rank,
    Kalman,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::GramianOptimal => "gramian",
            Method::Rank => "rank",
            Method::Kalman => "kalman",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gramian" | "gramian-optimal" => Ok(Method::GramianOptimal),
            "rank" => Ok(Method::Rank),
            "kalman" => Ok(Method::Kalman),
            other => Err(Error::Domain(format!(
                "unknown method {other:?} (expected gramian, rank or kalman)"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SteeringResult {
    pub method: Method,
    pub control: Control,
    /// Modified energy of the grid control.
    pub energy: f64,
    /// Modified energy of the exact control law, where it has a closed form.
    pub definition_energy: Option<f64>,
    /// ⟨Q⁻¹ f_T, f_T⟩ for the optimal control.
    pub gramian_energy: Option<f64>,
    /// Condition estimate of the Gramian, when one was computed.
    pub gramian_condition: Option<f64>,
    /// Simulated M_β(T).
    pub achieved: Vector,
    /// ‖achieved - b‖∞.
    pub residual: f64,
}

/// f_T(ψ, b) = -b - ∫_0^T Φ_β(T-τ) ψ(τ) dτ, i.e. the free memory at T minus b.
pub fn f_target(p: &SteeringProblem) -> Result<Vector> {
    let zero = Control::zero(p.grid, p.sys.m());
    Ok(memory_at_end(&p.sys, p.beta(), &zero, p.grid)? - &p.target)
}

pub(crate) fn finish(
    p: &SteeringProblem,
    method: Method,
    control: Control,
    definition_energy: Option<f64>,
    gramian_energy: Option<f64>,
    gramian_condition: Option<f64>,
) -> Result<SteeringResult> {
    let achieved = memory_at_end(&p.sys, p.beta(), &control, p.grid)?;
    let residual = (&achieved - &p.target).amax();
    Ok(SteeringResult {
        method,
        energy: energy(p.order, &control)?,
        control,
        definition_energy,
        gramian_energy,
        gramian_condition,
        achieved,
        residual,
    })
}

/// Computes the control of the requested law.
pub fn steer(p: &SteeringProblem, method: Method, bump_order: Option<usize>) -> Result<SteeringResult> {
    match method {
        Method::GramianOptimal => optimal_control(p),
        Method::Rank => rank_steering(p),
        Method::Kalman => kalman_steering(p, bump_order.unwrap_or(p.sys.n() + 2)),
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub achieved: Vector,
    pub residual: f64,
    pub energy: f64,
    /// ⟨Q⁻¹ f_T, f_T⟩ when the Gramian is numerically invertible.
    pub gramian_energy: Option<f64>,
    /// energy - gramian_energy; nonnegative up to quadrature error.
    pub energy_gap: Option<f64>,
    pub gramian_condition: f64,
}

/// Re-simulates a control: residual at T, energy, and the gap to the
/// minimum energy ⟨Q⁻¹f, f⟩.
pub fn verify_steering(p: &SteeringProblem, control: &Control) -> Result<VerifyReport> {
    let achieved = memory_at_end(&p.sys, p.beta(), control, p.grid)?;
    let residual = (&achieved - &p.target).amax();
    let e = energy(p.order, control)?;
    let g = gramian(p)?;
    let mut gramian_energy = None;
    if g.condition <= GRAMIAN_COND_LIMIT {
        let f = f_target(p)?;
        if let Some(ch) = g.q.clone().cholesky() {
            gramian_energy = Some(ch.solve(&f).dot(&f));
        }
    }
    Ok(VerifyReport {
        achieved,
        residual,
        energy: e,
        energy_gap: gramian_energy.map(|g| e - g),
        gramian_energy,
        gramian_condition: g.condition,
    })
}
