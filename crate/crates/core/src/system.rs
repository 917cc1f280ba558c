//! Initialized fractional systems D^α x = A x + B u - ψ, their forward
//! trajectories γ and memories M_β = I^β γ.

use rayon::prelude::*;

use crate::fraccalc::{
    conv_piecewise_constant, conv_piecewise_constant_at, conv_singular, conv_singular_at, GridFn,
    SingularKernel, TimeGrid,
};
use crate::specfun::{ml_matrix, rgamma, Order};
use crate::{Error, Mat, Result, Vector};

/// Forward trace of the pre-history on [0, T].
#[derive(Debug, Clone, PartialEq)]
pub enum History {
    /// Pre-history constant equal to `a`; induces ψ(t) = -a t^{-α}/Γ(1-α).
    Constant(Vector),
    /// User-supplied ψ samples (may carry a lead exponent at t = 0).
    Sampled(GridFn),
}

/// How node samples of a control are extended between nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hold {
    /// u(t) = u_k on [t_k, t_{k+1}).
    Constant,
    /// Linear interpolation of the (factored) samples.
    Linear,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Control {
    samples: GridFn,
    hold: Hold,
}

impl Control {
    pub fn new(samples: GridFn, hold: Hold) -> Result<Self> {
        if hold == Hold::Constant && !samples.is_regular() {
            return Err(Error::Domain(
                "a piecewise-constant control cannot carry endpoint exponents".into(),
            ));
        }
        Ok(Control { samples, hold })
    }

    pub fn piecewise_constant(samples: GridFn) -> Result<Self> {
        Self::new(samples, Hold::Constant)
    }

    pub fn piecewise_linear(samples: GridFn) -> Self {
        Control {
            samples,
            hold: Hold::Linear,
        }
    }

    pub fn zero(grid: TimeGrid, m: usize) -> Self {
        Control {
            samples: GridFn::zeros(grid, m),
            hold: Hold::Constant,
        }
    }

    pub fn samples(&self) -> &GridFn {
        &self.samples
    }

    pub fn hold(&self) -> Hold {
        self.hold
    }

    pub fn dim(&self) -> usize {
        self.samples.dim()
    }

    pub fn grid(&self) -> &TimeGrid {
        self.samples.grid()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FracSystem {
    a: Mat,
    b: Mat,
    alpha: f64,
    history: History,
}

impl FracSystem {
    pub fn new(a: Mat, b: Mat, alpha: f64, history: History) -> Result<Self> {
        let n = a.nrows();
        if n == 0 || !a.is_square() {
            return Err(Error::Dimension(format!("A must be square and non-empty, got {}x{}", a.nrows(), a.ncols())));
        }
        if b.nrows() != n || b.ncols() == 0 {
            return Err(Error::Dimension(format!("B must be {n}xm with m >= 1, got {}x{}", b.nrows(), b.ncols())));
        }
        if a.iter().chain(b.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Domain("A and B must have finite entries".into()));
        }
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Order(format!("alpha must lie in (0, 1], got {alpha}")));
        }
        match &history {
            History::Constant(v) if v.len() != n => {
                return Err(Error::Dimension(format!("history vector has length {}, expected {n}", v.len())))
            }
            History::Sampled(psi) if psi.dim() != n => {
                return Err(Error::Dimension(format!("sampled history has dimension {}, expected {n}", psi.dim())))
            }
            _ => {}
        }
        Ok(FracSystem { a, b, alpha, history })
    }

    pub fn n(&self) -> usize {
        self.a.nrows()
    }

    pub fn m(&self) -> usize {
        self.b.ncols()
    }

    pub fn a(&self) -> &Mat {
        &self.a
    }

    pub fn b(&self) -> &Mat {
        &self.b
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn history(&self) -> &History {
        &self.history
    }

    /// Same system with a constant history replaced by its sampled ψ.
    pub fn with_sampled_history(&self, grid: TimeGrid) -> Result<Self> {
        Ok(FracSystem {
            history: History::Sampled(psi_on_grid(self, grid)?),
            ..self.clone()
        })
    }
}

/// Initialization function ψ(t).
///
/// Constant history gives -a t^{-α}/Γ(1-α), which vanishes for α = 1;
/// sampled histories are looked up at the grid node nearest t.
pub fn history_psi(sys: &FracSystem, t: f64) -> Result<Vector> {
    match &sys.history {
        History::Constant(a) => {
            let c = rgamma(1.0 - sys.alpha);
            if c == 0.0 || a.iter().all(|v| *v == 0.0) {
                return Ok(Vector::zeros(a.len()));
            }
            if !(t > 0.0) {
                return Err(Error::Domain(format!("psi of a constant history is singular at t = {t}")));
            }
            Ok(a * (-c * t.powf(-sys.alpha)))
        }
        History::Sampled(psi) => {
            let g = psi.grid();
            let x = t / g.step();
            let i = x.round();
            if (x - i).abs() > 1e-9 || i < 0.0 || i as usize > g.intervals() {
                return Err(Error::Grid(format!("t = {t} is not a node of the history grid")));
            }
            psi.value(i as usize)
                .ok_or_else(|| Error::Domain(format!("sampled psi is undefined at t = {t}")))
        }
    }
}

/// ψ on a grid; a constant history becomes t^{-α} times -a/Γ(1-α).
pub fn psi_on_grid(sys: &FracSystem, grid: TimeGrid) -> Result<GridFn> {
    match &sys.history {
        History::Constant(a) => {
            let c = -rgamma(1.0 - sys.alpha);
            let lead = if c == 0.0 { 0.0 } else { -sys.alpha };
            GridFn::from_factor_fn(grid, sys.n(), lead, 0.0, |_| a * c)
        }
        History::Sampled(psi) => {
            if *psi.grid() != grid {
                return Err(Error::Grid("sampled history lives on a different grid".into()));
            }
            Ok(psi.clone())
        }
    }
}

/// Kernel Φ_β(s) = s^{α+β-1} E_{α,α+β}(A s^α), optionally times a right factor.
///
/// The series terms A^k s^{kα}/Γ(kα+α+β) with kα < 2 are split off and
/// integrated exactly; only the remainder is interpolated.
pub fn phi_kernel(a: &Mat, ord: Order, grid: TimeGrid, right: Option<&Mat>) -> Result<SingularKernel> {
    let mu = ord.kernel_exponent() + 1.0;
    let (alpha, gb) = (ord.alpha(), ord.alpha() + ord.beta());
    let n = a.nrows();
    let exact_terms = (2.0 / alpha).ceil() as usize;
    let mut coeffs = Vec::with_capacity(exact_terms);
    let mut power = Mat::identity(n, n);
    for k in 0..exact_terms {
        let c = &power * rgamma(k as f64 * alpha + gb);
        coeffs.push(match right {
            Some(r) => c * r,
            None => c,
        });
        power = &power * a;
    }
    SingularKernel::expanded(grid, mu, alpha, &coeffs, |s| {
        let e = ml_matrix(alpha, gb, a, s)?;
        Ok(match right {
            Some(r) => e * r,
            None => e,
        })
    })
}

fn check_control(sys: &FracSystem, u: &Control, grid: TimeGrid) -> Result<()> {
    if *u.grid() != grid {
        return Err(Error::Grid("control sampled on a different grid".into()));
    }
    if u.dim() != sys.m() {
        return Err(Error::Dimension(format!("control has dimension {}, expected m = {}", u.dim(), sys.m())));
    }
    Ok(())
}

fn order_for(sys: &FracSystem, beta: f64, allow_short: bool) -> Result<Order> {
    if allow_short {
        Order::new(sys.alpha, beta)
    } else {
        Order::memory(sys.alpha, beta)
    }
}

// t^β E_{α,β+1}(A t^α) a
fn constant_history_term(sys: &FracSystem, beta: f64, a: &Vector, t: f64) -> Result<Vector> {
    let e = ml_matrix(sys.alpha, beta + 1.0, &sys.a, t)?;
    let w = if beta == 0.0 { 1.0 } else { t.powf(beta) };
    Ok(e * a * w)
}

fn control_part(sys: &FracSystem, ord: Order, u: &Control, grid: TimeGrid, at: Option<usize>) -> Result<GridOrVec> {
    let kernel = phi_kernel(&sys.a, ord, grid, Some(&sys.b))?;
    Ok(match (u.hold, at) {
        (Hold::Constant, None) => GridOrVec::Grid(conv_piecewise_constant(&kernel, &u.samples)?),
        (Hold::Constant, Some(i)) => GridOrVec::Vec(conv_piecewise_constant_at(&kernel, &u.samples, i)?),
        (Hold::Linear, None) => GridOrVec::Grid(conv_singular(&kernel, &u.samples)?),
        (Hold::Linear, Some(i)) => GridOrVec::Vec(conv_singular_at(&kernel, &u.samples, i)?),
    })
}

enum GridOrVec {
    Grid(GridFn),
    Vec(Vector),
}

fn memory_impl(sys: &FracSystem, ord: Order, u: &Control, grid: TimeGrid, at: Option<usize>) -> Result<GridOrVec> {
    check_control(sys, u, grid)?;
    let driven = control_part(sys, ord, u, grid, at)?;
    let n = sys.n();
    match &sys.history {
        History::Constant(a) => {
            let beta = ord.beta();
            match driven {
                GridOrVec::Vec(v) => {
                    let t = grid.node(at.expect("single node"));
                    Ok(GridOrVec::Vec(v + constant_history_term(sys, beta, a, t)?))
                }
                GridOrVec::Grid(g) => {
                    let rows: Vec<Vector> = (0..=grid.intervals())
                        .into_par_iter()
                        .map(|i| constant_history_term(sys, beta, a, grid.node(i)))
                        .collect::<Result<_>>()?;
                    let mut data = Vec::with_capacity((grid.intervals() + 1) * n);
                    for r in &rows {
                        data.extend(r.iter());
                    }
                    let free = GridFn::from_samples(grid, n, data)?;
                    Ok(GridOrVec::Grid(g.add(&free)?))
                }
            }
        }
        History::Sampled(psi) => {
            if *psi.grid() != grid {
                return Err(Error::Grid("sampled history lives on a different grid".into()));
            }
            let kernel = phi_kernel(&sys.a, ord, grid, None)?;
            match driven {
                GridOrVec::Vec(v) => {
                    let i = at.expect("single node");
                    Ok(GridOrVec::Vec(v - conv_singular_at(&kernel, psi, i)?))
                }
                GridOrVec::Grid(g) => Ok(GridOrVec::Grid(g.sub(&conv_singular(&kernel, psi)?)?)),
            }
        }
    }
}

fn grid_result(r: GridOrVec) -> GridFn {
    match r {
        GridOrVec::Grid(g) => g,
        GridOrVec::Vec(_) => unreachable!("all-node evaluation"),
    }
}

fn vec_result(r: GridOrVec) -> Vector {
    match r {
        GridOrVec::Vec(v) => v,
        GridOrVec::Grid(_) => unreachable!("single-node evaluation"),
    }
}

/// Forward trajectory γ(t) = ∫_0^t e_α^{A(t-τ)} (B u(τ) - ψ(τ)) dτ at every node.
///
/// A constant history uses γ = E_α(A t^α) a + ∫ e_α^{A(t-τ)} B u dτ.
pub fn trajectory(sys: &FracSystem, u: &Control, grid: TimeGrid) -> Result<GridFn> {
    let ord = Order::new(sys.alpha, 0.0)?;
    Ok(grid_result(memory_impl(sys, ord, u, grid, None)?))
}

/// Memory of order β, M_β(t) = ∫_0^t Φ_β(t-τ)(B u(τ) - ψ(τ)) dτ, at every node.
///
/// Requires β ≥ 1 - α. A constant history contributes t^β E_{α,β+1}(A t^α) a,
/// so M_β(0) = a when β = 0 and 0 when β > 0.
pub fn memory(sys: &FracSystem, beta: f64, u: &Control, grid: TimeGrid) -> Result<GridFn> {
    memory_with(sys, beta, u, grid, false)
}

/// [`memory`] with an explicit override admitting 0 ≤ β < 1 - α.
pub fn memory_with(sys: &FracSystem, beta: f64, u: &Control, grid: TimeGrid, allow_short: bool) -> Result<GridFn> {
    let ord = order_for(sys, beta, allow_short)?;
    Ok(grid_result(memory_impl(sys, ord, u, grid, None)?))
}

/// M_β(T) at the final node only.
pub fn memory_at_end(sys: &FracSystem, beta: f64, u: &Control, grid: TimeGrid) -> Result<Vector> {
    memory_at_end_with(sys, beta, u, grid, false)
}

pub fn memory_at_end_with(
    sys: &FracSystem,
    beta: f64,
    u: &Control,
    grid: TimeGrid,
    allow_short: bool,
) -> Result<Vector> {
    let ord = order_for(sys, beta, allow_short)?;
    Ok(vec_result(memory_impl(sys, ord, u, grid, Some(grid.intervals()))?))
}
