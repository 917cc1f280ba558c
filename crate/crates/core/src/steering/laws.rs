use rayon::prelude::*;

use super::energy::definition_integral;
use super::gramian::{gramian, GRAMIAN_COND_LIMIT};
use super::problem::{f_target, finish, Method, SteeringProblem, SteeringResult};
use crate::fraccalc::{rl_derivative, GridFn};
use crate::specfun::{beta_fn, ml_matrix};
use crate::system::Control;
use crate::{Error, Mat, Result, Vector};

/// Condition estimate above which E_{α,α+β}(A s^α) is treated as non-invertible.
pub const KERNEL_COND_LIMIT: f64 = 1e12;

const RANK_TOL: f64 = 1e-10;

fn kernel(p: &SteeringProblem, s: f64) -> Result<Mat> {
    let ord = p.order();
    ml_matrix(ord.alpha(), ord.alpha() + ord.beta(), p.system().a(), s)
}

fn kernel_inverse(p: &SteeringProblem, s: f64) -> Result<Mat> {
    let e = kernel(p, s)?;
    let sv = e.singular_values();
    let condition = if sv.min() > 0.0 { sv.max() / sv.min() } else { f64::INFINITY };
    if !(condition <= KERNEL_COND_LIMIT) {
        return Err(Error::KernelInversion { s, condition });
    }
    e.try_inverse().ok_or(Error::KernelInversion { s, condition })
}

fn numerical_rank(m: &Mat) -> usize {
    let sv = m.singular_values();
    let top = sv.max();
    sv.iter().filter(|&&v| v > RANK_TOL * top).count()
}

/// Minimum-energy control
/// ū(t) = -(T-t)^{1-α-β} B* E(T-t)* Q_T⁻¹ f_T with E = E_{α,α+β}(A s^α).
pub fn optimal_control(p: &SteeringProblem) -> Result<SteeringResult> {
    let g = gramian(p)?;
    if !(g.condition <= GRAMIAN_COND_LIMIT) {
        return Err(Error::SingularGramian { condition: g.condition });
    }
    let f = f_target(p)?;
    let y = g
        .q
        .clone()
        .cholesky()
        .ok_or(Error::SingularGramian { condition: g.condition })?
        .solve(&f);
    let b = p.system().b();
    let grid = p.grid();
    let t_end = grid.horizon();
    let rows: Vec<Vector> = (0..=grid.intervals())
        .into_par_iter()
        .map(|i| Ok(-(b.transpose() * kernel(p, t_end - grid.node(i))?.transpose() * &y)))
        .collect::<Result<_>>()?;
    let data = rows.iter().flat_map(|r| r.iter().copied()).collect();
    let trail = -p.order().kernel_exponent();
    let samples = GridFn::factored(grid, b.ncols(), data, 0.0, trail)?;
    let definition = definition_integral(t_end, |s| {
        Ok((b.transpose() * kernel(p, s)?.transpose() * &y).norm_squared())
    })?;
    finish(
        p,
        Method::GramianOptimal,
        Control::piecewise_linear(samples),
        Some(definition),
        Some(y.dot(&f)),
        Some(g.condition),
    )
}

fn right_inverse(b: &Mat) -> Result<Mat> {
    let n = b.nrows();
    let rank = numerical_rank(b);
    if rank < n {
        return Err(Error::RankDeficient {
            what: "B",
            rank,
            needed: n,
        });
    }
    let bbt = b * b.transpose();
    let inv = bbt.try_inverse().ok_or(Error::RankDeficient {
        what: "B",
        rank,
        needed: n,
    })?;
    Ok(b.transpose() * inv)
}

/// Open-loop law for rank B = n:
/// û(t) = (T-t)^{1-α-β} T⁻¹ B⁺ E(T-t)⁻¹ w with w = -f_T and B⁺ = B*(BB*)⁻¹.
pub fn rank_steering(p: &SteeringProblem) -> Result<SteeringResult> {
    let bp = right_inverse(p.system().b())?;
    let w = -f_target(p)?;
    let grid = p.grid();
    let t_end = grid.horizon();
    let rows: Vec<Vector> = (0..=grid.intervals())
        .into_par_iter()
        .map(|i| Ok(&bp * kernel_inverse(p, t_end - grid.node(i))? * &w / t_end))
        .collect::<Result<_>>()?;
    let data = rows.iter().flat_map(|r| r.iter().copied()).collect();
    let trail = -p.order().kernel_exponent();
    let samples = GridFn::factored(grid, bp.nrows(), data, 0.0, trail)?;
    let definition = definition_integral(t_end, |s| {
        Ok((&bp * kernel_inverse(p, s)? * &w).norm_squared() / (t_end * t_end))
    })?;
    finish(
        p,
        Method::Rank,
        Control::piecewise_linear(samples),
        Some(definition),
        None,
        None,
    )
}

/// Blocks K_0, ..., K_{n-1} (each m×n) of the pseudoinverse of the Kalman
/// matrix [B, AB, ..., A^{n-1}B], so that Σ_j A^j B K_j = I.
pub fn kalman_matrices(a: &Mat, b: &Mat) -> Result<Vec<Mat>> {
    let (n, m) = (b.nrows(), b.ncols());
    let mut k = Mat::zeros(n, n * m);
    let mut block = b.clone();
    for j in 0..n {
        k.view_mut((0, j * m), (n, m)).copy_from(&block);
        block = a * block;
    }
    let rank = numerical_rank(&k);
    if rank < n {
        return Err(Error::RankDeficient {
            what: "Kalman matrix",
            rank,
            needed: n,
        });
    }
    let eps = RANK_TOL * k.singular_values().max();
    let pinv = k
        .pseudo_inverse(eps)
        .map_err(|e| Error::Domain(e.to_string()))?;
    Ok((0..n).map(|j| pinv.rows(j * m, m).into_owned()).collect())
}

/// Kalman-rank law û = Σ_j K_j R^{α,j} μ, where R^{α,j} is the j-fold
/// Riemann-Liouville derivative and
/// μ(t) = (T-t)^{1-α-β} E(T-t)⁻¹ w φ(t), φ(t) = c (t/T)^p (1 - t/T)^p, ∫φ = 1.
///
/// The identity behind the law moves the derivatives onto the kernel, which
/// is exact for β = 0 or n = 1; otherwise the achieved memory differs from
/// the target and `residual` reports by how much.
pub fn kalman_steering(p: &SteeringProblem, bump_order: usize) -> Result<SteeringResult> {
    let sys = p.system();
    let n = sys.n();
    let ks = kalman_matrices(sys.a(), sys.b())?;
    let w = -f_target(p)?;
    let grid = p.grid();
    let t_end = grid.horizon();
    let pf = bump_order as f64;
    let c = 1.0 / (t_end * beta_fn(pf + 1.0, pf + 1.0)?);
    let bump = |t: f64| {
        let x = t / t_end;
        c * if bump_order == 0 { 1.0 } else { (x * (1.0 - x)).powi(bump_order as i32) }
    };
    let trail = -p.order().kernel_exponent();
    let rows: Vec<Vector> = (0..=grid.intervals())
        .into_par_iter()
        .map(|i| {
            let t = grid.node(i);
            Ok(kernel_inverse(p, t_end - t)? * &w * bump(t))
        })
        .collect::<Result<_>>()?;
    let mut data: Vec<f64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
    let mu = if n == 1 || trail == 0.0 {
        GridFn::factored(grid, n, data, 0.0, trail)?
    } else {
        // the derivatives below act on plain samples
        if bump_order == 0 && trail < 0.0 {
            return Err(Error::Domain(
                "bump order 0 leaves the Kalman density singular at T; use p >= 1".into(),
            ));
        }
        let last = grid.intervals();
        for i in 0..=last {
            let wgt = if i == last { 0.0 } else { (t_end - grid.node(i)).powf(trail) };
            for v in &mut data[i * n..(i + 1) * n] {
                *v *= wgt;
            }
        }
        GridFn::from_samples(grid, n, data)?
    };
    let alpha = sys.alpha();
    let mut deriv = mu;
    let mut u = deriv.map_matrix(&ks[0])?;
    for k in ks.iter().skip(1) {
        deriv = rl_derivative(alpha, &deriv)?;
        u = u.add(&deriv.map_matrix(k)?)?;
    }
    finish(p, Method::Kalman, Control::piecewise_linear(u), None, None, None)
}
