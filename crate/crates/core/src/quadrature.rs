//! Gauss-Legendre rules and the exact panel moments used by product integration.

use std::f64::consts::PI;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess, then Newton on P_n
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

// P_n(x) and P_n'(x) by the three-term recurrence
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// 10-point rule mapped to [0, 1], used for smooth moment integrals.
pub(crate) fn unit_rule() -> &'static (Vec<f64>, Vec<f64>) {
    use std::sync::OnceLock;
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| {
        let (x, w) = gauss_legendre(10);
        (
            x.iter().map(|v| 0.5 * (v + 1.0)).collect(),
            w.iter().map(|v| 0.5 * v).collect(),
        )
    })
}

/// Linear-interpolation weights for ∫_0^1 (k + y)^p L(y) dy on panels k = 0..len.
///
/// For L linear with L(0) = a, L(1) = b the integral is `left[k] a + right[k] b`.
/// Scaling by h^{p+1} gives the weights on the panel [kh, (k+1)h].
#[derive(Debug, Clone)]
pub struct MomentTable {
    pub p: f64,
    pub left: Vec<f64>,
    pub right: Vec<f64>,
}

impl MomentTable {
    /// Requires p > -1 so that the k = 0 panel is integrable.
    pub fn new(p: f64, len: usize) -> Self {
        assert!(p > -1.0, "moment exponent must exceed -1, got {p}");
        let (y, w) = unit_rule();
        let mut left = Vec::with_capacity(len);
        let mut right = Vec::with_capacity(len);
        for k in 0..len {
            let (m0, m1) = if k == 0 {
                (1.0 / (p + 1.0), 1.0 / (p + 2.0))
            } else if k <= 3 {
                let kf = k as f64;
                let m0 = ((kf + 1.0).powf(p + 1.0) - kf.powf(p + 1.0)) / (p + 1.0);
                let m1 = ((kf + 1.0).powf(p + 2.0) - kf.powf(p + 2.0)) / (p + 2.0) - kf * m0;
                (m0, m1)
            } else {
                let kf = k as f64;
                let (mut m0, mut m1) = (0.0, 0.0);
                for (yi, wi) in y.iter().zip(w) {
                    let v = wi * (kf + yi).powf(p);
                    m0 += v;
                    m1 += v * yi;
                }
                (m0, m1)
            };
            left.push(m0 - m1);
            right.push(m1);
        }
        MomentTable { p, left, right }
    }

    /// Combined weight of node k in Σ_{panels < count} (left a_k + right a_{k+1}).
    pub fn node_weight(&self, k: usize, count: usize) -> f64 {
        let mut w = 0.0;
        if k < count {
            w += self.left[k];
        }
        if k >= 1 && k <= count {
            w += self.right[k - 1];
        }
        w
    }
}

/// Moments ∫_0^1 (k + y)^p y^j dy for j = 0, 1, 2 on panels k = 0..len.
#[derive(Debug, Clone)]
pub struct QuadraticMoments {
    pub m: Vec<[f64; 3]>,
}

impl QuadraticMoments {
    pub fn new(p: f64, len: usize) -> Self {
        assert!(p > -1.0, "moment exponent must exceed -1, got {p}");
        let (y, w) = unit_rule();
        let m = (0..len)
            .map(|k| {
                let kf = k as f64;
                if k == 0 {
                    [1.0 / (p + 1.0), 1.0 / (p + 2.0), 1.0 / (p + 3.0)]
                } else if k <= 3 {
                    let i = |q: f64| ((kf + 1.0).powf(q + 1.0) - kf.powf(q + 1.0)) / (q + 1.0);
                    let (i0, i1, i2) = (i(p), i(p + 1.0), i(p + 2.0));
                    // y = (k + y) - k
                    [i0, i1 - kf * i0, i2 - 2.0 * kf * i1 + kf * kf * i0]
                } else {
                    let mut acc = [0.0; 3];
                    for (yi, wi) in y.iter().zip(w) {
                        let v = wi * (kf + yi).powf(p);
                        acc[0] += v;
                        acc[1] += v * yi;
                        acc[2] += v * yi * yi;
                    }
                    acc
                }
            })
            .collect();
        QuadraticMoments { m }
    }
}

/// ∫_0^T f(s) ds by composite Gauss-Legendre on panels with breakpoints
/// T (j/P)^grading, which cluster toward s = 0.
pub fn graded_gauss<F, V>(t_end: f64, panels: usize, grading: f64, points: usize, zero: V, f: F) -> V
where
    F: Fn(f64) -> V,
    V: std::ops::AddAssign + std::ops::Mul<f64, Output = V> + Clone,
{
    let (x, w) = gauss_legendre(points);
    let mut total = zero;
    for j in 0..panels {
        let a = t_end * (j as f64 / panels as f64).powf(grading);
        let b = t_end * ((j + 1) as f64 / panels as f64).powf(grading);
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        for (xi, wi) in x.iter().zip(&w) {
            total += f(mid + half * xi) * (wi * half);
        }
    }
    total
}
