//! Fractional initial value problems `D₀^α u = f(x, u)`, `1 < α < 2`, on
//! `[0, 1]`.
//!
//! The problem is solved through its Volterra form
//! `u(x) = u₀ + u₀' x + Γ(α)⁻¹ ∫₀ˣ (x-t)^{α-1} f(t, u(t)) dt`
//! with a fractional Adams-Bashforth-Moulton scheme on a uniform mesh: a
//! product-rectangle predictor, a product-trapezoid corrector, and one
//! re-evaluation of the corrector. History sums are accumulated directly,
//! so a solve costs `O(K²)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::potential::Potential;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IvpError {
    #[error("mesh needs at least 2 subintervals, got {0}")]
    TooCoarse(usize),
    #[error("mesh step {0} does not divide [0, 1] into whole subintervals")]
    BadStep(f64),
    #[error("fractional order {0} must lie strictly inside (1, 2)")]
    BadOrder(f64),
    #[error("divergence at node {node} (x = {x})")]
    Divergence { node: usize, x: f64 },
    #[error("grid function lives on {got} nodes, mesh has {want}")]
    MeshMismatch { got: usize, want: usize },
}

/// Uniform mesh `x_k = k/K` on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mesh {
    intervals: usize,
}

impl Mesh {
    pub fn new(intervals: usize) -> Result<Self, IvpError> {
        if intervals < 2 {
            return Err(IvpError::TooCoarse(intervals));
        }
        Ok(Mesh { intervals })
    }

    /// Mesh with step `h`; `1/h` must be an integer to within `1e-9`.
    pub fn with_step(h: f64) -> Result<Self, IvpError> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(IvpError::BadStep(h));
        }
        let k = (1.0 / h).round();
        if (k * h - 1.0).abs() > 1e-9 {
            return Err(IvpError::BadStep(h));
        }
        Mesh::new(k as usize)
    }

    /// Number of subintervals `K`.
    pub fn intervals(&self) -> usize {
        self.intervals
    }

    pub fn step(&self) -> f64 {
        1.0 / self.intervals as f64
    }

    /// Number of nodes, `K + 1`.
    pub fn len(&self) -> usize {
        self.intervals + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn node(&self, k: usize) -> f64 {
        k as f64 / self.intervals as f64
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.intervals).map(|k| self.node(k))
    }

    /// The mesh with every subinterval halved.
    pub fn refined(&self) -> Mesh {
        Mesh {
            intervals: 2 * self.intervals,
        }
    }
}

/// Complex samples of a solution at every node of a mesh.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    mesh: Mesh,
    values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(mesh: Mesh, values: Vec<Complex64>) -> Result<Self, IvpError> {
        if values.len() != mesh.len() {
            return Err(IvpError::MeshMismatch {
                got: values.len(),
                want: mesh.len(),
            });
        }
        Ok(GridFunction { mesh, values })
    }

    pub fn mesh(&self) -> Mesh {
        self.mesh
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn at(&self, k: usize) -> Complex64 {
        self.values[k]
    }

    /// Value at `x = 1`.
    pub fn endpoint(&self) -> Complex64 {
        *self.values.last().expect("a mesh has at least three nodes")
    }

    pub fn conj(&self) -> GridFunction {
        GridFunction {
            mesh: self.mesh,
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }
}

/// `D₀^α u = rhs(node, x, u)`, `u(0) = u0`, `u'(0) = u0_prime`.
///
/// The right-hand side receives the node index within the mesh being solved
/// together with its coordinate.
pub struct IvpSpec<F> {
    pub alpha: f64,
    pub u0: Complex64,
    pub u0_prime: Complex64,
    pub rhs: F,
}

impl<F> IvpSpec<F>
where
    F: Fn(usize, f64, Complex64) -> Complex64,
{
    pub fn new(alpha: f64, u0: Complex64, u0_prime: Complex64, rhs: F) -> Result<Self, IvpError> {
        check_order(alpha)?;
        Ok(IvpSpec {
            alpha,
            u0,
            u0_prime,
            rhs,
        })
    }
}

fn check_order(alpha: f64) -> Result<(), IvpError> {
    if alpha > 1.0 && alpha < 2.0 {
        Ok(())
    } else {
        Err(IvpError::BadOrder(alpha))
    }
}

/// `(m+1)^p - m^p` without cancellation.
fn forward_difference(p: f64, m: usize) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let m = m as f64;
    m.powf(p) * (p * (1.0 / m).ln_1p()).exp_m1()
}

/// `(m+2)^p + m^p - 2(m+1)^p` with the leading cancellation removed.
fn second_difference(p: f64, m: usize) -> f64 {
    let base = (m + 1) as f64;
    let x = 1.0 / base;
    let up = (p * x.ln_1p()).exp_m1();
    let down = (p * (-x).ln_1p()).exp_m1();
    base.powf(p) * (up + down)
}

/// Predictor weights `b_{j,k+1} = (k+1-j)^α - (k-j)^α`, `j = 0..=k`.
pub fn weights_b(alpha: f64, k: usize) -> Vec<f64> {
    (0..=k).map(|j| forward_difference(alpha, k - j)).collect()
}

/// `a_{0,k+1} = k^{α+1} - (k-α)(k+1)^α`.
fn corrector_first(alpha: f64, k: usize) -> f64 {
    if k == 0 {
        return alpha;
    }
    let kf = k as f64;
    let kp1 = kf + 1.0;
    kp1.powf(alpha) * (kf * (alpha * (-1.0 / kp1).ln_1p()).exp_m1() + alpha)
}

/// Corrector weights `a_{j,k+1}`, `j = 0..=k+1`.
pub fn weights_a(alpha: f64, k: usize) -> Vec<f64> {
    let mut w = Vec::with_capacity(k + 2);
    w.push(corrector_first(alpha, k));
    for j in 1..=k {
        w.push(second_difference(alpha + 1.0, k - j));
    }
    w.push(1.0);
    w
}

/// Weight tables for one `(α, K)` pair, indexed by `k - j`.
struct WeightTable {
    b: Vec<f64>,
    a_mid: Vec<f64>,
    a_first: Vec<f64>,
}

impl WeightTable {
    fn new(alpha: f64, intervals: usize) -> Self {
        WeightTable {
            b: (0..intervals).map(|m| forward_difference(alpha, m)).collect(),
            a_mid: (0..intervals).map(|m| second_difference(alpha + 1.0, m)).collect(),
            a_first: (0..intervals).map(|k| corrector_first(alpha, k)).collect(),
        }
    }
}

/// Predictor-corrector solve with `sweeps` corrector re-evaluations
/// (`sweeps = 1` is the standard P-C-C scheme).
pub fn solve_with_sweeps<F>(spec: &IvpSpec<F>, mesh: Mesh, sweeps: usize) -> Result<GridFunction, IvpError>
where
    F: Fn(usize, f64, Complex64) -> Complex64,
{
    check_order(spec.alpha)?;
    let alpha = spec.alpha;
    let n = mesh.intervals();
    let h = mesh.step();
    let ha = h.powf(alpha);
    let c_pred = ha / gamma(1.0 + alpha);
    let c_corr = ha / gamma(2.0 + alpha);
    let table = WeightTable::new(alpha, n);

    let mut u = Vec::with_capacity(n + 1);
    let mut f = Vec::with_capacity(n + 1);
    u.push(spec.u0);
    f.push((spec.rhs)(0, 0.0, spec.u0));

    for k in 0..n {
        let x = mesh.node(k + 1);
        let mut pred = table.b[k] * f[0];
        let mut corr = table.a_first[k] * f[0];
        for (j, &fj) in f.iter().enumerate().take(k + 1).skip(1) {
            let m = k - j;
            pred += table.b[m] * fj;
            corr += table.a_mid[m] * fj;
        }
        let base = spec.u0 + spec.u0_prime * x;
        let predicted = base + c_pred * pred;
        let mut value = base + c_corr * ((spec.rhs)(k + 1, x, predicted) + corr);
        for _ in 0..sweeps {
            value = base + c_corr * ((spec.rhs)(k + 1, x, value) + corr);
        }
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(IvpError::Divergence { node: k + 1, x });
        }
        u.push(value);
        f.push((spec.rhs)(k + 1, x, value));
    }
    GridFunction::new(mesh, u)
}

/// Predictor, corrector, one corrector re-evaluation.
pub fn solve<F>(spec: &IvpSpec<F>, mesh: Mesh) -> Result<GridFunction, IvpError>
where
    F: Fn(usize, f64, Complex64) -> Complex64,
{
    solve_with_sweeps(spec, mesh, 1)
}

/// `(4 u_{h/2} - u_h) / 3` on the coarse nodes.
pub fn richardson(coarse: &GridFunction, fine: &GridFunction) -> Result<GridFunction, IvpError> {
    let mesh = coarse.mesh();
    if fine.mesh() != mesh.refined() {
        return Err(IvpError::MeshMismatch {
            got: fine.values().len(),
            want: mesh.refined().len(),
        });
    }
    let values = coarse
        .values()
        .iter()
        .enumerate()
        .map(|(k, &c)| (4.0 * fine.at(2 * k) - c) / 3.0)
        .collect();
    GridFunction::new(mesh, values)
}

pub fn solve_richardson<F>(spec: &IvpSpec<F>, mesh: Mesh) -> Result<GridFunction, IvpError>
where
    F: Fn(usize, f64, Complex64) -> Complex64,
{
    let coarse = solve(spec, mesh)?;
    let fine = solve(spec, mesh.refined())?;
    richardson(&coarse, &fine)
}

/// Discretisation used for a shooting solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    /// Predictor-corrector on the given mesh only.
    Plain,
    /// Predictor-corrector on `h` and `h/2` combined by Richardson
    /// extrapolation.
    #[default]
    Richardson,
}

fn potential_on(q: &Potential, mesh: Mesh) -> Vec<f64> {
    mesh.nodes().map(|x| q.eval(x)).collect()
}

fn shoot_plain(q: &Potential, lambda: Complex64, alpha: f64, mesh: Mesh) -> Result<GridFunction, IvpError> {
    let qv = potential_on(q, mesh);
    let spec = IvpSpec::new(
        alpha,
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        |k: usize, _x: f64, u: Complex64| (qv[k] - lambda) * u,
    )?;
    solve(&spec, mesh)
}

/// Solution of `-D₀^α u + q u = λ u`, `u(0) = 0`, `u'(0) = 1`. Its endpoint
/// value is the shooting residual, zero exactly at Dirichlet eigenvalues.
pub fn slp_shoot(
    q: &Potential,
    lambda: Complex64,
    alpha: f64,
    mesh: Mesh,
    scheme: Scheme,
) -> Result<GridFunction, IvpError> {
    match scheme {
        Scheme::Plain => shoot_plain(q, lambda, alpha, mesh),
        Scheme::Richardson => {
            let coarse = shoot_plain(q, lambda, alpha, mesh)?;
            let fine = shoot_plain(q, lambda, alpha, mesh.refined())?;
            richardson(&coarse, &fine)
        }
    }
}

/// Sensitivity of the shooting solution `u` to the perturbation direction
/// `w`: `-D₀^α v + q v = λ v - w u`, `v(0) = v'(0) = 0`. `u` must live on
/// `mesh`.
pub fn sensitivity_shoot<W>(
    q: &Potential,
    lambda: Complex64,
    w: W,
    u: &GridFunction,
    alpha: f64,
    mesh: Mesh,
) -> Result<GridFunction, IvpError>
where
    W: Fn(f64) -> f64,
{
    if u.mesh() != mesh {
        return Err(IvpError::MeshMismatch {
            got: u.values().len(),
            want: mesh.len(),
        });
    }
    let qv = potential_on(q, mesh);
    let forcing: Vec<Complex64> = mesh.nodes().zip(u.values()).map(|(x, &uk)| w(x) * uk).collect();
    let zero = Complex64::new(0.0, 0.0);
    let spec = IvpSpec::new(alpha, zero, zero, |k: usize, _x: f64, v: Complex64| {
        (qv[k] - lambda) * v + forcing[k]
    })?;
    solve(&spec, mesh)
}

/// [`sensitivity_shoot`] with its own shooting solutions on `h` and `h/2`,
/// combined by Richardson extrapolation.
pub fn sensitivity_shoot_richardson<W>(
    q: &Potential,
    lambda: Complex64,
    w: W,
    alpha: f64,
    mesh: Mesh,
) -> Result<GridFunction, IvpError>
where
    W: Fn(f64) -> f64 + Copy,
{
    let fine_mesh = mesh.refined();
    let u = shoot_plain(q, lambda, alpha, mesh)?;
    let u_fine = shoot_plain(q, lambda, alpha, fine_mesh)?;
    let coarse = sensitivity_shoot(q, lambda, w, &u, alpha, mesh)?;
    let fine = sensitivity_shoot(q, lambda, w, &u_fine, alpha, fine_mesh)?;
    richardson(&coarse, &fine)
}
