//! Potential reconstruction from one finite complex spectrum.
//!
//! The unknown potential is expanded as `q(x) = Σ_{k=1}^M q_k sin(kπx)` and
//! the coefficients are fitted so that the shooting residual
//! `F_n(q) = u(q, λ_n)(1)` vanishes at every given eigenvalue. The Newton
//! iteration uses a frozen Jacobian: the derivative at `q = 0` evaluated at
//! the zero-potential eigenvalues, computed once from the Green's function
//! of `D₀^α + λ`. Real and imaginary parts are stacked into one real
//! `2N × M` least-squares system, so every update is real.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::fivp::{self, IvpError, Mesh, Scheme};
use crate::mlf::{self, MLParams, MlError};
use crate::potential::{sine_basis, Potential};
use crate::quad;
use crate::spectrum::{self, SpectrumError, SpectrumOptions};

#[derive(Debug, Clone, thiserror::Error)]
pub enum InverseError {
    #[error("shooting failed at eigenvalue {n} ({lambda}): {source}")]
    Ivp {
        n: usize,
        lambda: Complex64,
        #[source]
        source: IvpError,
    },
    #[error(transparent)]
    Ml(#[from] MlError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("stacked jacobian has numerical rank {rank} < {cols}")]
    RankDeficient { rank: usize, cols: usize },
    #[error("residual grew on 3 consecutive iterations")]
    Diverged { report: Box<NewtonReport> },
    #[error("invalid argument: {0}")]
    Invalid(&'static str),
}

/// `F_n = u(q, λ_n)(1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ForwardResidual {
    pub values: Vec<Complex64>,
}

impl ForwardResidual {
    /// Euclidean norm over all entries.
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Real parts followed by imaginary parts.
    pub fn stacked(&self) -> DVector<f64> {
        let n = self.values.len();
        DVector::from_fn(2 * n, |i, _| {
            if i < n {
                self.values[i].re
            } else {
                self.values[i - n].im
            }
        })
    }
}

fn sine_potential(coeffs: &[f64]) -> Potential {
    Potential::sine(coeffs.to_vec()).unwrap_or_else(|_| Potential::zero())
}

/// Shooting residuals of the sine-series potential `q_coeffs` at each
/// eigenvalue.
pub fn forward_residual(
    spectrum_data: &[Complex64],
    q_coeffs: &[f64],
    alpha: f64,
    mesh: Mesh,
) -> Result<ForwardResidual, InverseError> {
    if q_coeffs.len() > spectrum_data.len() {
        return Err(InverseError::Invalid("more coefficients than eigenvalues"));
    }
    if q_coeffs.iter().any(|c| !c.is_finite()) {
        return Err(InverseError::Invalid("non-finite coefficient"));
    }
    let q = sine_potential(q_coeffs);
    let values = spectrum_data
        .par_iter()
        .enumerate()
        .map(|(i, &lambda)| {
            fivp::slp_shoot(&q, lambda, alpha, mesh, Scheme::Richardson)
                .map(|u| u.endpoint())
                .map_err(|source| InverseError::Ivp {
                    n: i + 1,
                    lambda,
                    source,
                })
        })
        .collect::<Result<_, _>>()?;
    Ok(ForwardResidual { values })
}

/// Quadrature for `∫₀¹ (1-t)^{α-1} E_{α,α}(-λ(1-t)^α) t E_{α,2}(-λt^α) w(t) dt`
/// with everything except `w` precomputed.
///
/// `[0, 1/2]` uses Simpson in `t`; on `[1/2, 1]` the substitution
/// `1 - t = s⁴/2` absorbs the `(1-t)^{α-1}` endpoint behaviour so Simpson
/// sees a smooth integrand.
#[derive(Debug, Clone)]
pub struct GreenKernel {
    nodes: Vec<f64>,
    weighted: Vec<Complex64>,
}

impl GreenKernel {
    pub fn new(lambda: Complex64, alpha: f64, quad_points: usize) -> Result<Self, InverseError> {
        if quad_points < 64 {
            return Err(InverseError::Invalid("need at least 64 quadrature points"));
        }
        let half = (quad_points / 2).next_multiple_of(2);
        let resolvent = mlf::MittagLeffler::new(MLParams::new(alpha, alpha)?)?;
        let shooting = mlf::MittagLeffler::new(MLParams::new(alpha, 2.0)?)?;
        let kernel = |s: f64| -> Result<Complex64, MlError> {
            if s == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            Ok(s.powf(alpha - 1.0) * resolvent.eval(-lambda * s.powf(alpha))?)
        };
        let profile = |t: f64| -> Result<Complex64, MlError> { Ok(t * shooting.eval(-lambda * t.powf(alpha))?) };
        let simpson_weight = |i: usize, n: usize| -> f64 {
            if i == 0 || i == n {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            }
        };

        // (t, weight, s = 1 - t)
        let mut rule: Vec<(f64, f64, f64)> = Vec::with_capacity(2 * half + 2);
        let h = 0.5 / half as f64;
        for i in 0..=half {
            let t = i as f64 * h;
            rule.push((t, simpson_weight(i, half) * h / 3.0, 1.0 - t));
        }
        let hs = 1.0 / half as f64;
        for i in 0..half {
            // s runs 1 → 0 so t runs 1/2 → 1; skip s = 1, which is t = 1/2 above.
            let v = 1.0 - i as f64 * hs;
            if i == 0 {
                let jac = 2.0 * v.powi(3);
                rule[half].1 += simpson_weight(i, half) * hs / 3.0 * jac;
                continue;
            }
            let s = 0.5 * v.powi(4);
            let jac = 2.0 * v.powi(3);
            rule.push((1.0 - s, simpson_weight(i, half) * hs / 3.0 * jac, s));
        }
        let weighted = rule
            .par_iter()
            .map(|&(t, w, s)| Ok(w * kernel(s)? * profile(t)?))
            .collect::<Result<Vec<_>, MlError>>()?;
        Ok(GreenKernel {
            nodes: rule.iter().map(|r| r.0).collect(),
            weighted,
        })
    }

    /// The integral against the perturbation direction `w`.
    pub fn entry<W: Fn(f64) -> f64>(&self, w: W) -> Complex64 {
        self.nodes.iter().zip(&self.weighted).map(|(&t, &k)| k * w(t)).sum()
    }
}

/// Default quadrature size for the Green's-function entries.
pub const GREEN_QUAD_POINTS: usize = 512;

/// `v(λ₀, 0, w_k)(1)` for `w_k(t) = sin(kπt)`, from the Green's function.
pub fn jacobian_entry_green(
    lambda0: Complex64,
    k: usize,
    alpha: f64,
    quad_points: usize,
) -> Result<Complex64, InverseError> {
    if k == 0 {
        return Err(InverseError::Invalid("basis index starts at 1"));
    }
    Ok(GreenKernel::new(lambda0, alpha, quad_points)?.entry(|t| sine_basis(k, t)))
}

/// The Jacobian at `q = 0`, complex and stacked.
#[derive(Debug, Clone)]
pub struct FrozenJacobian {
    /// Zero-potential eigenvalues the Jacobian is evaluated at.
    pub eigenvalues: Vec<Complex64>,
    /// `N × M`, entry `(n, k) = v(λ_{n,0}, 0, w_k)(1)`.
    pub complex: DMatrix<Complex64>,
    /// `2N × M`: real parts over imaginary parts.
    pub stacked: DMatrix<f64>,
    pub singular_values: Vec<f64>,
}

impl FrozenJacobian {
    pub fn from_eigenvalues(
        eigenvalues: Vec<Complex64>,
        m: usize,
        alpha: f64,
        quad_points: usize,
    ) -> Result<Self, InverseError> {
        let n = eigenvalues.len();
        if m == 0 || m > n {
            return Err(InverseError::Invalid("need 1 <= M <= N"));
        }
        let kernels = eigenvalues
            .iter()
            .map(|&l| GreenKernel::new(l, alpha, quad_points))
            .collect::<Result<Vec<_>, _>>()?;
        let complex = DMatrix::from_fn(n, m, |i, k| kernels[i].entry(|t| sine_basis(k + 1, t)));
        let stacked = DMatrix::from_fn(2 * n, m, |i, k| {
            if i < n {
                complex[(i, k)].re
            } else {
                complex[(i - n, k)].im
            }
        });
        let singular_values = stacked.clone().svd(false, false).singular_values.as_slice().to_vec();
        Ok(FrozenJacobian {
            eigenvalues,
            complex,
            stacked,
            singular_values,
        })
    }

    pub fn rows(&self) -> usize {
        self.stacked.nrows()
    }

    pub fn cols(&self) -> usize {
        self.stacked.ncols()
    }

    /// 2-norm condition number of the stacked matrix.
    pub fn condition_number(&self) -> f64 {
        let max = self.singular_values.iter().cloned().fold(0.0, f64::max);
        let min = self.singular_values.iter().cloned().fold(f64::INFINITY, f64::min);
        max / min
    }

    fn rank_threshold(&self) -> f64 {
        let max = self.singular_values.iter().cloned().fold(0.0, f64::max);
        f64::EPSILON * self.rows().max(self.cols()) as f64 * max
    }

    pub fn rank(&self) -> usize {
        let eps = self.rank_threshold();
        self.singular_values.iter().filter(|&&s| s > eps).count()
    }

    /// Least-squares solution of `J x = r`.
    pub fn solve(&self, rhs: &DVector<f64>) -> Result<DVector<f64>, InverseError> {
        let rank = self.rank();
        if rank < self.cols() {
            return Err(InverseError::RankDeficient {
                rank,
                cols: self.cols(),
            });
        }
        self.stacked
            .clone()
            .svd(true, true)
            .solve(rhs, self.rank_threshold())
            .map_err(|_| InverseError::Invalid("least-squares solve failed"))
    }
}

/// Frozen Jacobian at the first `n` zero-potential eigenvalues found by
/// shooting on `mesh`.
pub fn build_frozen_jacobian(alpha: f64, n: usize, m: usize, mesh: Mesh) -> Result<FrozenJacobian, InverseError> {
    if m == 0 || m > n {
        return Err(InverseError::Invalid("need 1 <= M <= N"));
    }
    let free = spectrum::enumerate_with(&Potential::zero(), alpha, n, mesh, &SpectrumOptions::default())?;
    FrozenJacobian::from_eigenvalues(free.eigenvalues(), m, alpha, GREEN_QUAD_POINTS)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NewtonReport {
    /// `iterates[0]` is the starting guess.
    pub iterates: Vec<Vec<f64>>,
    /// `‖F‖` at each iterate.
    pub residuals: Vec<f64>,
    /// `L²` error at each iterate, when the true potential is known.
    pub errors: Vec<f64>,
    pub converged: bool,
}

impl NewtonReport {
    pub fn coefficients(&self) -> &[f64] {
        self.iterates.last().map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iterations(&self) -> usize {
        self.iterates.len().saturating_sub(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NewtonOptions {
    pub maxiter: usize,
    /// Stop once `‖update‖ <= rtol (1 + ‖q‖)`.
    pub rtol: f64,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        NewtonOptions {
            maxiter: 25,
            rtol: 1e-8,
        }
    }
}

/// Relative growth that counts as a residual increase.
const GROWTH: f64 = 1.0 + 1e-6;

/// Frozen Newton iteration `q ← q - J⁺ F(q)` against the given eigenvalues.
/// `truth`, if given, is used only to record errors.
pub fn frozen_newton(
    spectrum_data: &[Complex64],
    jacobian: &FrozenJacobian,
    alpha: f64,
    q0: &[f64],
    mesh: Mesh,
    opts: NewtonOptions,
    truth: Option<&Potential>,
) -> Result<NewtonReport, InverseError> {
    let m = jacobian.cols();
    if q0.len() != m || jacobian.rows() != 2 * spectrum_data.len() {
        return Err(InverseError::Invalid(
            "dimension mismatch between data, guess and jacobian",
        ));
    }
    let mut q = q0.to_vec();
    let mut report = NewtonReport {
        iterates: vec![q.clone()],
        residuals: Vec::new(),
        errors: Vec::new(),
        converged: false,
    };
    let mut growth = 0;
    for it in 0..=opts.maxiter {
        let f = match forward_residual(spectrum_data, &q, alpha, mesh) {
            Ok(f) => f,
            // an overflowing shot after a step means the iterates ran away
            Err(InverseError::Ivp {
                source: IvpError::Divergence { .. },
                ..
            }) if it > 0 => {
                report.residuals.push(f64::INFINITY);
                if let Some(t) = truth {
                    report.errors.push(reconstruction_error(t, &q));
                }
                return Err(InverseError::Diverged {
                    report: Box::new(report),
                });
            }
            Err(e) => return Err(e),
        };
        let res = f.norm();
        if let Some(prev) = report.residuals.last() {
            growth = if res > prev * GROWTH { growth + 1 } else { 0 };
        }
        report.residuals.push(res);
        if let Some(t) = truth {
            report.errors.push(reconstruction_error(t, &q));
        }
        if growth >= 3 {
            return Err(InverseError::Diverged {
                report: Box::new(report),
            });
        }
        if it == opts.maxiter {
            break;
        }
        let update = jacobian.solve(&f.stacked())?;
        let qnorm = q.iter().map(|v| v * v).sum::<f64>().sqrt();
        let unorm = update.norm();
        if !unorm.is_finite() {
            return Err(InverseError::Diverged {
                report: Box::new(report),
            });
        }
        if unorm <= opts.rtol * (1.0 + qnorm) {
            report.converged = true;
            break;
        }
        for (qk, du) in q.iter_mut().zip(update.iter()) {
            *qk -= du;
        }
        report.iterates.push(q.clone());
    }
    Ok(report)
}

/// Panels per unit length for the 5-point Gauss rule.
const ERROR_PANELS: f64 = 250.0;

/// `‖q_true - Σ q_k sin(kπx)‖_{L²(0,1)}`, integrated piece by piece between
/// the breakpoints of `q_true`.
pub fn reconstruction_error(q_true: &Potential, q_coeffs: &[f64]) -> f64 {
    let mut cuts = vec![0.0];
    cuts.extend(q_true.breakpoints());
    cuts.push(1.0);
    let sq = |x: f64| {
        let d = q_true.eval(x) - crate::potential::sine_series(q_coeffs, x);
        d * d
    };
    cuts.windows(2)
        .map(|w| {
            let panels = ((w[1] - w[0]) * ERROR_PANELS).ceil().max(4.0) as usize;
            quad::gauss_legendre(sq, w[0], w[1], panels)
        })
        .sum::<f64>()
        .sqrt()
}

/// Best `L²` approximation of `q` by `M` sine modes:
/// `q_k = 2 ∫₀¹ q(x) sin(kπx) dx`.
pub fn sine_projection(q: &Potential, m: usize) -> Vec<f64> {
    let mut cuts = vec![0.0];
    cuts.extend(q.breakpoints());
    cuts.push(1.0);
    (1..=m)
        .map(|k| {
            2.0 * cuts
                .windows(2)
                .map(|w| {
                    let panels = ((w[1] - w[0]) * ERROR_PANELS).ceil().max(4.0) as usize;
                    quad::gauss_legendre(|x| q.eval(x) * sine_basis(k, x), w[0], w[1], panels)
                })
                .sum::<f64>()
        })
        .collect()
}
