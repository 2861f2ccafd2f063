//! Two-parameter Mittag-Leffler function on the complex plane.
//!
//! `E_{α,β}(z) = Σ_k z^k / Γ(β + αk)` is evaluated by its Taylor series in
//! double-double arithmetic inside the dispatch radius and by the exponential
//! asymptotic expansion outside it. Also provides the large-`n` asymptotics of
//! the zeros of `E_{α,2}` and of the Dirichlet eigenvalues they encode.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::{gamma, ln_gamma};

use crate::dd::{self, Dd, DdComplex};

/// Hard cap on the number of series terms.
pub const SERIES_CAP: usize = 2000;

/// Relative stopping tolerance used by [`ml_eval`] for the series branch.
pub const SERIES_TOL: f64 = 1e-30;

/// Below this multiple of the largest term, further terms cannot change a
/// double-double sum.
const DD_FLOOR: f64 = 1e-34;

/// `|z|^{1/α}` at which evaluation switches from the series to the
/// asymptotic expansion.
const SWITCH_ROOT_MODULUS: f64 = 30.0;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MlError {
    #[error("invalid Mittag-Leffler parameters alpha = {alpha}, beta = {beta}")]
    InvalidParams { alpha: f64, beta: f64 },
    #[error("series-cap-exceeded: no convergence within {terms} terms at |z| = {modulus}")]
    SeriesCapExceeded { terms: usize, modulus: f64 },
    #[error("asymptotic-domain violation: |z| = {modulus} is inside the dispatch radius {radius}")]
    AsymptoticDomain { modulus: f64, radius: f64 },
    #[error("asymptotic expansion needs 1..=10 algebraic terms, got {0}")]
    TermCount(usize),
    #[error("non-finite Mittag-Leffler value at z = {z}")]
    NonFinite { z: Complex64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MLParams {
    pub alpha: f64,
    pub beta: f64,
}

impl MLParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self, MlError> {
        if !(alpha > 0.0 && alpha <= 2.0 && beta > 0.0 && beta.is_finite()) {
            return Err(MlError::InvalidParams { alpha, beta });
        }
        Ok(MLParams { alpha, beta })
    }
}

/// Which evaluation regime produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Series,
    Asymptotic,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Branch::Series => f.write_str("series"),
            Branch::Asymptotic => f.write_str("asymptotic"),
        }
    }
}

/// Modulus above which [`ml_eval`] uses the asymptotic expansion.
pub fn dispatch_radius(alpha: f64) -> f64 {
    SWITCH_ROOT_MODULUS.powf(alpha)
}

/// Sector half-angle separating the two branches of the classical
/// expansion: the midpoint of `(απ/2, min(π, απ))`.
pub fn sector_mu(alpha: f64) -> f64 {
    0.5 * (alpha * PI / 2.0 + PI.min(alpha * PI))
}

/// `1/Γ(x)` for any real `x`, exactly zero at the poles of Γ.
pub fn recip_gamma(x: f64) -> f64 {
    if x > 0.0 {
        if x > 171.0 {
            return (-ln_gamma(x)).exp();
        }
        return 1.0 / gamma(x);
    }
    let nearest = x.round();
    if (x - nearest).abs() < 1e-12 {
        return 0.0;
    }
    // reflection: 1/Γ(x) = sin(πx) Γ(1-x) / π
    let s = sin_pi(x);
    s * (ln_gamma(1.0 - x)).exp() / PI
}

fn sin_pi(x: f64) -> f64 {
    // reduce to [-1, 1] before multiplying by π
    let r = x - 2.0 * (x / 2.0).round();
    (PI * r).sin()
}

/// Real coefficients of one algebraic tail term: `(sign, ln magnitude)` of
/// `1/Γ(β - αk)`; `None` at a removable zero.
fn tail_coefficient(params: MLParams, k: usize) -> Option<(f64, f64)> {
    let x = params.beta - params.alpha * k as f64;
    if x > 0.0 {
        return Some((1.0, -ln_gamma(x)));
    }
    let nearest = x.round();
    if (x - nearest).abs() < 1e-12 {
        return None;
    }
    let s = sin_pi(x);
    Some((s.signum(), s.abs().ln() + ln_gamma(1.0 - x) - PI.ln()))
}

/// Series evaluator with a cached table of double-double coefficient ratios
/// `Γ(β + α(k-1)) / Γ(β + αk)`.
///
/// Build one per parameter pair and reuse it; evaluation is read-only.
#[derive(Debug, Clone)]
pub struct MittagLeffler {
    params: MLParams,
    radius: f64,
    first: Dd,
    ratios: Vec<Dd>,
}

impl MittagLeffler {
    pub fn new(params: MLParams) -> Result<Self, MlError> {
        let params = MLParams::new(params.alpha, params.beta)?;
        let radius = dispatch_radius(params.alpha);
        Ok(Self::with_table_radius(params, radius * 1.01))
    }

    fn with_table_radius(params: MLParams, table_radius: f64) -> Self {
        let MLParams { alpha, beta } = params;
        let ln_r = table_radius.max(1e-3).ln();
        let mut prev_lng = dd::ln_gamma(Dd::from_f64(beta));
        let first = (-prev_lng).exp();
        let mut ratios = Vec::new();
        let mut peak = f64::NEG_INFINITY;
        for k in 1..=SERIES_CAP {
            let arg = Dd::prod(alpha, k as f64).add_f64(beta);
            let lng = dd::ln_gamma(arg);
            ratios.push((prev_lng - lng).exp());
            prev_lng = lng;
            let ln_term = k as f64 * ln_r - lng.hi;
            peak = peak.max(ln_term);
            if ln_term < peak - 85.0 {
                break;
            }
        }
        MittagLeffler {
            params,
            radius: table_radius / 1.01,
            first,
            ratios,
        }
    }

    pub fn params(&self) -> MLParams {
        self.params
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Taylor series in double-double arithmetic.
    pub fn series(&self, z: Complex64, tol: f64) -> Result<Complex64, MlError> {
        let zd = DdComplex::from_parts(z.re, z.im);
        let mut term = DdComplex::new(self.first, Dd::ZERO);
        let mut sum = term;
        let mut largest = term.norm_f64();
        for (k, ratio) in self.ratios.iter().enumerate() {
            term = (term * zd).scale(*ratio);
            sum = sum + term;
            let t = term.norm_f64();
            largest = largest.max(t);
            if t <= tol * sum.norm_f64().max(1e-300) || t <= DD_FLOOR * largest {
                let (re, im) = sum.to_parts();
                return Ok(Complex64::new(re, im));
            }
            if k + 1 >= SERIES_CAP {
                break;
            }
        }
        Err(MlError::SeriesCapExceeded {
            terms: self.ratios.len().min(SERIES_CAP),
            modulus: z.norm(),
        })
    }

    /// Hybrid evaluation, reporting the branch used.
    pub fn eval_with_branch(&self, z: Complex64) -> Result<(Complex64, Branch), MlError> {
        let (value, branch) = if z.norm() <= self.radius {
            (self.series(z, SERIES_TOL)?, Branch::Series)
        } else {
            (asymptotic_full(self.params, z), Branch::Asymptotic)
        };
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(MlError::NonFinite { z });
        }
        Ok((value, branch))
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64, MlError> {
        self.eval_with_branch(z).map(|(v, _)| v)
    }

    /// The outer-regime expansion at any `z`, regardless of the radius.
    pub fn asymptotic(&self, z: Complex64) -> Complex64 {
        asymptotic_full(self.params, z)
    }
}

/// Partial sum of the defining series, stopping once a term drops below
/// `tol` times the running sum (absolute floor `1e-300`).
pub fn ml_series(params: MLParams, z: Complex64, tol: f64) -> Result<Complex64, MlError> {
    let params = MLParams::new(params.alpha, params.beta)?;
    let table_radius = z.norm().max(dispatch_radius(params.alpha)) * 1.01;
    MittagLeffler::with_table_radius(params, table_radius).series(z, tol)
}

/// `(1/α) ζ^{1-β} e^{ζ}` with `ζ = |z|^{1/α} e^{iφ}`, computed in log form.
fn saddle_term(params: MLParams, ln_modulus: f64, phase: f64) -> Complex64 {
    let MLParams { alpha, beta } = params;
    let ln_zeta = Complex64::new(ln_modulus / alpha, phase / alpha);
    let zeta = ln_zeta.exp();
    ((1.0 - beta) * ln_zeta + zeta).exp() / alpha
}

/// Classical exponential expansion with `n_terms` algebraic terms. The
/// exponential part is kept for `|arg z| <= μ` only; principal branches.
pub fn ml_asymptotic(params: MLParams, z: Complex64, n_terms: usize) -> Result<Complex64, MlError> {
    let params = MLParams::new(params.alpha, params.beta)?;
    if !(1..=10).contains(&n_terms) {
        return Err(MlError::TermCount(n_terms));
    }
    let radius = dispatch_radius(params.alpha);
    if z.norm() <= radius {
        return Err(MlError::AsymptoticDomain {
            modulus: z.norm(),
            radius,
        });
    }
    let theta = z.arg();
    let ln_r = z.norm().ln();
    let mut value = Complex64::new(0.0, 0.0);
    if theta.abs() <= sector_mu(params.alpha) {
        value += saddle_term(params, ln_r, theta);
    }
    value -= algebraic_tail(params, ln_r, theta, Some(n_terms), 0.0);
    Ok(value)
}

/// `Σ_k z^{-k} / Γ(β - αk)`; with `n_terms = None` the sum is truncated
/// optimally (before terms start growing) or once below `floor`.
fn algebraic_tail(params: MLParams, ln_r: f64, theta: f64, n_terms: Option<usize>, floor: f64) -> Complex64 {
    let cap = n_terms.unwrap_or(200);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last = f64::INFINITY;
    for k in 1..=cap {
        let Some((sign, ln_c)) = tail_coefficient(params, k) else {
            continue;
        };
        let ln_mag = ln_c - k as f64 * ln_r;
        let mag = ln_mag.exp();
        if n_terms.is_none() {
            if mag > last {
                break;
            }
            last = mag;
        }
        sum += Complex64::from_polar(sign * mag, -(k as f64) * theta);
        if n_terms.is_none() && mag <= 1e-17 * (sum.norm() + floor) {
            break;
        }
    }
    sum
}

/// Asymptotic evaluation used past the dispatch radius: every exponential
/// saddle contribution on the principal sheet plus the optimally truncated
/// algebraic tail.
fn asymptotic_full(params: MLParams, z: Complex64) -> Complex64 {
    let alpha = params.alpha;
    let theta = z.arg();
    let ln_r = z.norm().ln();
    let mut exp_part = Complex64::new(0.0, 0.0);
    if alpha > 1.0 {
        exp_part += saddle_term(params, ln_r, theta);
        // the neighbouring saddle switches on past its Stokes line |θ| = (2-α)π
        if theta.abs() >= (2.0 - alpha) * PI {
            let shift = if theta > 0.0 || (theta == 0.0 && z.im.is_sign_positive()) {
                -2.0 * PI
            } else {
                2.0 * PI
            };
            exp_part += saddle_term(params, ln_r, theta + shift);
        }
    } else if theta.abs() <= (alpha * PI).min(PI) {
        exp_part += saddle_term(params, ln_r, theta);
    }
    exp_part - algebraic_tail(params, ln_r, theta, None, exp_part.norm())
}

/// Hybrid evaluation: series for `|z| <= R₀(α)`, asymptotic expansion beyond.
pub fn ml_eval(params: MLParams, z: Complex64) -> Result<Complex64, MlError> {
    MittagLeffler::new(params)?.eval(z)
}

/// Asymptotic location of the `n`-th zero of `E_{α,2}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroAsymptote {
    pub index: i64,
    /// `z_n^{1/α}` with the remainder dropped.
    pub zeta: Complex64,
    /// The zero estimate `ζ^α` (principal branch).
    pub z: Complex64,
}

/// `ln(α / Γ(2-α))`; diverges to `-∞` as `α → 2`.
fn log_zero_shift(alpha: f64) -> f64 {
    (alpha / gamma(2.0 - alpha)).ln()
}

/// Leading-order asymptote of the `n`-th zero of `E_{α,2}`, `n ≠ 0`.
///
/// For `α` within about `1e-3` of 2 the constant `ln(α/Γ(2-α))` becomes
/// large and negative, and at `α = 2` it is `-∞`; the value is returned
/// unmodified so the divergence stays visible.
pub fn zero_asymptote(alpha: f64, n: i64) -> ZeroAsymptote {
    assert!(n != 0, "zero index must be nonzero");
    let m = n.unsigned_abs() as f64;
    let two_pi_m = 2.0 * PI * m;
    let zeta_pos = Complex64::new(
        -(alpha - 1.0) * two_pi_m.ln() + log_zero_shift(alpha),
        two_pi_m - (alpha - 1.0) * PI / 2.0,
    );
    let z_pos = (alpha * zeta_pos.ln()).exp();
    if n > 0 {
        ZeroAsymptote {
            index: n,
            zeta: zeta_pos,
            z: z_pos,
        }
    } else {
        ZeroAsymptote {
            index: n,
            zeta: zeta_pos.conj(),
            z: z_pos.conj(),
        }
    }
}

/// Predicted magnitude and phase of the `n`-th Dirichlet eigenvalue at zero
/// potential (upper half-plane representative), before simplification.
pub fn eig_asymptotic(alpha: f64, n: u32) -> (f64, f64) {
    let two_pi_n = 2.0 * PI * n as f64;
    let imag = two_pi_n + (1.0 - alpha) * PI / 2.0;
    let real = (1.0 - alpha) * two_pi_n.ln() + log_zero_shift(alpha);
    let magnitude = (imag * imag + real * real).powf(alpha / 2.0);
    let phase = PI - alpha * imag.atan2(-real);
    (magnitude, phase)
}

/// The simplified tails `(2πn)^α` and `(2-α)π/2`.
pub fn eig_asymptotic_tail(alpha: f64, n: u32) -> (f64, f64) {
    ((2.0 * PI * n as f64).powf(alpha), (2.0 - alpha) * PI / 2.0)
}
