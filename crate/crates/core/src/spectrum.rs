//! Complex Dirichlet eigenvalues of `-D₀^α u + q u = λ u`, `u(0) = u(1) = 0`.
//!
//! Eigenvalues are the zeros of the shooting residual `λ ↦ u(q, λ)(1)`,
//! located by a secant iteration. Seeds come from the zero-potential
//! spectrum, which is the zero set of `λ ↦ E_{α,2}(-λ)`, shifted by the mean
//! of `q`. Results are reported as upper half-plane representatives; the
//! conjugates are eigenvalues too since `q` is real.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::fivp::{self, GridFunction, IvpError, Mesh, Scheme};
use crate::mlf::{self, MLParams, MlError};
use crate::potential::Potential;

#[derive(Debug, Clone, thiserror::Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Ivp(#[from] IvpError),
    #[error(transparent)]
    Ml(#[from] MlError),
    #[error("secant stagnated at {last} (difference quotient vanished)")]
    Stagnation { last: Complex64 },
    #[error("secant did not converge in {iterations} iterations, last iterate {last}")]
    MaxIter { last: Complex64, iterations: usize },
    #[error("incomplete spectrum: ranks {missing:?} not found")]
    Incomplete {
        missing: Vec<usize>,
        partial: Box<Spectrum>,
    },
    #[error("invalid argument: {0}")]
    Invalid(&'static str),
}

/// Solver knobs for eigenvalue searches.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumOptions {
    /// Secant stopping threshold, relative to `max(1, |λ|)`.
    pub tol: f64,
    pub maxiter: usize,
    /// Imaginary offset added to every seed.
    pub seed_imag: f64,
    /// Seeds run beyond the requested count.
    pub extra_seeds: usize,
    pub scheme: Scheme,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            tol: 1e-12,
            maxiter: 60,
            seed_imag: 0.5,
            extra_seeds: 4,
            scheme: Scheme::Richardson,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Eigenpair {
    /// Rank by `|λ|`, starting at 1.
    pub index: usize,
    pub lambda: Complex64,
    /// Shooting solution normalised by `u'(0) = 1`.
    pub eigenfunction: GridFunction,
    /// `|u(1)|` at the returned eigenvalue.
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone)]
pub struct Spectrum {
    pub alpha: f64,
    pub potential: String,
    pub pairs: Vec<Eigenpair>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        self.pairs.iter().map(|p| p.lambda).collect()
    }
}

/// Two eigenvalues closer than this (relative to `max(1, |λ|)`) are the same.
pub const DEDUP_TOL: f64 = 1e-6;

/// Relative size of `Im λ` below which an eigenvalue is taken to be real.
const REAL_SNAP: f64 = 1e-10;

/// Grid step, relative to `max(1, λ/10)`, of the internal real-axis scan.
const REAL_SCAN_STEP: f64 = 2e-3;

fn same_root(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() < DEDUP_TOL * a.norm().max(1.0)
}

fn upper(lambda: Complex64) -> Complex64 {
    let l = if lambda.im < 0.0 { lambda.conj() } else { lambda };
    if l.im.abs() <= REAL_SNAP * l.norm().max(1.0) {
        Complex64::new(l.re, 0.0)
    } else {
        l
    }
}

struct SecantRoot {
    lambda: Complex64,
    iterations: usize,
}

/// Complex secant iteration on `f` from the seeds `l0`, `l1`.
fn secant<F>(f: F, l0: Complex64, l1: Complex64, tol: f64, maxiter: usize) -> Result<SecantRoot, SpectrumError>
where
    F: Fn(Complex64) -> Result<Complex64, SpectrumError>,
{
    if l0 == l1 {
        return Err(SpectrumError::Invalid("secant seeds must differ"));
    }
    let (mut a, mut b) = (l0, l1);
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    for it in 1..=maxiter {
        if fb == Complex64::new(0.0, 0.0) {
            return Ok(SecantRoot {
                lambda: b,
                iterations: it - 1,
            });
        }
        let slope = fb - fa;
        if slope.norm() == 0.0 || !slope.is_finite() {
            return Err(SpectrumError::Stagnation { last: b });
        }
        let step = -fb * (b - a) / slope;
        if !step.is_finite() {
            return Err(SpectrumError::Stagnation { last: b });
        }
        a = b;
        fa = fb;
        b += step;
        if step.norm() < tol * b.norm().max(1.0) {
            return Ok(SecantRoot {
                lambda: b,
                iterations: it,
            });
        }
        fb = f(b)?;
    }
    Err(SpectrumError::MaxIter {
        last: b,
        iterations: maxiter,
    })
}

fn second_seed(l0: Complex64) -> Complex64 {
    l0 * (1.0 + 1e-3) + Complex64::new(0.0, 0.1)
}

/// Shooting residual with the eigenfunction.
fn shoot(
    q: &Potential,
    lambda: Complex64,
    alpha: f64,
    mesh: Mesh,
    scheme: Scheme,
) -> Result<GridFunction, SpectrumError> {
    Ok(fivp::slp_shoot(q, lambda, alpha, mesh, scheme)?)
}

fn check_order(alpha: f64) -> Result<(), SpectrumError> {
    if alpha > 1.0 && alpha < 2.0 {
        Ok(())
    } else {
        Err(SpectrumError::Invalid("alpha must lie strictly inside (1, 2)"))
    }
}

/// Secant iteration on the shooting residual `u(q, λ)(1)` starting from
/// `lambda0`, `lambda1`. The result is the upper half-plane representative.
pub fn secant_solve(
    q: &Potential,
    alpha: f64,
    lambda0: Complex64,
    lambda1: Complex64,
    mesh: Mesh,
    tol: f64,
    maxiter: usize,
) -> Result<Eigenpair, SpectrumError> {
    secant_solve_with(q, alpha, lambda0, lambda1, mesh, tol, maxiter, Scheme::Richardson)
}

#[allow(clippy::too_many_arguments)]
pub fn secant_solve_with(
    q: &Potential,
    alpha: f64,
    lambda0: Complex64,
    lambda1: Complex64,
    mesh: Mesh,
    tol: f64,
    maxiter: usize,
    scheme: Scheme,
) -> Result<Eigenpair, SpectrumError> {
    check_order(alpha)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(SpectrumError::Invalid("tolerance must be positive"));
    }
    let root = secant(
        |l| Ok(shoot(q, l, alpha, mesh, scheme)?.endpoint()),
        lambda0,
        lambda1,
        tol,
        maxiter,
    )?;
    finish(q, alpha, mesh, scheme, upper(root.lambda), root.iterations, 0)
}

fn finish(
    q: &Potential,
    alpha: f64,
    mesh: Mesh,
    scheme: Scheme,
    lambda: Complex64,
    iterations: usize,
    index: usize,
) -> Result<Eigenpair, SpectrumError> {
    let eigenfunction = shoot(q, lambda, alpha, mesh, scheme)?;
    Ok(Eigenpair {
        index,
        lambda,
        residual: eigenfunction.endpoint().norm(),
        eigenfunction,
        iterations,
    })
}

/// `Π (1 - λ/λ_i)` over the known roots and their conjugates.
fn deflation(lambda: Complex64, known: &[Complex64]) -> Complex64 {
    known.iter().fold(Complex64::new(1.0, 0.0), |acc, &r| {
        let one = Complex64::new(1.0, 0.0);
        let f = if r.im == 0.0 {
            one - lambda / r
        } else {
            (one - lambda / r) * (one - lambda / r.conj())
        };
        acc * f
    })
}

/// Refines every seed to a root of `residual`, retrying seeds that land on
/// an already known root with those roots divided out. Results come back in
/// upper half-plane form, deduplicated, in seed order.
fn collect_roots<F>(residual: F, seeds: &[Complex64], tol: f64, maxiter: usize) -> Vec<(Complex64, usize)>
where
    F: Fn(Complex64) -> Result<Complex64, SpectrumError> + Sync,
{
    const ROUNDS: usize = 3;
    let mut found: Vec<(Complex64, usize)> = Vec::new();
    let mut pending: Vec<Complex64> = seeds.to_vec();
    for round in 0..ROUNDS {
        let known: Vec<Complex64> = found.iter().map(|r| r.0).collect();
        let results: Vec<Option<SecantRoot>> = pending
            .par_iter()
            .map(|&s| {
                let f = |l: Complex64| -> Result<Complex64, SpectrumError> {
                    let r = residual(l)?;
                    Ok(if round == 0 { r } else { r / deflation(l, &known) })
                };
                secant(f, s, second_seed(s), tol, maxiter).ok()
            })
            .collect();
        let mut retry = Vec::new();
        for (seed, res) in pending.iter().zip(results) {
            let Some(root) = res else { continue };
            let l = upper(root.lambda);
            if !l.is_finite() {
                continue;
            }
            if found.iter().any(|(f, _)| same_root(*f, l)) {
                retry.push(*seed);
            } else {
                found.push((l, root.iterations));
            }
        }
        if retry.is_empty() {
            break;
        }
        pending = retry;
    }
    found
}

fn sort_by_modulus(v: &mut [Complex64]) {
    v.sort_by(|a, b| a.norm().total_cmp(&b.norm()).then(a.im.total_cmp(&b.im)));
}

fn characteristic(alpha: f64) -> Result<impl Fn(f64) -> Result<f64, MlError> + Sync, MlError> {
    let ml = mlf::MittagLeffler::new(MLParams::new(alpha, 2.0)?)?;
    Ok(move |lambda: f64| ml.eval(Complex64::new(-lambda, 0.0)).map(|v| v.re))
}

fn bisect<F>(f: &F, mut lo: f64, mut hi: f64, mut flo: f64) -> Result<f64, MlError>
where
    F: Fn(f64) -> Result<f64, MlError>,
{
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn scan_points(alpha: f64, grid: &[f64]) -> Result<Vec<f64>, MlError> {
    let f = characteristic(alpha)?;
    let values: Vec<f64> = grid.par_iter().map(|&x| f(x)).collect::<Result<_, _>>()?;
    let brackets: Vec<(f64, f64, f64)> = grid
        .windows(2)
        .zip(values.windows(2))
        .filter(|(_, v)| v[0] != 0.0 && (v[0] < 0.0) != (v[1] < 0.0))
        .map(|(x, v)| (x[0], x[1], v[0]))
        .collect();
    let mut roots: Vec<f64> = brackets
        .par_iter()
        .map(|&(lo, hi, flo)| {
            if values_at_hi_zero(&f, hi)? {
                Ok(hi)
            } else {
                bisect(&f, lo, hi, flo)
            }
        })
        .collect::<Result<_, _>>()?;
    roots.dedup();
    Ok(roots)
}

fn values_at_hi_zero<F>(f: &F, x: f64) -> Result<bool, MlError>
where
    F: Fn(f64) -> Result<f64, MlError>,
{
    Ok(f(x)? == 0.0)
}

/// Real eigenvalues of the zero-potential problem in `(0, search_radius]`:
/// sign changes of `E_{α,2}(-λ)` on a uniform grid of `grid` cells, each
/// refined by bisection to `1e-9`.
pub fn real_zero_scan(alpha: f64, search_radius: f64, grid: usize) -> Result<Vec<f64>, SpectrumError> {
    check_order(alpha)?;
    if search_radius.is_nan() || search_radius <= 0.0 || grid == 0 {
        return Err(SpectrumError::Invalid("scan needs a positive radius and grid"));
    }
    let pts: Vec<f64> = (1..=grid).map(|i| search_radius * i as f64 / grid as f64).collect();
    Ok(scan_points(alpha, &pts)?)
}

/// Past this point `E_{α,2}(-λ)` is dominated by its algebraic tail
/// `1/(λ Γ(2-α))` by three orders of magnitude, so it has no real zeros.
fn real_zero_cutoff(alpha: f64) -> f64 {
    let c = (std::f64::consts::PI / alpha).cos();
    let ln_tail_scale = -statrs::function::gamma::ln_gamma(2.0 - alpha);
    let mut x: f64 = 1.0;
    let mut clear = 0;
    while x < 1e9 {
        // log of oscillatory amplitude over tail
        let ratio = (2.0 / alpha).ln() - x.ln() / alpha + x.powf(1.0 / alpha) * c + x.ln() - ln_tail_scale;
        if ratio < (1e-3f64).ln() {
            clear += 1;
            if clear >= 20 {
                return x;
            }
        } else {
            clear = 0;
        }
        x *= 1.05;
    }
    x
}

fn graded_grid(radius: f64) -> Vec<f64> {
    let mut pts = Vec::new();
    let mut x: f64 = 0.0;
    loop {
        x += REAL_SCAN_STEP * (x / 10.0).max(1.0);
        if x >= radius {
            pts.push(radius);
            return pts;
        }
        pts.push(x);
    }
}

/// The smallest `count` zero-potential eigenvalues, as zeros of
/// `E_{α,2}(-λ)`, upper half-plane representatives sorted by `|λ|`.
pub fn zero_potential_eigenvalues(alpha: f64, count: usize) -> Result<Vec<Complex64>, SpectrumError> {
    check_order(alpha)?;
    if count == 0 {
        return Ok(Vec::new());
    }
    let ml = mlf::MittagLeffler::new(MLParams::new(alpha, 2.0)?)?;
    let f = |l: Complex64| Ok(ml.eval(-l)?);
    let seed = |n: usize| -mlf::zero_asymptote(alpha, -(n as i64)).z;

    let mut reach = count + 4;
    let mut real: Vec<f64> = Vec::new();
    let mut scanned = 0.0;
    loop {
        let radius = (1.5 * seed(reach).norm()).min(real_zero_cutoff(alpha));
        if radius > scanned {
            real = scan_points(alpha, &graded_grid(radius))?;
            scanned = radius;
        }
        let seeds: Vec<Complex64> = (1..=reach + real.len()).map(seed).collect();
        let complex = collect_roots(f, &seeds, 1e-13, 80);
        let mut all: Vec<Complex64> = real.iter().map(|&r| Complex64::new(r, 0.0)).collect();
        for (l, _) in complex {
            if !all.iter().any(|&a| same_root(a, l)) {
                all.push(l);
            }
        }
        sort_by_modulus(&mut all);
        if all.len() >= count + 2 || reach > 4 * count + 40 {
            all.truncate(count);
            return Ok(all);
        }
        reach += count + 4;
    }
}

/// Index of each eigenvalue in the asymptotic zero formula, `None` for real
/// ones. Every two real eigenvalues below a complex one stand in for one
/// complex pair, so the complex ranks shift down accordingly.
pub fn asymptotic_indices(eigenvalues: &[Complex64]) -> Vec<Option<u32>> {
    let mut real = 0;
    eigenvalues
        .iter()
        .enumerate()
        .map(|(i, l)| {
            if l.im.abs() <= REAL_SNAP * l.norm().max(1.0) {
                real += 1;
                None
            } else {
                Some((i + 1 - real / 2) as u32)
            }
        })
        .collect()
}

/// The first `n` eigenvalues of the shooting problem, seeded from the
/// zero-potential spectrum shifted by the mean of `q`.
pub fn enumerate(q: &Potential, alpha: f64, n: usize, mesh: Mesh) -> Result<Spectrum, SpectrumError> {
    enumerate_with(q, alpha, n, mesh, &SpectrumOptions::default())
}

pub fn enumerate_with(
    q: &Potential,
    alpha: f64,
    n: usize,
    mesh: Mesh,
    opts: &SpectrumOptions,
) -> Result<Spectrum, SpectrumError> {
    check_order(alpha)?;
    if n == 0 {
        return Err(SpectrumError::Invalid("need at least one eigenvalue"));
    }
    let base = zero_potential_eigenvalues(alpha, n + opts.extra_seeds)?;
    let shift = Complex64::new(q.mean(), opts.seed_imag);
    let seeds: Vec<Complex64> = base.iter().map(|&l| l + shift).collect();
    let scheme = opts.scheme;
    let roots = collect_roots(
        |l| Ok(shoot(q, l, alpha, mesh, scheme)?.endpoint()),
        &seeds,
        opts.tol,
        opts.maxiter,
    );
    let mut ordered: Vec<(Complex64, usize)> = roots;
    ordered.sort_by(|a, b| a.0.norm().total_cmp(&b.0.norm()).then(a.0.im.total_cmp(&b.0.im)));
    ordered.truncate(n);
    let pairs = ordered
        .par_iter()
        .enumerate()
        .map(|(i, &(l, it))| finish(q, alpha, mesh, scheme, l, it, i + 1))
        .collect::<Result<Vec<_>, _>>()?;
    let spectrum = Spectrum {
        alpha,
        potential: q.describe(),
        pairs,
    };
    if spectrum.pairs.len() < n {
        let missing = (spectrum.pairs.len() + 1..=n).collect();
        return Err(SpectrumError::Incomplete {
            missing,
            partial: Box::new(spectrum),
        });
    }
    Ok(spectrum)
}

/// `c_n = λ_n(q) - λ_n(0) - ∫₀¹ q`, matched by rank.
pub fn decay_remainders(q: &Potential, alpha: f64, n: usize, mesh: Mesh) -> Result<Vec<Complex64>, SpectrumError> {
    decay_remainders_with(q, alpha, n, mesh, &SpectrumOptions::default())
}

pub fn decay_remainders_with(
    q: &Potential,
    alpha: f64,
    n: usize,
    mesh: Mesh,
    opts: &SpectrumOptions,
) -> Result<Vec<Complex64>, SpectrumError> {
    let with_q = enumerate_with(q, alpha, n, mesh, opts)?;
    let free = enumerate_with(&Potential::zero(), alpha, n, mesh, opts)?;
    Ok(with_q
        .pairs
        .iter()
        .zip(&free.pairs)
        .map(|(a, b)| a.lambda - b.lambda - q.mean())
        .collect())
}

/// Number of sign changes in a sequence, ignoring exact zeros.
pub fn sign_changes<I: IntoIterator<Item = f64>>(values: I) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for v in values {
        if v == 0.0 {
            continue;
        }
        let neg = v < 0.0;
        if let Some(prev) = last {
            if prev != neg {
                count += 1;
            }
        }
        last = Some(neg);
    }
    count
}
