use fracslp::fivp::Mesh;
use fracslp::inverse::{self, InverseError, NewtonOptions, NewtonReport};
use fracslp::mlf::{self, MLParams};
use fracslp::potential::{sine_series, Potential};
use fracslp::spectrum::{self, Spectrum, SpectrumError, SpectrumOptions};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::parse;
use crate::table::{Cell, ResultTable};

/// Tables produced by a command: the main table and optional companions
/// written next to it under a suffix.
pub struct Output {
    pub main: ResultTable,
    pub extra: Vec<(&'static str, ResultTable)>,
}

impl From<ResultTable> for Output {
    fn from(main: ResultTable) -> Self {
        Output {
            main,
            extra: Vec::new(),
        }
    }
}

pub enum Failure {
    Usage(String),
    Runtime(String),
    /// Fewer eigenvalues than requested; whatever was found is reported.
    Incomplete {
        message: String,
        partial: Option<Box<Output>>,
    },
    /// The Newton iteration diverged; the history so far is reported.
    Diverged {
        message: String,
        partial: Box<Output>,
    },
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Runtime(_) => 1,
            Failure::Incomplete { .. } => 3,
            Failure::Diverged { .. } => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Runtime(m) => m,
            Failure::Incomplete { message, .. } | Failure::Diverged { message, .. } => message,
        }
    }
}

/// Options shared by all subcommands, as given on the command line.
#[derive(Debug, Clone, Default)]
pub struct Settings {
    pub alpha: Option<String>,
    pub beta: Option<f64>,
    pub n: Option<String>,
    pub m: Option<usize>,
    pub h_forward: f64,
    pub h_inverse: f64,
    pub potential: Option<String>,
    pub coeffs: Option<String>,
    pub tol: Option<f64>,
    pub maxiter: Option<usize>,
    pub seed_imag: Option<f64>,
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

impl Settings {
    fn alphas(&self, default: f64) -> Result<Vec<f64>, Failure> {
        let v = match &self.alpha {
            Some(s) => parse::list::<f64>(s, "alpha").map_err(Failure::Usage)?,
            None => vec![default],
        };
        if v.is_empty() {
            return usage("empty alpha list");
        }
        Ok(v)
    }

    fn order(&self, default: f64) -> Result<f64, Failure> {
        let v = self.alphas(default)?;
        if v.len() != 1 {
            return usage("this command takes a single --alpha");
        }
        let a = v[0];
        if !(a > 1.0 && a < 2.0) {
            return usage(format!("--alpha {a} must lie strictly inside (1, 2)"));
        }
        Ok(a)
    }

    fn counts(&self, default: usize) -> Result<Vec<usize>, Failure> {
        let v = match &self.n {
            Some(s) => parse::list::<usize>(s, "n").map_err(Failure::Usage)?,
            None => vec![default],
        };
        if v.is_empty() || v.contains(&0) {
            return usage("--n values must be at least 1");
        }
        Ok(v)
    }

    fn count(&self, default: usize) -> Result<usize, Failure> {
        let v = self.counts(default)?;
        if v.len() != 1 {
            return usage("this command takes a single --n");
        }
        Ok(v[0])
    }

    fn mesh(h: f64, flag: &str) -> Result<Mesh, Failure> {
        Mesh::with_step(h).map_err(|e| Failure::Usage(format!("{flag}: {e}")))
    }

    fn potential(&self, default: &str) -> Result<(String, Potential), Failure> {
        let name = self.potential.clone().unwrap_or_else(|| default.to_string());
        let q = parse::potential(&name).map_err(Failure::Usage)?;
        Ok((name, q))
    }

    fn spectrum_options(&self) -> Result<SpectrumOptions, Failure> {
        let mut o = SpectrumOptions::default();
        if let Some(t) = self.tol {
            if t.is_nan() || t <= 0.0 {
                return usage("--tol must be positive");
            }
            o.tol = t;
        }
        if let Some(s) = self.seed_imag {
            if !s.is_finite() {
                return usage("--seed-imag must be finite");
            }
            o.seed_imag = s;
        }
        Ok(o)
    }
}

fn config(command: &str, entries: &[(&str, Value)]) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    for (k, v) in entries {
        m.insert((*k).into(), v.clone());
    }
    m
}

fn options_json(o: &SpectrumOptions) -> Value {
    json!({
        "tol": o.tol,
        "maxiter": o.maxiter,
        "seed_imag": o.seed_imag,
        "extra_seeds": o.extra_seeds,
        "scheme": o.scheme,
    })
}

pub fn ml(s: &Settings, z: &[String]) -> Result<Output, Failure> {
    let alphas = s.alphas(1.0)?;
    if alphas.len() != 1 {
        return usage("ml takes a single --alpha");
    }
    let (alpha, beta) = (alphas[0], s.beta.unwrap_or(1.0));
    let params = MLParams::new(alpha, beta).map_err(|e| Failure::Usage(e.to_string()))?;
    if z.is_empty() {
        return usage("ml needs at least one argument z");
    }
    let points = z
        .iter()
        .map(|v| parse::complex(v))
        .collect::<Result<Vec<_>, _>>()
        .map_err(Failure::Usage)?;
    let ml = mlf::MittagLeffler::new(params).map_err(|e| Failure::Usage(e.to_string()))?;
    let cfg = config(
        "ml",
        &[
            ("alpha", json!(alpha)),
            ("beta", json!(beta)),
            ("z", json!(z)),
            ("radius", json!(ml.radius())),
        ],
    );
    let mut t = ResultTable::new(cfg, &["z_re", "z_im", "value_re", "value_im", "branch"]);
    for p in points {
        let (v, branch) = ml
            .eval_with_branch(p)
            .map_err(|e| Failure::Runtime(format!("E at {p}: {e}")))?;
        t.push(vec![
            p.re.into(),
            p.im.into(),
            v.re.into(),
            v.im.into(),
            Cell::Text(branch.to_string()),
        ]);
    }
    Ok(t.into())
}

fn spectrum_failure(e: SpectrumError, render: impl FnOnce(&Spectrum) -> Output) -> Failure {
    match e {
        SpectrumError::Incomplete { missing, partial } => Failure::Incomplete {
            message: format!("incomplete spectrum: ranks {missing:?} not found"),
            partial: Some(Box::new(render(&partial))),
        },
        SpectrumError::Invalid(m) => Failure::Usage(m.to_string()),
        other => Failure::Runtime(other.to_string()),
    }
}

pub fn spectrum(s: &Settings) -> Result<Output, Failure> {
    let alpha = s.order(1.5)?;
    let n = s.count(10)?;
    let (qname, q) = s.potential("zero")?;
    let mesh = Settings::mesh(s.h_forward, "--h-forward")?;
    let mut opts = s.spectrum_options()?;
    if let Some(m) = s.maxiter {
        opts.maxiter = m;
    }
    let cfg = config(
        "spectrum",
        &[
            ("alpha", json!(alpha)),
            ("n", json!(n)),
            ("potential", json!(qname)),
            ("h_forward", json!(s.h_forward)),
            ("solver", options_json(&opts)),
        ],
    );
    let render = |sp: &Spectrum| -> Output {
        let mut t = ResultTable::new(
            cfg.clone(),
            &[
                "n",
                "re",
                "im",
                "abs",
                "arg",
                "pred_abs",
                "pred_arg",
                "residual",
                "iterations",
            ],
        );
        // real eigenvalues have no asymptotic counterpart
        let slots = spectrum::asymptotic_indices(&sp.eigenvalues());
        for (p, slot) in sp.pairs.iter().zip(slots) {
            let (pm, pa) = slot.map_or((f64::NAN, f64::NAN), |j| mlf::eig_asymptotic(alpha, j));
            t.push(vec![
                p.index.into(),
                p.lambda.re.into(),
                p.lambda.im.into(),
                p.lambda.norm().into(),
                p.lambda.arg().into(),
                pm.into(),
                pa.into(),
                p.residual.into(),
                p.iterations.into(),
            ]);
        }
        t.into()
    };
    match spectrum::enumerate_with(&q, alpha, n, mesh, &opts) {
        Ok(sp) => Ok(render(&sp)),
        Err(e) => Err(spectrum_failure(e, render)),
    }
}

pub fn decay(s: &Settings) -> Result<Output, Failure> {
    let alpha = s.order(1.5)?;
    let n = s.count(15)?;
    let (qname, q) = s.potential("q1")?;
    let mesh = Settings::mesh(s.h_forward, "--h-forward")?;
    let mut opts = s.spectrum_options()?;
    if let Some(m) = s.maxiter {
        opts.maxiter = m;
    }
    let cfg = config(
        "decay",
        &[
            ("alpha", json!(alpha)),
            ("n", json!(n)),
            ("potential", json!(qname)),
            ("mean", json!(q.mean())),
            ("h_forward", json!(s.h_forward)),
            ("solver", options_json(&opts)),
        ],
    );
    let mut missing = Vec::new();
    let mut run = |pot: &Potential| -> Result<Vec<(usize, Complex64)>, Failure> {
        let sp = match spectrum::enumerate_with(pot, alpha, n, mesh, &opts) {
            Ok(sp) => sp,
            Err(SpectrumError::Incomplete { missing: m, partial }) => {
                missing.extend(m);
                *partial
            }
            Err(SpectrumError::Invalid(m)) => return Err(Failure::Usage(m.into())),
            Err(e) => return Err(Failure::Runtime(e.to_string())),
        };
        Ok(sp.pairs.iter().map(|p| (p.index, p.lambda)).collect())
    };
    let with_q = run(&q)?;
    let free = run(&Potential::zero())?;
    let mut t = ResultTable::new(cfg, &["n", "re", "im", "abs"]);
    for &(i, a) in &with_q {
        // ranks missing from either spectrum are skipped
        let Some(&(_, b)) = free.iter().find(|(j, _)| *j == i) else {
            continue;
        };
        let c = a - b - q.mean();
        t.push(vec![i.into(), c.re.into(), c.im.into(), c.norm().into()]);
    }
    if missing.is_empty() {
        Ok(t.into())
    } else {
        missing.sort_unstable();
        missing.dedup();
        Err(Failure::Incomplete {
            message: format!("incomplete spectrum: ranks {missing:?} not found"),
            partial: Some(Box::new(t.into())),
        })
    }
}

const PROFILE_POINTS: usize = 1001;

fn newton_tables(cfg: &Map<String, Value>, report: &NewtonReport, truth: &Potential, m: usize) -> Output {
    let mut cols: Vec<String> = vec!["iteration".into(), "residual".into(), "error".into()];
    cols.extend((1..=m).map(|k| format!("q{k}")));
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut t = ResultTable::new(cfg.clone(), &col_refs);
    for (i, q) in report.iterates.iter().enumerate() {
        let mut row: Vec<Cell> = vec![
            i.into(),
            report.residuals.get(i).copied().unwrap_or(f64::NAN).into(),
            report.errors.get(i).copied().unwrap_or(f64::NAN).into(),
        ];
        row.extend(q.iter().map(|&v| Cell::Real(v)));
        t.push(row);
    }
    let coeffs = report.coefficients();
    let mut p = ResultTable::new(cfg.clone(), &["x", "q_true", "q_reconstructed"]);
    for i in 0..PROFILE_POINTS {
        let x = i as f64 / (PROFILE_POINTS - 1) as f64;
        p.push(vec![x.into(), truth.eval(x).into(), sine_series(coeffs, x).into()]);
    }
    Output {
        main: t,
        extra: vec![("profile", p)],
    }
}

pub fn reconstruct(s: &Settings) -> Result<Output, Failure> {
    let alpha = s.order(1.5)?;
    let n = s.count(8)?;
    let m = s.m.unwrap_or(n);
    if m == 0 || m > n {
        return usage(format!("--m {m} must satisfy 1 <= M <= N = {n}"));
    }
    let (qname, truth) = s.potential("q1")?;
    let fwd = Settings::mesh(s.h_forward, "--h-forward")?;
    let inv = Settings::mesh(s.h_inverse, "--h-inverse")?;
    let opts = s.spectrum_options()?;
    let q0 = match &s.coeffs {
        Some(c) => parse::list::<f64>(c, "coefficient").map_err(Failure::Usage)?,
        None => vec![0.0; m],
    };
    if q0.len() != m || q0.iter().any(|v| !v.is_finite()) {
        return usage(format!("--coeffs needs {m} finite values"));
    }
    let mut newton = NewtonOptions::default();
    if let Some(it) = s.maxiter {
        newton.maxiter = it;
    }
    let cfg = config(
        "reconstruct",
        &[
            ("alpha", json!(alpha)),
            ("n", json!(n)),
            ("m", json!(m)),
            ("potential", json!(qname)),
            ("h_forward", json!(s.h_forward)),
            ("h_inverse", json!(s.h_inverse)),
            ("q0", json!(q0)),
            ("newton", json!({"maxiter": newton.maxiter, "rtol": newton.rtol})),
            ("solver", options_json(&opts)),
            (
                "projection_error",
                json!(inverse::reconstruction_error(
                    &truth,
                    &inverse::sine_projection(&truth, m)
                )),
            ),
        ],
    );
    let data = spectrum::enumerate_with(&truth, alpha, n, fwd, &opts)
        .map_err(|e| spectrum_failure(e, |_| ResultTable::new(cfg.clone(), &["n"]).into()))?
        .eigenvalues();
    let free = spectrum::enumerate_with(&Potential::zero(), alpha, n, inv, &opts)
        .map_err(|e| spectrum_failure(e, |_| ResultTable::new(cfg.clone(), &["n"]).into()))?;
    let jac = inverse::FrozenJacobian::from_eigenvalues(free.eigenvalues(), m, alpha, inverse::GREEN_QUAD_POINTS)
        .map_err(|e| Failure::Runtime(e.to_string()))?;
    match inverse::frozen_newton(&data, &jac, alpha, &q0, inv, newton, Some(&truth)) {
        Ok(report) => Ok(newton_tables(&cfg, &report, &truth, m)),
        Err(InverseError::Diverged { report }) => Err(Failure::Diverged {
            message: "frozen Newton iteration diverged".into(),
            partial: Box::new(newton_tables(&cfg, &report, &truth, m)),
        }),
        Err(e) => Err(Failure::Runtime(e.to_string())),
    }
}

pub fn cond(s: &Settings) -> Result<Output, Failure> {
    let alphas = s.alphas(1.5)?;
    if let Some(a) = alphas.iter().find(|a| !(**a > 1.0 && **a < 2.0)) {
        return usage(format!("--alpha {a} must lie strictly inside (1, 2)"));
    }
    let counts = s.counts(5)?;
    if let Some(m) = s.m {
        if m == 0 || counts.iter().any(|&n| m > n) {
            return usage("--m must satisfy 1 <= M <= every N");
        }
    }
    let mesh = Settings::mesh(s.h_inverse, "--h-inverse")?;
    let opts = s.spectrum_options()?;
    let cfg = config(
        "cond",
        &[
            ("alpha", json!(alphas)),
            ("n", json!(counts)),
            ("m", s.m.map_or(json!("n"), |m| json!(m))),
            ("h_inverse", json!(s.h_inverse)),
            ("quad_points", json!(inverse::GREEN_QUAD_POINTS)),
            ("solver", options_json(&opts)),
        ],
    );
    let mut t = ResultTable::new(cfg, &["alpha", "n", "m", "cond", "rank"]);
    for &alpha in &alphas {
        for &n in &counts {
            let m = s.m.unwrap_or(n);
            let free = spectrum::enumerate_with(&Potential::zero(), alpha, n, mesh, &opts);
            let free = match free {
                Ok(f) => f,
                Err(e) => {
                    return Err(spectrum_failure(e, |_| t.clone().into()));
                }
            };
            let jac =
                inverse::FrozenJacobian::from_eigenvalues(free.eigenvalues(), m, alpha, inverse::GREEN_QUAD_POINTS)
                    .map_err(|e| Failure::Runtime(e.to_string()))?;
            t.push(vec![
                alpha.into(),
                n.into(),
                m.into(),
                jac.condition_number().into(),
                jac.rank().into(),
            ]);
        }
    }
    Ok(t.into())
}
