//! Potentials `q(x)` on `[0, 1]`.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::quad;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PotentialError {
    #[error("piece [{lo}, {hi}] is empty or leaves [0, 1]")]
    BadPiece { lo: f64, hi: f64 },
    #[error("pieces overlap or are out of order at x = {at}")]
    Unordered { at: f64 },
    #[error("non-finite coefficient in potential")]
    NonFinite,
}

/// One polynomial piece on the closed interval `[lo, hi]`, coefficients in
/// ascending powers of `x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Piece {
    pub lo: f64,
    pub hi: f64,
    pub coeffs: Vec<f64>,
}

impl Piece {
    fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    fn integral(&self) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                let p = (j + 1) as i32;
                c * (self.hi.powi(p) - self.lo.powi(p)) / p as f64
            })
            .sum()
    }
}

#[derive(Clone)]
pub enum PotentialKind {
    Zero,
    /// `q(x) = Σ_k q_k sin(kπx)`, `k = 1..`.
    Sine(Vec<f64>),
    /// Polynomial pieces; zero outside every piece. At a shared breakpoint
    /// the first listed piece wins.
    Piecewise(Vec<Piece>),
    /// A named closed-form potential.
    Function {
        name: &'static str,
        f: fn(f64) -> f64,
    },
}

impl fmt::Debug for PotentialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PotentialKind::Zero => f.write_str("Zero"),
            PotentialKind::Sine(c) => f.debug_tuple("Sine").field(c).finish(),
            PotentialKind::Piecewise(p) => f.debug_tuple("Piecewise").field(p).finish(),
            PotentialKind::Function { name, .. } => write!(f, "Function({name})"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Potential {
    kind: PotentialKind,
    mean: f64,
}

fn q1(x: f64) -> f64 {
    20.0 * x.powi(3) * ((-(x - 0.5).powi(2)).exp() - (-0.25f64).exp())
}

impl Potential {
    pub fn zero() -> Self {
        Potential {
            kind: PotentialKind::Zero,
            mean: 0.0,
        }
    }

    pub fn constant(c: f64) -> Self {
        Potential::piecewise(vec![Piece {
            lo: 0.0,
            hi: 1.0,
            coeffs: vec![c],
        }])
        .expect("a constant piece on [0, 1] is valid")
    }

    pub fn sine(coeffs: Vec<f64>) -> Result<Self, PotentialError> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(PotentialError::NonFinite);
        }
        let mean = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let k = (i + 1) as f64;
                let odd = if (i + 1) % 2 == 1 { 2.0 } else { 0.0 };
                c * odd / (k * PI)
            })
            .sum();
        Ok(Potential {
            kind: PotentialKind::Sine(coeffs),
            mean,
        })
    }

    pub fn piecewise(pieces: Vec<Piece>) -> Result<Self, PotentialError> {
        let mut prev_hi = 0.0;
        for (i, p) in pieces.iter().enumerate() {
            if !(p.lo < p.hi && p.lo >= 0.0 && p.hi <= 1.0) {
                return Err(PotentialError::BadPiece { lo: p.lo, hi: p.hi });
            }
            if i > 0 && p.lo < prev_hi {
                return Err(PotentialError::Unordered { at: p.lo });
            }
            if p.coeffs.iter().any(|c| !c.is_finite()) {
                return Err(PotentialError::NonFinite);
            }
            prev_hi = p.hi;
        }
        let mean = pieces.iter().map(Piece::integral).sum();
        Ok(Potential {
            kind: PotentialKind::Piecewise(pieces),
            mean,
        })
    }

    /// Wraps a closed-form potential; the mean is integrated numerically.
    pub fn function(name: &'static str, f: fn(f64) -> f64) -> Self {
        let mean = quad::simpson(f, 0.0, 1.0, 2000);
        Potential {
            kind: PotentialKind::Function { name, f },
            mean,
        }
    }

    /// `q₁(x) = 20x³(e^{-(x-1/2)²} - e^{-1/4})`.
    pub fn q1() -> Self {
        Potential::function("q1", q1)
    }

    /// The discontinuous test potential `q₂`.
    pub fn q2() -> Self {
        Potential::piecewise(vec![
            Piece {
                lo: 0.0,
                hi: 0.2,
                coeffs: vec![0.0, -2.0],
            },
            Piece {
                lo: 0.2,
                hi: 0.4,
                coeffs: vec![-0.8, 2.0],
            },
            Piece {
                lo: 0.6,
                hi: 0.8,
                coeffs: vec![1.0],
            },
        ])
        .expect("q2 pieces are valid")
    }

    pub fn kind(&self) -> &PotentialKind {
        &self.kind
    }

    /// `∫₀¹ q(t) dt`.
    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn is_zero(&self) -> bool {
        match &self.kind {
            PotentialKind::Zero => true,
            PotentialKind::Sine(c) => c.iter().all(|&v| v == 0.0),
            PotentialKind::Piecewise(p) => p.iter().all(|p| p.coeffs.iter().all(|&v| v == 0.0)),
            PotentialKind::Function { .. } => false,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match &self.kind {
            PotentialKind::Zero => 0.0,
            PotentialKind::Sine(c) => sine_series(c, x),
            PotentialKind::Piecewise(pieces) => pieces
                .iter()
                .find(|p| p.lo <= x && x <= p.hi)
                .map_or(0.0, |p| p.eval(x)),
            PotentialKind::Function { f, .. } => f(x),
        }
    }

    /// Points in `(0, 1)` where `q` may fail to be smooth.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut pts = Vec::new();
        if let PotentialKind::Piecewise(pieces) = &self.kind {
            for p in pieces {
                for x in [p.lo, p.hi] {
                    if x > 0.0 && x < 1.0 && pts.last() != Some(&x) {
                        pts.push(x);
                    }
                }
            }
        }
        pts
    }

    /// Short label used in output headers.
    pub fn describe(&self) -> String {
        match &self.kind {
            PotentialKind::Zero => "zero".into(),
            PotentialKind::Sine(c) => format!(
                "sine:{}",
                c.iter().map(|v| format!("{v:e}")).collect::<Vec<_>>().join(",")
            ),
            PotentialKind::Piecewise(p) => format!("piecewise({} pieces)", p.len()),
            PotentialKind::Function { name, .. } => (*name).into(),
        }
    }
}

/// `Σ_k c_k sin(kπx)`.
pub fn sine_series(coeffs: &[f64], x: f64) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, &c)| c * ((i + 1) as f64 * PI * x).sin())
        .sum()
}

/// The `k`-th sine basis function, `k >= 1`.
pub fn sine_basis(k: usize, x: f64) -> f64 {
    (k as f64 * PI * x).sin()
}
