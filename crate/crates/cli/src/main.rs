//! Command-line front end for fractional Sturm-Liouville computations.

mod commands;
mod parse;
mod table;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Failure, Output, Settings};
use table::Format;

#[derive(Parser)]
#[command(
    name = "fracslp",
    version,
    about = "Fractional Sturm-Liouville spectra and inverse reconstruction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the two-parameter Mittag-Leffler function.
    Ml {
        /// Arguments such as `2`, `-1e6`, `3+4i`; put `-i` style values after `--`.
        #[arg(required = true, allow_negative_numbers = true)]
        z: Vec<String>,
    },
    /// First N eigenvalues with asymptotic predictions.
    Spectrum,
    /// Remainders after removing the free spectrum and the mean.
    Decay,
    /// Frozen-Newton reconstruction of sine coefficients.
    Reconstruct,
    /// Condition numbers of the frozen Jacobian.
    Cond,
}

#[derive(Args)]
struct Global {
    /// Fractional order, or a comma-separated list for `cond`.
    #[arg(long, global = true)]
    alpha: Option<String>,
    /// Second Mittag-Leffler parameter (`ml` only).
    #[arg(long, global = true)]
    beta: Option<f64>,
    /// Number of eigenvalues, or a list for `cond`.
    #[arg(long, global = true)]
    n: Option<String>,
    /// Number of sine coefficients (defaults to N).
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Step of the mesh used for forward spectra.
    #[arg(long, global = true, default_value_t = 1e-3)]
    h_forward: f64,
    /// Step of the mesh used inside the inverse solver.
    #[arg(long, global = true, default_value_t = 1.25e-3)]
    h_inverse: f64,
    /// zero, q1, q2, const:C, sine:c1,c2,... or piecewise:FILE.
    #[arg(long, global = true)]
    potential: Option<String>,
    /// Initial sine coefficients for `reconstruct`, comma separated.
    #[arg(long, global = true, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Relative stopping tolerance of the secant iteration.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Iteration cap: Newton steps for `reconstruct`, secant steps otherwise.
    #[arg(long, global = true)]
    maxiter: Option<usize>,
    /// Imaginary offset of the seed at the potential mean.
    #[arg(long, global = true, allow_hyphen_values = true)]
    seed_imag: Option<f64>,
}

fn companion(path: &Path, suffix: &str, format: Format) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    path.with_file_name(format!("{stem}.{suffix}.{}", format.extension()))
}

fn emit(out: &Output, path: Option<&Path>, format: Format) -> std::io::Result<()> {
    match path {
        Some(p) => {
            std::fs::write(p, out.main.render(format))?;
            for (suffix, t) in &out.extra {
                std::fs::write(companion(p, suffix, format), t.render(format))?;
            }
        }
        None => print!("{}", out.main.render(format)),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let g = cli.global;
    let settings = Settings {
        alpha: g.alpha,
        beta: g.beta,
        n: g.n,
        m: g.m,
        h_forward: g.h_forward,
        h_inverse: g.h_inverse,
        potential: g.potential,
        coeffs: g.coeffs,
        tol: g.tol,
        maxiter: g.maxiter,
        seed_imag: g.seed_imag,
    };
    let result = match &cli.command {
        Command::Ml { z } => commands::ml(&settings, z),
        Command::Spectrum => commands::spectrum(&settings),
        Command::Decay => commands::decay(&settings),
        Command::Reconstruct => commands::reconstruct(&settings),
        Command::Cond => commands::cond(&settings),
    };
    let (output, code) = match result {
        Ok(out) => (Some(out), 0),
        Err(f) => {
            eprintln!("fracslp: {}", f.message());
            let code = f.exit_code();
            let partial = match f {
                Failure::Incomplete { partial, .. } => partial.map(|p| *p),
                Failure::Diverged { partial, .. } => Some(*partial),
                _ => None,
            };
            (partial, code)
        }
    };
    if let Some(out) = output {
        if let Err(e) = emit(&out, g.out.as_deref(), g.format) {
            eprintln!("fracslp: cannot write output: {e}");
            return ExitCode::from(1);
        }
    }
    ExitCode::from(code as u8)
}
