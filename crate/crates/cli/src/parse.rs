//! Parsing of command-line values.

use std::path::Path;

use fracslp::potential::{Piece, Potential};
use num_complex::Complex64;

/// Parses `3`, `-2.5e3`, `4i`, `-i`, `1+2i`, `1e-3-4.5i`.
pub fn complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse '{s}' as a complex number");
    if t.is_empty() {
        return Err(bad());
    }
    if let Ok(re) = t.parse::<f64>() {
        return if re.is_finite() {
            Ok(Complex64::new(re, 0.0))
        } else {
            Err(bad())
        };
    }
    let body = t.strip_suffix('i').ok_or_else(bad)?;
    // split before the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        v => v.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    if !(re.is_finite() && im.is_finite()) {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

/// Comma-separated list.
pub fn list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<T>()
                .map_err(|_| format!("cannot parse '{p}' in {what} list"))
        })
        .collect()
}

/// `zero`, `q1`, `q2`, `const:C`, `sine:c1,c2,...` or `piecewise:FILE`.
pub fn potential(s: &str) -> Result<Potential, String> {
    let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
    match (kind, arg) {
        ("zero", "") => Ok(Potential::zero()),
        ("q1", "") => Ok(Potential::q1()),
        ("q2", "") => Ok(Potential::q2()),
        ("const", c) => {
            let v: f64 = c.parse().map_err(|_| format!("bad constant '{c}'"))?;
            if !v.is_finite() {
                return Err(format!("bad constant '{c}'"));
            }
            Ok(Potential::constant(v))
        }
        ("sine", c) => Potential::sine(list(c, "sine coefficient")?).map_err(|e| e.to_string()),
        ("piecewise", path) => piecewise_file(Path::new(path)),
        _ => Err(format!(
            "unknown potential '{s}' (zero, q1, q2, const:C, sine:c1,c2,..., piecewise:FILE)"
        )),
    }
}

fn piecewise_file(path: &Path) -> Result<Potential, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let pieces: Vec<Piece> = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Potential::piecewise(pieces).map_err(|e| e.to_string())
}
