//! Shell-friendly complex literals: `1.5`, `0.5i`, `-i`, `0.3-2e-1i`.

use fock_core::scalar::c64;
use fock_core::C64;

use crate::error::{CliError, CliResult};

pub fn parse_complex(token: &str) -> CliResult<C64> {
    let err = |reason| CliError::ComplexLiteral { token: token.to_string(), reason };
    let s = token.trim();
    if s.is_empty() {
        return Err(err("empty literal"));
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(c64(parse_real(s).ok_or_else(|| err("expected a real number or an `i` suffix"))?, 0.0));
    };
    // the split between real and imaginary parts is the last sign that is
    // not the sign of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re.is_empty() { 0.0 } else { parse_real(re).ok_or_else(|| err("bad real part"))? };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => parse_real(t).ok_or_else(|| err("bad imaginary part"))?,
    };
    Ok(c64(re, im))
}

fn parse_real(s: &str) -> Option<f64> {
    let starts_ok = s.trim_start_matches(['+', '-']).starts_with(|c: char| c.is_ascii_digit() || c == '.');
    let v: f64 = s.parse().ok()?;
    (starts_ok && v.is_finite()).then_some(v)
}

/// Compact rendering used in check labels: `0.5`, `0.3i`, `0.3-0.2i`.
pub fn short(z: C64) -> String {
    match (z.re == 0.0, z.im == 0.0) {
        (_, true) => format!("{}", z.re),
        (true, false) => format!("{}i", z.im),
        (false, false) => format!("{}{:+}i", z.re, z.im),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_forms() {
        let cases = [
            ("1", c64(1.0, 0.0)),
            ("-0.25", c64(-0.25, 0.0)),
            ("0.5i", c64(0.0, 0.5)),
            ("i", c64(0.0, 1.0)),
            ("-i", c64(0.0, -1.0)),
            ("+i", c64(0.0, 1.0)),
            ("0+1i", c64(0.0, 1.0)),
            ("1+i", c64(1.0, 1.0)),
            ("0.3-0.2i", c64(0.3, -0.2)),
            ("1e-3+2.5e2i", c64(1e-3, 250.0)),
            ("-1.5E+1-2e-2i", c64(-15.0, -0.02)),
            ("2e3i", c64(0.0, 2000.0)),
        ];
        for (s, z) in cases {
            assert_eq!(parse_complex(s).unwrap(), z, "{s}");
        }
    }

    #[test]
    fn rejects_garbage_and_echoes_token() {
        for bad in ["", "abc", "1+2", "1+2j", "inf", "nan", "1++2i", "ii", "1e", "e5"] {
            let e = parse_complex(bad).unwrap_err();
            assert!(e.to_string().contains(&format!("`{}`", bad)), "{bad}: {e}");
            assert_eq!(e.exit_code(), 2);
        }
    }

    #[test]
    fn short_forms_round_trip() {
        for z in [c64(0.5, 0.0), c64(0.0, -0.3), c64(0.3, -0.2), c64(-1.0, 2.0)] {
            assert_eq!(parse_complex(&short(z)).unwrap(), z);
        }
    }
}
