//! Plain-text formatting and parsing for complex scalars, used by reports and
//! command line arguments. The canonical form is "re+imi", e.g. "0.5-0.25i".

use num_complex::Complex64;

use crate::error::{Error, Result};

pub fn format_complex(z: Complex64) -> String {
    if z.im >= 0.0 || z.im.is_nan() {
        format!("{}+{}i", z.re, z.im)
    } else {
        format!("{}{}i", z.re, z.im)
    }
}

/// Accepts "a+bi", "a-bi", "a", "bi", "i", "-i" and scientific notation in
/// either part ("1e-2+3.5e1i").
pub fn parse_complex(input: &str) -> Result<Complex64> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::BadComplex {
            input: input.to_string(),
            reason: "empty string",
        });
    }
    let bad = |reason: &'static str| Error::BadComplex {
        input: input.to_string(),
        reason,
    };

    let parse_real = |part: &str| -> Result<f64> {
        part.parse::<f64>().map_err(|_| bad("invalid real literal"))
    };
    // "i", "+i", "-i", "3i", "-2.5e-3i"
    let parse_imag = |part: &str| -> Result<f64> {
        let body = part.strip_suffix(['i', 'I']).ok_or_else(|| bad("missing 'i' suffix"))?;
        match body {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => body.parse::<f64>().map_err(|_| bad("invalid imaginary literal")),
        }
    };

    // Split point: the last '+' or '-' that is not leading, not an exponent
    // sign, and not itself preceded by another sign.
    let bytes = s.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        let c = bytes[k];
        if (c == b'+' || c == b'-') && !matches!(bytes[k - 1], b'e' | b'E' | b'+' | b'-') {
            split = Some(k);
            break;
        }
    }
    match split {
        Some(k) => {
            let (re_part, im_part) = s.split_at(k);
            Ok(Complex64::new(parse_real(re_part)?, parse_imag(im_part)?))
        }
        None => {
            if s.ends_with(['i', 'I']) {
                Ok(Complex64::new(0.0, parse_imag(&s)?))
            } else {
                Ok(Complex64::new(parse_real(&s)?, 0.0))
            }
        }
    }
}
