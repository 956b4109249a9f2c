//! Helpers for exact threshold arithmetic.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Parses a non-negative decimal string such as `"0.05"` or `"3"` exactly.
pub fn parse_decimal(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("`{text}` is not a non-negative decimal"));
    if t.is_empty() {
        return Err(bad());
    }
    let (int_part, frac_part) = match t.split_once('.') {
        Some((i, f)) => (i, f),
        None => (t, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
        || frac_part.len() > 15
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: i64 = if digits.is_empty() {
        0
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let denom = 10i64.pow(frac_part.len() as u32);
    Ok(Rational::new(numer, denom))
}

/// Formats a rational as an integer when integral, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a rational as a decimal when the denominator allows it.
pub fn rational_to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn ceil_to_i64(r: &Rational) -> i64 {
    r.numer().div_ceil(r.denom())
}

pub fn floor_to_i64(r: &Rational) -> i64 {
    r.numer().div_floor(r.denom())
}

/// `⌈r⌉` clamped below at zero.
pub fn ceil_usize(r: &Rational) -> usize {
    ceil_to_i64(r).max(0) as usize
}

/// `⌊r⌋` clamped below at zero.
pub fn floor_usize(r: &Rational) -> usize {
    floor_to_i64(r).max(0) as usize
}

pub fn from_usize(x: usize) -> Rational {
    Rational::from_integer(x as i64)
}

/// Decides `a ≤ √b · c` exactly for rationals with `b, c ≥ 0`.
pub fn le_sqrt_times(a: &Rational, b: &Rational, c: &Rational) -> bool {
    if a.is_negative() || a.is_zero() {
        return true;
    }
    a * a <= b * c * c
}

/// Decides `x ≥ √b` exactly for `b ≥ 0`.
pub fn ge_sqrt(x: &Rational, b: &Rational) -> bool {
    !x.is_negative() && x * x >= *b
}
