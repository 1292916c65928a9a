//! Exact rational helpers shared across the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{input, Result};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact conversion of a finite float.
pub fn from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| crate::GapError::Input(format!("non-finite value {x}")))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Falls back to a quotient of floats for huge numerators/denominators.
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    })
}

/// Parses `"p/q"` or an integer `"p"`. Decimal points are rejected.
pub fn parse_fraction(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| crate::GapError::Input(format!("`{s}` is not an exact rational (expected p/q)")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| crate::GapError::Input(format!("`{s}` is not an exact rational (expected p/q)")))?;
    if den.is_zero() {
        return input(format!("`{s}` has zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Parses a fraction or a finite decimal literal such as `-0.125` or `1e-3`,
/// exactly (no detour through binary floating point).
pub fn parse_decimal_or_fraction(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.contains('/') || !(t.contains('.') || t.contains('e') || t.contains('E')) {
        return parse_fraction(t);
    }
    let bad = || crate::GapError::Input(format!("`{s}` is not a decimal or rational"));
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let mut value = Rational::from_integer(digits) / pow10(frac.len() as i32);
    value *= pow10(exp);
    if neg {
        value = -value;
    }
    Ok(value)
}

fn pow10(e: i32) -> Rational {
    let p = Rational::from_integer(num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize));
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Renders a rational as `p/q` (or `p` when integral).
pub fn fmt(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

pub fn min_max<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Option<(Rational, Rational)> {
    let mut it = values.into_iter();
    let first = it.next()?;
    let (mut lo, mut hi) = (first.clone(), first.clone());
    for v in it {
        if v < &lo {
            lo = v.clone();
        }
        if v > &hi {
            hi = v.clone();
        }
    }
    Some((lo, hi))
}
