//! Exact rational numbers and their text forms.
//!
//! Every probability, level and mass in this crate is a [`Rat`]. Floating
//! point never enters a computation; callers that need floats (plotting,
//! display rounding) convert at the very edge.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rat = BigRational;

/// Shorthand for a small rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for a small integer rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses a rational from text, exactly.
///
/// Accepted forms: `"3/4"`, `"0.75"`, `"-1.5"`, `"2"`. Decimal strings are
/// converted without rounding (`0.75` becomes `3/4`).
pub fn parse_rat(text: &str) -> Result<Rat, Error> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::BadNumber(text.to_owned()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::BadNumber(text.to_owned()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::BadNumber(text.to_owned()))?;
        if d.is_zero() {
            return Err(Error::BadNumber(text.to_owned()));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        let int_digits = if int_digits.is_empty() {
            "0"
        } else {
            int_digits
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::BadNumber(text.to_owned()));
        }
        let int: BigInt = int_digits
            .parse()
            .map_err(|_| Error::BadNumber(text.to_owned()))?;
        let frac: BigInt = frac_part
            .parse()
            .map_err(|_| Error::BadNumber(text.to_owned()))?;
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        let unsigned = int * &scale + frac;
        return Ok(Rat::new(unsigned * BigInt::from(sign), scale));
    }
    let n: BigInt = s.parse().map_err(|_| Error::BadNumber(text.to_owned()))?;
    Ok(Rat::from_integer(n))
}

/// True when `v` lies in the closed unit interval.
pub fn in_unit(v: &Rat) -> bool {
    !v.is_negative() && *v <= Rat::one()
}

/// Lossy conversion for CSV emission; the only place floats are allowed.
pub fn to_f64(v: &Rat) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Renders `v` rounded half-up to `places` decimal places.
pub fn to_decimal_string(v: &Rat, places: usize) -> String {
    let scale = BigInt::from(10u8).pow(places as u32);
    let scaled = v * Rat::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let negative = rounded.is_negative();
    let digits = rounded.abs().to_string();
    let digits = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = digits.split_at(digits.len() - places);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}
