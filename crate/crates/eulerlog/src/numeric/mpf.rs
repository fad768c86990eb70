//! Small helpers over the arbitrary-precision floats used by the numeric
//! engine. Public entry points speak decimal digits; internals use bits.

use rug::float::Round;
use rug::ops::{AddAssignRound, MulAssignRound};
use rug::{Float, Rational};

/// Guard digits added on top of every requested precision.
pub const GUARD_DIGITS: u32 = 20;

/// Working mantissa bits for a decimal-digit request.
pub fn bits_for(digits: u32) -> u32 {
    ((digits + GUARD_DIGITS) as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 16
}

pub fn f(prec: u32, v: i64) -> Float {
    Float::with_val(prec, v)
}

pub fn from_rat(prec: u32, q: &Rational) -> Float {
    Float::with_val(prec, q)
}

/// 10^(-digits) as a float threshold.
pub fn pow10_neg(prec: u32, digits: i64) -> Float {
    Float::with_val(prec, 10).pow(Float::with_val(prec, -digits))
}

use rug::ops::Pow;

/// Decimal-digit magnitude estimate of |x| below 1: number of correct digits
/// implied if x is an absolute error.
pub fn err_digits(x: &Float) -> u32 {
    if x.is_zero() {
        return u32::MAX;
    }
    let lg = x.clone().abs().log10();
    let d = -lg.to_f64();
    if d <= 0.0 {
        0
    } else if d >= u32::MAX as f64 {
        u32::MAX
    } else {
        d as u32
    }
}

/// Kahan-free plain summation is fine at our precisions, but accumulate in
/// place to avoid temporaries.
pub fn accumulate(acc: &mut Float, term: &Float) {
    acc.add_assign_round(term, Round::Nearest);
}

pub fn scale(acc: &mut Float, by: &Float) {
    acc.mul_assign_round(by, Round::Nearest);
}
