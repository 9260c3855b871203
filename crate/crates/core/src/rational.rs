//! Exact scalars.
//!
//! `Rational` is a re-export of `num_rational::BigRational`: numerator and
//! denominator are arbitrary-precision integers, values are kept in lowest
//! terms with a positive denominator, and arithmetic never rounds. The
//! helpers here exist so the rest of the crate can spell constants tersely.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn int(n: i128) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics on `d == 0`.
pub fn rat(n: i128, d: i128) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"num/den"`, an integer, or a plain decimal such as `"0.25"`,
/// all exactly.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let neg = whole.trim_start().starts_with('-');
        let whole: BigInt = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            whole.parse().ok()?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = frac.parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let abs = Rational::new(whole.abs() * &scale + digits, scale);
        return Some(if neg { -abs } else { abs });
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(n))
}

/// Renders as `"num/den"`, or just the numerator when the value is an
/// integer. This is the exact-witness wire format used in reports.
pub fn to_fraction_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Nearest double. Fine for display; never used in certificates.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `r^k` for nonnegative `k`.
pub fn pow(r: &Rational, k: u32) -> Rational {
    let mut acc = one();
    for _ in 0..k {
        acc *= r;
    }
    acc
}
