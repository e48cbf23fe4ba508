//! Exact rationals.
//!
//! `Rational` is an arbitrary-precision fraction kept in canonical form
//! (positive denominator, coprime parts), so structural equality is value
//! equality. Its `Display` renders `p/q`, or `p` when the denominator is 1.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Renders an optional value, using `undefined` for absence.
pub fn render_opt(value: Option<&Rational>) -> String {
    match value {
        Some(v) => v.to_string(),
        None => "undefined".to_string(),
    }
}

pub fn render_vec(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(", "))
}
