//! Arbitrary-precision integer and rational helpers.
//!
//! Integers are [`BigInt`] / [`BigUint`] and rationals are [`ExactRational`],
//! an always-reduced fraction with a positive denominator.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Reduced fraction of big integers. The denominator is always positive.
pub type ExactRational = BigRational;

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    // acc = C(n - k + i, i) after step i; each division is exact.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn pow2(exp: u64) -> BigUint {
    BigUint::one() << exp
}

pub fn rational(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<ExactRational> {
    let denom = denom.into();
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(numer.into(), denom))
}

pub fn rational_from_nat(value: &BigUint) -> ExactRational {
    BigRational::from_integer(BigInt::from(value.clone()))
}

/// Exact division that reports a zero divisor instead of panicking.
pub fn checked_div(lhs: &ExactRational, rhs: &ExactRational) -> Result<ExactRational> {
    if rhs.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(lhs / rhs)
}

/// `numer / denom`, failing when the quotient is not an integer.
pub(crate) fn exact_quotient(numer: &BigUint, denom: &BigUint, what: impl FnOnce() -> String) -> Result<BigUint> {
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = numer.div_rem(denom);
    if !r.is_zero() {
        return Err(Error::NotDivisible(what()));
    }
    Ok(q)
}

/// Render `value` as a decimal with `digits` fractional digits, rounding
/// half away from zero.
pub fn to_decimal(value: &ExactRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let numer = value.numer().abs() * &scale;
    let denom = value.denom();
    let (mut q, r) = numer.div_rem(denom);
    if r * 2u32 >= *denom {
        q += 1u32;
    }
    let negative = value.numer() < &BigInt::zero() && !q.is_zero();
    let mut s = q.to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
        }
        s.insert(s.len() - digits, '.');
    }
    if negative {
        s.insert(0, '-');
    }
    s
}
