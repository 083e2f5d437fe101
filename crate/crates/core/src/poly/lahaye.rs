use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::IntPoly;
use crate::arith::{binomial, pow2};
use crate::{Error, Result};

/// Sum of the coefficients, i.e. `f(1)`.
pub fn eval_at_one(f: &IntPoly) -> BigInt {
    f.coeffs().iter().sum()
}

/// `S(n) = n · 2^(2n-1)`, with `S(0) = 0`.
pub fn la_haye_s(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    BigUint::from(n) * pow2(2 * n - 1)
}

/// `S(n) = Σ_{k=1}^{n} k·C(2n, k)`.
pub fn la_haye_s_alternative(n: u64) -> BigUint {
    (1..=n).map(|k| BigUint::from(k) * binomial(2 * n, k as i64)).sum()
}

/// `Σ |X △ Y|` over all ordered pairs of subsets of `{1..n}`, by brute force.
///
/// Refuses `n > max_n`; `max_n` itself is clamped to 31 so masks fit a `u32`
/// pair count in `u64`.
pub fn subset_symdiff_sum(n: u32, max_n: u32) -> Result<BigUint> {
    let limit = max_n.min(31);
    if n > limit {
        return Err(Error::cap("subset symmetric-difference sum n", n, limit as u64));
    }
    let size: u64 = 1 << n;
    let total: u64 = (0..size)
        .map(|x| (0..size).map(|y| (x ^ y).count_ones() as u64).sum::<u64>())
        .sum();
    Ok(BigUint::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::n_poly_closed;
    use crate::DEFAULT_MAX_SUBSET_N;

    fn nat(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn s_examples() {
        assert_eq!(la_haye_s(0), nat(0));
        assert_eq!(la_haye_s(3), nat(96));
        assert_eq!(la_haye_s(8), nat(262_144));
    }

    #[test]
    fn s_alternative_formula() {
        for n in 0..=20 {
            assert_eq!(la_haye_s(n), la_haye_s_alternative(n), "n={n}");
        }
    }

    #[test]
    fn subset_sum_examples() {
        assert_eq!(subset_symdiff_sum(0, DEFAULT_MAX_SUBSET_N).unwrap(), nat(0));
        assert_eq!(subset_symdiff_sum(1, DEFAULT_MAX_SUBSET_N).unwrap(), nat(2));
        assert_eq!(subset_symdiff_sum(2, DEFAULT_MAX_SUBSET_N).unwrap(), nat(16));
        for n in 0..=10 {
            assert_eq!(
                subset_symdiff_sum(n, DEFAULT_MAX_SUBSET_N).unwrap(),
                la_haye_s(n as u64)
            );
        }
    }

    #[test]
    fn subset_sum_cap() {
        let err = subset_symdiff_sum(13, DEFAULT_MAX_SUBSET_N).unwrap_err();
        assert!(err.is_cap_exceeded());
        assert!(err.to_string().contains("12"), "{err}");
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_at_one(&n_poly_closed(4).unwrap()), BigInt::from(96));
        assert_eq!(eval_at_one(&IntPoly::zero()), BigInt::zero());
        assert_eq!(eval_at_one(&n_poly_closed(8).unwrap()), BigInt::from(57_344));
    }

    #[test]
    fn sum_of_coefficients_is_shifted_s() {
        // n, N_n(1), S(n) rows of the published table
        let table = [
            (0u64, 0u64, 0u64),
            (1, 0, 2),
            (2, 2, 16),
            (3, 16, 96),
            (4, 96, 512),
            (5, 512, 2560),
            (6, 2560, 12288),
            (7, 12288, 57344),
            (8, 57344, 262144),
        ];
        for (n, n_at_one, s) in table {
            assert_eq!(la_haye_s(n), nat(s));
            if n >= 1 {
                assert_eq!(eval_at_one(&n_poly_closed(n).unwrap()), BigInt::from(n_at_one));
            }
        }
        for n in 1..=20 {
            let lhs = eval_at_one(&n_poly_closed(n).unwrap());
            assert_eq!(lhs, BigInt::from(la_haye_s(n - 1)), "n={n}");
        }
    }
}
