use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::IntPoly;
use crate::arith::{binomial, exact_quotient};
use crate::partitions::{pair_count, sum_sym_diff, RectBound};
use crate::Result;

/// `W_pq(t) = Σ_k C(p-1,k)·C(q-1,k)·t^k`, the numerator of
/// `Σ_s |C(s,p)|·|C(s,q)|·t^s` over `(1-t)^(p+q-1)`.
pub fn w_poly(p: u64, q: u64) -> IntPoly {
    assert!(p >= 1 && q >= 1, "w_poly needs p, q >= 1");
    let top = p.min(q);
    IntPoly::new(
        (0..top)
            .map(|k| BigInt::from(binomial(p - 1, k as i64) * binomial(q - 1, k as i64)))
            .collect(),
    )
}

/// `N_pq(t)` from the recursion
///
/// ```text
/// N_pq = N_{p-1,q} + N_{p,q-1} - (1-t)·N_{p-1,q-1} + |p-q|·t·W_pq
/// ```
///
/// with `N_{0,q} = N_{p,0} = N_{1,1} = 0`, filled bottom-up over the whole
/// `[0..=p] × [0..=q]` grid.
pub fn n_poly_recursive(p: u64, q: u64) -> IntPoly {
    let (rows, cols) = (p as usize, q as usize);
    let one_minus_t = IntPoly::from_i64s(&[1, -1]);
    let mut table = vec![vec![IntPoly::zero(); cols + 1]; rows + 1];
    for i in 1..=rows {
        for j in 1..=cols {
            if i == 1 && j == 1 {
                continue;
            }
            let mut cell = &table[i - 1][j] + &table[i][j - 1];
            cell = &cell - &(&one_minus_t * &table[i - 1][j - 1]);
            let gap = i.abs_diff(j);
            if gap > 0 {
                let w = w_poly(i as u64, j as u64);
                cell = &cell + &w.scale(&BigInt::from(gap)).shift(1);
            }
            table[i][j] = cell;
        }
    }
    table.swap_remove(rows).swap_remove(cols)
}

/// `Σ_{k=1}^{min(p,q)} S_⊖(k, p-k | k, q-k)·t^k`, each coefficient summed
/// by brute force over pairs of partitions.
pub fn n_poly_symdiff(p: u64, q: u64) -> IntPoly {
    let top = p.min(q) as usize;
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let left = RectBound::new(k, p as usize - k);
        let right = RectBound::new(k, q as usize - k);
        *slot = BigInt::from(sum_sym_diff(left, right));
    }
    IntPoly::new(coeffs)
}

/// Total number of partition pairs [`n_poly_symdiff`] visits.
pub fn symdiff_pair_count(p: u64, q: u64) -> BigUint {
    (1..=p.min(q) as usize)
        .map(|k| pair_count(RectBound::new(k, p as usize - k), RectBound::new(k, q as usize - k)))
        .sum()
}

/// `N_n(t) = (1/(4n+2))·Σ_{k=1}^{n-1} k(n-k)·C(2n+2, 2k+1)·t^k`.
///
/// Fails with [`crate::Error::NotDivisible`] if a coefficient is not an exact
/// multiple of `4n+2`; that would mean a bug, not bad input.
pub fn n_poly_closed(n: u64) -> Result<IntPoly> {
    let denom = BigUint::from(4 * n + 2);
    let mut coeffs = vec![BigInt::zero(); n.max(1) as usize];
    for k in 1..n {
        let numer = BigUint::from(k * (n - k)) * binomial(2 * n + 2, (2 * k + 1) as i64);
        let c = exact_quotient(&numer, &denom, || format!("coefficient t^{k} of N_{n}"))?;
        coeffs[k as usize] = BigInt::from(c);
    }
    Ok(IntPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Lattice paths (1,1) → (p,q) with `p-1` east and `q-1` north steps,
    /// tallied by the number of north-then-east turns.
    fn turn_counts(p: usize, q: usize) -> Vec<i64> {
        let steps = p + q - 2;
        let mut tally = vec![0i64; p.min(q)];
        for mask in 0u32..(1 << steps) {
            if mask.count_ones() as usize != q - 1 {
                continue;
            }
            // bit set = north step
            let turns = (1..steps)
                .filter(|&i| mask >> (i - 1) & 1 == 1 && mask >> i & 1 == 0)
                .count();
            tally[turns] += 1;
        }
        tally
    }

    #[test]
    fn w_poly_examples() {
        assert_eq!(w_poly(1, 5), IntPoly::one());
        assert_eq!(w_poly(2, 2), poly(&[1, 1]));
        assert_eq!(w_poly(4, 4), poly(&[1, 9, 9, 1]));
    }

    #[test]
    fn w_poly_counts_lattice_path_turns() {
        for p in 1..=6 {
            for q in 1..=6 {
                assert_eq!(w_poly(p as u64, q as u64), poly(&turn_counts(p, q)), "W_{p}{q}");
            }
        }
    }

    #[test]
    fn w_poly_symmetry() {
        for p in 1..=8 {
            for q in 1..=8 {
                assert_eq!(w_poly(p, q), w_poly(q, p));
            }
        }
    }

    #[test]
    fn recursive_examples() {
        assert_eq!(n_poly_recursive(1, 1), IntPoly::zero());
        assert_eq!(n_poly_recursive(0, 5), IntPoly::zero());
        assert_eq!(n_poly_recursive(5, 0), IntPoly::zero());
        assert_eq!(n_poly_recursive(2, 2), poly(&[0, 2]));
        assert_eq!(n_poly_recursive(4, 4), poly(&[0, 20, 56, 20]));
    }

    #[test]
    fn symdiff_examples() {
        assert_eq!(n_poly_symdiff(4, 4), poly(&[0, 20, 56, 20]));
        assert_eq!(n_poly_symdiff(1, 1), IntPoly::zero());
        let s = |a, b, c, d| BigInt::from(sum_sym_diff(RectBound::new(a, b), RectBound::new(c, d)));
        let got = n_poly_symdiff(2, 3);
        assert_eq!(got.coeff(1), s(1, 1, 1, 2));
        assert_eq!(got.coeff(2), s(2, 0, 2, 1));
        assert_eq!(got, n_poly_recursive(2, 3));
    }

    #[test]
    fn symdiff_matches_recursion() {
        for p in 1..=6 {
            for q in 1..=6 {
                assert_eq!(n_poly_symdiff(p, q), n_poly_recursive(p, q), "N_{p},{q}");
            }
        }
    }

    #[test]
    fn closed_examples() {
        assert_eq!(n_poly_closed(1).unwrap(), IntPoly::zero());
        assert_eq!(n_poly_closed(2).unwrap(), poly(&[0, 2]));
        assert_eq!(n_poly_closed(6).unwrap(), poly(&[0, 70, 616, 1188, 616, 70]));
        assert_eq!(
            n_poly_closed(8).unwrap(),
            poly(&[0, 168, 3024, 14040, 22880, 14040, 3024, 168])
        );
    }

    #[test]
    fn closed_matches_recursion_and_degrees() {
        for n in 1..=12 {
            let closed = n_poly_closed(n).unwrap();
            assert_eq!(closed, n_poly_recursive(n, n), "N_{n}");
            if n >= 2 {
                assert_eq!(closed.low_degree(), Some(1));
                assert_eq!(closed.degree(), Some(n as usize - 1));
            }
        }
    }

    #[test]
    fn pair_count_is_sum_of_products() {
        // k = 1: 2·3, k = 2: 1·3
        assert_eq!(symdiff_pair_count(2, 3), BigUint::from(9u32));
    }
}
