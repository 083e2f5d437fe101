//! Weak compositions as histograms, the one-dimensional earth mover's
//! distance, and the expected EMD between two uniformly random histograms.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{binomial, factorial, pow2, rational_from_nat, ExactRational};
use crate::partitions::{sym_diff_size, Partition};
use crate::poly::IntPoly;
use crate::{Error, Result};

/// An `n`-bin histogram holding `s` points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u64>,
    total: u64,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<u64>>) -> Result<Self> {
        let parts = parts.into();
        if parts.is_empty() {
            return Err(Error::InvalidArgument("a composition needs at least one part".into()));
        }
        let total = parts.iter().sum();
        Ok(Self { parts, total })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of bins `n`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of points `s`.
    pub fn total(&self) -> u64 {
        self.total
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `|C(s,n)| = C(s+n-1, s)`.
pub fn composition_count(s: u64, n: u64) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    binomial(s + n - 1, s as i64)
}

fn check_pair_cap(s: u64, n: u64, max_pairs: u64) -> Result<()> {
    let count = composition_count(s, n);
    let pairs = &count * &count;
    if pairs > BigUint::from(max_pairs) {
        return Err(Error::cap("composition pairs", pairs, max_pairs));
    }
    Ok(())
}

/// All of `C(s,n)` in lexicographically decreasing order, e.g.
/// `(2,0), (1,1), (0,2)`.
///
/// Refuses when `|C(s,n)|²` exceeds `max_pairs`.
pub fn enumerate_compositions(s: u64, n: u64, max_pairs: u64) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::InvalidArgument("compositions need n >= 1".into()));
    }
    check_pair_cap(s, n, max_pairs)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    compositions_into(s, n as usize, &mut current, &mut out);
    Ok(out)
}

fn compositions_into(left: u64, slots: usize, current: &mut Vec<u64>, out: &mut Vec<Composition>) {
    if slots == 1 {
        current.push(left);
        let total = current.iter().sum();
        out.push(Composition {
            parts: current.clone(),
            total,
        });
        current.pop();
        return;
    }
    for first in (0..=left).rev() {
        current.push(first);
        compositions_into(left - first, slots - 1, current, out);
        current.pop();
    }
}

fn check_pair(alpha: &Composition, beta: &Composition) -> Result<()> {
    if alpha.len() != beta.len() {
        return Err(Error::InvalidPair(format!(
            "{alpha} has {} bins but {beta} has {}",
            alpha.len(),
            beta.len()
        )));
    }
    if alpha.total() != beta.total() {
        return Err(Error::InvalidPair(format!(
            "{alpha} holds {} points but {beta} holds {}",
            alpha.total(),
            beta.total()
        )));
    }
    Ok(())
}

/// `Σ_i |Σ_{j≤i} (α_j - β_j)|`: the work needed to move `α` onto `β` when
/// shifting one point by one bin costs one.
pub fn emd(alpha: &Composition, beta: &Composition) -> Result<u64> {
    check_pair(alpha, beta)?;
    let mut running: i128 = 0;
    let mut work: u128 = 0;
    for (a, b) in alpha.parts.iter().zip(&beta.parts) {
        running += *a as i128 - *b as i128;
        work += running.unsigned_abs();
    }
    Ok(work as u64)
}

/// `α ↦ ((n-1)^{α_1}, (n-2)^{α_2}, …, 1^{α_{n-1}})`, a bijection
/// `C(s,n) → Par(s × (n-1))`. The last bin is implied by `s`.
pub fn comp_to_partition(alpha: &Composition) -> Partition {
    let n = alpha.len();
    let parts: Vec<usize> = alpha
        .parts
        .iter()
        .take(n - 1)
        .enumerate()
        .flat_map(|(i, &mult)| std::iter::repeat_n(n - 1 - i, mult as usize))
        .collect();
    Partition::from_sorted_unchecked(parts)
}

/// EMD computed as `|λ ⊖ μ|` of the image diagrams.
pub fn emd_via_bijection(alpha: &Composition, beta: &Composition) -> Result<u64> {
    check_pair(alpha, beta)?;
    Ok(sym_diff_size(&comp_to_partition(alpha), &comp_to_partition(beta)) as u64)
}

/// `Σ EMD(α, β)` over every ordered pair in `C(s,n)²`, by enumeration.
pub fn hprime_coeff_bruteforce(s: u64, n: u64, max_pairs: u64) -> Result<BigUint> {
    let all = enumerate_compositions(s, n, max_pairs)?;
    let total: u128 = all
        .par_iter()
        .map(|a| {
            all.iter()
                .map(|b| emd(a, b).expect("same s and n") as u128)
                .sum::<u128>()
        })
        .sum();
    Ok(BigUint::from(total))
}

/// Brute-force `Σ EMD(α, β)` over `C(s,p) × C(s,q)`, bins padded with zeros
/// on the right so both sides have `max(p,q)` bins.
///
/// This is the coefficient of `t^s` in `N_pq(t)/(1-t)^(p+q)`.
pub fn mixed_emd_sum_bruteforce(s: u64, p: u64, q: u64, max_pairs: u64) -> Result<BigUint> {
    let pairs = composition_count(s, p) * composition_count(s, q);
    if pairs > BigUint::from(max_pairs) {
        return Err(Error::cap("composition pairs", pairs, max_pairs));
    }
    let width = p.max(q) as usize;
    let pad = |c: Composition| {
        let mut parts = c.parts;
        parts.resize(width, 0);
        Composition { parts, total: c.total }
    };
    let lhs: Vec<_> = enumerate_compositions(s, p, u64::MAX)?.into_iter().map(pad).collect();
    let rhs: Vec<_> = enumerate_compositions(s, q, u64::MAX)?.into_iter().map(pad).collect();
    let mut total = 0u128;
    for a in &lhs {
        for b in &rhs {
            total += emd(a, b)? as u128;
        }
    }
    Ok(BigUint::from(total))
}

/// `[t^s] H'_n(t) = S_⊖(s, n-1)`, evaluated with the Wiener-index formula
/// `s(n-1)/(4s+4(n-1)+2) · C(2s+2(n-1)+2, 2s+1)`.
pub fn hprime_coeff_closed(s: u64, n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    crate::wiener::wiener_formula(s, n - 1)
}

/// First `terms` coefficients of `numer(t) / (1-t)^pole_order`.
pub fn series_expand(numer: &IntPoly, pole_order: u64, terms: usize) -> Vec<BigInt> {
    // [t^m] (1-t)^{-k} = C(m+k-1, k-1)
    let tail = |m: u64| -> BigInt {
        if pole_order == 0 {
            return BigInt::from(u8::from(m == 0));
        }
        BigInt::from(binomial(m + pole_order - 1, (pole_order - 1) as i64))
    };
    (0..terms)
        .map(|s| (0..=s).map(|j| numer.coeff(j) * tail((s - j) as u64)).sum())
        .collect()
}

/// `E[EMD(α,β)] = s(n-1)/(4s+4n-2) · C(2s+2n, 2s+1) / C(s+n-1, s)²` for
/// `(α, β)` uniform on `C(s,n)²`.
pub fn expected_emd(s: u64, n: u64) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let lead = ExactRational::new(BigInt::from(s * (n - 1)), BigInt::from(4 * s + 4 * n - 2));
    let count = composition_count(s, n);
    let ratio = ExactRational::new(
        BigInt::from(binomial(2 * s + 2 * n, (2 * s + 1) as i64)),
        BigInt::from(&count * &count),
    );
    Ok(lead * ratio)
}

/// `lim_{s→∞} E[EMD]/s = 2^(2n-3)·(n-1)·((n-1)!)² / (2n-1)!`.
pub fn expected_emd_limit(n: u64) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n == 1 {
        return Ok(ExactRational::zero());
    }
    let f = factorial(n - 1);
    let numer = pow2(2 * n - 3) * BigUint::from(n - 1) * &f * &f;
    Ok(rational_from_nat(&numer) / rational_from_nat(&factorial(2 * n - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use crate::partitions::{enumerate_partitions, fits, sum_sym_diff, RectBound};
    use crate::poly::{n_poly_recursive, w_poly};
    use crate::DEFAULT_MAX_PAIRS;
    use num_traits::Signed;

    fn comp(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn comps(s: u64, n: u64) -> Vec<Composition> {
        enumerate_compositions(s, n, DEFAULT_MAX_PAIRS).unwrap()
    }

    /// Greedy transport on a line: match the k-th point of α (sorted by bin)
    /// with the k-th point of β. Independent of the prefix-sum formula.
    fn matched_transport(alpha: &Composition, beta: &Composition) -> u64 {
        let expand = |c: &Composition| -> Vec<u64> {
            c.parts()
                .iter()
                .enumerate()
                .flat_map(|(i, &m)| std::iter::repeat_n(i as u64, m as usize))
                .collect()
        };
        expand(alpha)
            .into_iter()
            .zip(expand(beta))
            .map(|(x, y)| x.abs_diff(y))
            .sum()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(comps(1, 2), vec![comp(&[1, 0]), comp(&[0, 1])]);
        assert_eq!(comps(2, 2), vec![comp(&[2, 0]), comp(&[1, 1]), comp(&[0, 2])]);
        assert_eq!(comps(0, 4), vec![comp(&[0, 0, 0, 0])]);
        for s in 0..=5 {
            for n in 1..=4 {
                let all = comps(s, n);
                assert_eq!(BigUint::from(all.len()), composition_count(s, n));
                assert!(all.windows(2).all(|w| w[0] > w[1]));
                assert!(all.iter().all(|c| c.total() == s && c.len() == n as usize));
            }
        }
    }

    #[test]
    fn enumeration_cap_and_bad_n() {
        let err = enumerate_compositions(20, 10, 1_000).unwrap_err();
        assert!(err.is_cap_exceeded());
        assert!(enumerate_compositions(3, 0, DEFAULT_MAX_PAIRS).is_err());
    }

    #[test]
    fn emd_examples() {
        assert_eq!(emd(&comp(&[1, 0]), &comp(&[0, 1])).unwrap(), 1);
        let a = comp(&[2, 0, 5]);
        assert_eq!(emd(&a, &a).unwrap(), 0);
        assert_eq!(emd(&comp(&[3, 0, 0]), &comp(&[0, 0, 3])).unwrap(), 6);
    }

    #[test]
    fn emd_rejects_mismatched_pairs() {
        assert!(matches!(
            emd(&comp(&[1, 0]), &comp(&[1, 0, 0])),
            Err(Error::InvalidPair(_))
        ));
        assert!(matches!(
            emd(&comp(&[1, 0]), &comp(&[2, 0])),
            Err(Error::InvalidPair(_))
        ));
        assert!(matches!(
            emd_via_bijection(&comp(&[1, 0]), &comp(&[2, 0])),
            Err(Error::InvalidPair(_))
        ));
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(comp_to_partition(&comp(&[1, 0])), Partition::new(vec![1]).unwrap());
        assert_eq!(comp_to_partition(&comp(&[0, 0, 0, 4])), Partition::empty());
        assert_eq!(
            comp_to_partition(&comp(&[0, 2, 1])),
            Partition::new(vec![1, 1]).unwrap()
        );
        assert_eq!(emd_via_bijection(&comp(&[1, 0]), &comp(&[0, 1])).unwrap(), 1);
        assert_eq!(emd_via_bijection(&comp(&[2, 0]), &comp(&[1, 1])).unwrap(), 1);
    }

    #[test]
    fn metric_agreement_and_bijectivity() {
        for s in 0..=5 {
            for n in 1..=4 {
                let all = comps(s, n);
                let bound = RectBound::new(s as usize, n as usize - 1);
                let mut images: Vec<_> = all.iter().map(comp_to_partition).collect();
                assert!(images.iter().all(|l| fits(l, bound)));
                images.sort();
                images.dedup();
                let mut target = enumerate_partitions(bound);
                target.sort();
                assert_eq!(images, target, "s={s} n={n}");
                for a in &all {
                    for b in &all {
                        let d = emd(a, b).unwrap();
                        assert_eq!(d, emd_via_bijection(a, b).unwrap());
                        assert_eq!(d, matched_transport(a, b));
                        assert_eq!(d, emd(b, a).unwrap());
                        assert_eq!(d == 0, a == b);
                    }
                }
            }
        }
    }

    #[test]
    fn hprime_examples() {
        let nat = |v: u32| BigUint::from(v);
        assert_eq!(hprime_coeff_bruteforce(1, 2, DEFAULT_MAX_PAIRS).unwrap(), nat(2));
        assert_eq!(hprime_coeff_bruteforce(4, 1, DEFAULT_MAX_PAIRS).unwrap(), nat(0));
        assert_eq!(hprime_coeff_bruteforce(2, 3, DEFAULT_MAX_PAIRS).unwrap(), nat(56));
        assert_eq!(hprime_coeff_closed(1, 2).unwrap(), nat(2));
        assert_eq!(hprime_coeff_closed(2, 3).unwrap(), nat(56));
        assert_eq!(hprime_coeff_closed(0, 5).unwrap(), nat(0));
        assert_eq!(hprime_coeff_closed(7, 1).unwrap(), nat(0));
    }

    #[test]
    fn hprime_oracles_agree() {
        for s in 0..=5 {
            for n in 1..=4 {
                let brute = hprime_coeff_bruteforce(s, n, DEFAULT_MAX_PAIRS).unwrap();
                let bound = RectBound::new(s as usize, n as usize - 1);
                assert_eq!(brute, hprime_coeff_closed(s, n).unwrap(), "s={s} n={n}");
                assert_eq!(brute, sum_sym_diff(bound, bound), "s={s} n={n}");
            }
        }
    }

    #[test]
    fn series_examples() {
        let as_big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(series_expand(&IntPoly::one(), 1, 4), as_big(&[1, 1, 1, 1]));
        assert_eq!(
            series_expand(&IntPoly::from_i64s(&[0, 8, 8]), 6, 3),
            as_big(&[0, 8, 56])
        );
        assert_eq!(series_expand(&IntPoly::from_i64s(&[1, 1]), 3, 3), as_big(&[1, 4, 9]));
    }

    #[test]
    fn rational_form_of_the_emd_series() {
        for p in 1..=4 {
            for q in 1..=4 {
                let series = series_expand(&n_poly_recursive(p, q), p + q, 5);
                for (s, coeff) in series.iter().enumerate() {
                    let brute = mixed_emd_sum_bruteforce(s as u64, p, q, DEFAULT_MAX_PAIRS).unwrap();
                    assert_eq!(*coeff, BigInt::from(brute), "p={p} q={q} s={s}");
                }
            }
        }
    }

    #[test]
    fn hilbert_series_at_z_equal_one() {
        for p in 1..=5 {
            for q in 1..=5 {
                let series = series_expand(&w_poly(p, q), p + q - 1, 6);
                for (s, coeff) in series.iter().enumerate() {
                    let want = composition_count(s as u64, p) * composition_count(s as u64, q);
                    assert_eq!(*coeff, BigInt::from(want), "p={p} q={q} s={s}");
                }
            }
        }
    }

    #[test]
    fn series_inverts_multiplication_by_the_pole() {
        use proptest::prelude::*;
        proptest!(|(coeffs in prop::collection::vec(-50i64..50, 1..5), k in 0u64..5)| {
            let numer = IntPoly::from_i64s(&coeffs);
            let terms = 8;
            let series = IntPoly::new(series_expand(&numer, k, terms));
            let mut back = series;
            for _ in 0..k {
                back = &back * &IntPoly::from_i64s(&[1, -1]);
            }
            for j in 0..terms {
                prop_assert_eq!(back.coeff(j), numer.coeff(j));
            }
        });
    }

    #[test]
    fn expected_emd_examples() {
        assert_eq!(expected_emd(1, 2).unwrap(), rational(1, 2).unwrap());
        assert_eq!(expected_emd(2, 2).unwrap(), rational(8, 9).unwrap());
        assert_eq!(expected_emd(0, 5).unwrap(), ExactRational::zero());
        assert!(expected_emd(3, 0).is_err());
    }

    #[test]
    fn expected_emd_matches_brute_force_mean() {
        for s in 0..=6 {
            for n in 1..=4 {
                let sum = hprime_coeff_bruteforce(s, n, DEFAULT_MAX_PAIRS).unwrap();
                let count = composition_count(s, n);
                let mean = rational_from_nat(&sum) / rational_from_nat(&(&count * &count));
                assert_eq!(expected_emd(s, n).unwrap(), mean, "s={s} n={n}");
            }
        }
    }

    #[test]
    fn expected_emd_matches_closed_sum() {
        for s in 0..=8 {
            for n in 1..=6 {
                let count = composition_count(s, n);
                let via_sum =
                    rational_from_nat(&hprime_coeff_closed(s, n).unwrap()) / rational_from_nat(&(&count * &count));
                assert_eq!(expected_emd(s, n).unwrap(), via_sum);
            }
        }
    }

    #[test]
    fn limit_examples() {
        assert_eq!(expected_emd_limit(1).unwrap(), ExactRational::zero());
        assert_eq!(expected_emd_limit(2).unwrap(), rational(1, 3).unwrap());
        assert_eq!(expected_emd_limit(3).unwrap(), rational(8, 15).unwrap());
    }

    #[test]
    fn limit_convergence() {
        for n in 1..=6u64 {
            let limit = expected_emd_limit(n).unwrap();
            let errors: Vec<ExactRational> = [10u64, 100, 1000]
                .iter()
                .map(|&s| {
                    let scaled = expected_emd(s, n).unwrap() / ExactRational::from_integer(BigInt::from(s));
                    (scaled - &limit).abs()
                })
                .collect();
            if n == 1 {
                assert!(errors.iter().all(Zero::is_zero));
            } else {
                assert!(errors[0] > errors[1] && errors[1] > errors[2], "n={n}");
                assert!(errors[2] < &limit / ExactRational::from_integer(BigInt::from(100)));
            }
        }
    }
}
