//! Distinct real-root counting with Sturm sequences over `Q`.
//!
//! For nonzero `f`, take the square-free part `g = f / gcd(f, f')`, build
//! `g_0 = g`, `g_1 = g'`, `g_{i+1} = -rem(g_{i-1}, g_i)`, and count sign
//! changes of the leading terms at `-∞` and `+∞`. The difference is the
//! number of distinct real roots.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::IntPoly;
use crate::{Error, Result};

/// Polynomial over the rationals, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> &BigRational {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Divide by the leading coefficient.
    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading().clone();
        Self::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let factor = &rem[top] / lc;
            if !factor.is_zero() {
                let shift = top - dd;
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= &factor * c;
                }
                quot[shift] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn sign_at_pos_inf(&self) -> i8 {
        sign(self.leading())
    }

    fn sign_at_neg_inf(&self) -> i8 {
        let s = sign(self.leading());
        if self.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(f: &IntPoly) -> Self {
        Self::new(
            f.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let nonzero: Vec<i8> = signs.filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `f / gcd(f, f')`, made monic.
pub fn square_free_part(f: &IntPoly) -> Result<RatPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = RatPoly::from(f);
    let g = f.gcd(&f.derivative());
    let (q, r) = f.div_rem(&g);
    debug_assert!(r.is_zero());
    Ok(q.monic())
}

pub fn sturm_chain(g: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![g.clone()];
    let mut next = g.derivative();
    while !next.is_zero() {
        let prev = chain.last().unwrap();
        let (_, r) = prev.div_rem(&next);
        chain.push(next);
        next = RatPoly::new(r.coeffs.iter().map(|c| -c).collect());
    }
    chain
}

/// Number of distinct real roots of `f`.
pub fn count_distinct_real_roots(f: &IntPoly) -> Result<usize> {
    let g = square_free_part(f)?;
    let chain = sturm_chain(&g);
    let at_neg = sign_changes(chain.iter().map(RatPoly::sign_at_neg_inf));
    let at_pos = sign_changes(chain.iter().map(RatPoly::sign_at_pos_inf));
    Ok(at_neg - at_pos)
}

/// Every complex root of `f` is real. A nonzero constant qualifies
/// vacuously.
pub fn is_real_rooted(f: &IntPoly) -> Result<bool> {
    let g = square_free_part(f)?;
    let degree = g.degree().unwrap_or(0);
    Ok(count_distinct_real_roots(f)? == degree)
}
