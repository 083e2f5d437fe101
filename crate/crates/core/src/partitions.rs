//! Young diagrams bounded by rectangles.
//!
//! A [`Partition`] is stored as its nonzero parts in weakly decreasing order;
//! the empty diagram is the empty vector. `Par(a×b)` is enumerated in
//! lexicographically increasing order of the zero-padded part vector, so the
//! empty diagram comes first and the full rectangle `(b^a)` last.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "partition {parts:?} has an interior zero"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_sorted_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Length of the first row.
    pub fn width(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to exactly `rows` entries. Parts beyond
    /// `rows` are kept, so the result may be longer.
    pub fn padded(&self, rows: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        if v.len() < rows {
            v.resize(rows, 0);
        }
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// An `a`-row, `b`-column rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RectBound {
    pub rows: usize,
    pub cols: usize,
}

impl RectBound {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols }
    }

    pub fn transpose(self) -> Self {
        Self::new(self.cols, self.rows)
    }

    /// `|Par(a×b)| = C(a+b, a)`.
    pub fn count(self) -> BigUint {
        crate::arith::binomial((self.rows + self.cols) as u64, self.rows as i64)
    }
}

impl fmt::Display for RectBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}×{}", self.rows, self.cols)
    }
}

pub fn fits(lambda: &Partition, bound: RectBound) -> bool {
    lambda.length() <= bound.rows && lambda.width() <= bound.cols
}

/// Every element of `Par(a×b)` once, lexicographically increasing on the
/// zero-padded part vector.
pub fn enumerate_partitions(bound: RectBound) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(bound.rows);
    fill(bound.rows, bound.cols, &mut current, &mut out);
    out
}

fn fill(rows_left: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rows_left == 0 {
        out.push(Partition::from_sorted_unchecked(current.clone()));
        return;
    }
    for part in 0..=max_part {
        current.push(part);
        fill(rows_left - 1, part, current, out);
        current.pop();
    }
}

/// Reflection across the main diagonal: row `j` of the result is the number
/// of rows of `lambda` longer than `j`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let parts = (0..lambda.width())
        .map(|j| lambda.parts.iter().take_while(|&&p| p > j).count())
        .collect();
    Partition::from_sorted_unchecked(parts)
}

/// `|λ ⊖ μ|`, the number of boxes in exactly one diagram.
///
/// Row `i` of each diagram is the prefix `{(i,0), .., (i, λ_i - 1)}`, so the
/// per-row symmetric difference has `|λ_i - μ_i|` boxes.
pub fn sym_diff_size(lambda: &Partition, mu: &Partition) -> usize {
    let rows = lambda.length().max(mu.length());
    (0..rows).map(|i| lambda.part(i).abs_diff(mu.part(i))).sum()
}

/// `S_⊖(a,b | c,d)`: the sum of `|λ ⊖ μ|` over all `(λ, μ)` in
/// `Par(a×b) × Par(c×d)`, by direct double enumeration.
pub fn sum_sym_diff(left: RectBound, right: RectBound) -> BigUint {
    let lhs = enumerate_partitions(left);
    let rhs = enumerate_partitions(right);
    let total: u128 = lhs
        .par_iter()
        .map(|l| rhs.iter().map(|r| sym_diff_size(l, r) as u128).sum::<u128>())
        .sum();
    BigUint::from(total)
}

/// Number of pairs `sum_sym_diff(left, right)` visits.
pub fn pair_count(left: RectBound, right: RectBound) -> BigUint {
    left.count() * right.count()
}
