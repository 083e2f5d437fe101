//! Verification sweeps behind `emdpoly verify`.
//!
//! Each check walks a parameter range, stops at the first disagreement and
//! reports it as a counterexample. Caps are checked up front so a sweep
//! either runs to completion or is refused before doing any work.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use emdpoly::arith::ExactRational;
use emdpoly::emd::{
    comp_to_partition, composition_count, emd, enumerate_compositions, expected_emd, expected_emd_limit,
    hprime_coeff_bruteforce, hprime_coeff_closed, series_expand,
};
use emdpoly::partitions::{sum_sym_diff, sym_diff_size, RectBound};
use emdpoly::poly::{
    eval_at_one, is_palindromic, is_real_rooted, is_unimodal, la_haye_s, n_poly_closed, n_poly_recursive,
    n_poly_symdiff, subset_symdiff_sum, symdiff_pair_count,
};
use emdpoly::wiener::{build_hasse, wiener_bfs, wiener_formula};
use emdpoly::{Error, DEFAULT_MAX_SUBSET_N};

use crate::report::{Counterexample, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Check {
    Palindromic,
    Unimodal,
    RealRooted,
    ClosedVsRecursive,
    SymdiffVsRecursive,
    EmdOracle,
    WienerTriple,
    ConjSum,
    LimitConvergence,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Palindromic => "palindromic",
            Check::Unimodal => "unimodal",
            Check::RealRooted => "real-rooted",
            Check::ClosedVsRecursive => "closed-vs-recursive",
            Check::SymdiffVsRecursive => "symdiff-vs-recursive",
            Check::EmdOracle => "emd-oracle",
            Check::WienerTriple => "wiener-triple",
            Check::ConjSum => "conj-sum",
            Check::LimitConvergence => "limit-convergence",
        }
    }

    pub fn all() -> &'static [Check] {
        Check::value_variants()
    }
}

/// Parameter bounds and caps for one sweep.
#[derive(Debug, Clone, Copy)]
pub struct Sweep {
    pub max_n: u64,
    pub max_s: u64,
    pub max_side: u64,
    pub max_pairs: u64,
    pub max_vertices: u64,
}

type Found = Result<Option<Counterexample>, Error>;

fn params(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn subset_top(sweep: &Sweep) -> u64 {
    sweep.max_n.min(DEFAULT_MAX_SUBSET_N as u64)
}

impl Sweep {
    pub fn params_for(&self, check: Check) -> BTreeMap<String, u64> {
        let n = self.max_n;
        match check {
            Check::Palindromic | Check::Unimodal | Check::ClosedVsRecursive => params(&[("n_min", 1), ("n_max", n)]),
            Check::RealRooted => params(&[("n_min", 2), ("n_max", n)]),
            Check::SymdiffVsRecursive => params(&[("p_min", 1), ("p_max", n), ("q_min", 1), ("q_max", n)]),
            Check::EmdOracle => params(&[("n_min", 1), ("n_max", n), ("s_min", 0), ("s_max", self.max_s)]),
            Check::WienerTriple => params(&[
                ("a_min", 1),
                ("a_max", self.max_side),
                ("b_min", 1),
                ("b_max", self.max_side),
            ]),
            Check::ConjSum => params(&[("n_min", 1), ("n_max", n), ("subset_n_max", subset_top(self))]),
            Check::LimitConvergence => params(&[("n_min", 1), ("n_max", n), ("s_min", 10), ("s_max", 1000)]),
        }
    }

    /// Refuses a sweep whose brute-force parts would exceed the caps.
    pub fn preflight(&self, check: Check) -> Result<(), Error> {
        let max_pairs = BigUint::from(self.max_pairs);
        let refuse = |what: &'static str, requested: BigUint, limit: u64| {
            Err(Error::CapExceeded {
                what,
                requested: requested.to_string(),
                limit,
            })
        };
        match check {
            Check::SymdiffVsRecursive => {
                let worst = symdiff_pair_count(self.max_n, self.max_n);
                if worst > max_pairs {
                    return refuse("partition pairs", worst, self.max_pairs);
                }
            }
            Check::EmdOracle if self.max_n >= 1 => {
                let count = composition_count(self.max_s, self.max_n);
                let pairs = &count * &count;
                if pairs > max_pairs {
                    return refuse("composition pairs", pairs, self.max_pairs);
                }
            }
            Check::WienerTriple => {
                let side = self.max_side as usize;
                let vertices = RectBound::new(side, side).count();
                if vertices > BigUint::from(self.max_vertices) {
                    return refuse("Hasse diagram vertices", vertices, self.max_vertices);
                }
                let pairs = &vertices * &vertices;
                if pairs > max_pairs {
                    return refuse("partition pairs", pairs, self.max_pairs);
                }
            }
            _ => {}
        }
        Ok(())
    }

    pub fn run(&self, check: Check) -> Result<VerificationReport, Error> {
        self.preflight(check)?;
        let start = Instant::now();
        let found = match check {
            Check::Palindromic => self.shape(is_palindromic, "not palindromic"),
            Check::Unimodal => self.shape(is_unimodal, "not unimodal"),
            Check::RealRooted => self.real_rooted(),
            Check::ClosedVsRecursive => self.closed_vs_recursive(),
            Check::SymdiffVsRecursive => self.symdiff_vs_recursive(),
            Check::EmdOracle => self.emd_oracle(),
            Check::WienerTriple => self.wiener_triple(),
            Check::ConjSum => self.conj_sum(),
            Check::LimitConvergence => self.limit_convergence(),
        }?;
        let elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(VerificationReport::new(
            check.name(),
            self.params_for(check),
            found,
            elapsed_ms,
        ))
    }

    fn shape(&self, holds: impl Fn(&emdpoly::poly::IntPoly) -> bool, what: &str) -> Found {
        for n in 1..=self.max_n {
            let f = n_poly_closed(n)?;
            if !holds(&f) {
                return Ok(Some(Counterexample::new([("n", n)], format!("N_{n} = {f} is {what}"))));
            }
        }
        Ok(None)
    }

    fn real_rooted(&self) -> Found {
        for n in 2..=self.max_n {
            let f = n_poly_closed(n)?;
            if !is_real_rooted(&f)? {
                return Ok(Some(Counterexample::new(
                    [("n", n)],
                    format!("N_{n} = {f} has non-real roots"),
                )));
            }
        }
        Ok(None)
    }

    fn closed_vs_recursive(&self) -> Found {
        for n in 1..=self.max_n {
            let closed = n_poly_closed(n)?;
            let rec = n_poly_recursive(n, n);
            if closed != rec {
                return Ok(Some(Counterexample::new(
                    [("n", n)],
                    format!("closed {closed} vs recursive {rec}"),
                )));
            }
        }
        Ok(None)
    }

    fn symdiff_vs_recursive(&self) -> Found {
        for p in 1..=self.max_n {
            for q in 1..=self.max_n {
                let brute = n_poly_symdiff(p, q);
                let rec = n_poly_recursive(p, q);
                if brute != rec {
                    return Ok(Some(Counterexample::new(
                        [("p", p), ("q", q)],
                        format!("symdiff {brute} vs recursive {rec}"),
                    )));
                }
            }
        }
        Ok(None)
    }

    fn emd_oracle(&self) -> Found {
        for n in 1..=self.max_n {
            let series = series_expand(&n_poly_recursive(n, n), 2 * n, self.max_s as usize + 1);
            for s in 0..=self.max_s {
                let all = enumerate_compositions(s, n, self.max_pairs)?;
                let images: Vec<_> = all.iter().map(comp_to_partition).collect();
                let mismatch = (0..all.len()).into_par_iter().find_first(|&i| {
                    (0..all.len()).any(|j| {
                        emd(&all[i], &all[j]).expect("same shape") as usize != sym_diff_size(&images[i], &images[j])
                    })
                });
                if let Some(i) = mismatch {
                    return Ok(Some(Counterexample::new(
                        [("s", s), ("n", n)],
                        format!("prefix-sum EMD and bijection disagree for {}", all[i]),
                    )));
                }
                let brute = hprime_coeff_bruteforce(s, n, self.max_pairs)?;
                let closed = hprime_coeff_closed(s, n)?;
                let coeff = &series[s as usize];
                if brute != closed || BigInt::from(brute.clone()) != *coeff {
                    return Ok(Some(Counterexample::new(
                        [("s", s), ("n", n)],
                        format!("brute {brute}, closed {closed}, series {coeff}"),
                    )));
                }
            }
        }
        Ok(None)
    }

    fn wiener_triple(&self) -> Found {
        for a in 1..=self.max_side {
            for b in 1..=self.max_side {
                let bound = RectBound::new(a as usize, b as usize);
                let bfs = wiener_bfs(&build_hasse(bound, self.max_vertices)?)?;
                let formula = wiener_formula(a, b)?;
                let brute = sum_sym_diff(bound, bound);
                if bfs != formula || formula != brute {
                    return Ok(Some(Counterexample::new(
                        [("a", a), ("b", b)],
                        format!("bfs {bfs}, formula {formula}, symmetric-difference sum {brute}"),
                    )));
                }
            }
        }
        Ok(None)
    }

    fn conj_sum(&self) -> Found {
        for n in 1..=self.max_n {
            let lhs = eval_at_one(&n_poly_closed(n)?);
            let rhs = BigInt::from(la_haye_s(n - 1));
            if lhs != rhs {
                return Ok(Some(Counterexample::new(
                    [("n", n)],
                    format!("N_{n}(1) = {lhs} but S({}) = {rhs}", n - 1),
                )));
            }
        }
        for m in 0..=subset_top(self) {
            let brute = subset_symdiff_sum(m as u32, DEFAULT_MAX_SUBSET_N)?;
            let formula = la_haye_s(m);
            if brute != formula {
                return Ok(Some(Counterexample::new(
                    [("subset_n", m)],
                    format!("subset sum {brute} vs n·2^(2n-1) = {formula}"),
                )));
            }
        }
        Ok(None)
    }

    fn limit_convergence(&self) -> Found {
        let hundred = ExactRational::from_integer(BigInt::from(100));
        for n in 1..=self.max_n {
            let limit = expected_emd_limit(n)?;
            let mut errors = Vec::with_capacity(3);
            for s in [10u64, 100, 1000] {
                let scaled = expected_emd(s, n)? / ExactRational::from_integer(BigInt::from(s));
                errors.push((scaled - &limit).abs());
            }
            let ok = if limit.is_zero() {
                errors.iter().all(Zero::is_zero)
            } else {
                errors[0] > errors[1] && errors[1] > errors[2] && errors[2] < &limit / &hundred
            };
            if !ok {
                let shown: Vec<String> = errors.iter().map(ToString::to_string).collect();
                return Ok(Some(Counterexample::new(
                    [("n", n)],
                    format!("limit {limit}, errors at s=10,100,1000: {}", shown.join(", ")),
                )));
            }
        }
        Ok(None)
    }
}

/// Runs `checks` in parallel; the result is sorted by check name.
pub fn run_all(sweep: &Sweep, checks: &[Check]) -> Result<Vec<VerificationReport>, Error> {
    let mut selected = checks.to_vec();
    selected.sort_by_key(|c| c.name());
    selected.dedup();
    for &check in &selected {
        sweep.preflight(check)?;
    }
    let mut reports = selected
        .par_iter()
        .map(|&check| sweep.run(check))
        .collect::<Result<Vec<_>, _>>()?;
    reports.sort_by(|a, b| a.check.cmp(&b.check).then_with(|| a.params.cmp(&b.params)));
    Ok(reports)
}
