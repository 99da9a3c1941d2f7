//! Exhaustive reference answers for small instances.
//!
//! Every feasible 0/1 vector is enumerated, then every `n`-multiset of
//! them is scored. The vulnerability vector is symmetric in the bundle and
//! repeats are allowed, so multisets cover all bundles.

use std::cmp::Ordering;

use thiserror::Error;

use crate::compression::{lex_compare, VulnerabilityVector};
use crate::system::TuSystem;

/// Largest column count [`enumerate_feasible`] accepts.
pub const MAX_ENUMERATION_DIM: usize = 25;

/// Default bound on the number of multisets scored by the brute-force
/// searches.
pub const DEFAULT_MULTISET_BUDGET: u128 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("more than {0} feasible solutions")]
    TooManySolutions(usize),
    #[error("{d} columns exceed the enumeration limit of {MAX_ENUMERATION_DIM}")]
    DimensionTooLarge { d: usize },
    #[error("{multisets} multisets exceed the budget of {budget}")]
    BudgetExceeded { multisets: u128, budget: u128 },
    #[error("no feasible solution")]
    Infeasible,
}

/// All `x in {0,1}^d` with `A x = b`, in lexicographic order.
pub fn enumerate_feasible(system: &TuSystem, cap: usize) -> Result<Vec<Vec<u8>>, OracleError> {
    let d = system.d();
    if d > MAX_ENUMERATION_DIM {
        return Err(OracleError::DimensionTooLarge { d });
    }
    let a = system.a();
    let m = system.m();
    // suffix_lo[i][j], suffix_hi[i][j]: range of row i's contribution from
    // columns j.. when those columns are still free.
    let mut suffix_lo = vec![vec![0i64; d + 1]; m];
    let mut suffix_hi = vec![vec![0i64; d + 1]; m];
    for i in 0..m {
        for j in (0..d).rev() {
            suffix_lo[i][j] = suffix_lo[i][j + 1] + a[i][j].min(0);
            suffix_hi[i][j] = suffix_hi[i][j + 1] + a[i][j].max(0);
        }
    }

    struct Search<'a> {
        a: &'a [Vec<i64>],
        b: &'a [i64],
        lo: Vec<Vec<i64>>,
        hi: Vec<Vec<i64>>,
        partial: Vec<i64>,
        current: Vec<u8>,
        out: Vec<Vec<u8>>,
        cap: usize,
    }

    impl Search<'_> {
        fn reachable(&self, j: usize) -> bool {
            (0..self.b.len()).all(|i| {
                let need = self.b[i] - self.partial[i];
                self.lo[i][j] <= need && need <= self.hi[i][j]
            })
        }

        fn run(&mut self, j: usize) -> Result<(), OracleError> {
            if !self.reachable(j) {
                return Ok(());
            }
            if j == self.current.len() {
                if self.out.len() == self.cap {
                    return Err(OracleError::TooManySolutions(self.cap));
                }
                self.out.push(self.current.clone());
                return Ok(());
            }
            self.run(j + 1)?;
            self.current[j] = 1;
            for (p, row) in self.partial.iter_mut().zip(self.a) {
                *p += row[j];
            }
            let r = self.run(j + 1);
            self.current[j] = 0;
            for (p, row) in self.partial.iter_mut().zip(self.a) {
                *p -= row[j];
            }
            r
        }
    }

    let mut search = Search {
        a,
        b: system.b(),
        lo: suffix_lo,
        hi: suffix_hi,
        partial: vec![0; m],
        current: vec![0; d],
        out: Vec::new(),
        cap,
    };
    search.run(0)?;
    Ok(search.out)
}

/// `C(s + n - 1, n)`, saturating.
pub fn multiset_count(s: usize, n: usize) -> u128 {
    if s == 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..n as u128 {
        acc = acc.saturating_mul(s as u128 + i) / (i + 1);
    }
    acc
}

/// Calls `visit` with the per-component counts of every `n`-multiset.
fn for_each_multiset(solutions: &[Vec<u8>], n: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(
        solutions: &[Vec<u8>],
        start: usize,
        left: usize,
        counts: &mut [usize],
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if left == 0 {
            visit(counts);
            return;
        }
        for (idx, s) in solutions.iter().enumerate().skip(start) {
            for (c, &e) in counts.iter_mut().zip(s) {
                *c += e as usize;
            }
            rec(solutions, idx, left - 1, counts, visit);
            for (c, &e) in counts.iter_mut().zip(s) {
                *c -= e as usize;
            }
        }
    }
    let mut counts = vec![0usize; solutions.first().map_or(0, Vec::len)];
    rec(solutions, 0, n, &mut counts, &mut visit);
}

fn feasible_within_budget(
    system: &TuSystem,
    n: usize,
    cap: usize,
    budget: u128,
) -> Result<Vec<Vec<u8>>, OracleError> {
    let solutions = enumerate_feasible(system, cap)?;
    if solutions.is_empty() {
        return Err(OracleError::Infeasible);
    }
    let multisets = multiset_count(solutions.len(), n);
    if multisets > budget {
        return Err(OracleError::BudgetExceeded { multisets, budget });
    }
    Ok(solutions)
}

fn counts_to_vulnerability(counts: &[usize], n: usize) -> VulnerabilityVector {
    let mut f = vec![0usize; n];
    for &c in counts {
        for fk in &mut f[..c] {
            *fk += 1;
        }
    }
    VulnerabilityVector(f)
}

pub fn brute_lexmin(system: &TuSystem, n: usize, cap: usize) -> Result<VulnerabilityVector, OracleError> {
    brute_lexmin_with_budget(system, n, cap, DEFAULT_MULTISET_BUDGET)
}

pub fn brute_lexmin_with_budget(
    system: &TuSystem,
    n: usize,
    cap: usize,
    budget: u128,
) -> Result<VulnerabilityVector, OracleError> {
    let solutions = feasible_within_budget(system, n, cap, budget)?;
    let mut best: Option<VulnerabilityVector> = None;
    for_each_multiset(&solutions, n, |counts| {
        let f = counts_to_vulnerability(counts, n);
        let better = match &best {
            None => true,
            Some(b) => lex_compare(&f, b) == Ok(Ordering::Less),
        };
        if better {
            best = Some(f);
        }
    });
    best.ok_or(OracleError::Infeasible)
}

pub fn brute_min_critical(system: &TuSystem, n: usize, cap: usize) -> Result<usize, OracleError> {
    brute_min_critical_with_budget(system, n, cap, DEFAULT_MULTISET_BUDGET)
}

pub fn brute_min_critical_with_budget(
    system: &TuSystem,
    n: usize,
    cap: usize,
    budget: u128,
) -> Result<usize, OracleError> {
    let solutions = feasible_within_budget(system, n, cap, budget)?;
    let mut best = usize::MAX;
    for_each_multiset(&solutions, n, |counts| {
        best = best.min(counts.iter().filter(|&&c| c == n).count());
    });
    Ok(best)
}
