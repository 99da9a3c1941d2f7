//! Splitting an integer vector `x` with `A x = n b`, `0 <= x <= n` into `n`
//! binary solutions of `A y = b`.
//!
//! Each round solves the feasibility LP
//! `floor(x_j / n) <= y_j <= ceil(x_j / n)`, `A y = b`. The point `x / n`
//! lies in that box, so the box polytope is nonempty, and total
//! unimodularity makes its vertices integral. The vertex found is peeled
//! off and the loop continues with `x - y` and `n - 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::lp::{assert_integral, solve_lp, LpOutcome, LpProblem};
use crate::scalar::Scalar;
use crate::system::{SolutionBundle, TuSystem};
use crate::{Rational, SolveError};

pub fn decompose(system: &TuSystem, n: usize, x: &[u64]) -> Result<SolutionBundle, SolveError> {
    decompose_with::<Rational>(system, n, x)
}

/// [`decompose`] over an arbitrary LP scalar.
pub fn decompose_with<S: Scalar>(
    system: &TuSystem,
    n: usize,
    x: &[u64],
) -> Result<SolutionBundle, SolveError> {
    if n == 0 {
        return Err(SolveError::PreconditionViolated("multiplicity n must be positive".into()));
    }
    let d = system.d();
    if x.len() != d {
        return Err(SolveError::PreconditionViolated(format!(
            "vector has length {}, system has {d} columns",
            x.len()
        )));
    }
    if let Some((j, &v)) = x.iter().enumerate().find(|(_, &v)| v > n as u64) {
        return Err(SolveError::PreconditionViolated(format!(
            "entry {j} = {v} exceeds the multiplicity {n}"
        )));
    }
    if !system.satisfies_scaled(x, n) {
        return Err(SolveError::PreconditionViolated("A x differs from n b".into()));
    }

    let a_eq: Vec<Vec<S>> = system
        .a()
        .iter()
        .map(|row| row.iter().map(|&v| S::from_i64(v)).collect())
        .collect();
    let b_eq: Vec<S> = system.b().iter().map(|&v| S::from_i64(v)).collect();

    let mut remaining = x.to_vec();
    let mut peeled: Vec<Vec<u8>> = Vec::with_capacity(n);
    for k in (1..=n as u64).rev() {
        let y: Vec<u8> = if k == 1 {
            remaining.iter().map(|&v| v as u8).collect()
        } else {
            let lower: Vec<S> = remaining.iter().map(|&v| S::from_i64((v / k) as i64)).collect();
            let upper: Vec<S> = remaining.iter().map(|&v| S::from_i64(v.div_ceil(k) as i64)).collect();
            let lp = LpProblem {
                a_eq: a_eq.clone(),
                b_eq: b_eq.clone(),
                lower,
                upper,
                objective: vec![S::zero(); d],
            };
            match solve_lp(&lp)? {
                LpOutcome::Infeasible => {
                    return Err(SolveError::InternalInfeasible { remaining: k as usize })
                }
                LpOutcome::Optimal(sol) => to_binary(&assert_integral(&sol.values)?)?,
            }
        };
        for (r, &yj) in remaining.iter_mut().zip(&y) {
            *r -= yj as u64;
        }
        peeled.push(y);
    }
    peeled.reverse();
    let bundle = SolutionBundle::new(peeled)?;
    debug_assert!(bundle.is_feasible_for(system));
    Ok(bundle)
}

fn to_binary(v: &[BigInt]) -> Result<Vec<u8>, SolveError> {
    v.iter()
        .enumerate()
        .map(|(j, e)| {
            if e.is_zero() {
                Ok(0)
            } else if e.is_one() {
                Ok(1)
            } else {
                Err(SolveError::PreconditionViolated(format!("entry {j} = {e} is not binary")))
            }
        })
        .collect()
}
