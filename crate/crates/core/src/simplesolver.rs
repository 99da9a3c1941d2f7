//! Minimizing only the number of critical components, `|x^1 ∧ ... ∧ x^n|`.
//!
//! Solves the `2d`-variable LP
//!
//! ```text
//! min sum z   s.t.  A (y + z) = n b,  0 <= y <= n - 1,  0 <= z <= 1
//! ```
//!
//! and decomposes `y + z`. A component used by all `n` vectors has
//! `y_j + z_j = n`, forcing `z_j = 1`, so the intersection is bounded by
//! `z`. Only `f_n` of the returned bundle is optimal; the lower layers are
//! arbitrary. Use [`crate::solve_lexmin`] when those matter.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::compression::vulnerability;
use crate::decompose::decompose_with;
use crate::lp::{assert_integral, solve_lp, LpOutcome, LpProblem};
use crate::scalar::Scalar;
use crate::system::{SolutionBundle, TuSystem};
use crate::{Rational, SolveError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalSolution {
    pub bundle: SolutionBundle,
    pub critical: usize,
}

/// Variables are `y_1..y_d` then `z_1..z_d`.
pub fn critical_lp<S: Scalar>(system: &TuSystem, n: usize) -> LpProblem<S> {
    let d = system.d();
    let a_eq = system
        .a()
        .iter()
        .map(|row| {
            let row: Vec<S> = row.iter().map(|&v| S::from_i64(v)).collect();
            row.iter().chain(row.iter()).cloned().collect()
        })
        .collect();
    let nb = BigInt::from(n);
    let b_eq = system.b().iter().map(|&v| S::from_bigint(&(BigInt::from(v) * &nb))).collect();
    let cap = S::from_bigint(&BigInt::from(n.saturating_sub(1)));
    let mut upper = vec![cap; d];
    upper.extend(std::iter::repeat(S::one()).take(d));
    let mut objective = vec![S::zero(); d];
    objective.extend(std::iter::repeat(S::one()).take(d));
    LpProblem { a_eq, b_eq, lower: vec![S::zero(); 2 * d], upper, objective }
}

pub fn solve_min_critical(system: &TuSystem, n: usize) -> Result<CriticalSolution, SolveError> {
    solve_min_critical_with::<Rational>(system, n)
}

pub fn solve_min_critical_with<S: Scalar>(
    system: &TuSystem,
    n: usize,
) -> Result<CriticalSolution, SolveError> {
    if n == 0 {
        return Err(SolveError::PreconditionViolated("multiplicity n must be positive".into()));
    }
    let d = system.d();
    let lp = critical_lp::<S>(system, n);
    let sol = match solve_lp(&lp)? {
        LpOutcome::Infeasible => return Err(SolveError::Infeasible),
        LpOutcome::Optimal(sol) => sol,
    };
    let v = assert_integral(&sol.values)?;
    let x: Vec<u64> = (0..d)
        .map(|j| (&v[j] + &v[d + j]).to_u64())
        .collect::<Option<_>>()
        .ok_or_else(|| SolveError::PreconditionViolated("negative LP entry".into()))?;
    if !system.satisfies_scaled(&x, n) {
        return Err(SolveError::PreconditionViolated("A (y + z) differs from n b".into()));
    }
    let bundle = decompose_with::<S>(system, n, &x)?;
    let critical = vulnerability(&bundle).critical();
    debug_assert_eq!(sol.objective_value.to_integer(), Some(BigInt::from(critical)));
    Ok(CriticalSolution { bundle, critical })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::{digraph_to_system, DigraphInstance};

    fn digraph(vertices: usize, edges: &[(usize, usize)], s: usize, t: usize) -> TuSystem {
        digraph_to_system(&DigraphInstance { vertices, edges: edges.to_vec(), source: s, sink: t, n: 1 })
            .unwrap()
    }

    #[test]
    fn fixtures() {
        let bridge = digraph(3, &[(0, 1), (0, 1), (1, 2)], 0, 2);
        assert_eq!(solve_min_critical(&bridge, 2).unwrap().critical, 1);
        let diamond = digraph(4, &[(0, 1), (1, 3), (0, 2), (2, 3)], 0, 3);
        let sol = solve_min_critical(&diamond, 2).unwrap();
        assert_eq!(sol.critical, 0);
        assert!(sol.bundle.is_feasible_for(&diamond));
        let edge = digraph(2, &[(0, 1)], 0, 1);
        assert_eq!(solve_min_critical(&edge, 3).unwrap().critical, 1);
        assert_eq!(solve_min_critical(&edge, 1).unwrap().critical, 1);
    }

    #[test]
    fn lp_has_two_d_variables() {
        let bridge = digraph(3, &[(0, 1), (0, 1), (1, 2)], 0, 2);
        for n in 1..6 {
            assert_eq!(critical_lp::<Rational>(&bridge, n).num_vars(), 6);
        }
    }

    #[test]
    fn infeasible() {
        let unreachable = digraph(3, &[(1, 0), (1, 2)], 0, 2);
        assert_eq!(solve_min_critical(&unreachable, 2), Err(SolveError::Infeasible));
    }
}
