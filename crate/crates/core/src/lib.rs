//! Lexicographically minimal intersection of `n` solutions of a totally
//! unimodular system.
//!
//! Given `A` totally unimodular, integral `b`, and `n >= 1`, the solvers
//! pick `x^1, ..., x^n in {0,1}^d` with `A x^k = b` whose vulnerability
//! vector `f` (`f_k` = components used by at least `k` of them) is
//! lexicographically minimal, comparing `f_n` first. With `A` a directed
//! incidence matrix these are `n` s-t paths sharing as few edges as
//! possible; with a bipartite incidence matrix, `n` perfect matchings.
//!
//! * [`solve_lexmin`]: the full lexicographic optimum, through one LP in
//!   `d n` variables and a decomposition.
//! * [`solve_min_critical`]: only `f_n`, through an LP in `2d` variables.
//! * [`oracle`]: exhaustive search for cross-checking small instances.
//!
//! All LP work runs over [`Rational`] by default. The `*_with` variants
//! accept any [`Scalar`]; the float backends are approximate.
//!
//! Two nearby problems are NP-hard and deliberately not handled: a
//! separate right-hand side per solution, and matrices that are not
//! totally unimodular (a single row of positive integers already encodes
//! PARTITION). Entries outside {-1, 0, 1} are rejected up front.

pub mod compression;
pub mod decompose;
pub mod lexsolver;
pub mod lp;
pub mod oracle;
pub mod scalar;
pub mod simplesolver;
pub mod system;

use thiserror::Error;

pub use compression::{compress, lex_compare, vulnerability, Compression, LengthMismatch, VulnerabilityVector};
pub use decompose::{decompose, decompose_with};
pub use lexsolver::{
    lex_weights, solve_lexmin, solve_lexmin_with, solve_weighted_compression,
    solve_weighted_compression_with, LexminSolution, WeightVector, WeightedSolution,
};
pub use lp::{assert_integral, solve_lp, LpError, LpOutcome, LpProblem, LpSolution};
pub use scalar::Scalar;
pub use simplesolver::{solve_min_critical, solve_min_critical_with, CriticalSolution};
pub use system::{
    bipartite_to_system, digraph_to_system, is_totally_unimodular_bruteforce, validate_tu_entries,
    BipartiteInstance, DigraphInstance, SolutionBundle, SystemError, TuCheck, TuSystem,
};

/// Exact arbitrary-precision rational; the default LP scalar.
pub type Rational = num_rational::BigRational;
pub type RationalLp = LpProblem<Rational>;
pub type RationalLpOutcome = LpOutcome<Rational>;
pub type F64Lp = LpProblem<f64>;
pub type F32Lp = LpProblem<f32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("no feasible solution of A x = b exists")]
    Infeasible,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// The rounded-bounds LP had no solution with `remaining` copies left.
    /// Impossible for a totally unimodular matrix.
    #[error("decomposition LP infeasible with {remaining} copies left; the matrix is not totally unimodular")]
    InternalInfeasible { remaining: usize },
    #[error("weights must be nondecreasing across blocks")]
    NonMonotoneWeights,
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error(transparent)]
    System(#[from] SystemError),
}
