//! Lexicographically minimal bundles.
//!
//! For nondecreasing weights `c = (c^1, ..., c^n)` the nonlinear problem
//! `min c x̄` over feasible bundles has the same optimum as the linear
//! relaxation
//!
//! ```text
//! min c x   s.t.  A (x^1 + ... + x^n) = n b,  0 <= x <= 1
//! ```
//!
//! over the stacked matrix `[A, ..., A]`. An optimal vertex `y` is
//! integral, and decomposing `y^1 + ... + y^n` gives a feasible bundle whose
//! compression equals that of `y`, hence whose weighted value matches the
//! LP optimum. With `c^k = (d+1)^(k-1)` the weighted value orders bundles
//! exactly as the vulnerability vector does.
//!
//! The LP has `d n` variables. Which solution of the returned bundle comes
//! first is whatever the decomposition peels last and carries no meaning.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::compression::{compress, vulnerability, VulnerabilityVector};
use crate::decompose::decompose_with;
use crate::lp::{assert_integral, solve_lp, LpOutcome, LpProblem};
use crate::scalar::Scalar;
use crate::system::{SolutionBundle, TuSystem};
use crate::{Rational, SolveError};

/// `n` blocks of `d` integer weights, block `k` multiplying `x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    d: usize,
    blocks: Vec<Vec<BigInt>>,
}

impl WeightVector {
    pub fn from_blocks(blocks: Vec<Vec<BigInt>>) -> Result<Self, SolveError> {
        let d = blocks.first().map_or(0, Vec::len);
        if d == 0 || blocks.iter().any(|b| b.len() != d) {
            return Err(SolveError::PreconditionViolated(
                "weight blocks must be nonempty and of equal length".into(),
            ));
        }
        Ok(WeightVector { d, blocks })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<BigInt>] {
        &self.blocks
    }

    /// `c^1 <= c^2 <= ... <= c^n` entrywise.
    pub fn is_nondecreasing(&self) -> bool {
        self.blocks.windows(2).all(|w| w[0].iter().zip(&w[1]).all(|(a, b)| a <= b))
    }

    /// `sum_k c^k x^k` over the layers of a bundle (or a compression).
    pub fn apply(&self, bundle: &SolutionBundle) -> BigInt {
        assert_eq!((bundle.n(), bundle.d()), (self.n(), self.d));
        self.blocks
            .iter()
            .zip(bundle.vectors())
            .flat_map(|(c, x)| c.iter().zip(x))
            .filter(|(_, &xi)| xi == 1)
            .fold(BigInt::zero(), |acc, (ci, _)| acc + ci)
    }
}

/// Block `k` (1-based) is constant `(d+1)^(k-1)`.
pub fn lex_weights(d: usize, n: usize) -> WeightVector {
    let base = BigInt::from(d + 1);
    let mut w = BigInt::one();
    let mut blocks = Vec::with_capacity(n);
    for _ in 0..n {
        blocks.push(vec![w.clone(); d]);
        w *= &base;
    }
    WeightVector { d, blocks }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSolution {
    pub bundle: SolutionBundle,
    /// Optimal value of the relaxation; equals `c` applied to the
    /// compression of `bundle`.
    pub objective: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexminSolution {
    pub bundle: SolutionBundle,
    pub vulnerability: VulnerabilityVector,
    pub objective: BigInt,
}

/// The relaxation LP in `d n` variables, block-major.
pub fn relaxation_lp<S: Scalar>(system: &TuSystem, n: usize, c: &WeightVector) -> LpProblem<S> {
    let d = system.d();
    let a_eq = system
        .a()
        .iter()
        .map(|row| {
            let row: Vec<S> = row.iter().map(|&v| S::from_i64(v)).collect();
            let mut stacked = Vec::with_capacity(d * n);
            for _ in 0..n {
                stacked.extend(row.iter().cloned());
            }
            stacked
        })
        .collect();
    let nb = BigInt::from(n);
    let b_eq = system.b().iter().map(|&v| S::from_bigint(&(BigInt::from(v) * &nb))).collect();
    LpProblem {
        a_eq,
        b_eq,
        lower: vec![S::zero(); d * n],
        upper: vec![S::one(); d * n],
        objective: c.blocks.iter().flatten().map(S::from_bigint).collect(),
    }
}

pub fn solve_weighted_compression(
    system: &TuSystem,
    n: usize,
    c: &WeightVector,
) -> Result<WeightedSolution, SolveError> {
    solve_weighted_compression_with::<Rational>(system, n, c)
}

pub fn solve_weighted_compression_with<S: Scalar>(
    system: &TuSystem,
    n: usize,
    c: &WeightVector,
) -> Result<WeightedSolution, SolveError> {
    if n == 0 {
        return Err(SolveError::PreconditionViolated("multiplicity n must be positive".into()));
    }
    if c.n() != n || c.d() != system.d() {
        return Err(SolveError::PreconditionViolated(format!(
            "weights are {}x{}, expected {n}x{}",
            c.n(),
            c.d(),
            system.d()
        )));
    }
    if !c.is_nondecreasing() {
        return Err(SolveError::NonMonotoneWeights);
    }
    let d = system.d();
    let lp = relaxation_lp::<S>(system, n, c);
    let sol = match solve_lp(&lp)? {
        LpOutcome::Infeasible => return Err(SolveError::Infeasible),
        LpOutcome::Optimal(sol) => sol,
    };
    let y = assert_integral(&sol.values)?;
    let objective = sol
        .objective_value
        .to_integer()
        .ok_or_else(|| SolveError::PreconditionViolated("relaxation optimum is not integral".into()))?;

    let mut sum = vec![0u64; d];
    for block in y.chunks(d) {
        for (s, v) in sum.iter_mut().zip(block) {
            if v.is_one() {
                *s += 1;
            } else if !v.is_zero() {
                return Err(SolveError::PreconditionViolated(format!("relaxation entry {v} is not binary")));
            }
        }
    }
    let bundle = decompose_with::<S>(system, n, &sum)?;
    debug_assert_eq!(c.apply(&compress(&bundle).into_bundle()), objective);
    Ok(WeightedSolution { bundle, objective })
}

pub fn solve_lexmin(system: &TuSystem, n: usize) -> Result<LexminSolution, SolveError> {
    solve_lexmin_with::<Rational>(system, n)
}

pub fn solve_lexmin_with<S: Scalar>(system: &TuSystem, n: usize) -> Result<LexminSolution, SolveError> {
    let c = lex_weights(system.d(), n);
    let WeightedSolution { bundle, objective } = solve_weighted_compression_with::<S>(system, n, &c)?;
    let vulnerability = vulnerability(&bundle);
    Ok(LexminSolution { bundle, vulnerability, objective })
}
