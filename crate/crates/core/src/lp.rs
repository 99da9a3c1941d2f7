//! Bounded-variable primal simplex for equality-form LPs.
//!
//! ```text
//! minimize  c x   subject to  A x = b,  l <= x <= u
//! ```
//!
//! The method is the revised simplex with an explicit dense basis inverse,
//! a Phase I on one artificial variable per row, and Bland's smallest-index
//! rule for both the entering and the leaving variable. Every returned
//! solution is basic: each structural variable either sits at one of its
//! bounds or is basic. Over a totally unimodular `A` with integral `b`,
//! `l`, `u` that makes the solution integral, which the rest of the crate
//! relies on.

use std::cmp::Ordering;

use num_bigint::BigInt;
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("variable {index} has lower bound above upper bound")]
    InvalidBounds { index: usize },
    #[error("LP is unbounded (all variables are expected to be boxed)")]
    Unbounded,
    #[error("simplex exceeded {0} iterations")]
    IterationLimit(usize),
    #[error("entry {index} = {value} is not an integer")]
    NonIntegralEntry { index: usize, value: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem<S> {
    /// `m` rows of length `N`.
    pub a_eq: Vec<Vec<S>>,
    pub b_eq: Vec<S>,
    pub lower: Vec<S>,
    pub upper: Vec<S>,
    pub objective: Vec<S>,
}

impl<S: Scalar> LpProblem<S> {
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_rows(&self) -> usize {
        self.a_eq.len()
    }

    pub fn validate(&self) -> Result<(), LpError> {
        let n = self.objective.len();
        let m = self.a_eq.len();
        if self.b_eq.len() != m {
            return Err(LpError::DimensionMismatch(format!(
                "{} rows but right-hand side of length {}",
                m,
                self.b_eq.len()
            )));
        }
        if let Some((i, row)) = self.a_eq.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(LpError::DimensionMismatch(format!(
                "row {i} has {} entries, objective has {n}",
                row.len()
            )));
        }
        if self.lower.len() != n || self.upper.len() != n {
            return Err(LpError::DimensionMismatch(format!(
                "bounds have lengths {} and {}, objective has {n}",
                self.lower.len(),
                self.upper.len()
            )));
        }
        if let Some(index) = (0..n).find(|&j| self.lower[j] > self.upper[j]) {
            return Err(LpError::InvalidBounds { index });
        }
        Ok(())
    }

    /// Exact (for rationals) check of `A x = b` and `l <= x <= u`.
    pub fn is_feasible(&self, x: &[S]) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        let rows_ok = self.a_eq.iter().zip(&self.b_eq).all(|(row, bi)| {
            let lhs = row
                .iter()
                .zip(x)
                .fold(S::zero(), |acc, (a, v)| if a.is_zero() { acc } else { acc.add_ref(&a.mul_ref(v)) });
            lhs.sub_ref(bi).is_nil()
        });
        rows_ok
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (l, u))| !v.sub_ref(l).is_neg() && !u.sub_ref(v).is_neg())
    }

    pub fn objective_value(&self, x: &[S]) -> S {
        self.objective
            .iter()
            .zip(x)
            .fold(S::zero(), |acc, (c, v)| acc.add_ref(&c.mul_ref(v)))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution<S> {
    pub values: Vec<S>,
    pub objective_value: S,
    /// Structural variables in the final basis, ascending.
    pub basic: Vec<usize>,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<S> {
    Optimal(LpSolution<S>),
    Infeasible,
}

impl<S> LpOutcome<S> {
    pub fn optimal(self) -> Option<LpSolution<S>> {
        match self {
            LpOutcome::Optimal(s) => Some(s),
            LpOutcome::Infeasible => None,
        }
    }
}

/// Returns the integer vector when every entry is an integer.
pub fn assert_integral<S: Scalar>(v: &[S]) -> Result<Vec<BigInt>, LpError> {
    v.iter()
        .enumerate()
        .map(|(index, x)| {
            x.to_integer()
                .ok_or_else(|| LpError::NonIntegralEntry { index, value: x.to_string() })
        })
        .collect()
}

pub fn solve_lp<S: Scalar>(p: &LpProblem<S>) -> Result<LpOutcome<S>, LpError> {
    p.validate()?;
    let mut tableau = Simplex::new(p);
    if !tableau.phase_one()? {
        return Ok(LpOutcome::Infeasible);
    }
    tableau.phase_two(&p.objective)?;
    let values: Vec<S> = tableau.x[..tableau.n].to_vec();
    debug_assert!(p.is_feasible(&values), "simplex returned an infeasible point");
    debug_assert!(tableau.certifies_optimality(&p.objective), "reduced costs have wrong signs");
    let objective_value = p.objective_value(&values);
    let mut basic: Vec<usize> = tableau.basis.iter().copied().filter(|&v| v < tableau.n).collect();
    basic.sort_unstable();
    Ok(LpOutcome::Optimal(LpSolution {
        values,
        objective_value,
        basic,
        iterations: tableau.iterations,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum VarState {
    Basic(usize),
    AtLower,
    AtUpper,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Phase {
    One,
    Two,
}

struct Simplex<S> {
    m: usize,
    /// Structural variable count; artificials are `n..n + m`.
    n: usize,
    cols: Vec<Vec<(usize, S)>>,
    lower: Vec<S>,
    /// `None` means unbounded above (Phase I artificials only).
    upper: Vec<Option<S>>,
    x: Vec<S>,
    state: Vec<VarState>,
    /// Row -> basic variable.
    basis: Vec<usize>,
    binv: Vec<Vec<S>>,
    iterations: usize,
    max_iterations: usize,
}

impl<S: Scalar> Simplex<S> {
    fn new(p: &LpProblem<S>) -> Self {
        let m = p.num_rows();
        let n = p.num_vars();
        let mut cols: Vec<Vec<(usize, S)>> = vec![Vec::new(); n + m];
        for (i, row) in p.a_eq.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                if !a.is_zero() {
                    cols[j].push((i, a.clone()));
                }
            }
        }

        // Structurals start at their lower bound; the artificial of row i
        // absorbs the residual with the sign that makes it nonnegative.
        let mut x: Vec<S> = p.lower.clone();
        let mut residual = p.b_eq.clone();
        for (j, col) in cols.iter().enumerate().take(n) {
            for (i, a) in col {
                residual[*i].sub_product(a, &x[j]);
            }
        }
        let mut binv = vec![vec![S::zero(); m]; m];
        for (i, r) in residual.into_iter().enumerate() {
            let sign = if r.is_neg() { -S::one() } else { S::one() };
            cols[n + i].push((i, sign.clone()));
            binv[i][i] = sign;
            x.push(r.abs());
        }

        let mut lower = p.lower.clone();
        lower.extend(std::iter::repeat(S::zero()).take(m));
        let mut upper: Vec<Option<S>> = p.upper.iter().cloned().map(Some).collect();
        upper.extend(std::iter::repeat(None).take(m));
        let mut state = vec![VarState::AtLower; n + m];
        for i in 0..m {
            state[n + i] = VarState::Basic(i);
        }
        let size = n + m;
        Simplex {
            m,
            n,
            cols,
            lower,
            upper,
            x,
            state,
            basis: (n..n + m).collect(),
            binv,
            iterations: 0,
            max_iterations: 1000 + 50 * size * size.max(m + 1),
        }
    }

    fn is_fixed(&self, j: usize) -> bool {
        matches!(&self.upper[j], Some(u) if u.sub_ref(&self.lower[j]).is_nil())
    }

    /// Returns `true` when the artificials can be driven to zero.
    fn phase_one(&mut self) -> Result<bool, LpError> {
        let mut cost = vec![S::zero(); self.n + self.m];
        for c in &mut cost[self.n..] {
            *c = S::one();
        }
        self.optimize(&cost, Phase::One)?;
        let infeasibility = self.x[self.n..].iter().fold(S::zero(), |acc, v| acc.add_ref(v));
        if !infeasibility.is_nil() {
            return Ok(false);
        }
        // Artificials are pinned at zero from here on. A basic one either
        // sits on a redundant row or leaves through a degenerate pivot.
        for j in self.n..self.n + self.m {
            self.x[j] = S::zero();
            self.upper[j] = Some(S::zero());
        }
        Ok(true)
    }

    fn phase_two(&mut self, objective: &[S]) -> Result<(), LpError> {
        let mut cost = objective.to_vec();
        cost.extend(std::iter::repeat(S::zero()).take(self.m));
        self.optimize(&cost, Phase::Two)
    }

    fn duals(&self, cost: &[S]) -> Vec<S> {
        let mut y = vec![S::zero(); self.m];
        for (i, &v) in self.basis.iter().enumerate() {
            let cb = &cost[v];
            if cb.is_zero() {
                continue;
            }
            for (yk, bik) in y.iter_mut().zip(&self.binv[i]) {
                if !bik.is_zero() {
                    *yk = yk.add_ref(&cb.mul_ref(bik));
                }
            }
        }
        y
    }

    fn reduced_cost(&self, j: usize, cost: &[S], y: &[S]) -> S {
        let mut dj = cost[j].clone();
        for (i, a) in &self.cols[j] {
            dj.sub_product(&y[*i], a);
        }
        dj
    }

    /// Bland: the lowest-index nonbasic variable whose reduced cost allows
    /// an improving move in a feasible direction.
    fn entering(&self, cost: &[S], y: &[S], phase: Phase) -> Option<(usize, bool)> {
        let limit = match phase {
            Phase::One => self.n + self.m,
            Phase::Two => self.n,
        };
        (0..limit).find_map(|j| {
            let increase = match self.state[j] {
                VarState::Basic(_) => return None,
                VarState::AtLower => true,
                VarState::AtUpper => false,
            };
            if self.is_fixed(j) {
                return None;
            }
            let dj = self.reduced_cost(j, cost, y);
            match (increase, dj.sign()) {
                (true, Ordering::Less) => Some((j, true)),
                (false, Ordering::Greater) => Some((j, false)),
                _ => None,
            }
        })
    }

    fn optimize(&mut self, cost: &[S], phase: Phase) -> Result<(), LpError> {
        loop {
            if self.iterations >= self.max_iterations {
                return Err(LpError::IterationLimit(self.max_iterations));
            }
            let y = self.duals(cost);
            let Some((q, increase)) = self.entering(cost, &y, phase) else {
                return Ok(());
            };
            self.iterations += 1;

            // alpha = B^-1 a_q; basic x moves by -sigma * t * alpha.
            let mut alpha = vec![S::zero(); self.m];
            for (k, a) in &self.cols[q] {
                for (al, row) in alpha.iter_mut().zip(&self.binv) {
                    if !row[*k].is_zero() {
                        *al = al.add_ref(&row[*k].mul_ref(a));
                    }
                }
            }

            // (ratio, leaving variable, row, leaves at upper)
            let mut best: Option<(S, usize, usize, bool)> = None;
            for (r, a) in alpha.iter().enumerate() {
                let rate = if increase { -a.clone() } else { a.clone() };
                let v = self.basis[r];
                let candidate = match rate.sign() {
                    Ordering::Less => Some((self.x[v].sub_ref(&self.lower[v]).div_ref(&(-rate)), false)),
                    Ordering::Greater => self.upper[v]
                        .as_ref()
                        .map(|u| (u.sub_ref(&self.x[v]).div_ref(&rate), true)),
                    Ordering::Equal => None,
                };
                let Some((ratio, at_upper)) = candidate else { continue };
                let ratio = if ratio.is_neg() { S::zero() } else { ratio };
                let better = match &best {
                    None => true,
                    Some((b, bv, _, _)) => match ratio.partial_cmp(b) {
                        Some(Ordering::Less) => true,
                        Some(Ordering::Equal) | None => v < *bv,
                        Some(Ordering::Greater) => false,
                    },
                };
                if better {
                    best = Some((ratio, v, r, at_upper));
                }
            }

            let range = self.upper[q].as_ref().map(|u| u.sub_ref(&self.lower[q]));
            let flip = match (&range, &best) {
                (None, None) => return Err(LpError::Unbounded),
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(rg), Some((ratio, ..))) => rg <= ratio,
            };
            let step = if flip { range.clone().unwrap() } else { best.as_ref().unwrap().0.clone() };

            if !step.is_zero() {
                for (r, a) in alpha.iter().enumerate() {
                    let v = self.basis[r];
                    if increase {
                        self.x[v].sub_product(a, &step);
                    } else {
                        self.x[v] = self.x[v].add_ref(&a.mul_ref(&step));
                    }
                }
                self.x[q] = if increase { self.x[q].add_ref(&step) } else { self.x[q].sub_ref(&step) };
            }

            if flip {
                self.state[q] = if increase { VarState::AtUpper } else { VarState::AtLower };
                self.x[q] = if increase {
                    self.upper[q].clone().unwrap()
                } else {
                    self.lower[q].clone()
                };
                continue;
            }

            let (_, leaving, r, at_upper) = best.unwrap();
            if at_upper {
                self.x[leaving] = self.upper[leaving].clone().unwrap();
                self.state[leaving] = VarState::AtUpper;
            } else {
                self.x[leaving] = self.lower[leaving].clone();
                self.state[leaving] = VarState::AtLower;
            }
            self.basis[r] = q;
            self.state[q] = VarState::Basic(r);
            self.pivot(r, &alpha);
        }
    }

    fn pivot(&mut self, r: usize, alpha: &[S]) {
        let pivot = alpha[r].clone();
        for e in self.binv[r].iter_mut() {
            if !e.is_zero() {
                *e = e.div_ref(&pivot);
            }
        }
        let pivot_row = std::mem::take(&mut self.binv[r]);
        for (i, row) in self.binv.iter_mut().enumerate() {
            if i == r || alpha[i].is_zero() {
                continue;
            }
            for (e, p) in row.iter_mut().zip(&pivot_row) {
                e.sub_product(&alpha[i], p);
            }
        }
        self.binv[r] = pivot_row;
    }

    /// Nonnegative reduced cost at lower bound, nonpositive at upper bound.
    fn certifies_optimality(&self, objective: &[S]) -> bool {
        let mut cost = objective.to_vec();
        cost.extend(std::iter::repeat(S::zero()).take(self.m));
        let y = self.duals(&cost);
        (0..self.n).all(|j| {
            if self.is_fixed(j) {
                return true;
            }
            let dj = self.reduced_cost(j, &cost, &y);
            match self.state[j] {
                VarState::Basic(_) => true,
                VarState::AtLower => !dj.is_neg(),
                VarState::AtUpper => !dj.is_pos(),
            }
        })
    }
}
