//! Constraint systems `Ax = b` over {-1, 0, 1} matrices, bundles of 0/1
//! solutions, and the two graph frontends that produce such systems.
//!
//! Indices are 0-based throughout.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error("matrix entry ({row}, {col}) = {value} is outside {{-1, 0, 1}}")]
    EntryOutOfRange { row: usize, col: usize, value: i64 },
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("row {row} has {len} entries, expected {expected}")]
    RaggedMatrix { row: usize, len: usize, expected: usize },
    #[error("right-hand side has length {len}, expected {expected}")]
    RhsLength { len: usize, expected: usize },
    #[error("source and sink must differ (both are {0})")]
    SourceIsSink(usize),
    #[error("vertex {vertex} out of range (vertex count {count})")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("edge {0} is a self-loop")]
    SelfLoop(usize),
    #[error("bipartite sides are unbalanced: {left} left vs {right} right vertices")]
    UnbalancedSides { left: usize, right: usize },
    #[error("multiplicity n must be positive")]
    ZeroMultiplicity,
    #[error("bundle vector {index} is not a 0/1 vector of length {expected}")]
    NotBinary { index: usize, expected: usize },
}

/// The equality system `Ax = b`.
///
/// Construction only checks shape. Whether the matrix can be totally
/// unimodular is a separate question answered by [`validate_tu_entries`]
/// (cheap, necessary) and [`is_totally_unimodular_bruteforce`] (exact,
/// exponential).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuSystem {
    a: Vec<Vec<i64>>,
    b: Vec<i64>,
}

impl TuSystem {
    pub fn new(a: Vec<Vec<i64>>, b: Vec<i64>) -> Result<Self, SystemError> {
        let m = a.len();
        let d = a.first().map_or(0, Vec::len);
        if m == 0 || d == 0 {
            return Err(SystemError::EmptyMatrix);
        }
        for (row, r) in a.iter().enumerate() {
            if r.len() != d {
                return Err(SystemError::RaggedMatrix { row, len: r.len(), expected: d });
            }
        }
        if b.len() != m {
            return Err(SystemError::RhsLength { len: b.len(), expected: m });
        }
        Ok(TuSystem { a, b })
    }

    /// Builds the system and rejects entries outside {-1, 0, 1}.
    pub fn checked(a: Vec<Vec<i64>>, b: Vec<i64>) -> Result<Self, SystemError> {
        let s = Self::new(a, b)?;
        validate_tu_entries(&s)?;
        Ok(s)
    }

    pub fn a(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    /// Number of rows (constraints).
    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// Number of columns (components).
    pub fn d(&self) -> usize {
        self.a[0].len()
    }

    /// Column `j` as `(row, value)` pairs with nonzero value.
    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.a.iter().enumerate().filter_map(move |(i, r)| (r[j] != 0).then_some((i, r[j])))
    }

    /// `A x` for any integer-valued vector, in arbitrary precision.
    pub fn apply<T>(&self, x: &[T]) -> Vec<BigInt>
    where
        T: Copy + Into<BigInt>,
    {
        assert_eq!(x.len(), self.d(), "vector length must equal column count");
        self.a
            .iter()
            .map(|row| {
                row.iter().zip(x).fold(BigInt::zero(), |acc, (&aij, &xj)| {
                    if aij == 0 {
                        acc
                    } else {
                        acc + BigInt::from(aij) * xj.into()
                    }
                })
            })
            .collect()
    }

    /// `true` iff `A x = scale * b`.
    pub fn satisfies_scaled<T>(&self, x: &[T], scale: usize) -> bool
    where
        T: Copy + Into<BigInt>,
    {
        x.len() == self.d()
            && self
                .apply(x)
                .iter()
                .zip(&self.b)
                .all(|(lhs, &bi)| *lhs == BigInt::from(bi) * BigInt::from(scale))
    }

    pub fn satisfies<T>(&self, x: &[T]) -> bool
    where
        T: Copy + Into<BigInt>,
    {
        self.satisfies_scaled(x, 1)
    }
}

/// `n` binary vectors of a common length `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionBundle {
    vectors: Vec<Vec<u8>>,
}

impl SolutionBundle {
    pub fn new(vectors: Vec<Vec<u8>>) -> Result<Self, SystemError> {
        let d = match vectors.first() {
            Some(v) => v.len(),
            None => return Err(SystemError::ZeroMultiplicity),
        };
        for (index, v) in vectors.iter().enumerate() {
            if v.len() != d || v.iter().any(|&e| e > 1) {
                return Err(SystemError::NotBinary { index, expected: d });
            }
        }
        Ok(SolutionBundle { vectors })
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn d(&self) -> usize {
        self.vectors[0].len()
    }

    pub fn vectors(&self) -> &[Vec<u8>] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vec<u8>> {
        self.vectors
    }

    /// Per-component count of vectors having a one there.
    pub fn column_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.d()];
        for v in &self.vectors {
            for (c, &e) in counts.iter_mut().zip(v) {
                *c += e as usize;
            }
        }
        counts
    }

    /// Every vector satisfies `A x^k = b`.
    pub fn is_feasible_for(&self, system: &TuSystem) -> bool {
        self.vectors.iter().all(|v| system.satisfies(v))
    }

    /// Indices of the ones in each vector.
    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.vectors
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, &e)| e == 1).map(|(j, _)| j).collect())
            .collect()
    }
}

impl fmt::Display for SolutionBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.vectors.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "(")?;
            for (j, e) in v.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A directed multigraph with terminals `s`, `t` and a path count `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigraphInstance {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub source: usize,
    pub sink: usize,
    pub n: usize,
}

impl DigraphInstance {
    pub fn validate(&self) -> Result<(), SystemError> {
        let count = self.vertices;
        for &vertex in &[self.source, self.sink] {
            if vertex >= count {
                return Err(SystemError::VertexOutOfRange { vertex, count });
            }
        }
        if self.source == self.sink {
            return Err(SystemError::SourceIsSink(self.source));
        }
        if self.n == 0 {
            return Err(SystemError::ZeroMultiplicity);
        }
        if self.edges.is_empty() {
            return Err(SystemError::EmptyMatrix);
        }
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= count {
                    return Err(SystemError::VertexOutOfRange { vertex, count });
                }
            }
            if u == v {
                return Err(SystemError::SelfLoop(e));
            }
        }
        Ok(())
    }
}

/// A bipartite multigraph; edges are `(left, right)` with each side indexed
/// from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteInstance {
    pub left: usize,
    pub right: usize,
    pub edges: Vec<(usize, usize)>,
    pub n: usize,
}

impl BipartiteInstance {
    pub fn validate(&self) -> Result<(), SystemError> {
        if self.left != self.right {
            return Err(SystemError::UnbalancedSides { left: self.left, right: self.right });
        }
        if self.n == 0 {
            return Err(SystemError::ZeroMultiplicity);
        }
        if self.edges.is_empty() {
            return Err(SystemError::EmptyMatrix);
        }
        for &(u, v) in &self.edges {
            if u >= self.left {
                return Err(SystemError::VertexOutOfRange { vertex: u, count: self.left });
            }
            if v >= self.right {
                return Err(SystemError::VertexOutOfRange { vertex: v, count: self.right });
            }
        }
        Ok(())
    }
}

pub fn validate_tu_entries(system: &TuSystem) -> Result<(), SystemError> {
    for (row, r) in system.a.iter().enumerate() {
        for (col, &value) in r.iter().enumerate() {
            if !(-1..=1).contains(&value) {
                return Err(SystemError::EntryOutOfRange { row, col, value });
            }
        }
    }
    Ok(())
}

/// Outcome of [`is_totally_unimodular_bruteforce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TuCheck {
    Yes,
    /// A square submatrix with determinant outside {-1, 0, 1}.
    No { rows: Vec<usize>, cols: Vec<usize>, det: i128 },
    TooLarge { submatrices: u128 },
}

/// Checks every square submatrix. `size_limit` bounds the number of
/// submatrices examined; larger matrices yield [`TuCheck::TooLarge`]
/// without any work done.
pub fn is_totally_unimodular_bruteforce(a: &[Vec<i64>], size_limit: u128) -> TuCheck {
    let m = a.len();
    let d = a.first().map_or(0, Vec::len);
    let order = m.min(d);
    let submatrices = (1..=order)
        .map(|k| binomial(m, k).saturating_mul(binomial(d, k)))
        .fold(0u128, u128::saturating_add);
    if submatrices > size_limit {
        return TuCheck::TooLarge { submatrices };
    }
    for k in 1..=order {
        let row_sets = subsets(m, k);
        let col_sets = subsets(d, k);
        for rows in &row_sets {
            for cols in &col_sets {
                let sub: Vec<Vec<i128>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| a[i][j] as i128).collect())
                    .collect();
                let det = bareiss_det(sub);
                if !(-1..=1).contains(&det) {
                    return TuCheck::No { rows: rows.clone(), cols: cols.clone(), det };
                }
            }
        }
    }
    TuCheck::Yes
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Fraction-free Gaussian elimination; exact for integer matrices.
fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Vertex-edge incidence system: `-1` at the tail, `+1` at the head,
/// `b_s = -1`, `b_t = +1`.
///
/// A 0/1 solution is the edge set of an s-t path, possibly together with
/// edge-disjoint directed cycles. Those vectors are reported as they are;
/// the lexicographic objective already charges for the extra edges.
pub fn digraph_to_system(inst: &DigraphInstance) -> Result<TuSystem, SystemError> {
    inst.validate()?;
    let mut a = vec![vec![0i64; inst.edges.len()]; inst.vertices];
    for (e, &(u, v)) in inst.edges.iter().enumerate() {
        a[u][e] = -1;
        a[v][e] = 1;
    }
    let mut b = vec![0i64; inst.vertices];
    b[inst.source] = -1;
    b[inst.sink] = 1;
    TuSystem::new(a, b)
}

/// Rows are the left vertices followed by the right ones; `b` is all ones,
/// so the 0/1 solutions are exactly the perfect matchings.
pub fn bipartite_to_system(inst: &BipartiteInstance) -> Result<TuSystem, SystemError> {
    inst.validate()?;
    let rows = inst.left + inst.right;
    let mut a = vec![vec![0i64; inst.edges.len()]; rows];
    for (e, &(u, v)) in inst.edges.iter().enumerate() {
        a[u][e] = 1;
        a[inst.left + v][e] = 1;
    }
    TuSystem::new(a, vec![1; rows])
}
