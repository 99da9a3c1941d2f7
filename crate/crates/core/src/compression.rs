//! Compression of a bundle and the vulnerability vector.
//!
//! Layer `k` of the compression marks the components covered by at least
//! `k` of the `n` vectors. It depends only on the per-component counts, so
//! it is built from those instead of the join over all `k`-subsets of
//! meets.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::system::SolutionBundle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("vulnerability vectors have different lengths ({left} vs {right})")]
pub struct LengthMismatch {
    pub left: usize,
    pub right: usize,
}

/// Layers `x̄^1 >= x̄^2 >= ... >= x̄^n`, stored top layer first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Compression {
    layers: Vec<Vec<u8>>,
}

impl Compression {
    pub fn layers(&self) -> &[Vec<u8>] {
        &self.layers
    }

    pub fn into_bundle(self) -> SolutionBundle {
        SolutionBundle::new(self.layers).expect("compression layers are binary and nonempty")
    }

    /// `sum_k w_k |x̄^k|` for block-constant weights.
    pub fn weighted_value(&self, weights: &[BigInt]) -> BigInt {
        assert_eq!(weights.len(), self.layers.len());
        self.layers.iter().zip(weights).fold(BigInt::zero(), |acc, (layer, w)| {
            let ones = layer.iter().filter(|&&e| e == 1).count();
            acc + w * BigInt::from(ones)
        })
    }
}

/// `f = (f_1, ..., f_n)`, `f_k` the number of components used by at
/// least `k` vectors. Nonincreasing in `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VulnerabilityVector(pub Vec<usize>);

impl VulnerabilityVector {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `f_n`, the number of components shared by every vector.
    pub fn critical(&self) -> usize {
        *self.0.last().expect("vulnerability vector is nonempty")
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `sum_k (d+1)^(k-1) f_k`. Orders vectors the same way as
    /// [`lex_compare`] when every entry is at most `d`.
    pub fn lex_weighted_value(&self, d: usize) -> BigInt {
        let base = BigInt::from(d + 1);
        let mut power = BigInt::one();
        let mut total = BigInt::zero();
        for &fk in &self.0 {
            total += &power * BigInt::from(fk);
            power *= &base;
        }
        total
    }
}

impl fmt::Display for VulnerabilityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

pub fn compress(bundle: &SolutionBundle) -> Compression {
    let counts = bundle.column_counts();
    let layers = (1..=bundle.n())
        .map(|k| counts.iter().map(|&c| u8::from(c >= k)).collect())
        .collect();
    Compression { layers }
}

pub fn vulnerability(bundle: &SolutionBundle) -> VulnerabilityVector {
    let counts = bundle.column_counts();
    let mut f = vec![0usize; bundle.n()];
    for c in counts {
        for fk in &mut f[..c] {
            *fk += 1;
        }
    }
    VulnerabilityVector(f)
}

/// `Less` means `f` is the better (lexicographically smaller) vector.
/// Entries are compared from `f_n` down to `f_1`.
pub fn lex_compare(f: &VulnerabilityVector, g: &VulnerabilityVector) -> Result<Ordering, LengthMismatch> {
    if f.n() != g.n() {
        return Err(LengthMismatch { left: f.n(), right: g.n() });
    }
    Ok(f.0.iter().rev().cmp(g.0.iter().rev()))
}
