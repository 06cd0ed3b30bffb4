//! Circulant matrices and the paired-ones vectors used by the special
//! Laplacian.
//!
//! The convention is pinned by a golden test: row `r` of `circ(s)` is the
//! generating row cyclically shifted right `r` times, i.e. entry `(i, j)`
//! is `s[(j - i) mod len]`. Getting this convention wrong flips the matrix
//! silently, so do not touch it without the tests.

use core::fmt;

use num_traits::{One, Zero};

use crate::matrix::{RatMatrix, RatVec, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircError {
    /// `k` must satisfy `1 <= k <= n/2 - 1`.
    IndexOutOfRange { k: u32, n: u32 },
    /// The paired-ones vectors are only defined for even n >= 4.
    InvalidOrder { n: u32 },
    DimensionMismatch { left: usize, right: usize },
}

impl fmt::Display for CircError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircError::IndexOutOfRange { k, n } => {
                write!(f, "k = {} is outside 1..={} for n = {}", k, n / 2 - 1, n)
            }
            CircError::InvalidOrder { n } => {
                write!(f, "paired-ones vector requires even n >= 4, got n = {}", n)
            }
            CircError::DimensionMismatch { left, right } => {
                write!(f, "circulant dimension mismatch: {} vs {}", left, right)
            }
        }
    }
}

/// Generating row of a circulant matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircSpec {
    first_row: RatVec,
}

impl CircSpec {
    pub fn new(first_row: RatVec) -> Self {
        CircSpec { first_row }
    }

    pub fn first_row(&self) -> &RatVec {
        &self.first_row
    }

    pub fn len(&self) -> usize {
        self.first_row.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn materialize(&self) -> RatMatrix {
        circ(&self.first_row)
    }
}

/// Materialize the circulant matrix with generating row `s`.
pub fn circ(s: &RatVec) -> RatMatrix {
    let len = s.len();
    RatMatrix::from_fn(len, len, |r, c| s[(c + len - r) % len].clone())
}

/// The length-(n-1) vector with ones exactly at 1-based positions `k + 1`
/// and `n - k`, zeros elsewhere.
pub fn c_vector(k: u32, n: u32) -> Result<RatVec, CircError> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(CircError::InvalidOrder { n });
    }
    if k < 1 || k > n / 2 - 1 {
        return Err(CircError::IndexOutOfRange { k, n });
    }
    let len = (n - 1) as usize;
    let a = k as usize; // 0-based index of 1-based position k + 1
    let b = (n - k - 1) as usize; // 0-based index of 1-based position n - k
    Ok(RatVec::from_fn(len, |i| {
        if i == a || i == b {
            Rational::one()
        } else {
            Rational::zero()
        }
    }))
}

/// Verify `Circ(s') * C == Circ(s' C)` for a circulant `C`. Holds for every
/// pair of matching lengths; exercised as a property test.
pub fn circ_mul_identity_check(s: &RatVec, c: &CircSpec) -> Result<bool, CircError> {
    if s.len() != c.len() {
        return Err(CircError::DimensionMismatch {
            left: s.len(),
            right: c.len(),
        });
    }
    let materialized = c.materialize();
    let lhs = &circ(s) * &materialized;
    let rhs = circ(&s.mul_matrix(&materialized));
    Ok(lhs == rhs)
}
