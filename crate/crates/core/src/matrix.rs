//! Dense exact matrices and vectors.
//!
//! [`IntMatrix`] holds arbitrary-precision integers (distance matrices,
//! adjacency-derived data); [`RatMatrix`] and [`RatVec`] hold exact
//! rationals and carry all of the closed-form algebra. Rationals are kept
//! reduced with positive denominators throughout, so `==` is exact
//! mathematical equality and there is no tolerance anywhere in this module.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar: reduced, denominator always positive.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the reduced fraction `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Column vector of exact rationals. Always has at least one entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatVec {
    data: Vec<Rational>,
}

impl RatVec {
    pub fn from_fn(len: usize, f: impl FnMut(usize) -> Rational) -> Self {
        assert!(len >= 1, "RatVec must be non-empty");
        Self {
            data: (0..len).map(f).collect(),
        }
    }

    pub fn from_rationals(data: Vec<Rational>) -> Self {
        assert!(!data.is_empty(), "RatVec must be non-empty");
        Self { data }
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        Self::from_fn(entries.len(), |i| rat(entries[i]))
    }

    pub fn constant(len: usize, value: Rational) -> Self {
        Self::from_fn(len, |_| value.clone())
    }

    pub fn ones(len: usize) -> Self {
        Self::constant(len, Rational::one())
    }

    pub fn zeros(len: usize) -> Self {
        Self::constant(len, Rational::zero())
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.data.iter()
    }

    pub fn sum(&self) -> Rational {
        self.data.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn dot(&self, other: &RatVec) -> Rational {
        assert_eq!(self.len(), other.len(), "dot: length mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Rational) -> RatVec {
        RatVec::from_fn(self.len(), |i| &self.data[i] * c)
    }

    pub fn add(&self, other: &RatVec) -> RatVec {
        assert_eq!(self.len(), other.len(), "add: length mismatch");
        RatVec::from_fn(self.len(), |i| &self.data[i] + &other.data[i])
    }

    pub fn sub(&self, other: &RatVec) -> RatVec {
        assert_eq!(self.len(), other.len(), "sub: length mismatch");
        RatVec::from_fn(self.len(), |i| &self.data[i] - &other.data[i])
    }

    /// Outer product `self * other'` (self as a column, other as a row).
    pub fn outer(&self, other: &RatVec) -> RatMatrix {
        RatMatrix::from_fn(self.len(), other.len(), |r, c| {
            &self.data[r] * &other.data[c]
        })
    }

    /// Row-vector times matrix: `self' * m`.
    pub fn mul_matrix(&self, m: &RatMatrix) -> RatVec {
        assert_eq!(self.len(), m.rows(), "mul_matrix: dimension mismatch");
        RatVec::from_fn(m.cols(), |c| {
            let mut acc = Rational::zero();
            for r in 0..m.rows() {
                let a = &self.data[r];
                let b = m.at(r, c);
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        })
    }

    /// The vector as a 1-by-n matrix.
    pub fn as_row(&self) -> RatMatrix {
        RatMatrix::from_fn(1, self.len(), |_, c| self.data[c].clone())
    }

    /// The vector as an n-by-1 matrix.
    pub fn as_column(&self) -> RatMatrix {
        RatMatrix::from_fn(self.len(), 1, |r, _| self.data[r].clone())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|x| x.to_f64().expect("rational out of f64 range"))
            .collect()
    }
}

impl Index<usize> for RatVec {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.data[i]
    }
}

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { Rational::one() } else { Rational::zero() })
    }

    /// The all-ones matrix J.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Rational::one())
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        assert!(!rows.is_empty(), "matrix must have at least one row");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |r, c| rows[r][c].clone())
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        assert!(!rows.is_empty(), "matrix must have at least one row");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |r, c| rat(rows[r][c]))
    }

    /// Assemble a matrix from a rectangular grid of blocks. Block heights
    /// must agree along each grid row and widths along each grid column.
    pub fn from_blocks(grid: &[&[&RatMatrix]]) -> Self {
        assert!(!grid.is_empty() && !grid[0].is_empty(), "empty block grid");
        let grid_cols = grid[0].len();
        assert!(grid.iter().all(|r| r.len() == grid_cols), "ragged block grid");
        let row_heights: Vec<usize> = grid.iter().map(|r| r[0].rows()).collect();
        let col_widths: Vec<usize> = grid[0].iter().map(|b| b.cols()).collect();
        for (gr, row) in grid.iter().enumerate() {
            for (gc, block) in row.iter().enumerate() {
                assert_eq!(block.rows(), row_heights[gr], "block height mismatch");
                assert_eq!(block.cols(), col_widths[gc], "block width mismatch");
            }
        }
        let total_rows: usize = row_heights.iter().sum();
        let total_cols: usize = col_widths.iter().sum();
        let mut out = Self::zeros(total_rows, total_cols);
        let mut r0 = 0;
        for (gr, row) in grid.iter().enumerate() {
            let mut c0 = 0;
            for (gc, block) in row.iter().enumerate() {
                for r in 0..block.rows() {
                    for c in 0..block.cols() {
                        out.set(r0 + r, c0 + c, block.at(r, c).clone());
                    }
                }
                c0 += col_widths[gc];
            }
            r0 += row_heights[gr];
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.data[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    /// Add `coeff * block` into the submatrix with top-left corner (r0, c0).
    pub fn add_scaled_block(&mut self, r0: usize, c0: usize, block: &RatMatrix, coeff: &Rational) {
        assert!(r0 + block.rows() <= self.rows && c0 + block.cols() <= self.cols);
        for r in 0..block.rows() {
            for c in 0..block.cols() {
                let v = self.at(r0 + r, c0 + c) + block.at(r, c) * coeff;
                self.set(r0 + r, c0 + c, v);
            }
        }
    }

    /// Copy of the half-open row/column range `[r0, r1) x [c0, c1)`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> RatMatrix {
        assert!(r0 < r1 && r1 <= self.rows && c0 < c1 && c1 <= self.cols);
        RatMatrix::from_fn(r1 - r0, c1 - c0, |r, c| self.at(r0 + r, c0 + c).clone())
    }

    pub fn row_vec(&self, r: usize) -> RatVec {
        RatVec::from_fn(self.cols, |c| self.at(r, c).clone())
    }

    pub fn col_vec(&self, c: usize) -> RatVec {
        RatVec::from_fn(self.rows, |r| self.at(r, c).clone())
    }

    pub fn mul_vec(&self, v: &RatVec) -> RatVec {
        assert_eq!(self.cols, v.len(), "mul_vec: dimension mismatch");
        RatVec::from_fn(self.rows, |r| {
            let mut acc = Rational::zero();
            for c in 0..self.cols {
                let a = self.at(r, c);
                let b = &v[c];
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// First (r, c) with `a[r][c] != a[c][r]`, if any.
    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                if self.at(r, c) != self.at(c, r) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// First entry where the two matrices differ, if any. Also reports a
    /// difference at (0, 0) on shape mismatch.
    pub fn first_difference(&self, other: &RatMatrix) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.at(r, c) != other.at(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Exact conversion to integers; `Err` carries the first fractional entry.
    pub fn to_int(&self) -> Result<IntMatrix, (usize, usize)> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.at(r, c).is_integer() {
                    return Err((r, c));
                }
            }
        }
        Ok(IntMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).to_integer()
        }))
    }

    pub fn to_f64_row_major(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|x| x.to_f64().expect("rational out of f64 range"))
            .collect()
    }

    pub fn frobenius_norm_f64(&self) -> f64 {
        let sq: f64 = self
            .data
            .iter()
            .map(|x| {
                let v = x.to_f64().expect("rational out of f64 range");
                v * v
            })
            .sum();
        libm::sqrt(sq)
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        self.at(r, c)
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;

    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add: shape mismatch");
        RatMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + rhs.at(r, c))
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;

    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub: shape mismatch");
        RatMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - rhs.at(r, c))
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "mul: inner dimension mismatch");
        RatMatrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                let a = self.at(r, k);
                let b = rhs.at(k, c);
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        })
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;

    fn neg(self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |r, c| -self.at(r, c).clone())
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            if r + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        assert!(!rows.is_empty(), "matrix must have at least one row");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |r, c| BigInt::from(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                if self.at(r, c) != self.at(c, r) {
                    return false;
                }
            }
        }
        true
    }

    /// Zero diagonal.
    pub fn is_hollow(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| self.at(i, i).is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    pub fn max_entry(&self) -> &BigInt {
        self.data.iter().max().expect("matrix is non-empty")
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |r, c| {
            Rational::from_integer(self.at(r, c).clone())
        })
    }

    pub fn to_f64_row_major(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|x| x.to_f64().expect("integer out of f64 range"))
            .collect()
    }

    pub fn frobenius_norm_f64(&self) -> f64 {
        let sq: f64 = self
            .data
            .iter()
            .map(|x| {
                let v = x.to_f64().expect("integer out of f64 range");
                v * v
            })
            .sum();
        libm::sqrt(sq)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        self.at(r, c)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            if r + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
