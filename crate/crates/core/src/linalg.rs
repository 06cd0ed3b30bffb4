//! Exact rational dense linear algebra.
//!
//! Determinant, inverse, rank and Schur complements all run fraction-exact
//! Gaussian elimination with first-nonzero pivoting. There is no numerical
//! pivot selection: in exact arithmetic any nonzero pivot is as good as any
//! other, and taking the first keeps intermediate states deterministic.
//! Every inverse produced here multiplies back to the identity exactly.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::matrix::{RatMatrix, RatVec, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    NotSquare { rows: usize, cols: usize },
    DimensionMismatch { expected: usize, got: usize },
    /// Elimination found no usable pivot in this column (0-based).
    Singular { pivot_col: usize },
    /// The leading block passed to the Schur complement is singular.
    SingularLeadingBlock { pivot_col: usize },
    InvalidBlockSize { block_size: usize, dim: usize },
    NotLaplacianLike(LaplacianViolation),
}

/// Which precondition of the pseudo-inverse failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LaplacianViolation {
    NotSymmetric { row: usize, col: usize },
    RowSumNonzero { row: usize },
    WrongRank { rank: usize, expected: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotSquare { rows, cols } => {
                write!(f, "matrix is not square: {}x{}", rows, cols)
            }
            LinalgError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {}, got {}", expected, got)
            }
            LinalgError::Singular { pivot_col } => {
                write!(f, "matrix is singular: no pivot in column {}", pivot_col + 1)
            }
            LinalgError::SingularLeadingBlock { pivot_col } => write!(
                f,
                "leading block is singular: no pivot in column {}",
                pivot_col + 1
            ),
            LinalgError::InvalidBlockSize { block_size, dim } => write!(
                f,
                "block size {} is invalid for a square matrix of dimension {}",
                block_size, dim
            ),
            LinalgError::NotLaplacianLike(v) => match v {
                LaplacianViolation::NotSymmetric { row, col } => {
                    write!(f, "not symmetric at ({}, {})", row + 1, col + 1)
                }
                LaplacianViolation::RowSumNonzero { row } => {
                    write!(f, "row {} does not sum to zero", row + 1)
                }
                LaplacianViolation::WrongRank { rank, expected } => {
                    write!(f, "rank is {} but must be {}", rank, expected)
                }
            },
        }
    }
}

fn require_square(a: &RatMatrix) -> Result<usize, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    Ok(a.rows())
}

/// Row-echelon reduction by exact elimination. Returns the echelon form,
/// the pivot positions and the sign of the row permutation applied.
fn forward_eliminate(a: &RatMatrix) -> (RatMatrix, Vec<(usize, usize)>, i32) {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut sign = 1;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let pivot_row = match (row..rows).find(|&r| !m.at(r, col).is_zero()) {
            Some(r) => r,
            None => continue,
        };
        if pivot_row != row {
            for c in 0..cols {
                let upper = m.at(row, c).clone();
                let lower = m.at(pivot_row, c).clone();
                m.set(row, c, lower);
                m.set(pivot_row, c, upper);
            }
            sign = -sign;
        }
        let pivot = m.at(row, col).clone();
        for r in (row + 1)..rows {
            if m.at(r, col).is_zero() {
                continue;
            }
            let factor = m.at(r, col) / &pivot;
            for c in col..cols {
                if m.at(row, c).is_zero() {
                    continue;
                }
                let v = m.at(r, c) - &(m.at(row, c) * &factor);
                m.set(r, c, v);
            }
            m.set(r, col, Rational::zero());
        }
        pivots.push((row, col));
        row += 1;
    }
    (m, pivots, sign)
}

/// Exact determinant by fraction-exact elimination.
pub fn det(a: &RatMatrix) -> Result<Rational, LinalgError> {
    let n = require_square(a)?;
    let (echelon, pivots, sign) = forward_eliminate(a);
    if pivots.len() < n {
        return Ok(Rational::zero());
    }
    let mut product = Rational::one();
    for &(r, c) in &pivots {
        product *= echelon.at(r, c);
    }
    if sign < 0 {
        product = -product;
    }
    Ok(product)
}

/// Exact rank by elimination; defined for any shape.
pub fn rank(a: &RatMatrix) -> usize {
    let (_, pivots, _) = forward_eliminate(a);
    pivots.len()
}

/// Exact inverse by Gauss-Jordan elimination on the augmented matrix.
/// A singular input reports the first column in which no pivot was found.
pub fn inverse(a: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    let n = require_square(a)?;
    let mut m = a.clone();
    let mut inv = RatMatrix::identity(n);
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !m.at(r, col).is_zero())
            .ok_or(LinalgError::Singular { pivot_col: col })?;
        if pivot_row != col {
            for c in 0..n {
                let a_upper = m.at(col, c).clone();
                let a_lower = m.at(pivot_row, c).clone();
                m.set(col, c, a_lower);
                m.set(pivot_row, c, a_upper);
                let i_upper = inv.at(col, c).clone();
                let i_lower = inv.at(pivot_row, c).clone();
                inv.set(col, c, i_lower);
                inv.set(pivot_row, c, i_upper);
            }
        }
        let pivot = m.at(col, col).clone();
        for c in 0..n {
            let mv = m.at(col, c) / &pivot;
            m.set(col, c, mv);
            let iv = inv.at(col, c) / &pivot;
            inv.set(col, c, iv);
        }
        for r in 0..n {
            if r == col || m.at(r, col).is_zero() {
                continue;
            }
            let factor = m.at(r, col).clone();
            for c in 0..n {
                if !m.at(col, c).is_zero() {
                    let v = m.at(r, c) - &(m.at(col, c) * &factor);
                    m.set(r, c, v);
                }
                if !inv.at(col, c).is_zero() {
                    let v = inv.at(r, c) - &(inv.at(col, c) * &factor);
                    inv.set(r, c, v);
                }
            }
        }
    }
    Ok(inv)
}

/// Schur complement of the leading `block_size` x `block_size` block:
/// `A22 - A21 * A11^{-1} * A12`.
pub fn schur_complement(a: &RatMatrix, block_size: usize) -> Result<RatMatrix, LinalgError> {
    let n = require_square(a)?;
    if block_size == 0 || block_size >= n {
        return Err(LinalgError::InvalidBlockSize {
            block_size,
            dim: n,
        });
    }
    let a11 = a.submatrix(0, block_size, 0, block_size);
    let a12 = a.submatrix(0, block_size, block_size, n);
    let a21 = a.submatrix(block_size, n, 0, block_size);
    let a22 = a.submatrix(block_size, n, block_size, n);
    let a11_inv = inverse(&a11).map_err(|e| match e {
        LinalgError::Singular { pivot_col } => LinalgError::SingularLeadingBlock { pivot_col },
        other => other,
    })?;
    Ok(&a22 - &(&(&a21 * &a11_inv) * &a12))
}

/// `det(a + u v')`, computed directly on the updated matrix. The rank-one
/// update formulas — `(1 + v' a^{-1} u) det(a)` for invertible `a`, and
/// `det(a) + v' adj(a) u` otherwise — are checked against this in tests.
pub fn det_rank_one_update(
    a: &RatMatrix,
    u: &RatVec,
    v: &RatVec,
) -> Result<Rational, LinalgError> {
    let n = require_square(a)?;
    if u.len() != n {
        return Err(LinalgError::DimensionMismatch {
            expected: n,
            got: u.len(),
        });
    }
    if v.len() != n {
        return Err(LinalgError::DimensionMismatch {
            expected: n,
            got: v.len(),
        });
    }
    det(&(a + &u.outer(v)))
}

/// Matrix of signed minors. The adjugate is its transpose. O(n^5): one
/// elimination per entry, which is the point — it is the independent oracle
/// for every cofactor claim, so it must not share code paths with anything
/// cleverer.
pub fn cofactor_matrix(a: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    let n = require_square(a)?;
    if n == 1 {
        return Ok(RatMatrix::identity(1));
    }
    let mut out = RatMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let minor = RatMatrix::from_fn(n - 1, n - 1, |i, j| {
                let src_r = if i < r { i } else { i + 1 };
                let src_c = if j < c { j } else { j + 1 };
                a.at(src_r, src_c).clone()
            });
            let mut d = det(&minor)?;
            if (r + c) % 2 == 1 {
                d = -d;
            }
            out.set(r, c, d);
        }
    }
    Ok(out)
}

/// Adjugate via the cofactor oracle.
pub fn adjugate(a: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    Ok(cofactor_matrix(a)?.transpose())
}

fn laplacian_preconditions(l: &RatMatrix) -> Result<usize, LinalgError> {
    let n = require_square(l)?;
    if let Some((row, col)) = l.first_asymmetry() {
        return Err(LinalgError::NotLaplacianLike(
            LaplacianViolation::NotSymmetric { row, col },
        ));
    }
    let sums = l.mul_vec(&RatVec::ones(n));
    for r in 0..n {
        if !sums[r].is_zero() {
            return Err(LinalgError::NotLaplacianLike(
                LaplacianViolation::RowSumNonzero { row: r },
            ));
        }
    }
    let rk = rank(l);
    if rk != n - 1 {
        return Err(LinalgError::NotLaplacianLike(LaplacianViolation::WrongRank {
            rank: rk,
            expected: n - 1,
        }));
    }
    Ok(n)
}

/// Moore-Penrose inverse of a symmetric matrix with null space span(1) and
/// rank n-1, computed exactly as `(l + J/n)^{-1} - J/n`. The rank-one shift
/// is only valid on that null space, so the preconditions are enforced and
/// the four Penrose axioms are asserted on the result.
pub fn laplacian_pseudo_inverse(l: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    let n = laplacian_preconditions(l)?;
    let j_over_n = RatMatrix::ones(n, n).scale(&Rational::new(1.into(), n.into()));
    let shifted = l + &j_over_n;
    let pinv = &inverse(&shifted)? - &j_over_n;
    assert!(penrose_axioms_hold(l, &pinv), "Penrose axioms violated");
    Ok(pinv)
}

/// Exact test of the four Penrose axioms: `LXL = L`, `XLX = X`,
/// `(LX)' = LX`, `(XL)' = XL`.
pub fn penrose_axioms_hold(l: &RatMatrix, x: &RatMatrix) -> bool {
    let lx = l * x;
    let xl = x * l;
    &lx * l == *l && &xl * x == *x && lx.is_symmetric() && xl.is_symmetric()
}

/// Exact positive-semidefiniteness certificate for a Laplacian-like matrix:
/// restrict to the orthogonal complement of the ones vector via the
/// difference basis `e_i - e_{i+1}` and run a symmetric LDL' elimination.
/// All pivots strictly positive certifies PSD with null space exactly
/// span(1).
pub fn psd_certificate_on_ones_complement(l: &RatMatrix) -> Result<bool, LinalgError> {
    let n = laplacian_preconditions(l)?;
    if n == 1 {
        return Ok(true);
    }
    // q = B' l B where B has columns e_i - e_{i+1}.
    let b = RatMatrix::from_fn(n, n - 1, |r, c| {
        if r == c {
            Rational::one()
        } else if r == c + 1 {
            -Rational::one()
        } else {
            Rational::zero()
        }
    });
    let mut q = &(&b.transpose() * l) * &b;
    let dim = n - 1;
    for step in 0..dim {
        let pivot = q.at(step, step).clone();
        if pivot <= Rational::zero() {
            return Ok(false);
        }
        for r in (step + 1)..dim {
            if q.at(r, step).is_zero() {
                continue;
            }
            let factor = q.at(r, step) / &pivot;
            for c in step..dim {
                if q.at(step, c).is_zero() {
                    continue;
                }
                let v = q.at(r, c) - &(q.at(step, c) * &factor);
                q.set(r, c, v);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::matrix::{frac, rat};

    #[test]
    fn det_of_identity_is_one() {
        for n in 1..=6 {
            assert_eq!(det(&RatMatrix::identity(n)).unwrap(), rat(1));
        }
    }

    #[test]
    fn det_rejects_non_square() {
        let a = RatMatrix::ones(2, 3);
        assert_eq!(det(&a).unwrap_err(), LinalgError::NotSquare { rows: 2, cols: 3 });
    }

    #[test]
    fn det_known_3x3() {
        // Hand-expanded: 1*(4*9-5*7) - 2*(3*9-5*6) + 0 = 1 - 2*(-3) = 7.
        let a = RatMatrix::from_i64_rows(&[vec![1, 2, 0], vec![3, 4, 5], vec![6, 7, 9]]);
        assert_eq!(det(&a).unwrap(), rat(7));
    }

    #[test]
    fn det_with_fractions() {
        let a = RatMatrix::from_rows(vec![
            vec![frac(1, 2), frac(1, 3)],
            vec![frac(1, 4), frac(1, 5)],
        ]);
        assert_eq!(det(&a).unwrap(), frac(1, 60));
    }

    #[test]
    fn det_needs_row_swap() {
        let a = RatMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(det(&a).unwrap(), rat(-1));
    }

    #[test]
    fn inverse_multiplies_back_exactly() {
        let a = RatMatrix::from_i64_rows(&[
            vec![2, 1, 0],
            vec![1, 3, 1],
            vec![0, 1, 4],
        ]);
        let inv = inverse(&a).unwrap();
        assert_eq!(&a * &inv, RatMatrix::identity(3));
        assert_eq!(&inv * &a, RatMatrix::identity(3));
    }

    #[test]
    fn inverse_of_identity() {
        assert_eq!(inverse(&RatMatrix::identity(4)).unwrap(), RatMatrix::identity(4));
    }

    #[test]
    fn singular_matrix_names_pivot_column() {
        let a = RatMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(inverse(&a).unwrap_err(), LinalgError::Singular { pivot_col: 1 });
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::zeros(3, 3)), 0);
        assert_eq!(rank(&RatMatrix::identity(5)), 5);
        let a = RatMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4], vec![3, 6]]);
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn schur_of_block_diagonal_is_lower_block() {
        let a = RatMatrix::from_i64_rows(&[
            vec![2, 0, 0, 0],
            vec![0, 3, 0, 0],
            vec![0, 0, 5, 7],
            vec![0, 0, 11, 13],
        ]);
        let s = schur_complement(&a, 2).unwrap();
        assert_eq!(s, RatMatrix::from_i64_rows(&[vec![5, 7], vec![11, 13]]));
    }

    #[test]
    fn schur_rejects_singular_leading_block() {
        let a = RatMatrix::from_i64_rows(&[
            vec![0, 0, 1],
            vec![0, 0, 2],
            vec![1, 2, 3],
        ]);
        assert_eq!(
            schur_complement(&a, 2).unwrap_err(),
            LinalgError::SingularLeadingBlock { pivot_col: 0 }
        );
    }

    #[test]
    fn schur_det_factorization_small() {
        let a = RatMatrix::from_i64_rows(&[
            vec![2, 1, 0, 3],
            vec![1, 3, 1, 0],
            vec![0, 1, 4, 1],
            vec![3, 0, 1, 5],
        ]);
        let a11 = a.submatrix(0, 2, 0, 2);
        let s = schur_complement(&a, 2).unwrap();
        assert_eq!(det(&a).unwrap(), det(&a11).unwrap() * det(&s).unwrap());
    }

    #[test]
    fn rank_one_update_with_zero_vector_is_det() {
        let a = RatMatrix::from_i64_rows(&[vec![1, 2], vec![3, 5]]);
        let zero = RatVec::zeros(2);
        let v = RatVec::from_i64(&[7, 11]);
        assert_eq!(det_rank_one_update(&a, &zero, &v).unwrap(), det(&a).unwrap());
    }

    #[test]
    fn rank_one_update_invertible_branch() {
        let a = RatMatrix::from_i64_rows(&[vec![2, 0, 1], vec![0, 3, 0], vec![1, 0, 2]]);
        let u = RatVec::from_i64(&[1, -1, 2]);
        let v = RatVec::from_i64(&[3, 1, 0]);
        let direct = det_rank_one_update(&a, &u, &v).unwrap();
        let ainv = inverse(&a).unwrap();
        let formula = (rat(1) + v.dot(&ainv.mul_vec(&u))) * det(&a).unwrap();
        assert_eq!(direct, formula);
    }

    #[test]
    fn rank_one_update_negative_identity_example() {
        // det(-2I - (4/7)J) over dimension 7 comes out to -3 * 2^7 = -384,
        // both directly and through the rank-one update of -2I.
        let a = RatMatrix::identity(7).scale(&rat(-2));
        let u = RatVec::constant(7, frac(-4, 7));
        let v = RatVec::ones(7);
        let updated = det_rank_one_update(&a, &u, &v).unwrap();
        assert_eq!(updated, rat(-384));
        let direct = det(&(&a + &u.outer(&v))).unwrap();
        assert_eq!(direct, rat(-384));
    }

    #[test]
    fn rank_one_update_singular_branch() {
        // Rank 3: third row is the sum of the first two, so the adjugate is
        // a nonzero rank-one matrix and e1' adj(a) e1 != 0.
        let a = RatMatrix::from_i64_rows(&[
            vec![1, 2, 0, 1],
            vec![0, 1, 1, 0],
            vec![1, 3, 1, 1],
            vec![2, 0, 1, 0],
        ]);
        assert_eq!(det(&a).unwrap(), rat(0));
        let u = RatVec::from_i64(&[1, 0, 0, 0]);
        let v = RatVec::from_i64(&[1, 0, 0, 0]);
        let direct = det_rank_one_update(&a, &u, &v).unwrap();
        let formula = det(&a).unwrap() + v.dot(&adjugate(&a).unwrap().mul_vec(&u));
        assert_eq!(direct, formula);
        assert!(!direct.is_zero());
    }

    #[test]
    fn cofactors_of_identity() {
        assert_eq!(cofactor_matrix(&RatMatrix::identity(3)).unwrap(), RatMatrix::identity(3));
    }

    #[test]
    fn adjugate_times_matrix_is_det_identity() {
        let a = RatMatrix::from_i64_rows(&[vec![1, 2, 3], vec![0, 4, 5], vec![1, 0, 6]]);
        let adj = adjugate(&a).unwrap();
        let d = det(&a).unwrap();
        assert_eq!(&adj * &a, RatMatrix::identity(3).scale(&d));
    }

    #[test]
    fn cycle_laplacian_pseudo_inverse() {
        // Laplacian of the 3-cycle is 3I - J; its pseudo-inverse is L/9.
        let l = RatMatrix::from_i64_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        let pinv = laplacian_pseudo_inverse(&l).unwrap();
        assert_eq!(pinv, l.scale(&frac(1, 9)));
        assert!(penrose_axioms_hold(&l, &pinv));
    }

    #[test]
    fn pseudo_inverse_of_1x1_zero() {
        let l = RatMatrix::zeros(1, 1);
        assert_eq!(laplacian_pseudo_inverse(&l).unwrap(), RatMatrix::zeros(1, 1));
    }

    #[test]
    fn pseudo_inverse_reports_which_precondition_failed() {
        let asym = RatMatrix::from_i64_rows(&[vec![0, 1], vec![-1, 0]]);
        assert!(matches!(
            laplacian_pseudo_inverse(&asym).unwrap_err(),
            LinalgError::NotLaplacianLike(LaplacianViolation::NotSymmetric { row: 0, col: 1 })
        ));
        let bad_sums = RatMatrix::identity(2);
        assert!(matches!(
            laplacian_pseudo_inverse(&bad_sums).unwrap_err(),
            LinalgError::NotLaplacianLike(LaplacianViolation::RowSumNonzero { row: 0 })
        ));
        let rank_deficient = RatMatrix::zeros(3, 3);
        assert!(matches!(
            laplacian_pseudo_inverse(&rank_deficient).unwrap_err(),
            LinalgError::NotLaplacianLike(LaplacianViolation::WrongRank { rank: 0, expected: 2 })
        ));
    }

    #[test]
    fn psd_certificate_accepts_cycle_laplacian() {
        let l = RatMatrix::from_i64_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert!(psd_certificate_on_ones_complement(&l).unwrap());
    }

    #[test]
    fn psd_certificate_rejects_indefinite_zero_row_sum_matrix() {
        // Symmetric, row sums zero, rank 2, but indefinite.
        let a = RatMatrix::from_i64_rows(&[vec![-2, 1, 1], vec![1, -2, 1], vec![1, 1, -2]]);
        assert!(!psd_certificate_on_ones_complement(&a).unwrap());
    }
}
