//! Golden fixtures: the 7x7 and 11x11 distance matrices, special
//! Laplacians (doubled, to keep integer entries) and inverse matrices
//! (scaled by 18 and 30) for the helm graphs on 7 and 11 vertices.
//! Transcribed by hand; every test that uses them compares against
//! independently computed values, so a transcription slip cannot pass
//! silently.

use helmdist_core::matrix::{frac, IntMatrix, RatMatrix};

pub fn h4_distance() -> IntMatrix {
    IntMatrix::from_i64_rows(&[
        vec![0, 1, 1, 1, 2, 2, 2],
        vec![1, 0, 1, 1, 1, 2, 2],
        vec![1, 1, 0, 1, 2, 1, 2],
        vec![1, 1, 1, 0, 2, 2, 1],
        vec![2, 1, 2, 2, 0, 3, 3],
        vec![2, 2, 1, 2, 3, 0, 3],
        vec![2, 2, 2, 1, 3, 3, 0],
    ])
}

pub fn h6_distance() -> IntMatrix {
    IntMatrix::from_i64_rows(&[
        vec![0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2],
        vec![1, 0, 1, 2, 2, 1, 1, 2, 3, 3, 2],
        vec![1, 1, 0, 1, 2, 2, 2, 1, 2, 3, 3],
        vec![1, 2, 1, 0, 1, 2, 3, 2, 1, 2, 3],
        vec![1, 2, 2, 1, 0, 1, 3, 3, 2, 1, 2],
        vec![1, 1, 2, 2, 1, 0, 2, 3, 3, 2, 1],
        vec![2, 1, 2, 3, 3, 2, 0, 3, 4, 4, 3],
        vec![2, 2, 1, 2, 3, 3, 3, 0, 3, 4, 4],
        vec![2, 3, 2, 1, 2, 3, 4, 3, 0, 3, 4],
        vec![2, 3, 3, 2, 1, 2, 4, 4, 3, 0, 3],
        vec![2, 2, 3, 3, 2, 1, 3, 4, 4, 3, 0],
    ])
}

/// Twice the special Laplacian of the helm graph on 7 vertices.
pub fn h4_laplacian_doubled() -> IntMatrix {
    IntMatrix::from_i64_rows(&[
        vec![3, -1, -1, -1, 0, 0, 0],
        vec![-1, 5, -1, -1, -2, 0, 0],
        vec![-1, -1, 5, -1, 0, -2, 0],
        vec![-1, -1, -1, 5, 0, 0, -2],
        vec![0, -2, 0, 0, 2, 0, 0],
        vec![0, 0, -2, 0, 0, 2, 0],
        vec![0, 0, 0, -2, 0, 0, 2],
    ])
}

/// Twice the special Laplacian of the helm graph on 11 vertices.
pub fn h6_laplacian_doubled() -> IntMatrix {
    IntMatrix::from_i64_rows(&[
        vec![5, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0],
        vec![-1, 7, -3, 1, 1, -3, -2, 0, 0, 0, 0],
        vec![-1, -3, 7, -3, 1, 1, 0, -2, 0, 0, 0],
        vec![-1, 1, -3, 7, -3, 1, 0, 0, -2, 0, 0],
        vec![-1, 1, 1, -3, 7, -3, 0, 0, 0, -2, 0],
        vec![-1, -3, 1, 1, -3, 7, 0, 0, 0, 0, -2],
        vec![0, -2, 0, 0, 0, 0, 2, 0, 0, 0, 0],
        vec![0, 0, -2, 0, 0, 0, 0, 2, 0, 0, 0],
        vec![0, 0, 0, -2, 0, 0, 0, 0, 2, 0, 0],
        vec![0, 0, 0, 0, -2, 0, 0, 0, 0, 2, 0],
        vec![0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 2],
    ])
}

/// 18 times the inverse distance matrix of the helm graph on 7 vertices.
pub fn h4_inverse_times_18() -> IntMatrix {
    IntMatrix::from_i64_rows(&[
        vec![-13, 4, 4, 4, 1, 1, 1],
        vec![4, -22, 5, 5, 8, -1, -1],
        vec![4, 5, -22, 5, -1, 8, -1],
        vec![4, 5, 5, -22, -1, -1, 8],
        vec![1, 8, -1, -1, -7, 2, 2],
        vec![1, -1, 8, -1, 2, -7, 2],
        vec![1, -1, -1, 8, 2, 2, -7],
    ])
}

/// 30 times the inverse distance matrix of the helm graph on 11 vertices.
pub fn h6_inverse_times_30() -> IntMatrix {
    IntMatrix::from_i64_rows(&[
        vec![-37, 8, 8, 8, 8, 8, -1, -1, -1, -1, -1],
        vec![8, -52, 23, -7, -7, 23, 14, -1, -1, -1, -1],
        vec![8, 23, -52, 23, -7, -7, -1, 14, -1, -1, -1],
        vec![8, -7, 23, -52, 23, -7, -1, -1, 14, -1, -1],
        vec![8, -7, -7, 23, -52, 23, -1, -1, -1, 14, -1],
        vec![8, 23, -7, -7, 23, -52, -1, -1, -1, -1, 14],
        vec![-1, 14, -1, -1, -1, -1, -13, 2, 2, 2, 2],
        vec![-1, -1, 14, -1, -1, -1, 2, -13, 2, 2, 2],
        vec![-1, -1, -1, 14, -1, -1, 2, 2, -13, 2, 2],
        vec![-1, -1, -1, -1, 14, -1, 2, 2, 2, -13, 2],
        vec![-1, -1, -1, -1, -1, 14, 2, 2, 2, 2, -13],
    ])
}

pub fn h4_laplacian() -> RatMatrix {
    h4_laplacian_doubled().to_rat().scale(&frac(1, 2))
}

pub fn h6_laplacian() -> RatMatrix {
    h6_laplacian_doubled().to_rat().scale(&frac(1, 2))
}

pub fn h4_inverse() -> RatMatrix {
    h4_inverse_times_18().to_rat().scale(&frac(1, 18))
}

pub fn h6_inverse() -> RatMatrix {
    h6_inverse_times_30().to_rat().scale(&frac(1, 30))
}
