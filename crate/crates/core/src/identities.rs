//! Order-independent identity checks: the alternating-sum formula swept
//! over its whole stated range, and randomized exact spot checks of the
//! circulant multiplication rule, the Schur determinant factorization and
//! both branches of the rank-one determinant update.
//!
//! Random instances come from a seeded ChaCha stream, so a given seed
//! always reproduces the same report.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::check::{Check, Witness};
use crate::circulant::{circ_mul_identity_check, CircSpec};
use crate::formulas::alternating_sum_direct;
use crate::linalg;
use crate::matrix::{frac, rat, RatMatrix, RatVec, Rational};

const CIRCULANT_INSTANCES: usize = 100;
const SCHUR_INSTANCES: usize = 200;
const DET_LEMMA_INSTANCES: usize = 50;

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn random_vec(rng: &mut ChaCha8Rng, len: usize) -> RatVec {
    RatVec::from_fn(len, |_| random_rational(rng))
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> RatMatrix {
    RatMatrix::from_fn(n, n, |_, _| random_rational(rng))
}

fn instance_witness(instance: usize, expected: impl ToString, actual: impl ToString) -> Witness {
    Witness {
        row: instance,
        col: 0,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

/// `sum_{k=1}^{n/2-1} (-1)^k (n-1-2k) = (2-n)/2` for every even n in 4..=100.
/// The witness row of a failure carries the offending n.
pub fn alternating_sum_sweep_check() -> Check {
    const IDENTITY: &str = "alternating_sum_sweep";
    const CLAIM: &str = "sum_{k=1}^{n/2-1} (-1)^k (n-1-2k) = (2-n)/2 for even n in 4..=100";
    for n in (4..=100u32).step_by(2) {
        let direct = alternating_sum_direct(n);
        let closed = frac(2 - i64::from(n), 2);
        if direct != closed {
            return Check::fail(
                IDENTITY,
                CLAIM,
                None,
                instance_witness(n as usize, closed, direct),
            );
        }
    }
    Check::pass(IDENTITY, CLAIM, None)
}

/// `Circ(s') C = Circ(s' C)` on random generating rows of random lengths.
pub fn circulant_identity_check(seed: u64) -> Check {
    const IDENTITY: &str = "circulant_mul_identity";
    const CLAIM: &str = "Circ(s') C = Circ(s' C) for every circulant C";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for instance in 0..CIRCULANT_INSTANCES {
        let len = rng.gen_range(1..=8);
        let s = random_vec(&mut rng, len);
        let c = CircSpec::new(random_vec(&mut rng, len));
        match circ_mul_identity_check(&s, &c) {
            Ok(true) => {}
            Ok(false) => {
                return Check::fail(
                    IDENTITY,
                    CLAIM,
                    None,
                    instance_witness(instance, "equal products", "mismatch"),
                )
            }
            Err(e) => {
                return Check::fail(
                    IDENTITY,
                    CLAIM,
                    None,
                    instance_witness(instance, "comparable instance", format!("{}", e)),
                )
            }
        }
    }
    Check::pass(IDENTITY, CLAIM, None)
}

/// `det(A) = det(A11) det(A22 - A21 A11^{-1} A12)` on random 6x6 matrices
/// with an invertible leading 3x3 block.
pub fn schur_det_identity_check(seed: u64) -> Check {
    const IDENTITY: &str = "schur_det_factorization";
    const CLAIM: &str = "det(A) = det(A11) det(A22 - A21 A11^-1 A12) on random 6x6 instances";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for instance in 0..SCHUR_INSTANCES {
        let a = loop {
            let candidate = random_matrix(&mut rng, 6);
            let leading = candidate.submatrix(0, 3, 0, 3);
            if !linalg::det(&leading).expect("leading block is square").is_zero() {
                break candidate;
            }
        };
        let lhs = linalg::det(&a).expect("square");
        let a11 = a.submatrix(0, 3, 0, 3);
        let schur = linalg::schur_complement(&a, 3).expect("leading block is invertible");
        let rhs = linalg::det(&a11).expect("square") * linalg::det(&schur).expect("square");
        if lhs != rhs {
            return Check::fail(IDENTITY, CLAIM, None, instance_witness(instance, rhs, lhs));
        }
    }
    Check::pass(IDENTITY, CLAIM, None)
}

/// `det(A + u v') = (1 + v' A^{-1} u) det(A)` on random invertible 5x5
/// matrices.
pub fn det_lemma_invertible_check(seed: u64) -> Check {
    const IDENTITY: &str = "det_lemma_invertible";
    const CLAIM: &str = "det(A + u v') = (1 + v' A^-1 u) det(A) for invertible A";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for instance in 0..DET_LEMMA_INSTANCES {
        let (a, det_a) = loop {
            let candidate = random_matrix(&mut rng, 5);
            let d = linalg::det(&candidate).expect("square");
            if !d.is_zero() {
                break (candidate, d);
            }
        };
        let u = random_vec(&mut rng, 5);
        let v = random_vec(&mut rng, 5);
        let direct = linalg::det_rank_one_update(&a, &u, &v).expect("dimensions match");
        let inv = linalg::inverse(&a).expect("A is invertible");
        let formula = (rat(1) + v.dot(&inv.mul_vec(&u))) * det_a;
        if direct != formula {
            return Check::fail(IDENTITY, CLAIM, None, instance_witness(instance, formula, direct));
        }
    }
    Check::pass(IDENTITY, CLAIM, None)
}

/// `det(A + u v') = det(A) + v' adj(A) u` on random singular 5x5 matrices
/// (last row forced to the sum of the others); the adjugate comes from the
/// cofactor oracle.
pub fn det_lemma_singular_check(seed: u64) -> Check {
    const IDENTITY: &str = "det_lemma_singular";
    const CLAIM: &str = "det(A + u v') = det(A) + v' adj(A) u for singular A";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for instance in 0..DET_LEMMA_INSTANCES {
        let top = random_matrix(&mut rng, 5);
        let a = RatMatrix::from_fn(5, 5, |r, c| {
            if r < 4 {
                top.at(r, c).clone()
            } else {
                (0..4).map(|i| top.at(i, c)).fold(Rational::zero(), |acc, x| acc + x)
            }
        });
        let det_a = linalg::det(&a).expect("square");
        if !det_a.is_zero() {
            return Check::fail(
                IDENTITY,
                CLAIM,
                None,
                instance_witness(instance, "singular construction", det_a),
            );
        }
        let u = random_vec(&mut rng, 5);
        let v = random_vec(&mut rng, 5);
        let direct = linalg::det_rank_one_update(&a, &u, &v).expect("dimensions match");
        let formula = det_a + v.dot(&linalg::adjugate(&a).expect("square").mul_vec(&u));
        if direct != formula {
            return Check::fail(IDENTITY, CLAIM, None, instance_witness(instance, formula, direct));
        }
    }
    Check::pass(IDENTITY, CLAIM, None)
}

/// The full order-independent suite.
pub fn global_identity_checks(seed: u64) -> Vec<Check> {
    vec![
        alternating_sum_sweep_check(),
        circulant_identity_check(seed),
        schur_det_identity_check(seed.wrapping_add(1)),
        det_lemma_invertible_check(seed.wrapping_add(2)),
        det_lemma_singular_check(seed.wrapping_add(3)),
    ]
}
