//! Golden tests against the hand-transcribed 7x7 and 11x11 matrices.
//! The closed forms, the BFS oracle and the elimination oracle must all
//! reproduce these fixtures exactly.

mod fixtures;

use helmdist_core::formulas::{
    closed_form_d, closed_form_inverse, special_laplacian, wheel_distance,
};
use helmdist_core::graph::{bfs_distance_matrix, build_helm};
use helmdist_core::linalg;
use helmdist_core::matrix::{rat, RatVec};
use helmdist_core::{circulant, HelmContext};

#[test]
fn closed_form_distance_matches_fixtures() {
    let ctx4 = HelmContext::new(4).unwrap();
    assert_eq!(closed_form_d(&ctx4), fixtures::h4_distance());
    let ctx6 = HelmContext::new(6).unwrap();
    assert_eq!(closed_form_d(&ctx6), fixtures::h6_distance());
}

#[test]
fn bfs_oracle_matches_fixtures() {
    let d4 = bfs_distance_matrix(&build_helm(4).unwrap()).unwrap();
    assert_eq!(d4, fixtures::h4_distance());
    let d6 = bfs_distance_matrix(&build_helm(6).unwrap()).unwrap();
    assert_eq!(d6, fixtures::h6_distance());
}

#[test]
fn special_laplacian_matches_fixtures() {
    let ctx4 = HelmContext::new(4).unwrap();
    assert_eq!(special_laplacian(&ctx4), fixtures::h4_laplacian());
    let ctx6 = HelmContext::new(6).unwrap();
    assert_eq!(special_laplacian(&ctx6), fixtures::h6_laplacian());
}

#[test]
fn closed_form_inverse_matches_fixtures() {
    let ctx4 = HelmContext::new(4).unwrap();
    assert_eq!(closed_form_inverse(&ctx4), fixtures::h4_inverse());
    let ctx6 = HelmContext::new(6).unwrap();
    assert_eq!(closed_form_inverse(&ctx6), fixtures::h6_inverse());
}

#[test]
fn elimination_oracle_inverts_the_fixtures() {
    let inv4 = linalg::inverse(&fixtures::h4_distance().to_rat()).unwrap();
    assert_eq!(inv4, fixtures::h4_inverse());
    let inv6 = linalg::inverse(&fixtures::h6_distance().to_rat()).unwrap();
    assert_eq!(inv6, fixtures::h6_inverse());
}

#[test]
fn fixture_determinants() {
    assert_eq!(linalg::det(&fixtures::h4_distance().to_rat()).unwrap(), rat(72));
    assert_eq!(linalg::det(&fixtures::h6_distance().to_rat()).unwrap(), rat(480));
}

#[test]
fn wheel_distance_is_leading_block_of_fixture() {
    let ctx6 = HelmContext::new(6).unwrap();
    let wheel = wheel_distance(&ctx6).to_rat();
    let block = fixtures::h6_distance().to_rat().submatrix(0, 6, 0, 6);
    assert_eq!(wheel, block);
}

#[test]
fn rim_circulant_is_the_fixture_rim_block() {
    // Rows 2..6, columns 2..6 of the 11x11 fixture (1-based labels) form
    // the circulant with generating row (0, 1, 2, 2, 1).
    let rim = circulant::circ(&RatVec::from_i64(&[0, 1, 2, 2, 1]));
    let block = fixtures::h6_distance().to_rat().submatrix(1, 6, 1, 6);
    assert_eq!(rim, block);
}
