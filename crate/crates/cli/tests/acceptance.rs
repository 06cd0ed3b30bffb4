//! Acceptance suite. Each test covers one release criterion at its full
//! stated range and tolerance, prints one PASS/FAIL line (visible with
//! `cargo test --test acceptance -- --nocapture`) and then asserts.
//!
//! The tests share a lock so the wall-clock budgets are measured without
//! interference from sibling tests on other threads.

#[path = "../../core/tests/fixtures/mod.rs"]
mod fixtures;

use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use helmdist_core::check::{Check, CheckStatus};
use helmdist_core::formulas::{
    self, closed_form_d, closed_form_det, closed_form_inverse, special_laplacian,
};
use helmdist_core::graph::{bfs_distance_matrix, build_helm};
use helmdist_core::spectral::{self, ZERO_EIG_REL_TOL};
use helmdist_core::{identities, linalg, HelmContext, DEFAULT_SEED};

static GATE: Mutex<()> = Mutex::new(());

fn criterion(number: u32, name: &str, ok: bool) {
    println!(
        "acceptance criterion {} ({}): {}",
        number,
        name,
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance criterion {} ({}) failed", number, name);
}

fn even_orders(min: u32, max: u32) -> impl Iterator<Item = u32> {
    (min..=max).filter(|n| n % 2 == 0)
}

fn all_pass(checks: &[Check]) -> bool {
    let mut ok = true;
    for check in checks {
        if check.failed() {
            eprintln!("failed: {}", check);
            ok = false;
        }
    }
    ok
}

fn find(checks: &[Check], identity: &str) -> Check {
    checks
        .iter()
        .find(|c| c.identity == identity)
        .unwrap_or_else(|| panic!("check {} missing", identity))
        .clone()
}

#[test]
fn criterion_1_golden_fixtures() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let ctx4 = HelmContext::new(4).unwrap();
    let ctx6 = HelmContext::new(6).unwrap();
    let ok = closed_form_d(&ctx4) == fixtures::h4_distance()
        && closed_form_d(&ctx6) == fixtures::h6_distance()
        && closed_form_inverse(&ctx4) == fixtures::h4_inverse()
        && closed_form_inverse(&ctx6) == fixtures::h6_inverse()
        && special_laplacian(&ctx4) == fixtures::h4_laplacian()
        && special_laplacian(&ctx6) == fixtures::h6_laplacian();
    let in_time = start.elapsed() < Duration::from_secs(1);
    if !in_time {
        eprintln!("golden fixtures took {:?}", start.elapsed());
    }
    criterion(1, "golden fixtures", ok && in_time);
}

#[test]
fn criterion_2_determinant_theorem() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let mut ok = true;
    for n in even_orders(4, 24) {
        let ctx = HelmContext::new(n).unwrap();
        let det = linalg::det(&closed_form_d(&ctx).to_rat()).unwrap();
        if det != closed_form_det(&ctx) {
            eprintln!("determinant mismatch at n = {}", n);
            ok = false;
        }
        if n == 4 && det != helmdist_core::rat(72) {
            ok = false;
        }
        if n == 6 && det != helmdist_core::rat(480) {
            ok = false;
        }
    }
    let in_time = start.elapsed() < Duration::from_secs(60);
    if !in_time {
        eprintln!("determinant sweep took {:?}", start.elapsed());
    }
    criterion(2, "determinant theorem, even n in 4..24", ok && in_time);
}

#[test]
fn criterion_3_inverse_theorem() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let mut ok = true;
    for n in even_orders(4, 24) {
        let ctx = HelmContext::new(n).unwrap();
        // Covers the helm inverse product and oracle equality, plus the
        // wheel counterparts.
        if !all_pass(&formulas::inverse_checks(&ctx)) {
            eprintln!("inverse criterion failed at n = {}", n);
            ok = false;
        }
    }
    criterion(3, "inverse theorem, even n in 4..24", ok);
}

#[test]
fn criterion_4_oracle_equivalence() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let mut ok = true;
    for n in even_orders(4, 40) {
        let ctx = HelmContext::new(n).unwrap();
        let bfs = bfs_distance_matrix(&build_helm(n).unwrap()).unwrap();
        if bfs != closed_form_d(&ctx) {
            eprintln!("BFS mismatch at n = {}", n);
            ok = false;
        }
    }
    criterion(4, "BFS oracle = closed form, even n in 4..40", ok);
}

#[test]
fn criterion_5_lemma_chain() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let mut ok = true;
    // Full lemma chain where every intermediate is stated: n in 8..16.
    for n in even_orders(8, 16) {
        let checks = formulas::lemma_checks(&HelmContext::new(n).unwrap());
        let expected = [
            "f_vector",
            "b_matrix",
            "wheel_det",
            "minverse_w_row",
            "minverse_laplacian_action",
            "minverse_inverse_action",
            "minverse_quadratic_form",
            "schur_block_form",
            "schur_det",
            "ld_block_form",
            "ld_rank_one",
            "du_scaling",
        ];
        for identity in expected {
            if !find(&checks, identity).passed() {
                eprintln!("lemma {} failed at n = {}", identity, n);
                ok = false;
            }
        }
    }
    // End-to-end subset at n = 4 and n = 6: determinant, inverse, the
    // rank-one L*D identity and the D u row sums; the n >= 8 lemma-level
    // displays must be reported as skipped, not asserted.
    for n in [4u32, 6] {
        let ctx = HelmContext::new(n).unwrap();
        if !all_pass(&formulas::det_checks(&ctx)) || !all_pass(&formulas::inverse_checks(&ctx)) {
            ok = false;
        }
        let checks = formulas::ld_identity_check(&ctx);
        if !find(&checks, "ld_rank_one").passed() || !find(&checks, "du_scaling").passed() {
            eprintln!("end-to-end identity failed at n = {}", n);
            ok = false;
        }
        if !matches!(find(&checks, "ld_block_form").status, CheckStatus::Skipped(_)) {
            eprintln!("ld_block_form should be skipped at n = {}", n);
            ok = false;
        }
    }
    criterion(5, "lemma chain, even n in 8..16 plus end-to-end subset at 4 and 6", ok);
}

#[test]
fn criterion_6_laplacian_properties() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let mut ok = true;
    for n in even_orders(4, 16) {
        let checks = formulas::laplacian_property_checks(&HelmContext::new(n).unwrap(), 16);
        for identity in [
            "laplacian_row_sums",
            "laplacian_col_sums",
            "laplacian_rank",
            "laplacian_cofactors",
            "pinv_penrose",
            "pinv_projector",
            "pdp_identity",
        ] {
            let check = find(&checks, identity);
            if !check.passed() {
                eprintln!("laplacian property {} failed at n = {}: {}", identity, n, check);
                ok = false;
            }
        }
    }
    criterion(6, "Laplacian properties, even n in 4..16", ok);
}

#[test]
fn criterion_7_spectral_properties() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let mut ok = true;
    for n in even_orders(4, 20) {
        let ctx = HelmContext::new(n).unwrap();
        let d = closed_form_d(&ctx);
        let l = special_laplacian(&ctx);

        let d_spec = spectral::eigen_symmetric(&d.to_rat()).unwrap();
        if (d_spec.inertia.positive, d_spec.inertia.zero, d_spec.inertia.negative)
            != (1, 0, ctx.m() - 1)
        {
            eprintln!("inertia mismatch at n = {}: {:?}", n, d_spec.inertia);
            ok = false;
        }

        let l_spec = spectral::eigen_symmetric(&l).unwrap();
        let tol = ZERO_EIG_REL_TOL * l.frobenius_norm_f64();
        let min = *l_spec.eigenvalues.last().unwrap();
        let zeros = l_spec.eigenvalues.iter().filter(|x| x.abs() <= tol).count();
        if min < -tol || zeros != 1 {
            eprintln!("Laplacian spectrum violation at n = {}: min {}, zeros {}", n, min, zeros);
            ok = false;
        }

        let chain = spectral::interlacing_check(&d, &l).unwrap();
        if !chain.pass {
            eprintln!("interlacing chain failed at n = {}", n);
            ok = false;
        }
    }
    criterion(7, "spectral properties, even n in 4..20", ok);
}

#[test]
fn criterion_8_identity_suite() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let checks = identities::global_identity_checks(DEFAULT_SEED);
    let ok = all_pass(&checks)
        && checks.iter().any(|c| c.identity == "alternating_sum_sweep")
        && checks.iter().any(|c| c.identity == "circulant_mul_identity")
        && checks.iter().any(|c| c.identity == "schur_det_factorization")
        && checks.iter().any(|c| c.identity == "det_lemma_invertible")
        && checks.iter().any(|c| c.identity == "det_lemma_singular");
    criterion(8, "identity suite (alternating sum, circulant, Schur, rank-one update)", ok);
}

#[test]
fn criterion_9_default_cli_run() {
    let _gate = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_helmdist"))
        .args(["verify", "--n-min", "4", "--n-max", "24"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let ok = output.status.code() == Some(0);
    if !ok {
        eprintln!(
            "verify exited with {:?}; stderr:\n{}",
            output.status.code(),
            String::from_utf8_lossy(&output.stderr)
        );
    }
    let in_time = elapsed < Duration::from_secs(120);
    if !in_time {
        eprintln!("default verify run took {:?}", elapsed);
    }
    criterion(9, "default CLI verify run exits 0 in under 2 minutes", ok && in_time);
}
