//! Floating-point symmetric eigenanalysis: Jacobi eigenvalues, inertia,
//! the Euclidean-distance-matrix test and the eigenvalue interlacing chain
//! between the distance matrix and the special Laplacian.
//!
//! This is the only module that leaves exact arithmetic. Three separate
//! relative tolerances guard three separate failure modes: Jacobi
//! convergence ([`OFFDIAG_REL_TOL`]), zero-eigenvalue classification
//! ([`ZERO_EIG_REL_TOL`]) and weak-versus-strict inequality slack
//! ([`INTERLACING_REL_SLACK`], [`EDM_REL_TOL`]). All are relative to the
//! Frobenius norm of the input (or to max |mu| for the interlacing chain).
//! Rational inputs convert to f64 by rounding; every entry handled here is
//! a tiny integer over a denominator bounded by 12(n-1), so the conversion
//! error sits far below every tolerance.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use libm::{fabs, sqrt};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::check::Check;
use crate::circulant::circ;
use crate::formulas::{closed_form_d, closed_form_det, special_laplacian, HelmContext};
use crate::matrix::{IntMatrix, RatMatrix};
use num_traits::ToPrimitive;

/// Jacobi stops once the off-diagonal Frobenius norm drops below this times
/// the Frobenius norm of the input.
pub const OFFDIAG_REL_TOL: f64 = 1e-12;
/// An eigenvalue counts as zero when |x| <= this times the Frobenius norm.
pub const ZERO_EIG_REL_TOL: f64 = 1e-9;
/// Slack granted to each weak inequality of the interlacing chain,
/// relative to max |mu|.
pub const INTERLACING_REL_SLACK: f64 = 1e-8;
/// Threshold for "no positive curvature" in the EDM test, relative to the
/// Frobenius norm of the distance matrix.
pub const EDM_REL_TOL: f64 = 1e-8;
/// Cyclic Jacobi sweep budget.
pub const MAX_SWEEPS: usize = 100;
/// Random vectors drawn from the orthogonal complement of 1 in the EDM test.
pub const EDM_SAMPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    NotSymmetric { row: usize, col: usize },
    NoConvergence { residual: f64 },
    SizeMismatch { left: usize, right: usize },
    /// The Laplacian spectrum must contain exactly one zero.
    ZeroEigenvalueCount { count: usize },
    UnexpectedNegativeEigenvalue { value: f64 },
    MalformedDistanceMatrix { reason: &'static str },
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::NotSymmetric { row, col } => {
                write!(f, "matrix is not symmetric at ({}, {})", row + 1, col + 1)
            }
            SpectralError::NoConvergence { residual } => {
                write!(f, "Jacobi sweeps did not converge; off-diagonal residual {:e}", residual)
            }
            SpectralError::SizeMismatch { left, right } => {
                write!(f, "spectra size mismatch: {} vs {}", left, right)
            }
            SpectralError::ZeroEigenvalueCount { count } => {
                write!(f, "expected exactly one zero eigenvalue, found {}", count)
            }
            SpectralError::UnexpectedNegativeEigenvalue { value } => {
                write!(f, "unexpected negative eigenvalue {:e}", value)
            }
            SpectralError::MalformedDistanceMatrix { reason } => {
                write!(f, "malformed distance matrix: {}", reason)
            }
        }
    }
}

/// Signs of the spectrum of a symmetric matrix, counted with the
/// zero-classification tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    /// Eigenvalues sorted non-increasing.
    pub eigenvalues: Vec<f64>,
    pub inertia: Inertia,
    pub source_dim: usize,
}

fn frobenius(a: &[f64]) -> f64 {
    sqrt(a.iter().map(|x| x * x).sum::<f64>())
}

fn off_diagonal_norm(n: usize, a: &[f64]) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                let x = a[p * n + q];
                sum += x * x;
            }
        }
    }
    sqrt(sum)
}

/// Cyclic Jacobi on a row-major symmetric matrix. Returns unsorted
/// eigenvalues and the accumulated rotation matrix (column j holds the
/// eigenvector of eigenvalue j).
fn jacobi_eigen(n: usize, input: &[f64]) -> Result<(Vec<f64>, Vec<f64>), SpectralError> {
    let mut a = input.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let tol = OFFDIAG_REL_TOL * frobenius(input);
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(n, &a) <= tol {
            let values = (0..n).map(|i| a[i * n + i]).collect();
            return Ok((values, v));
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if fabs(apq) <= f64::MIN_POSITIVE {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + sqrt(1.0 + tau * tau))
                } else {
                    1.0 / (tau - sqrt(1.0 + tau * tau))
                };
                let c = 1.0 / sqrt(1.0 + t * t);
                let s = t * c;
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[p * n + k] = a[k * n + p];
                    a[k * n + q] = s * akp + c * akq;
                    a[q * n + k] = a[k * n + q];
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let residual = off_diagonal_norm(n, &a);
    if residual <= tol {
        let values = (0..n).map(|i| a[i * n + i]).collect();
        Ok((values, v))
    } else {
        Err(SpectralError::NoConvergence { residual })
    }
}

fn classify(eigenvalues: &[f64], zero_tol: f64) -> Inertia {
    let mut inertia = Inertia {
        positive: 0,
        zero: 0,
        negative: 0,
    };
    for &x in eigenvalues {
        if x > zero_tol {
            inertia.positive += 1;
        } else if x < -zero_tol {
            inertia.negative += 1;
        } else {
            inertia.zero += 1;
        }
    }
    inertia
}

fn sort_descending(mut values: Vec<f64>) -> Vec<f64> {
    values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
    values
}

/// Eigenvalues and inertia of an exactly-symmetric rational matrix.
/// Symmetry is checked on the rational input before any rounding.
pub fn eigen_symmetric(a: &RatMatrix) -> Result<SpectralResult, SpectralError> {
    if let Some((row, col)) = a.first_asymmetry() {
        return Err(SpectralError::NotSymmetric { row, col });
    }
    let n = a.rows();
    let data = a.to_f64_row_major();
    let (values, _) = jacobi_eigen(n, &data)?;
    let eigenvalues = sort_descending(values);
    let inertia = classify(&eigenvalues, ZERO_EIG_REL_TOL * frobenius(&data));
    Ok(SpectralResult {
        eigenvalues,
        inertia,
        source_dim: n,
    })
}

/// A vector orthogonal to 1 on which the quadratic form went positive.
#[derive(Debug, Clone, PartialEq)]
pub struct EdmWitness {
    pub vector: Vec<f64>,
    pub quadratic_form: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdmReport {
    pub is_edm: bool,
    /// Largest eigenvalue of (I - J/m) D (I - J/m).
    pub max_projected_eigenvalue: f64,
    pub tolerance: f64,
    pub samples: usize,
    pub witness: Option<EdmWitness>,
}

fn quadratic_form(n: usize, a: &[f64], x: &[f64]) -> f64 {
    let mut total = 0.0;
    for r in 0..n {
        let mut row = 0.0;
        for c in 0..n {
            row += a[r * n + c] * x[c];
        }
        total += x[r] * row;
    }
    total
}

/// Euclidean-distance-matrix test: the doubly centered matrix
/// `(I - J/m) D (I - J/m)` must have no eigenvalue above the tolerance, and
/// [`EDM_SAMPLES`] random unit vectors orthogonal to 1 must keep the
/// quadratic form below it. Fails with the violating vector as witness.
pub fn edm_check(d: &IntMatrix, seed: u64) -> Result<EdmReport, SpectralError> {
    if !d.is_square() || !d.is_symmetric() {
        return Err(SpectralError::MalformedDistanceMatrix {
            reason: "not symmetric",
        });
    }
    if !d.is_hollow() {
        return Err(SpectralError::MalformedDistanceMatrix {
            reason: "diagonal is not zero",
        });
    }
    if !d.is_nonnegative() {
        return Err(SpectralError::MalformedDistanceMatrix {
            reason: "negative entry",
        });
    }
    let m = d.rows();
    let data = d.to_f64_row_major();
    let tolerance = EDM_REL_TOL * frobenius(&data);

    // Doubly centered matrix P D P with P = I - J/m.
    let shift = 1.0 / m as f64;
    let mut p = vec![-shift; m * m];
    for i in 0..m {
        p[i * m + i] += 1.0;
    }
    let mut pd = vec![0.0; m * m];
    for r in 0..m {
        for c in 0..m {
            let mut acc = 0.0;
            for k in 0..m {
                acc += p[r * m + k] * data[k * m + c];
            }
            pd[r * m + c] = acc;
        }
    }
    let mut pdp = vec![0.0; m * m];
    for r in 0..m {
        for c in 0..m {
            let mut acc = 0.0;
            for k in 0..m {
                acc += pd[r * m + k] * p[k * m + c];
            }
            pdp[r * m + c] = acc;
        }
    }

    let (values, vectors) = jacobi_eigen(m, &pdp)?;
    let mut max_projected_eigenvalue = f64::NEG_INFINITY;
    let mut max_index = 0;
    for (i, &x) in values.iter().enumerate() {
        if x > max_projected_eigenvalue {
            max_projected_eigenvalue = x;
            max_index = i;
        }
    }
    if max_projected_eigenvalue > tolerance {
        let x: Vec<f64> = (0..m).map(|k| vectors[k * m + max_index]).collect();
        let q = quadratic_form(m, &data, &x);
        return Ok(EdmReport {
            is_edm: false,
            max_projected_eigenvalue,
            tolerance,
            samples: 0,
            witness: Some(EdmWitness {
                vector: x,
                quadratic_form: q,
            }),
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = 0;
    while samples < EDM_SAMPLES {
        let mut x: Vec<f64> = (0..m).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
        let mean = x.iter().sum::<f64>() / m as f64;
        for entry in &mut x {
            *entry -= mean;
        }
        let norm = sqrt(x.iter().map(|v| v * v).sum::<f64>());
        if norm < 1e-12 {
            continue;
        }
        for entry in &mut x {
            *entry /= norm;
        }
        samples += 1;
        let q = quadratic_form(m, &data, &x);
        if q > tolerance {
            return Ok(EdmReport {
                is_edm: false,
                max_projected_eigenvalue,
                tolerance,
                samples,
                witness: Some(EdmWitness {
                    vector: x,
                    quadratic_form: q,
                }),
            });
        }
    }

    Ok(EdmReport {
        is_edm: true,
        max_projected_eigenvalue,
        tolerance,
        samples,
        witness: None,
    })
}

/// One inequality of the interlacing chain; passes when
/// `lhs >= rhs - slack`, i.e. `margin >= -slack`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainLink {
    pub lhs_label: String,
    pub lhs: f64,
    pub rhs_label: String,
    pub rhs: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterlacingReport {
    /// Spectrum of the distance matrix, non-increasing.
    pub mu: Vec<f64>,
    /// Positive spectrum of the Laplacian, non-increasing, single zero
    /// removed.
    pub lambda: Vec<f64>,
    pub slack: f64,
    /// mu[1] > 0 must hold strictly.
    pub mu1_positive: bool,
    /// -2/lambda[1] < 0 must hold strictly.
    pub head_negative: bool,
    pub links: Vec<ChainLink>,
    pub pass: bool,
}

/// Verify the interlacing chain
/// `mu_1 > 0 > -2/lambda_1 >= mu_2 >= -2/lambda_2 >= ... >= -2/lambda_{m-1} >= mu_m`
/// between the distance-matrix spectrum (mu) and the positive Laplacian
/// spectrum (lambda), with [`INTERLACING_REL_SLACK`] slack on each weak
/// inequality. Only the head inequalities are asserted strictly.
pub fn interlacing_check(d: &IntMatrix, l: &RatMatrix) -> Result<InterlacingReport, SpectralError> {
    if d.rows() != l.rows() {
        return Err(SpectralError::SizeMismatch {
            left: d.rows(),
            right: l.rows(),
        });
    }
    let m = d.rows();
    let mu = eigen_symmetric(&d.to_rat())?.eigenvalues;

    let l_data = l.to_f64_row_major();
    let zero_tol = ZERO_EIG_REL_TOL * frobenius(&l_data);
    let l_values = eigen_symmetric(l)?.eigenvalues;
    let zero_count = l_values.iter().filter(|x| fabs(**x) <= zero_tol).count();
    if zero_count != 1 {
        return Err(SpectralError::ZeroEigenvalueCount { count: zero_count });
    }
    if let Some(&bad) = l_values.iter().find(|x| **x < -zero_tol) {
        return Err(SpectralError::UnexpectedNegativeEigenvalue { value: bad });
    }
    let lambda: Vec<f64> = l_values.into_iter().filter(|x| fabs(*x) > zero_tol).collect();

    let max_abs_mu = mu.iter().fold(0.0, |acc: f64, x| acc.max(fabs(*x)));
    let slack = INTERLACING_REL_SLACK * max_abs_mu;

    // Alternating sequence -2/l_1, mu_2, -2/l_2, mu_3, ..., -2/l_{m-1}, mu_m.
    let mut sequence: Vec<(String, f64)> = Vec::with_capacity(2 * (m - 1));
    for k in 1..m {
        sequence.push((format!("-2/lambda[{}]", k), -2.0 / lambda[k - 1]));
        sequence.push((format!("mu[{}]", k + 1), mu[k]));
    }
    let mut links = Vec::with_capacity(sequence.len().saturating_sub(1));
    let mut chain_ok = true;
    for pair in sequence.windows(2) {
        let (lhs_label, lhs) = &pair[0];
        let (rhs_label, rhs) = &pair[1];
        let margin = lhs - rhs;
        if margin < -slack {
            chain_ok = false;
        }
        links.push(ChainLink {
            lhs_label: lhs_label.clone(),
            lhs: *lhs,
            rhs_label: rhs_label.clone(),
            rhs: *rhs,
            margin,
        });
    }
    let mu1_positive = mu[0] > 0.0;
    let head_negative = -2.0 / lambda[0] < 0.0;
    let pass = mu1_positive && head_negative && chain_ok;
    Ok(InterlacingReport {
        mu,
        lambda,
        slack,
        mu1_positive,
        head_negative,
        links,
        pass,
    })
}

/// Analytic eigenvalues of a symmetric circulant with generating row `s`:
/// `sum_j s_j cos(2 pi j k / len)` for `k = 0..len`. Used as an independent
/// oracle for the Jacobi solver.
pub fn symmetric_circulant_eigenvalues(s: &[f64]) -> Vec<f64> {
    let len = s.len();
    let mut values = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = 0.0;
        for (j, &coeff) in s.iter().enumerate() {
            let angle = core::f64::consts::TAU * (j as f64) * (k as f64) / (len as f64);
            acc += coeff * libm::cos(angle);
        }
        values.push(acc);
    }
    sort_descending(values)
}

/// Spectral suite for one helm order: inertia of D, PSD spectrum of L with
/// a single zero, the interlacing chain, the EDM test and the floating
/// cross-checks against exact quantities (trace, determinant, circulant
/// spectrum).
pub fn spectral_checks(ctx: &HelmContext, seed: u64) -> Vec<Check> {
    let some_n = Some(ctx.n());
    let m = ctx.m();
    let d = closed_form_d(ctx);
    let l = special_laplacian(ctx);
    let mut checks = Vec::new();

    match eigen_symmetric(&d.to_rat()) {
        Ok(spec) => {
            let expected = Inertia {
                positive: 1,
                zero: 0,
                negative: m - 1,
            };
            checks.push(Check::condition(
                "d_inertia",
                "inertia(D) = (1, 0, m-1) at zero tolerance 1e-9 * ||D||_F",
                some_n,
                spec.inertia == expected,
                format!("(1, 0, {})", m - 1),
                format!(
                    "({}, {}, {})",
                    spec.inertia.positive, spec.inertia.zero, spec.inertia.negative
                ),
            ));

            let trace_sum: f64 = spec.eigenvalues.iter().sum();
            let trace_tol = 1e-8 * d.frobenius_norm_f64();
            checks.push(Check::condition(
                "eigenvalue_trace",
                "sum of eigenvalues of D = trace(D) = 0 within 1e-8 * ||D||_F",
                some_n,
                fabs(trace_sum) <= trace_tol,
                format!("|sum| <= {:e}", trace_tol),
                format!("{:e}", trace_sum),
            ));

            if ctx.n() <= 12 {
                let product: f64 = spec.eigenvalues.iter().product();
                let det = closed_form_det(ctx).to_f64().expect("det fits in f64");
                checks.push(Check::condition(
                    "eigenvalue_product",
                    "product of eigenvalues of D = 3(n-1)*2^(n-1) within relative 1e-6",
                    some_n,
                    fabs(product - det) <= 1e-6 * fabs(det),
                    format!("{:e}", det),
                    format!("{:e}", product),
                ));
            } else {
                checks.push(Check::skipped(
                    "eigenvalue_product",
                    "product of eigenvalues of D = 3(n-1)*2^(n-1) within relative 1e-6",
                    some_n,
                    "floating product oracle capped at n <= 12",
                ));
            }
        }
        Err(e) => checks.push(Check::condition(
            "d_inertia",
            "inertia(D) = (1, 0, m-1) at zero tolerance 1e-9 * ||D||_F",
            some_n,
            false,
            "eigen decomposition to converge",
            format!("{}", e),
        )),
    }

    match eigen_symmetric(&l) {
        Ok(spec) => {
            let zero_tol = ZERO_EIG_REL_TOL * l.frobenius_norm_f64();
            let min = spec.eigenvalues.last().copied().unwrap_or(0.0);
            let zero_count = spec
                .eigenvalues
                .iter()
                .filter(|x| fabs(**x) <= zero_tol)
                .count();
            checks.push(Check::condition(
                "laplacian_spectrum_floating",
                "spectrum(L) >= -1e-9 * ||L||_F with exactly one zero eigenvalue",
                some_n,
                min >= -zero_tol && zero_count == 1,
                format!("min >= {:e} and one zero", -zero_tol),
                format!("min = {:e}, zeros = {}", min, zero_count),
            ));
        }
        Err(e) => checks.push(Check::condition(
            "laplacian_spectrum_floating",
            "spectrum(L) >= -1e-9 * ||L||_F with exactly one zero eigenvalue",
            some_n,
            false,
            "eigen decomposition to converge",
            format!("{}", e),
        )),
    }

    let interlacing_claim =
        "mu_1 > 0 > -2/lambda_1 >= mu_2 >= ... >= -2/lambda_{m-1} >= mu_m with slack 1e-8 * max|mu|";
    match interlacing_check(&d, &l) {
        Ok(report) => {
            let worst = report
                .links
                .iter()
                .min_by(|a, b| a.margin.partial_cmp(&b.margin).expect("finite margins"));
            let actual = match worst {
                Some(link) if !report.pass => format!(
                    "{} = {:e} < {} = {:e} (margin {:e})",
                    link.lhs_label, link.lhs, link.rhs_label, link.rhs, link.margin
                ),
                _ => "chain holds".into(),
            };
            checks.push(Check::condition(
                "interlacing_chain",
                interlacing_claim,
                some_n,
                report.pass,
                format!("every margin >= {:e}", -report.slack),
                actual,
            ));
        }
        Err(e) => checks.push(Check::condition(
            "interlacing_chain",
            interlacing_claim,
            some_n,
            false,
            "interlacing chain to be computable",
            format!("{}", e),
        )),
    }

    match edm_check(&d, seed) {
        Ok(report) => checks.push(Check::condition(
            "edm_check",
            "x' D x <= 1e-8 * ||D||_F for x orthogonal to 1",
            some_n,
            report.is_edm,
            format!("max projected eigenvalue <= {:e}", report.tolerance),
            match &report.witness {
                Some(w) => format!("x' D x = {:e}", w.quadratic_form),
                None => format!("{:e}", report.max_projected_eigenvalue),
            },
        )),
        Err(e) => checks.push(Check::condition(
            "edm_check",
            "x' D x <= 1e-8 * ||D||_F for x orthogonal to 1",
            some_n,
            false,
            "EDM test to run",
            format!("{}", e),
        )),
    }

    if ctx.n() <= 12 {
        let dr = circ(ctx.v());
        let jacobi = eigen_symmetric(&dr).expect("rim block is symmetric");
        let analytic = symmetric_circulant_eigenvalues(&ctx.v().to_f64());
        let worst = jacobi
            .eigenvalues
            .iter()
            .zip(&analytic)
            .map(|(a, b)| fabs(a - b))
            .fold(0.0, f64::max);
        checks.push(Check::condition(
            "circulant_spectrum_oracle",
            "Jacobi spectrum of Circ(v') matches the analytic circulant eigenvalues within 1e-8",
            some_n,
            worst <= 1e-8,
            "max deviation <= 1e-8",
            format!("{:e}", worst),
        ));
    } else {
        checks.push(Check::skipped(
            "circulant_spectrum_oracle",
            "Jacobi spectrum of Circ(v') matches the analytic circulant eigenvalues within 1e-8",
            some_n,
            "analytic oracle capped at n <= 12",
        ));
    }

    checks
}
