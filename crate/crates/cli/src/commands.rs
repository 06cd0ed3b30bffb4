//! Implementations behind the `gen` and `spectrum` subcommands.

use std::fmt;

use clap::ValueEnum;
use helmdist_core::formulas::{
    closed_form_d, closed_form_inverse, special_laplacian, wheel_distance, ContextError,
    HelmContext,
};
use helmdist_core::graph::{bfs_distance_matrix, build_helm};
use helmdist_core::linalg;
use helmdist_core::matrix::RatMatrix;
use helmdist_core::spectral::{
    self, eigen_symmetric, EDM_REL_TOL, INTERLACING_REL_SLACK, OFFDIAG_REL_TOL, ZERO_EIG_REL_TOL,
};
use serde_json::json;

use crate::formats;

#[derive(Debug)]
pub enum CommandError {
    /// Bad arguments; maps to exit code 2.
    Usage(String),
    /// A computation that should always succeed did not; maps to exit 1.
    Internal(String),
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommandError::Usage(msg) => write!(f, "{}", msg),
            CommandError::Internal(msg) => write!(f, "{}", msg),
        }
    }
}

impl std::error::Error for CommandError {}

fn usage_from_context(err: ContextError) -> CommandError {
    CommandError::Usage(err.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenObject {
    /// Helm distance matrix (closed form for even n, BFS oracle for odd n).
    Dist,
    /// Special Laplacian of the helm graph (even n only).
    Laplacian,
    /// Wheel distance matrix (even n only).
    Wheel,
    /// Closed-form inverse of the helm distance matrix (even n only).
    Inverse,
    /// Moore-Penrose inverse of the special Laplacian (even n only).
    Pinv,
}

impl GenObject {
    fn name(self) -> &'static str {
        match self {
            GenObject::Dist => "dist",
            GenObject::Laplacian => "laplacian",
            GenObject::Wheel => "wheel",
            GenObject::Inverse => "inverse",
            GenObject::Pinv => "pinv",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

const ODD_NOTE: &str = "oracle only; no closed form";

fn even_context(n: u32, object: GenObject) -> Result<HelmContext, CommandError> {
    HelmContext::new(n).map_err(|err| match err {
        ContextError::OddOrder { n } => CommandError::Usage(format!(
            "object '{}' has a closed form only for even n; n = {} is odd",
            object.name(),
            n
        )),
        other => usage_from_context(other),
    })
}

/// Build the requested matrix and serialize it. Returns the full output
/// text (CSV rows or one JSON document).
pub fn gen_output(n: u32, object: GenObject, format: Format) -> Result<String, CommandError> {
    if n < 4 {
        return Err(CommandError::Usage(format!(
            "n must be at least 4, got {}",
            n
        )));
    }
    let (matrix, note): (RatMatrix, Option<&str>) = match object {
        GenObject::Dist => {
            if n.is_multiple_of(2) {
                let ctx = even_context(n, object)?;
                (closed_form_d(&ctx).to_rat(), None)
            } else {
                let graph = build_helm(n).map_err(|e| CommandError::Usage(e.to_string()))?;
                let d = bfs_distance_matrix(&graph)
                    .map_err(|e| CommandError::Internal(e.to_string()))?;
                (d.to_rat(), Some(ODD_NOTE))
            }
        }
        GenObject::Laplacian => {
            let ctx = even_context(n, object)?;
            (special_laplacian(&ctx), None)
        }
        GenObject::Wheel => {
            let ctx = even_context(n, object)?;
            (wheel_distance(&ctx).to_rat(), None)
        }
        GenObject::Inverse => {
            let ctx = even_context(n, object)?;
            (closed_form_inverse(&ctx), None)
        }
        GenObject::Pinv => {
            let ctx = even_context(n, object)?;
            let l = special_laplacian(&ctx);
            let pinv = linalg::laplacian_pseudo_inverse(&l)
                .map_err(|e| CommandError::Internal(e.to_string()))?;
            (pinv, None)
        }
    };
    Ok(match format {
        Format::Csv => formats::matrix_to_csv(&matrix, &note.into_iter().collect::<Vec<_>>()),
        Format::Json => {
            let value = formats::matrix_to_json(object.name(), n, &matrix, note);
            format!("{}\n", serde_json::to_string_pretty(&value).expect("json serializes"))
        }
    })
}

/// Eigenvalues, inertia and the interlacing chain for one even order, as a
/// JSON document.
pub fn spectrum_output(n: u32) -> Result<String, CommandError> {
    let ctx = HelmContext::new(n).map_err(usage_from_context)?;
    let d = closed_form_d(&ctx);
    let l = special_laplacian(&ctx);
    let d_spec = eigen_symmetric(&d.to_rat()).map_err(|e| CommandError::Internal(e.to_string()))?;
    let l_spec = eigen_symmetric(&l).map_err(|e| CommandError::Internal(e.to_string()))?;
    let chain = spectral::interlacing_check(&d, &l)
        .map_err(|e| CommandError::Internal(e.to_string()))?;
    let links: Vec<_> = chain
        .links
        .iter()
        .map(|link| {
            json!({
                "lhs": link.lhs_label,
                "lhs_value": link.lhs,
                "rhs": link.rhs_label,
                "rhs_value": link.rhs,
                "margin": link.margin,
            })
        })
        .collect();
    let value = json!({
        "n": ctx.n(),
        "m": ctx.m(),
        "d_eigenvalues": d_spec.eigenvalues,
        "d_inertia": {
            "positive": d_spec.inertia.positive,
            "zero": d_spec.inertia.zero,
            "negative": d_spec.inertia.negative,
        },
        "laplacian_eigenvalues": l_spec.eigenvalues,
        "interlacing": {
            "mu1": chain.mu[0],
            "mu1_positive": chain.mu1_positive,
            "head_bound": -2.0 / chain.lambda[0],
            "head_negative": chain.head_negative,
            "slack": chain.slack,
            "links": links,
            "pass": chain.pass,
        },
        "tolerances": {
            "jacobi_offdiag_rel": OFFDIAG_REL_TOL,
            "zero_eigenvalue_rel": ZERO_EIG_REL_TOL,
            "interlacing_slack_rel": INTERLACING_REL_SLACK,
            "edm_rel": EDM_REL_TOL,
        },
    });
    Ok(format!(
        "{}\n",
        serde_json::to_string_pretty(&value).expect("json serializes")
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_rejects_small_orders() {
        assert!(matches!(
            gen_output(3, GenObject::Dist, Format::Csv),
            Err(CommandError::Usage(_))
        ));
    }

    #[test]
    fn gen_rejects_odd_for_closed_forms() {
        for object in [GenObject::Laplacian, GenObject::Wheel, GenObject::Inverse, GenObject::Pinv] {
            match gen_output(5, object, Format::Csv) {
                Err(CommandError::Usage(msg)) => assert!(msg.contains("even"), "{}", msg),
                other => panic!("expected usage error, got {:?}", other.map(|_| "output")),
            }
        }
    }

    #[test]
    fn odd_dist_carries_the_oracle_note() {
        let csv = gen_output(5, GenObject::Dist, Format::Csv).unwrap();
        assert!(csv.starts_with("# oracle only; no closed form\n"));
        assert_eq!(csv.lines().count(), 10); // note + 9 matrix rows
    }

    #[test]
    fn spectrum_inertia_at_4() {
        let out = spectrum_output(4).unwrap();
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(value["d_inertia"]["positive"], 1);
        assert_eq!(value["d_inertia"]["zero"], 0);
        assert_eq!(value["d_inertia"]["negative"], 6);
        assert_eq!(value["interlacing"]["pass"], true);
    }

    #[test]
    fn spectrum_rejects_odd() {
        assert!(matches!(spectrum_output(7), Err(CommandError::Usage(_))));
    }
}
