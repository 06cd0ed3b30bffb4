//! Exact construction and verification toolkit for distance matrices of
//! helm and wheel graphs.
//!
//! The rim of a wheel graph is an (n-1)-cycle joined to a hub; a helm graph
//! hangs one pendant vertex off every rim vertex. For even n the distance
//! matrix of the helm graph has closed forms for its determinant, inverse
//! and spectrum-related identities, all built from circulant blocks and a
//! weighted Laplacian-like matrix. This crate constructs every one of those
//! objects in exact rational arithmetic and cross-checks them against
//! independent oracles (breadth-first search distances, fraction-exact
//! Gaussian elimination, Jacobi eigenvalues).
//!
//! Everything on the exact side ([`matrix`], [`linalg`], [`circulant`],
//! [`formulas`]) works over arbitrary-precision rationals; [`spectral`] is
//! the only floating-point surface and carries its tolerances as constants.
//! The crate is `no_std` (alloc required); IO, serialization and the
//! command-line front end live in the companion `helmdist` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod check;
pub mod circulant;
pub mod formulas;
pub mod graph;
pub mod identities;
pub mod linalg;
pub mod matrix;
pub mod spectral;

pub use check::{Check, CheckStatus, Witness};
pub use formulas::HelmContext;
pub use graph::Graph;
pub use matrix::{frac, rat, IntMatrix, RatMatrix, RatVec, Rational};

/// Seed used by randomized spot checks when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 42;
