//! IO layer for the helm-graph toolkit: matrix serialization, verification
//! report streaming and the command implementations behind the `helmdist`
//! binary. All exact values cross this boundary as `p/q` strings; the only
//! floating-point output is the spectrum command, which carries its
//! tolerances alongside the numbers.

pub mod commands;
pub mod formats;
pub mod report;
pub mod suites;
