//! Bivariate means, their difference measures, and a numerical audit of the
//! classical inequality chains among them.
//!
//! The library covers four layers:
//!
//! * [`means`] — stable evaluation of the chain
//!   `H <= G <= L <= N1 <= N3 <= N2 <= A <= S`, the power mean of any order,
//!   and the Dragomir-Pearce form, on arbitrary positive `f64` pairs.
//! * [`genfn`] / [`convexity`] — the one-variable generating functions
//!   `f(x) = m_X(x) - m_Y(x)` of difference measures, their closed-form
//!   derivatives, and an executable convexity verification (normalization,
//!   curvature sign, first-order bound, midpoint sampling, and a
//!   finite-difference transcription guard).
//! * [`constants`] — curvature-ratio functions, their exact values at the
//!   removable point x = 1, scan-and-refine suprema, and the transfer of a
//!   ratio bound to a measure inequality.
//! * [`claims`] — a small inequality DSL, a bundled catalog of 46 claims
//!   (including deliberately failing printed variants next to corrected
//!   ones), a seeded audit engine with extended-precision re-adjudication of
//!   too-close-to-call margins, and a sign scanner.
//!
//! Everything downstream of a seed is deterministic: identical configurations
//! produce byte-identical reports.
//!
//! The [`oracle`] module holds the 256-bit evaluation backend (about 77
//! significant decimal digits) that backs the audit's tight-margin
//! adjudication and the finite-difference cross-checks. It re-derives every
//! quantity from the defining formulas and shares no code with the f64 path.
//!
//! See the `examples/` directory for one runnable program per capability, and
//! the `meanineq` binary for the command-line surface.

// Frozen reference values keep every digit of the derivation they came
// from, a little past f64 resolution.
#![allow(clippy::excessive_precision)]

pub mod claims;
pub mod cli;
pub mod constants;
pub mod convexity;
pub mod genfn;
pub mod means;
pub mod oracle;
pub mod plot;
pub mod rational;
pub mod sampling;
mod series;

pub use claims::{
    bundled_suite, parse_claim, parse_expr, run_audit, sign_change_scan, AuditConfig, AuditReport,
};
pub use constants::{constant_claims, extremum_scan, ratio_at_one, ratio_g, RatioProfile};
pub use convexity::{fd_cross_check, verify_lemma11, ConvexityVerdict};
pub use genfn::{
    convexity_pairs, gen_derivatives, k_fn, mean_second_derivative, phi_lift, GenDerivatives,
    MeasurePair,
};
pub use means::{chain_mean, dp_mid, mean_value, power_mean, ChainMean, MeanKind, PositivePair};
pub use oracle::Oracle;
pub use rational::Rational;
pub use sampling::{GridSpec, SampleConfig};

pub use series::SERIES_WINDOW;
