//! Generating functions of the difference measures.
//!
//! A difference of chain means `M(a,b) = X(a,b) - Y(a,b)` reduces by
//! homogeneity to one variable: `M(a,b) = a f(b/a)` with
//! `f(x) = m_X(x) - m_Y(x)` and `m(x) = mean(1, x)`. This module evaluates
//! `f`, `f'` and `f''` compositionally from per-mean closed forms, so every
//! registered pair (and any chain-ordered pair) is covered by the same eight
//! derivative formulas instead of a per-pair transcription.

use crate::means::{chain_mean, ChainMean, PositivePair};
use crate::series::{self, SERIES_WINDOW};
use std::fmt;

/// An ordered pair of chain means with `upper` strictly above `lower`
/// in the chain, so the difference measure is nonnegative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MeasurePair {
    upper: ChainMean,
    lower: ChainMean,
}

/// Construction error: the pair is not strictly chain-ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOrderError {
    pub upper: ChainMean,
    pub lower: ChainMean,
}

impl fmt::Display for PairOrderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} does not strictly dominate {} in the chain H<=G<=L<=N1<=N3<=N2<=A<=S",
            self.upper, self.lower
        )
    }
}

impl std::error::Error for PairOrderError {}

impl MeasurePair {
    /// Requires `upper` to strictly dominate `lower` in the chain.
    pub fn new(upper: ChainMean, lower: ChainMean) -> Result<Self, PairOrderError> {
        if upper.chain_index() > lower.chain_index() {
            Ok(MeasurePair { upper, lower })
        } else {
            Err(PairOrderError { upper, lower })
        }
    }

    /// The degenerate pair `X - X`, whose measure is identically zero.
    /// Useful as a boundary case for the verification harnesses.
    pub fn degenerate(kind: ChainMean) -> Self {
        MeasurePair {
            upper: kind,
            lower: kind,
        }
    }

    pub fn upper(&self) -> ChainMean {
        self.upper
    }

    pub fn lower(&self) -> ChainMean {
        self.lower
    }

    /// Concatenated symbols, e.g. "SL" or "N2L".
    pub fn label(&self) -> String {
        format!("{}{}", self.upper.symbol(), self.lower.symbol())
    }
}

impl fmt::Display for MeasurePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{}", self.label())
    }
}

/// The five measures whose convexity the difference-of-means analysis
/// establishes directly: S-L, A-L, N2-L, N3-L, N1-L.
pub fn log_gap_pairs() -> [MeasurePair; 5] {
    [
        MeasurePair::new(ChainMean::S, ChainMean::L).unwrap(),
        MeasurePair::new(ChainMean::A, ChainMean::L).unwrap(),
        MeasurePair::new(ChainMean::N2, ChainMean::L).unwrap(),
        MeasurePair::new(ChainMean::N3, ChainMean::L).unwrap(),
        MeasurePair::new(ChainMean::N1, ChainMean::L).unwrap(),
    ]
}

/// The three additional measures treated the same way: S-H, A-G, S-N1.
pub fn companion_pairs() -> [MeasurePair; 3] {
    [
        MeasurePair::new(ChainMean::S, ChainMean::H).unwrap(),
        MeasurePair::new(ChainMean::A, ChainMean::G).unwrap(),
        MeasurePair::new(ChainMean::S, ChainMean::N1).unwrap(),
    ]
}

/// All eight measures subject to the convexity verification.
pub fn convexity_pairs() -> Vec<MeasurePair> {
    log_gap_pairs().into_iter().chain(companion_pairs()).collect()
}

/// Value, slope, and curvature of a generating function at one abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenDerivatives {
    pub f0: f64,
    pub f1: f64,
    pub f2: f64,
}

/// The shared kernel `k(x) = ((x+1) ln x - 2(x-1)) / (x^2 ln^3 x)`,
/// continued with `k(1) = 1/6`. Positive for all `x > 0`; equals the second
/// derivative of the A-L generating function and `-m_L''(x)`.
pub fn k_fn(x: f64) -> f64 {
    assert!(x > 0.0 && x.is_finite(), "k(x) needs finite x > 0, got {x}");
    let u = x - 1.0;
    if u.abs() < SERIES_WINDOW {
        series::k_kernel(u)
    } else {
        let lx = x.ln();
        ((x + 1.0) * lx - 2.0 * (x - 1.0)) / (x * x * lx * lx * lx)
    }
}

/// First derivative of `x -> mean(1, x)`.
pub fn mean_first_derivative(kind: ChainMean, x: f64) -> f64 {
    assert!(
        x > 0.0 && x.is_finite(),
        "m'(x) needs finite x > 0, got {x}"
    );
    match kind {
        ChainMean::A => 0.5,
        ChainMean::H => 2.0 / ((1.0 + x) * (1.0 + x)),
        ChainMean::G => 0.5 / x.sqrt(),
        ChainMean::N1 => 0.25 * (1.0 + 1.0 / x.sqrt()),
        ChainMean::N3 => (1.0 + 0.5 / x.sqrt()) / 3.0,
        ChainMean::N2 => {
            let r = x.sqrt();
            (2.0 * x + r + 1.0) / (4.0 * r * (2.0 * x + 2.0).sqrt())
        }
        ChainMean::S => x / (2.0 * x * x + 2.0).sqrt(),
        ChainMean::L => {
            let u = x - 1.0;
            if u.abs() < SERIES_WINDOW {
                series::log_mean_slope(u)
            } else {
                let lx = x.ln();
                (x * lx - x + 1.0) / (x * lx * lx)
            }
        }
    }
}

/// Second derivative of `x -> mean(1, x)`.
pub fn mean_second_derivative(kind: ChainMean, x: f64) -> f64 {
    assert!(
        x > 0.0 && x.is_finite(),
        "m''(x) needs finite x > 0, got {x}"
    );
    match kind {
        ChainMean::A => 0.0,
        ChainMean::H => {
            let c = 1.0 + x;
            -4.0 / (c * c * c)
        }
        ChainMean::G => -0.25 / (x * x.sqrt()),
        ChainMean::N1 => -0.125 / (x * x.sqrt()),
        ChainMean::N3 => -1.0 / (12.0 * x * x.sqrt()),
        ChainMean::N2 => {
            let x32 = x * x.sqrt();
            let b = 2.0 * x + 2.0;
            -(x32 + 1.0) / (4.0 * x32 * b * b.sqrt())
        }
        ChainMean::S => {
            let b = 2.0 * x * x + 2.0;
            2.0 / (b * b.sqrt())
        }
        ChainMean::L => -k_fn(x),
    }
}

/// `f(x) = m_upper(x) - m_lower(x)`.
pub fn gen_value(pair: MeasurePair, x: f64) -> f64 {
    let p = PositivePair::new(1.0, x).expect("x must be positive and finite");
    chain_mean(pair.upper, p) - chain_mean(pair.lower, p)
}

/// `f`, `f'`, `f''` at `x`, composed from the per-mean closed forms.
pub fn gen_derivatives(pair: MeasurePair, x: f64) -> GenDerivatives {
    GenDerivatives {
        f0: gen_value(pair, x),
        f1: mean_first_derivative(pair.upper, x) - mean_first_derivative(pair.lower, x),
        f2: mean_second_derivative(pair.upper, x) - mean_second_derivative(pair.lower, x),
    }
}

/// The homogeneity lift `phi(a, b) = a f(b/a) = X(a,b) - Y(a,b)`.
pub fn phi_lift(pair: MeasurePair, p: PositivePair) -> f64 {
    p.a() * gen_value(pair, p.ratio())
}
