//! Numerically stable evaluation of the bivariate means on positive inputs.
//!
//! Every mean is evaluated through a form that avoids intermediate overflow
//! (inputs up to `f64::MAX` are safe) and avoids cancellation near `a = b`
//! (the log mean and the Dragomir-Pearce form switch to series inside
//! `|b/a - 1| < 1e-3`). Arguments are ordered before evaluation, so results
//! are bit-for-bit symmetric in `(a, b)`.

use crate::rational::Rational;
use crate::series;
use std::fmt;

/// An ordered pair of positive, finite reals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivePair {
    a: f64,
    b: f64,
}

impl PositivePair {
    /// Rejects non-finite and non-positive coordinates.
    pub fn new(a: f64, b: f64) -> Result<Self, MeanError> {
        if !(a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0) {
            return Err(MeanError::InvalidPair { a, b });
        }
        Ok(PositivePair { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn min(&self) -> f64 {
        self.a.min(self.b)
    }

    pub fn max(&self) -> f64 {
        self.a.max(self.b)
    }

    /// `b / a`.
    pub fn ratio(&self) -> f64 {
        self.b / self.a
    }
}

/// Evaluation errors for the mean family.
#[derive(Debug, Clone, PartialEq)]
pub enum MeanError {
    InvalidPair {
        a: f64,
        b: f64,
    },
    /// Dragomir-Pearce exponent outside (0, 1).
    InvalidDpParameter(f64),
    /// Power-mean order is NaN.
    InvalidPowerOrder(f64),
}

impl fmt::Display for MeanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanError::InvalidPair { a, b } => {
                write!(f, "pair ({a}, {b}) is not positive and finite")
            }
            MeanError::InvalidDpParameter(r) => {
                write!(f, "Dragomir-Pearce parameter r = {r} is outside (0, 1)")
            }
            MeanError::InvalidPowerOrder(t) => {
                write!(f, "power-mean order t = {t} is not a number")
            }
        }
    }
}

impl std::error::Error for MeanError {}

/// The eight means of the main chain, in increasing order:
/// H <= G <= L <= N1 <= N3 <= N2 <= A <= S.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChainMean {
    /// Harmonic, `2ab/(a+b)`.
    H,
    /// Geometric, `sqrt(ab)`.
    G,
    /// Logarithmic, `(b-a)/(ln b - ln a)`, continued with `L(a,a) = a`.
    L,
    /// Square-root mean, `((sqrt a + sqrt b)/2)^2`.
    N1,
    /// Heronian, `(a + sqrt(ab) + b)/3`.
    N3,
    /// `((sqrt a + sqrt b)/2) * sqrt((a+b)/2)`.
    N2,
    /// Arithmetic, `(a+b)/2`.
    A,
    /// Root-square (quadratic), `sqrt((a^2+b^2)/2)`.
    S,
}

impl ChainMean {
    /// All chain means in increasing chain order.
    pub const CHAIN: [ChainMean; 8] = [
        ChainMean::H,
        ChainMean::G,
        ChainMean::L,
        ChainMean::N1,
        ChainMean::N3,
        ChainMean::N2,
        ChainMean::A,
        ChainMean::S,
    ];

    /// Position in the chain; larger index dominates.
    pub fn chain_index(&self) -> usize {
        Self::CHAIN.iter().position(|m| m == self).unwrap()
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            ChainMean::H => "H",
            ChainMean::G => "G",
            ChainMean::L => "L",
            ChainMean::N1 => "N1",
            ChainMean::N3 => "N3",
            ChainMean::N2 => "N2",
            ChainMean::A => "A",
            ChainMean::S => "S",
        }
    }

    /// Exact second derivative of `x -> mean(1, x)` at `x = 1`.
    pub fn curvature_at_one(&self) -> Rational {
        match self {
            ChainMean::H => Rational::new(-1, 2),
            ChainMean::G => Rational::new(-1, 4),
            ChainMean::L => Rational::new(-1, 6),
            ChainMean::N1 => Rational::new(-1, 8),
            ChainMean::N3 => Rational::new(-1, 12),
            ChainMean::N2 => Rational::new(-1, 16),
            ChainMean::A => Rational::ZERO,
            ChainMean::S => Rational::new(1, 4),
        }
    }
}

impl fmt::Display for ChainMean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Identity of any mean the library evaluates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanKind {
    Chain(ChainMean),
    /// Power mean of order `t`; `t = +-inf` gives max/min.
    Power(f64),
    /// Dragomir-Pearce form of exponent `r in (0, 1)`. Note this one is
    /// homogeneous of degree `r`, not 1, so it sits between `min^r` and
    /// `max^r` rather than between the inputs.
    DragomirPearce(f64),
}

impl From<ChainMean> for MeanKind {
    fn from(m: ChainMean) -> Self {
        MeanKind::Chain(m)
    }
}

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanKind::Chain(m) => write!(f, "{m}"),
            MeanKind::Power(t) => write!(f, "B[{t}]"),
            MeanKind::DragomirPearce(r) => write!(f, "DP[{r}]"),
        }
    }
}

/// Log mean through the ratio form `lo * (u / ln(1+u))`, `u = hi/lo - 1`.
///
/// The ratio form is insensitive to the relative error of `u` itself, which
/// keeps the result within a few ulp for any separation of the inputs.
fn log_mean(lo: f64, hi: f64) -> f64 {
    let u = hi / lo - 1.0;
    let ratio = if u < series::SERIES_WINDOW {
        series::log_mean_ratio(u)
    } else {
        u / u.ln_1p()
    };
    lo * ratio
}

/// Evaluates one of the chain means. Infallible on a valid pair.
pub fn chain_mean(kind: ChainMean, p: PositivePair) -> f64 {
    let (lo, hi) = (p.min(), p.max());
    let value = match kind {
        ChainMean::H => 2.0 / (lo.recip() + hi.recip()),
        ChainMean::G => lo.sqrt() * hi.sqrt(),
        ChainMean::L => log_mean(lo, hi),
        ChainMean::N1 => {
            let s = 0.5 * (lo.sqrt() + hi.sqrt());
            s * s
        }
        ChainMean::N3 => lo / 3.0 + lo.sqrt() * hi.sqrt() / 3.0 + hi / 3.0,
        ChainMean::N2 => 0.5 * (lo.sqrt() + hi.sqrt()) * (0.5 * lo + 0.5 * hi).sqrt(),
        ChainMean::A => 0.5 * lo + 0.5 * hi,
        ChainMean::S => {
            let q = lo / hi;
            hi * (0.5 + 0.5 * q * q).sqrt()
        }
    };
    // Betweenness is exact by construction up to final rounding; pin it.
    value.clamp(lo, hi)
}

/// Power mean of order `t` with the limit branches at `t = 0` and `t = +-inf`.
///
/// Orders within 1e-9 of zero take the geometric branch. The orders whose
/// closed forms exist in the chain (`-1, 1/2, 1, 2`) delegate to them, so the
/// corresponding identities hold exactly. For any other order the factored
/// form `m * ((1 + (lo/hi)^|t|)/2)^(1/t)` is used; the power underflows
/// gracefully for `|t| * ln(hi/lo) > ~745`, saturating toward min/max, and no
/// intermediate can overflow.
pub fn power_mean(t: f64, p: PositivePair) -> f64 {
    if t.is_nan() {
        return f64::NAN;
    }
    if t == f64::INFINITY {
        return p.max();
    }
    if t == f64::NEG_INFINITY {
        return p.min();
    }
    if t.abs() < 1e-9 {
        return chain_mean(ChainMean::G, p);
    }
    if t == -1.0 {
        return chain_mean(ChainMean::H, p);
    }
    if t == 0.5 {
        return chain_mean(ChainMean::N1, p);
    }
    if t == 1.0 {
        return chain_mean(ChainMean::A, p);
    }
    if t == 2.0 {
        return chain_mean(ChainMean::S, p);
    }
    let (lo, hi) = (p.min(), p.max());
    let anchor = if t > 0.0 { hi } else { lo };
    let w = (lo / hi).powf(t.abs());
    (anchor * (0.5 + 0.5 * w).powf(1.0 / t)).clamp(lo, hi)
}

/// The Dragomir-Pearce middle form `(b^(r+1) - a^(r+1)) / ((r+1)(b - a))`,
/// continued with the value `a^r` at `a = b`.
pub fn dp_mid(r: f64, p: PositivePair) -> Result<f64, MeanError> {
    if !(r.is_finite() && 0.0 < r && r < 1.0) {
        return Err(MeanError::InvalidDpParameter(r));
    }
    let (lo, hi) = (p.min(), p.max());
    let s = r + 1.0;
    let u = hi / lo - 1.0;
    Ok(if u < series::SERIES_WINDOW {
        lo.powf(r) * series::dp_ratio(u, s)
    } else {
        // Factored by hi^r so that no intermediate exceeds the inputs' scale.
        let q = lo / hi;
        hi.powf(r) * (1.0 - q.powf(s)) / (s * (1.0 - q))
    })
}

/// Evaluates any mean kind on a pair.
pub fn mean_value(kind: MeanKind, p: PositivePair) -> Result<f64, MeanError> {
    match kind {
        MeanKind::Chain(m) => Ok(chain_mean(m, p)),
        MeanKind::Power(t) => {
            if t.is_nan() {
                Err(MeanError::InvalidPowerOrder(t))
            } else {
                Ok(power_mean(t, p))
            }
        }
        MeanKind::DragomirPearce(r) => dp_mid(r, p),
    }
}
