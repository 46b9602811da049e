//! Ratio functions of curvatures and the best-constant machinery.
//!
//! For two measures with generating functions `f1`, `f2`, the ratio
//! `g(x) = f1''(x) / f2''(x)` extends continuously through the removable
//! point at `x = 1`, where its value is a small exact rational read off the
//! curvature table. A constant `beta >= sup g` transfers to the measure
//! inequality `phi_1 <= beta phi_2` for all positive pairs, and `alpha <=
//! inf g` gives the matching lower bound.

use crate::genfn::{gen_derivatives, phi_lift, MeasurePair};
use crate::means::{ChainMean, PositivePair};
use crate::rational::Rational;
use crate::sampling::GridSpec;
use serde::Serialize;
use std::fmt;

/// Errors from the ratio machinery.
#[derive(Debug, Clone, PartialEq)]
pub enum RatioError {
    /// The denominator curvature is not strictly positive at the request.
    NonPositiveDenominator { x: f64, value: f64 },
    /// The denominator curvature vanishes at x = 1.
    ZeroDenominatorAtOne,
}

impl fmt::Display for RatioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatioError::NonPositiveDenominator { x, value } => {
                write!(
                    f,
                    "denominator curvature {value} at x = {x} is not positive"
                )
            }
            RatioError::ZeroDenominatorAtOne => {
                write!(f, "denominator curvature vanishes at x = 1")
            }
        }
    }
}

impl std::error::Error for RatioError {}

/// `g(x) = f1''(x) / f2''(x)`; near `x = 1` both curvatures ride their series
/// paths, so the quotient passes smoothly through the removable point.
pub fn ratio_g(num: MeasurePair, den: MeasurePair, x: f64) -> Result<f64, RatioError> {
    let d = gen_derivatives(den, x).f2;
    if num == den {
        return Ok(1.0);
    }
    if d <= 0.0 {
        return Err(RatioError::NonPositiveDenominator { x, value: d });
    }
    Ok(gen_derivatives(num, x).f2 / d)
}

/// The exact value of `g` at the removable point, from the curvature table:
/// `(m_X''(1) - m_Y''(1)) / (m_U''(1) - m_V''(1))`.
pub fn ratio_at_one(num: MeasurePair, den: MeasurePair) -> Result<Rational, RatioError> {
    let d = den
        .upper()
        .curvature_at_one()
        .sub(&den.lower().curvature_at_one());
    if d.is_zero() {
        return Err(RatioError::ZeroDenominatorAtOne);
    }
    let n = num
        .upper()
        .curvature_at_one()
        .sub(&num.lower().curvature_at_one());
    Ok(n.div(&d))
}

/// Scan-and-refine profile of one ratio function.
#[derive(Debug, Clone, Serialize)]
pub struct RatioProfile {
    pub numerator: String,
    pub denominator: String,
    pub value_at_one: f64,
    pub sup: f64,
    pub argmax: f64,
    pub inf: f64,
    pub arginf: f64,
    /// Lower transfer constant used; no registered claim needs one, so 0.
    pub alpha: f64,
    /// Upper transfer constant used (the claimed best constant).
    pub beta: f64,
    /// Whether `alpha <= inf` and `beta >= sup` held on the scan.
    pub lemma_application_valid: bool,
    /// Whether the finite-difference slope of `g` is single-signed on each
    /// side of x = 1 (positive below, negative above).
    pub slope_pattern_ok: bool,
}

const GOLDEN_INV: f64 = 0.618_033_988_749_894_9;

/// Golden-section refinement over `ln x`, to a relative x-tolerance of 1e-10.
/// Assumes local unimodality inside the bracket, which the dense scan grid
/// supplies.
fn golden_refine<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, maximize: bool) -> (f64, f64) {
    let sgn = if maximize { 1.0 } else { -1.0 };
    let (mut a, mut b) = (lo.ln(), hi.ln());
    let mut c = b - GOLDEN_INV * (b - a);
    let mut d = a + GOLDEN_INV * (b - a);
    let mut fc = sgn * f(c.exp());
    let mut fd = sgn * f(d.exp());
    while (b - a).abs() > 1e-10 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - GOLDEN_INV * (b - a);
            fc = sgn * f(c.exp());
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + GOLDEN_INV * (b - a);
            fd = sgn * f(d.exp());
        }
    }
    let x = (0.5 * (a + b)).exp();
    (x, f(x))
}

/// Scans `g` on the grid, refines the best brackets by golden section, and
/// checks the slope sign pattern (rising below x = 1, falling above).
pub fn extremum_scan(
    num: MeasurePair,
    den: MeasurePair,
    grid: &GridSpec,
) -> Result<RatioProfile, RatioError> {
    let value_at_one = ratio_at_one(num, den)?.to_f64();
    let xs = grid.log_points();
    let mut vals = Vec::with_capacity(xs.len());
    for &x in &xs {
        vals.push(ratio_g(num, den, x)?);
    }

    let (mut imax, mut imin) = (0usize, 0usize);
    for (i, &v) in vals.iter().enumerate() {
        if v > vals[imax] {
            imax = i;
        }
        if v < vals[imin] {
            imin = i;
        }
    }

    let mut eval = |x: f64| ratio_g(num, den, x).unwrap_or(f64::NAN);
    let bracket = |i: usize| {
        (
            xs[i.saturating_sub(1)],
            xs[(i + 1).min(xs.len() - 1)].max(xs[i] * (1.0 + 1e-12)),
        )
    };
    let (blo, bhi) = bracket(imax);
    let (argmax, sup_refined) = golden_refine(&mut eval, blo, bhi, true);
    let sup = sup_refined.max(vals[imax]);
    let argmax = if sup_refined >= vals[imax] {
        argmax
    } else {
        xs[imax]
    };

    let (blo, bhi) = bracket(imin);
    let (arginf, inf_refined) = golden_refine(&mut eval, blo, bhi, false);
    let inf = inf_refined.min(vals[imin]);
    let arginf = if inf_refined <= vals[imin] {
        arginf
    } else {
        xs[imin]
    };

    // Finite-difference slope pattern across the grid, skipping the single
    // interval that straddles x = 1. Tiny wrong-way steps within noise of
    // the values' scale do not count.
    let mut slope_pattern_ok = true;
    for (w, pair_x) in vals.windows(2).zip(xs.windows(2)) {
        let (x0, x1) = (pair_x[0], pair_x[1]);
        if x0 < 1.0 && x1 > 1.0 {
            continue;
        }
        let tol = 1e-12 * w[0].abs().max(w[1].abs());
        if x1 <= 1.0 && w[1] < w[0] - tol {
            slope_pattern_ok = false;
        }
        if x0 >= 1.0 && w[1] > w[0] + tol {
            slope_pattern_ok = false;
        }
    }

    let beta = value_at_one;
    let alpha = 0.0;
    Ok(RatioProfile {
        numerator: num.label(),
        denominator: den.label(),
        value_at_one,
        sup,
        argmax,
        inf,
        arginf,
        alpha,
        beta,
        lemma_application_valid: alpha <= inf && beta >= sup - 1e-9,
        slope_pattern_ok,
    })
}

/// Checks the transferred inequality `alpha phi_2 <= phi_1 <= beta phi_2`
/// on a sample set; returns the number of scale-normalized violations
/// beyond 1e-12.
pub fn apply_lemma12(
    num: MeasurePair,
    den: MeasurePair,
    alpha: f64,
    beta: f64,
    samples: &[PositivePair],
) -> usize {
    let mut violations = 0;
    for &p in samples {
        let m1 = phi_lift(num, p);
        let m2 = phi_lift(den, p);
        let scale = m1.abs().max(m2.abs()).max(p.a());
        let upper_gap = (m1 - beta * m2) / scale;
        let lower_gap = (alpha * m2 - m1) / scale;
        if upper_gap > 1e-12 || lower_gap > 1e-12 {
            violations += 1;
        }
    }
    violations
}

/// One catalogued best-constant claim: `phi_num <= bound * phi_den`.
#[derive(Debug, Clone, Copy)]
pub struct ConstantClaim {
    pub numerator: (ChainMean, ChainMean),
    pub denominator: (ChainMean, ChainMean),
    pub bound: Rational,
}

impl ConstantClaim {
    pub fn numerator_pair(&self) -> MeasurePair {
        MeasurePair::new(self.numerator.0, self.numerator.1).unwrap()
    }

    pub fn denominator_pair(&self) -> MeasurePair {
        MeasurePair::new(self.denominator.0, self.denominator.1).unwrap()
    }
}

/// The eight catalogued constants, in presentation order:
/// five from the chained propositions and three companion measures.
pub fn constant_claims() -> [ConstantClaim; 8] {
    use ChainMean::*;
    [
        ConstantClaim {
            numerator: (S, L),
            denominator: (A, L),
            bound: Rational::new(5, 2),
        },
        ConstantClaim {
            numerator: (A, L),
            denominator: (N3, L),
            bound: Rational::new(2, 1),
        },
        ConstantClaim {
            numerator: (N3, L),
            denominator: (N1, L),
            bound: Rational::new(2, 1),
        },
        ConstantClaim {
            numerator: (S, L),
            denominator: (N2, L),
            bound: Rational::new(4, 1),
        },
        ConstantClaim {
            numerator: (N2, L),
            denominator: (N1, L),
            bound: Rational::new(5, 2),
        },
        ConstantClaim {
            numerator: (S, H),
            denominator: (S, L),
            bound: Rational::new(9, 5),
        },
        ConstantClaim {
            numerator: (A, G),
            denominator: (A, L),
            bound: Rational::new(3, 2),
        },
        ConstantClaim {
            numerator: (S, N1),
            denominator: (S, L),
            bound: Rational::new(9, 10),
        },
    ]
}

/// The subset of `constant_claims` whose slope pattern the scan must match
/// (the five chained propositions).
pub const PROPOSITION_COUNT: usize = 5;
