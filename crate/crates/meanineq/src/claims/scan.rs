//! Sign scanning of expressions along the ray (1, x).

use super::ast::Expr;
use super::eval::eval_expr;
use super::eval::EvalFault;
use crate::means::PositivePair;
use crate::sampling::GridSpec;
use serde::Serialize;

/// A sampled point with its raw value.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SignPoint {
    pub x: f64,
    pub value: f64,
}

/// Result of scanning `E(1, x)` over a log grid.
#[derive(Debug, Clone, Serialize)]
pub struct SignReport {
    pub expression: String,
    pub grid: GridSpec,
    /// First grid point with a conclusively negative value.
    pub negative: Option<SignPoint>,
    /// First grid point with a conclusively positive value.
    pub positive: Option<SignPoint>,
    /// Location of the smallest normalized magnitude seen.
    pub min_abs: SignPoint,
    pub conclusion: String,
}

/// Values within `1e-12 * max(1, x)` of zero are treated as zero, so that
/// identically vanishing expressions are not misread as sign changes.
pub const SIGN_TOLERANCE: f64 = 1e-12;

/// Scans the expression over the grid and classifies its sign behavior.
pub fn sign_change_scan(expr: &Expr, grid: &GridSpec) -> Result<SignReport, EvalFault> {
    let mut negative = None;
    let mut positive = None;
    let mut min_abs = SignPoint {
        x: f64::NAN,
        value: f64::INFINITY,
    };
    let mut min_abs_norm = f64::INFINITY;
    for x in grid.log_points() {
        let p = PositivePair::new(1.0, x).expect("grid point");
        let v = eval_expr(expr, p)?;
        let scale = x.max(1.0);
        let norm = v.abs() / scale;
        if norm < min_abs_norm {
            min_abs_norm = norm;
            min_abs = SignPoint { x, value: v };
        }
        if v < -SIGN_TOLERANCE * scale && negative.is_none() {
            negative = Some(SignPoint { x, value: v });
        }
        if v > SIGN_TOLERANCE * scale && positive.is_none() {
            positive = Some(SignPoint { x, value: v });
        }
    }
    let conclusion = match (negative.is_some(), positive.is_some()) {
        (true, true) => "sign change over scan",
        (false, true) => "single-signed positive over scan",
        (true, false) => "single-signed negative over scan",
        (false, false) => "identically zero over scan",
    }
    .to_string();
    Ok(SignReport {
        expression: expr.to_string(),
        grid: *grid,
        negative,
        positive,
        min_abs,
        conclusion,
    })
}
