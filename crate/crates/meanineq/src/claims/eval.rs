//! Binary64 evaluation of claim expressions and chain margins.

use super::ast::{Claim, CmpOp, Expr};
use crate::means::{mean_value, MeanError, PositivePair};
use std::fmt;

/// Scale-normalized slack below which a comparison counts as violated.
pub const MARGIN_EPSILON: f64 = 1e-12;

/// Evaluation faults. Expressions over positive pairs are total except for
/// square roots of negative intermediates and vanishing divisors, both of
/// which are reported with the input pair as witness rather than panicking.
#[derive(Debug, Clone, PartialEq)]
pub enum EvalFault {
    SqrtOfNegative { a: f64, b: f64, value: f64 },
    DivisionByZero { a: f64, b: f64 },
    Mean(MeanError),
}

impl fmt::Display for EvalFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalFault::SqrtOfNegative { a, b, value } => {
                write!(f, "sqrt of negative value {value} at pair ({a}, {b})")
            }
            EvalFault::DivisionByZero { a, b } => write!(f, "division by zero at pair ({a}, {b})"),
            EvalFault::Mean(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for EvalFault {}

impl From<MeanError> for EvalFault {
    fn from(e: MeanError) -> Self {
        EvalFault::Mean(e)
    }
}

/// Evaluates an expression at a pair.
pub fn eval_expr(expr: &Expr, p: PositivePair) -> Result<f64, EvalFault> {
    match expr {
        Expr::Number(r) => Ok(r.to_f64()),
        Expr::Mean(sym) => Ok(mean_value(sym.kind(), p)?),
        Expr::Add(l, r) => Ok(eval_expr(l, p)? + eval_expr(r, p)?),
        Expr::Sub(l, r) => Ok(eval_expr(l, p)? - eval_expr(r, p)?),
        Expr::Mul(l, r) => Ok(eval_expr(l, p)? * eval_expr(r, p)?),
        Expr::Div(l, r) => {
            let num = eval_expr(l, p)?;
            let den = eval_expr(r, p)?;
            if den == 0.0 {
                return Err(EvalFault::DivisionByZero { a: p.a(), b: p.b() });
            }
            Ok(num / den)
        }
        Expr::Pow(base, n) => Ok(eval_expr(base, p)?.powi(*n)),
        Expr::Sqrt(inner) => {
            let v = eval_expr(inner, p)?;
            if v < 0.0 {
                return Err(EvalFault::SqrtOfNegative {
                    a: p.a(),
                    b: p.b(),
                    value: v,
                });
            }
            Ok(v.sqrt())
        }
    }
}

/// Normalized margin of one comparison: positive slack means satisfied.
pub fn comparison_margin(left: f64, op: CmpOp, right: f64, p: PositivePair) -> f64 {
    let scale = left.abs().max(right.abs()).max(p.a());
    match op {
        CmpOp::Le => (right - left) / scale,
        CmpOp::Ge => (left - right) / scale,
    }
}

/// Margins of every adjacent comparison in the chain, scale-normalized by
/// `max(|left|, |right|, a)`. The claim is satisfied at `p` iff all margins
/// are at least `-MARGIN_EPSILON`.
pub fn eval_claim(claim: &Claim, p: PositivePair) -> Result<Vec<f64>, EvalFault> {
    let mut margins = Vec::with_capacity(claim.links.len());
    let mut left = eval_expr(&claim.head, p)?;
    for (op, expr) in &claim.links {
        let right = eval_expr(expr, p)?;
        margins.push(comparison_margin(left, *op, right, p));
        left = right;
    }
    Ok(margins)
}

/// All margins at least `-MARGIN_EPSILON`.
pub fn satisfied(margins: &[f64]) -> bool {
    margins.iter().all(|&m| m >= -MARGIN_EPSILON)
}
