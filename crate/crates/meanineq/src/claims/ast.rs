//! Claim expressions: a chain of mean-symbol arithmetic joined by `<=`/`>=`.

use crate::means::{ChainMean, MeanKind};
use crate::rational::Rational;
use std::fmt;

/// A mean symbol as it appears in claim text.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanSymbol {
    Chain(ChainMean),
    /// `B[t]` with exact rational order.
    Power(Rational),
    /// `DP[r]` with exact rational exponent.
    DragomirPearce(Rational),
}

impl MeanSymbol {
    pub fn kind(&self) -> MeanKind {
        match self {
            MeanSymbol::Chain(m) => MeanKind::Chain(*m),
            MeanSymbol::Power(t) => MeanKind::Power(t.to_f64()),
            MeanSymbol::DragomirPearce(r) => MeanKind::DragomirPearce(r.to_f64()),
        }
    }
}

impl fmt::Display for MeanSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanSymbol::Chain(m) => write!(f, "{m}"),
            MeanSymbol::Power(t) => write!(f, "B[{t}]"),
            MeanSymbol::DragomirPearce(r) => write!(f, "DP[{r}]"),
        }
    }
}

/// Expression node. Rationals are exact; powers are integer.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(Rational),
    Mean(MeanSymbol),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Sqrt(Box<Expr>),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            // A fraction literal prints with a slash, so it binds like a
            // quotient when it needs parentheses.
            Expr::Number(r) if !r.is_integer() => 2,
            Expr::Pow(..) => 3,
            Expr::Number(_) | Expr::Mean(_) | Expr::Sqrt(_) => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let prec = self.precedence();
        let parens = prec < min_prec;
        if parens {
            f.write_str("(")?;
        }
        match self {
            Expr::Number(r) => write!(f, "{r}")?,
            Expr::Mean(m) => write!(f, "{m}")?,
            Expr::Add(l, r) => {
                l.fmt_prec(f, 1)?;
                f.write_str(" + ")?;
                r.fmt_prec(f, 2)?;
            }
            Expr::Sub(l, r) => {
                l.fmt_prec(f, 1)?;
                f.write_str(" - ")?;
                r.fmt_prec(f, 2)?;
            }
            Expr::Mul(l, r) => {
                l.fmt_prec(f, 2)?;
                f.write_str("*")?;
                r.fmt_prec(f, 3)?;
            }
            Expr::Div(l, r) => {
                l.fmt_prec(f, 2)?;
                f.write_str("/")?;
                r.fmt_prec(f, 3)?;
            }
            Expr::Pow(base, n) => {
                base.fmt_prec(f, 4)?;
                write!(f, "^{n}")?;
            }
            Expr::Sqrt(inner) => {
                f.write_str("sqrt(")?;
                inner.fmt_prec(f, 0)?;
                f.write_str(")")?;
            }
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Comparison direction between adjacent chain members.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Le,
    Ge,
}

impl fmt::Display for CmpOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CmpOp::Le => "<=",
            CmpOp::Ge => ">=",
        })
    }
}

/// A parsed inequality chain: at least two expressions.
#[derive(Debug, Clone, PartialEq)]
pub struct Claim {
    pub head: Expr,
    pub links: Vec<(CmpOp, Expr)>,
}

impl Claim {
    /// Number of expressions in the chain.
    pub fn arity(&self) -> usize {
        self.links.len() + 1
    }

    /// The comparisons as (left, op, right) triples.
    pub fn comparisons(&self) -> Vec<(&Expr, CmpOp, &Expr)> {
        let mut out = Vec::with_capacity(self.links.len());
        let mut left = &self.head;
        for (op, right) in &self.links {
            out.push((left, *op, right));
            left = right;
        }
        out
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        for (op, e) in &self.links {
            write!(f, " {op} {e}")?;
        }
        Ok(())
    }
}
