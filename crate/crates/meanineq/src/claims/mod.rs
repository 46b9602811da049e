//! Inequality-claim DSL, bundled catalog, audit engine, and sign scanner.

pub mod ast;
pub mod audit;
pub mod eval;
pub mod parse;
pub mod scan;
pub mod suite;

pub use ast::{Claim, CmpOp, Expr, MeanSymbol};
pub use audit::{run_audit, run_audit_on, AuditConfig, AuditReport, EntryReport, WitnessReport};
pub use eval::{eval_claim, eval_expr, satisfied, EvalFault, MARGIN_EPSILON};
pub use parse::{parse_claim, parse_expr, ParseError};
pub use scan::{sign_change_scan, SignPoint, SignReport};
pub use suite::{
    bundled_suite, bundled_suite_text, parse_suite, ClaimEntry, Expectation, SuiteError,
};
