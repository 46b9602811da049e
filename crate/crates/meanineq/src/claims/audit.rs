//! The audit engine: seeded sampling, margin evaluation, extended-precision
//! re-adjudication of too-close-to-call margins, and verdicts.
//!
//! Tolerance policy: a comparison is satisfied at a sample when its
//! scale-normalized margin is at least `-epsilon` (1e-12). A binary64 margin
//! below `-10 epsilon` is a conclusive violation; margins inside
//! `(-10 epsilon, epsilon)` are re-adjudicated by the extended-precision
//! backend, whose sign decides. This keeps claims with genuinely tiny true
//! margins (fourth-order contact at a = b) from flipping verdicts on f64
//! rounding noise, in either direction.

use super::ast::{Claim, CmpOp, Expr, MeanSymbol};
use super::eval::{eval_claim, EvalFault, MARGIN_EPSILON};
use super::suite::{ClaimEntry, Expectation};
use crate::means::{ChainMean, PositivePair};
use crate::oracle::{Oracle, ORACLE_MARGIN_TOLERANCE, ORACLE_PRECISION_BITS};
use crate::sampling::{generate_pairs, SampleConfig};
use astro_float::BigFloat;
use serde::Serialize;
use std::collections::HashMap;

/// Audit run parameters.
#[derive(Debug, Clone, Copy)]
pub struct AuditConfig {
    pub samples: SampleConfig,
    pub epsilon: f64,
    pub fails_factor: f64,
    /// Re-adjudicate every sub-epsilon margin, not just the gray zone.
    pub oracle_all: bool,
}

impl AuditConfig {
    pub fn new(seed: u64, samples: usize) -> Self {
        AuditConfig {
            samples: SampleConfig::new(seed, samples),
            epsilon: MARGIN_EPSILON,
            fails_factor: 10.0,
            oracle_all: false,
        }
    }
}

/// A violating pair, normalized toward a = 1 where possible.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WitnessReport {
    pub a: f64,
    pub b: f64,
    /// Zero-based index of the violated comparison in the chain.
    pub link: usize,
    /// Scale-normalized margin at the witness (negative).
    pub margin: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub expression: String,
    pub expect: String,
    pub verdict: String,
    pub expectation_met: bool,
    pub samples_evaluated: usize,
    pub violations: usize,
    /// Minimum adjudicated margin over all samples and links.
    pub min_margin: f64,
    pub witness: Option<WitnessReport>,
    pub oracle_adjudications: usize,
    pub evaluation_faults: usize,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub seed: u64,
    pub log_uniform_samples: usize,
    pub near_equal_samples: usize,
    pub ratio_min: f64,
    pub ratio_max: f64,
    pub epsilon: f64,
    pub fails_factor: f64,
    pub oracle_precision_bits: usize,
    pub oracle_all: bool,
    pub entries: Vec<EntryReport>,
    pub expectations_met: bool,
}

impl AuditReport {
    /// Deterministic pretty JSON; key order follows the struct layout.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Memo of chain-mean values per sample, shared across suite entries.
type MeanCache = HashMap<(usize, ChainMean), BigFloat>;

fn oracle_chain_mean(
    oracle: &mut Oracle,
    cache: &mut MeanCache,
    idx: usize,
    p: PositivePair,
    kind: ChainMean,
) -> BigFloat {
    if let Some(v) = cache.get(&(idx, kind)) {
        return v.clone();
    }
    let v = oracle.chain_mean(kind, p.a(), p.b());
    cache.insert((idx, kind), v.clone());
    v
}

fn oracle_eval_expr(
    oracle: &mut Oracle,
    cache: &mut MeanCache,
    idx: usize,
    p: PositivePair,
    expr: &Expr,
) -> Result<BigFloat, EvalFault> {
    match expr {
        Expr::Number(r) => {
            let n = oracle.int(r.numerator());
            let d = oracle.int(r.denominator());
            Ok(oracle.div(&n, &d))
        }
        Expr::Mean(MeanSymbol::Chain(m)) => Ok(oracle_chain_mean(oracle, cache, idx, p, *m)),
        Expr::Mean(sym) => Ok(oracle.mean_value(sym.kind(), p.a(), p.b())),
        Expr::Add(l, r) => {
            let (l, r) = (
                oracle_eval_expr(oracle, cache, idx, p, l)?,
                oracle_eval_expr(oracle, cache, idx, p, r)?,
            );
            Ok(oracle.add(&l, &r))
        }
        Expr::Sub(l, r) => {
            let (l, r) = (
                oracle_eval_expr(oracle, cache, idx, p, l)?,
                oracle_eval_expr(oracle, cache, idx, p, r)?,
            );
            Ok(oracle.sub(&l, &r))
        }
        Expr::Mul(l, r) => {
            let (l, r) = (
                oracle_eval_expr(oracle, cache, idx, p, l)?,
                oracle_eval_expr(oracle, cache, idx, p, r)?,
            );
            Ok(oracle.mul(&l, &r))
        }
        Expr::Div(l, r) => {
            let (l, r) = (
                oracle_eval_expr(oracle, cache, idx, p, l)?,
                oracle_eval_expr(oracle, cache, idx, p, r)?,
            );
            if r.is_zero() {
                return Err(EvalFault::DivisionByZero { a: p.a(), b: p.b() });
            }
            Ok(oracle.div(&l, &r))
        }
        Expr::Pow(base, n) => {
            let b = oracle_eval_expr(oracle, cache, idx, p, base)?;
            if *n >= 0 {
                Ok(oracle.powi(&b, *n as usize))
            } else {
                let pw = oracle.powi(&b, n.unsigned_abs() as usize);
                if pw.is_zero() {
                    return Err(EvalFault::DivisionByZero { a: p.a(), b: p.b() });
                }
                let one = oracle.int(1);
                Ok(oracle.div(&one, &pw))
            }
        }
        Expr::Sqrt(inner) => {
            let v = oracle_eval_expr(oracle, cache, idx, p, inner)?;
            if v.is_negative() {
                return Err(EvalFault::SqrtOfNegative {
                    a: p.a(),
                    b: p.b(),
                    value: Oracle::to_f64(&v),
                });
            }
            Ok(oracle.sqrt(&v))
        }
    }
}

/// Normalized margin of one comparison at extended precision, as f64.
/// Returns None when the extended evaluation itself faults; the binary64
/// margin then stands.
fn oracle_margin(
    oracle: &mut Oracle,
    cache: &mut MeanCache,
    idx: usize,
    p: PositivePair,
    left: &Expr,
    op: CmpOp,
    right: &Expr,
) -> Option<f64> {
    let l = oracle_eval_expr(oracle, cache, idx, p, left).ok()?;
    let r = oracle_eval_expr(oracle, cache, idx, p, right).ok()?;
    let raw = match op {
        CmpOp::Le => oracle.sub(&r, &l),
        CmpOp::Ge => oracle.sub(&l, &r),
    };
    let a = oracle.num(p.a());
    let scale = oracle.abs(&l).max(&oracle.abs(&r)).max(&a);
    Some(Oracle::to_f64(&oracle.div(&raw, &scale)))
}

/// Shrinks a violating pair toward a = b in log space, keeping a conclusive
/// violation, for a witness with the smallest ratio that still fails.
/// `fallback` carries the adjudicated link and margin of the original sample
/// in case the violation is not reproducible in binary64 after rescaling.
fn minimize_witness(
    claim: &Claim,
    start: PositivePair,
    threshold: f64,
    fallback: (usize, f64),
) -> (PositivePair, usize, f64) {
    let worst_link = |p: PositivePair| -> Option<(usize, f64)> {
        let margins = eval_claim(claim, p).ok()?;
        let mut worst: Option<(usize, f64)> = None;
        for (i, &m) in margins.iter().enumerate() {
            if m < -threshold && worst.is_none_or(|(_, w)| m < w) {
                worst = Some((i, m));
            }
        }
        worst
    };
    let x0 = start.ratio();
    let normalized = PositivePair::new(1.0, x0).ok();
    let base = match normalized {
        Some(p) if worst_link(p).is_some() => p,
        _ => {
            let (link, margin) = worst_link(start).unwrap_or(fallback);
            return (start, link, margin);
        }
    };
    let mut far = base.b().ln();
    let mut near = 0.0f64;
    for _ in 0..100 {
        let mid = 0.5 * (far + near);
        let candidate = PositivePair::new(1.0, mid.exp()).unwrap();
        if worst_link(candidate).is_some() {
            far = mid;
        } else {
            near = mid;
        }
    }
    let witness = PositivePair::new(1.0, far.exp()).unwrap();
    let (link, margin) = worst_link(witness).expect("far end stays violating");
    (witness, link, margin)
}

/// Runs the audit over a suite with the samples the config prescribes.
pub fn run_audit(suite: &[ClaimEntry], cfg: &AuditConfig) -> AuditReport {
    let samples = generate_pairs(&cfg.samples);
    run_audit_on(suite, cfg, &samples)
}

/// Runs the audit over a caller-supplied sample set.
pub fn run_audit_on(
    suite: &[ClaimEntry],
    cfg: &AuditConfig,
    samples: &[PositivePair],
) -> AuditReport {
    let mut oracle = Oracle::new();
    let mut cache: MeanCache = HashMap::new();
    let mut entries = Vec::with_capacity(suite.len());

    for entry in suite {
        let comparisons: Vec<(Expr, CmpOp, Expr)> = entry
            .claim
            .comparisons()
            .into_iter()
            .map(|(l, op, r)| (l.clone(), op, r.clone()))
            .collect();

        let mut min_margin = f64::INFINITY;
        let mut violations = 0usize;
        let mut worst: Option<(PositivePair, usize, f64)> = None;
        let mut oracle_adjudications = 0usize;
        let mut faults = 0usize;

        for (idx, &p) in samples.iter().enumerate() {
            let margins = match eval_claim(&entry.claim, p) {
                Ok(m) => m,
                Err(_) => {
                    faults += 1;
                    continue;
                }
            };
            for (link, &m) in margins.iter().enumerate() {
                let needs_oracle = if cfg.oracle_all {
                    m < cfg.epsilon
                } else {
                    m < cfg.epsilon && m > -cfg.fails_factor * cfg.epsilon
                };
                let (adjudicated, conclusive_violation) = if needs_oracle {
                    let (l, op, r) = &comparisons[link];
                    match oracle_margin(&mut oracle, &mut cache, idx, p, l, *op, r) {
                        Some(om) => {
                            oracle_adjudications += 1;
                            (om, om < -ORACLE_MARGIN_TOLERANCE)
                        }
                        None => (m, m < -cfg.fails_factor * cfg.epsilon),
                    }
                } else {
                    (m, m < -cfg.fails_factor * cfg.epsilon)
                };
                if adjudicated < min_margin {
                    min_margin = adjudicated;
                }
                if conclusive_violation {
                    violations += 1;
                    if worst.is_none_or(|(_, _, w)| adjudicated < w) {
                        worst = Some((p, link, adjudicated));
                    }
                }
            }
        }

        let verdict = if violations == 0 {
            Expectation::Holds
        } else {
            Expectation::Fails
        };
        let witness = worst.map(|(p, worst_link, worst_margin)| {
            let (w, link, margin) = minimize_witness(
                &entry.claim,
                p,
                cfg.fails_factor * cfg.epsilon,
                (worst_link, worst_margin),
            );
            WitnessReport {
                a: w.a(),
                b: w.b(),
                link,
                margin,
            }
        });

        entries.push(EntryReport {
            id: entry.id.clone(),
            expression: entry.claim.to_string(),
            expect: entry.expect.as_str().to_string(),
            verdict: verdict.as_str().to_string(),
            expectation_met: verdict == entry.expect,
            samples_evaluated: samples.len(),
            violations,
            min_margin,
            witness,
            oracle_adjudications,
            evaluation_faults: faults,
            note: entry.note.clone(),
        });
    }

    let expectations_met = entries.iter().all(|e| e.expectation_met);
    AuditReport {
        seed: cfg.samples.seed,
        log_uniform_samples: cfg.samples.log_uniform,
        near_equal_samples: cfg.samples.near_equal,
        ratio_min: cfg.samples.ratio_min,
        ratio_max: cfg.samples.ratio_max,
        epsilon: cfg.epsilon,
        fails_factor: cfg.fails_factor,
        oracle_precision_bits: ORACLE_PRECISION_BITS,
        oracle_all: cfg.oracle_all,
        entries,
        expectations_met,
    }
}
