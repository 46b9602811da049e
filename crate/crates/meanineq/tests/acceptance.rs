//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with its runtime (run with `--nocapture` to see them; the
//! harness result line itself is the pass/fail signal).
//!
//! Tolerances are pinned here, not configurable.
#![allow(clippy::excessive_precision)]

use meanineq::claims::{
    bundled_suite, eval_expr, parse_expr, run_audit, sign_change_scan, AuditConfig,
};
use meanineq::constants::{constant_claims, extremum_scan, ratio_at_one, ratio_g};
use meanineq::convexity::{fd_cross_check, verify_lemma11};
use meanineq::genfn::{convexity_pairs, gen_derivatives, k_fn, MeasurePair};
use meanineq::means::{chain_mean, ChainMean, PositivePair};
use meanineq::oracle::Oracle;
use meanineq::sampling::GridSpec;
use std::time::{Duration, Instant};

fn pass(criterion: u32, elapsed: Duration, detail: &str) {
    println!("criterion {criterion}: PASS in {elapsed:.2?} - {detail}");
}

fn pair(a: f64, b: f64) -> PositivePair {
    PositivePair::new(a, b).unwrap()
}

/// Limit constants: the eight ratios reproduce their exact rational values
/// at the removable point, and the binary64 ratio evaluated at 1 +- 1e-9
/// matches within 1e-8. Must finish inside one second.
#[test]
fn criterion_1_limit_constants() {
    let t0 = Instant::now();
    let expected = ["5/2", "2", "2", "4", "5/2", "9/5", "3/2", "9/10"];
    for (claim, want) in constant_claims().iter().zip(expected) {
        let num = claim.numerator_pair();
        let den = claim.denominator_pair();
        let exact = ratio_at_one(num, den).unwrap();
        assert_eq!(exact.to_string(), want);
        assert_eq!(exact, claim.bound);
        for x in [1.0 + 1e-9, 1.0 - 1e-9] {
            let g = ratio_g(num, den, x).unwrap();
            assert!(
                (g - exact.to_f64()).abs() < 1e-8,
                "{}/{} at {x}: {g}",
                num.label(),
                den.label()
            );
        }
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(
        1,
        elapsed,
        "eight exact constants, ratio continuous at x = 1",
    );
}

/// Supremum at 1: full scans of the five chained ratios keep the supremum at
/// the removable point and show the rising-then-falling slope pattern.
/// Must finish inside five seconds.
#[test]
fn criterion_2_supremum_at_one() {
    let t0 = Instant::now();
    let grid = GridSpec::default();
    for claim in &constant_claims()[..5] {
        let num = claim.numerator_pair();
        let den = claim.denominator_pair();
        let profile = extremum_scan(num, den, &grid).unwrap();
        let g1 = claim.bound.to_f64();
        assert!(
            profile.sup <= g1 + 1e-9,
            "{}/{}: sup {} exceeds {}",
            num.label(),
            den.label(),
            profile.sup,
            g1
        );
        assert!(profile.slope_pattern_ok, "{}/{}", num.label(), den.label());
        assert!((profile.argmax - 1.0).abs() < 0.01);
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    pass(
        2,
        elapsed,
        "five scans: sup at x = 1, slope pattern up/down",
    );
}

/// Convexity: all eight measures pass the full verification on the
/// 10^4-point grid. Must finish inside ten seconds.
#[test]
fn criterion_3_convexity() {
    let t0 = Instant::now();
    let mut oracle = Oracle::new();
    let grid = GridSpec::default();
    for pairing in convexity_pairs() {
        let v = verify_lemma11(pairing, &grid, 42, &mut oracle);
        assert!(v.normalization_ok, "{}", v.pair);
        assert!(
            v.second_derivative_min >= -1e-12,
            "{}: {}",
            v.pair,
            v.second_derivative_min
        );
        assert_eq!(v.eq13_violations, 0, "{}", v.pair);
        assert_eq!(v.midpoint_violations, 0, "{}", v.pair);
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    pass(
        3,
        elapsed,
        "eight measures: normalization, curvature, first-order bound, midpoint",
    );
}

/// Derivative transcription: the analytic curvature matches the
/// finite-difference of the extended-precision measure to 1e-6 relative on
/// [1e-3, 1e3] away from (0.99, 1.01), and the series paths agree with the
/// extended-precision values to 1e-13 inside the window.
#[test]
fn criterion_4_derivative_transcription() {
    let t0 = Instant::now();
    let mut oracle = Oracle::new();
    let sweep = GridSpec::new(121, 1e-3, 1e3);
    for pairing in convexity_pairs() {
        for x in sweep.log_points() {
            if (x - 1.0).abs() < 0.01 {
                continue;
            }
            let err = fd_cross_check(pairing, x, &mut oracle);
            assert!(err < 1e-6, "{} at {x}: {err}", pairing.label());
        }
    }
    // Series paths inside |x - 1| < 1e-3.
    for &u in &[
        1e-12, -1e-12, 1e-9, -1e-9, 1e-6, -1e-6, 1e-4, -1e-4, 9.9e-4, -9.9e-4,
    ] {
        let x = 1.0 + u;
        let k_series = k_fn(x);
        let k_oracle = Oracle::to_f64(&oracle.k_fn(x));
        assert!(
            (k_series - k_oracle).abs() < 1e-13,
            "k at u={u}: {k_series} vs {k_oracle}"
        );

        let l_series = chain_mean(ChainMean::L, pair(1.0, x));
        let l_oracle = Oracle::to_f64(&oracle.chain_mean(ChainMean::L, 1.0, x));
        assert!(
            (l_series - l_oracle).abs() < 1e-13 * l_oracle,
            "L at u={u}: {l_series} vs {l_oracle}"
        );

        let s_series = meanineq::genfn::mean_first_derivative(ChainMean::L, x);
        let s_oracle = Oracle::to_f64(&oracle.log_mean_slope(x));
        assert!(
            (s_series - s_oracle).abs() < 1e-13,
            "L' at u={u}: {s_series} vs {s_oracle}"
        );
    }
    let elapsed = t0.elapsed();
    pass(
        4,
        elapsed,
        "finite differences < 1e-6 relative; series windows < 1e-13",
    );
}

/// Chain audit: the core holding chains on the default 10^5-sample seeded
/// configuration, with zero violations each. Must finish inside thirty
/// seconds.
#[test]
fn criterion_5_chain_audit() {
    let t0 = Instant::now();
    let ids = [
        "eq17-chain",
        "eq2-chain",
        "eq2-power-form",
        "eq3-dp-bound",
        "eq4-chain",
        "eq5-link",
        "eq9-chain",
        "eq10-chain",
        "eq11-chain",
        "eq31-chain",
        "eq32-chain",
        "eq33-chain",
        "eq34-cross",
        "eq36-chain",
        "eq54-chain",
        "eq55-chain",
        "eq56-chain",
        "eq57-chain",
    ];
    let suite: Vec<_> = bundled_suite()
        .into_iter()
        .filter(|e| ids.contains(&e.id.as_str()))
        .collect();
    assert_eq!(suite.len(), ids.len());
    let report = run_audit(&suite, &AuditConfig::new(42, 100_000));
    for entry in &report.entries {
        assert_eq!(entry.verdict, "HOLDS", "{}", entry.id);
        assert_eq!(entry.violations, 0, "{}", entry.id);
        assert!(entry.samples_evaluated >= 100_000, "{}", entry.id);
        assert_eq!(entry.evaluation_faults, 0, "{}", entry.id);
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    pass(5, elapsed, "eighteen chains hold on 10^5 seeded samples");
}

/// Errata detection: the printed variants fail with stored witnesses, the
/// corrected variants hold, and the frozen witness-point values match.
#[test]
fn criterion_6_errata_detection() {
    let t0 = Instant::now();
    let ids = [
        "eq35-printed-tail",
        "eq35-corrected",
        "eq60-middle-printed",
        "eq60-middle-corrected",
        "eq63-printed-left",
        "t4-nonneg",
    ];
    let suite: Vec<_> = bundled_suite()
        .into_iter()
        .filter(|e| ids.contains(&e.id.as_str()))
        .collect();
    let report = run_audit(&suite, &AuditConfig::new(42, 20_000));
    let entry = |id: &str| report.entries.iter().find(|e| e.id == id).unwrap();

    for id in [
        "eq35-printed-tail",
        "eq60-middle-printed",
        "eq63-printed-left",
    ] {
        let e = entry(id);
        assert_eq!(e.verdict, "FAILS", "{id}");
        let w = e.witness.expect("stored witness");
        assert!(w.margin < -1e-11, "{id}: {w:?}");
    }
    for id in ["eq35-corrected", "eq60-middle-corrected", "t4-nonneg"] {
        let e = entry(id);
        assert_eq!(e.verdict, "HOLDS", "{id}");
        assert_eq!(e.violations, 0, "{id}");
    }
    // The tight corrected bound stays strictly positive after adjudication.
    assert!(entry("eq60-middle-corrected").min_margin > 0.0);

    // Frozen reference values at the (1, 2) witness point.
    let p = pair(1.0, 2.0);
    let lhs = 5.0 * (chain_mean(ChainMean::N3, p) - chain_mean(ChainMean::L, p));
    let rhs = 6.0 * (chain_mean(ChainMean::N1, p) - chain_mean(ChainMean::L, p));
    assert!((lhs - 0.143_547_399_510_341_38).abs() < 1e-14);
    assert!((rhs - 0.086_470_441_785_504_7).abs() < 1e-14);
    assert!(lhs > rhs, "the printed tail is reversed at (1, 2)");

    let corrected_gap = chain_mean(ChainMean::N1, p)
        - (chain_mean(ChainMean::A, p) + 3.0 * chain_mean(ChainMean::L, p)) / 4.0;
    assert!((corrected_gap - 8.550_051_982_496_888e-5).abs() < 1e-15);

    let elapsed = t0.elapsed();
    pass(
        6,
        elapsed,
        "printed variants fail with witnesses, corrected variants hold",
    );
}

/// Sign-change scan: the mixed-sign gap function is negative at x = 1e-5
/// (frozen value -3.7512758e-3) and positive inside (1, 2).
#[test]
fn criterion_7_sign_change() {
    let t0 = Instant::now();
    let t3 = parse_expr("(S+5*L)/6 - (2*N2+3*L)/5").unwrap();
    let report = sign_change_scan(&t3, &GridSpec::default()).unwrap();
    assert_eq!(report.conclusion, "sign change over scan");
    assert!(report.negative.is_some() && report.positive.is_some());

    let at_small = eval_expr(&t3, pair(1.0, 1e-5)).unwrap();
    assert!((at_small - (-3.751_275_818_841_270_9e-3)).abs() < 1e-12);
    assert!(at_small < 0.0);

    // A positive value inside (1, 2); the frozen point is x = 1.1.
    let at_11 = eval_expr(&t3, pair(1.0, 1.1)).unwrap();
    assert!((at_11 - 1.321_351_283_315_486_8e-4).abs() < 1e-13);
    assert!(at_11 > 0.0);

    let elapsed = t0.elapsed();
    pass(7, elapsed, "negative at x = 1e-5, positive at x = 1.1");
}

/// The two single-signed gap functions stay nonnegative across the full
/// default grid.
#[test]
fn criterion_8_gap_functions_nonnegative() {
    let t0 = Instant::now();
    let t1 = parse_expr("5/3*(A-G) - (S-L)").unwrap();
    let t2 = parse_expr("(5*A+7*L)/12 - (2*N2+3*L)/5").unwrap();
    for x in GridSpec::default().log_points() {
        let p = pair(1.0, x);
        let scale = x.max(1.0);
        for (name, expr) in [("t1", &t1), ("t2", &t2)] {
            let v = eval_expr(expr, p).unwrap();
            assert!(v >= -1e-12 * scale, "{name} at {x}: {v}");
        }
    }
    let elapsed = t0.elapsed();
    pass(8, elapsed, "t1 and t2 nonnegative on the full grid");
}

/// Determinism: identical configurations give byte-identical reports.
#[test]
fn criterion_9_determinism() {
    let t0 = Instant::now();
    let suite = bundled_suite();
    let cfg = AuditConfig::new(42, 100_000);
    let first = run_audit(&suite, &cfg).to_json();
    let second = run_audit(&suite, &cfg).to_json();
    assert_eq!(first, second, "reports differ between identical runs");
    let elapsed = t0.elapsed();
    pass(9, elapsed, "two full audits, byte-identical JSON");
}

/// The whole bundled catalog meets its expectations end to end (the audit
/// gate the binary exposes via its exit code).
#[test]
fn bundled_catalog_expectations_met() {
    let report = run_audit(&bundled_suite(), &AuditConfig::new(42, 20_000));
    for entry in &report.entries {
        assert!(
            entry.expectation_met,
            "{}: verdict {} vs expected {}",
            entry.id, entry.verdict, entry.expect
        );
    }
    assert!(report.expectations_met);
}

/// Reference: the witness the audit minimizes for the reversed tail sits
/// just past the conclusive-violation threshold near a = b.
#[test]
fn minimized_witness_is_near_equal() {
    let suite: Vec<_> = bundled_suite()
        .into_iter()
        .filter(|e| e.id == "eq35-printed-tail")
        .collect();
    let report = run_audit(&suite, &AuditConfig::new(42, 5_000));
    let w = report.entries[0].witness.unwrap();
    assert_eq!(w.a, 1.0);
    assert!(w.b > 1.0 && w.b < 1.01, "{w:?}");
    let margins =
        meanineq::claims::eval_claim(&suite[0].claim, PositivePair::new(w.a, w.b).unwrap())
            .unwrap();
    assert!(margins[w.link] < -1e-11);
}

/// MeasurePair construction honors the chain order; the degenerate helper
/// stays available for boundary checks.
#[test]
fn measure_pair_registration_contract() {
    assert!(MeasurePair::new(ChainMean::N2, ChainMean::L).is_ok());
    assert!(MeasurePair::new(ChainMean::L, ChainMean::N2).is_err());
    let z = MeasurePair::degenerate(ChainMean::G);
    let d = gen_derivatives(z, 3.0);
    assert_eq!((d.f0, d.f1, d.f2), (0.0, 0.0, 0.0));
}
