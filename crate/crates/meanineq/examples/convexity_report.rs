//! Verify nonnegativity and convexity of the eight difference measures.

use meanineq::convexity::verify_lemma11;
use meanineq::genfn::convexity_pairs;
use meanineq::oracle::Oracle;
use meanineq::sampling::GridSpec;

fn main() {
    let grid = GridSpec::default();
    let mut oracle = Oracle::new();
    println!(
        "{:<6} {:>6} {:>14} {:>14} {:>12} {:>10} {:>10}",
        "pair", "norm", "min f''", "at x", "fd max rel", "eq13 bad", "mid bad"
    );
    for pair in convexity_pairs() {
        let v = verify_lemma11(pair, &grid, 42, &mut oracle);
        println!(
            "{:<6} {:>6} {:>14.6e} {:>14.6e} {:>12.3e} {:>10} {:>10}",
            v.pair,
            if v.normalization_ok { "ok" } else { "BAD" },
            v.second_derivative_min,
            v.second_derivative_argmin,
            v.fd_max_rel_err,
            v.eq13_violations,
            v.midpoint_violations,
        );
        assert!(v.passed(), "{} failed verification", v.pair);
    }
    println!("\nall eight measures verified");
}
