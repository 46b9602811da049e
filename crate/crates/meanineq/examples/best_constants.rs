//! Profile the eight curvature-ratio functions behind the best constants.
//!
//! Each ratio g = f1''/f2'' takes an exact rational value at the removable
//! point x = 1; the scan confirms that value is also the supremum, which is
//! what lets the constant transfer to the measure inequality
//! phi_1 <= beta * phi_2.

use meanineq::constants::{apply_lemma12, constant_claims, extremum_scan};
use meanineq::sampling::{generate_pairs, GridSpec, SampleConfig};

fn main() {
    let grid = GridSpec::default();
    let samples = generate_pairs(&SampleConfig::new(42, 10_000));

    println!(
        "{:<10} {:>7} {:>22} {:>12} {:>22} {:>10}",
        "ratio", "claimed", "sup (scan+refine)", "argmax", "inf", "violations"
    );
    for claim in constant_claims() {
        let num = claim.numerator_pair();
        let den = claim.denominator_pair();
        let profile = extremum_scan(num, den, &grid).unwrap();
        let violations = apply_lemma12(num, den, 0.0, claim.bound.to_f64(), &samples);
        println!(
            "{:<10} {:>7} {:>22.16} {:>12.6} {:>22.16} {:>10}",
            format!("{}/{}", profile.numerator, profile.denominator),
            claim.bound.to_string(),
            profile.sup,
            profile.argmax,
            profile.inf,
            violations
        );
    }

    // An undersized constant loses near a = b, where g peaks.
    let undersized = apply_lemma12(
        constant_claims()[0].numerator_pair(),
        constant_claims()[0].denominator_pair(),
        0.0,
        2.0,
        &samples,
    );
    println!("\nwith beta = 2 instead of 5/2 on SL/AL: {undersized} violations");
}
