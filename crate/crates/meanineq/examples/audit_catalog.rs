//! Run the bundled claim catalog on seeded samples and summarize verdicts.
//!
//! The catalog keeps known-broken printed variants next to their corrected
//! forms, so a healthy run reports both FAILS and HOLDS verdicts — all
//! matching their expectations.
//!
//! ```text
//! cargo run --release --example audit_catalog
//! ```

use meanineq::claims::{bundled_suite, run_audit, AuditConfig};

fn main() {
    let suite = bundled_suite();
    let cfg = AuditConfig::new(42, 20_000);
    let report = run_audit(&suite, &cfg);

    println!(
        "{} entries, {} broad + {} near-equal samples each, seed {}",
        report.entries.len(),
        report.log_uniform_samples,
        report.near_equal_samples,
        report.seed
    );
    println!();
    for e in &report.entries {
        let flag = if e.expectation_met {
            "ok      "
        } else {
            "MISMATCH"
        };
        let witness = match e.witness {
            Some(w) => format!("witness (1, {:.6})", w.b),
            None => String::new(),
        };
        println!(
            "{flag} {:<24} {:<5} min margin {:>10.2e}  {witness}",
            e.id, e.verdict, e.min_margin
        );
    }
    println!();
    println!("expectations met: {}", report.expectations_met);
}
