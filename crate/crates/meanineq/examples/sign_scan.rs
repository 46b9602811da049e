//! Scan the sign of the four auxiliary gap functions along (1, x).
//!
//! t1, t2 and t4 are single-signed; t3 genuinely changes sign, which is what
//! rules out any inequality between its two sides.

use meanineq::claims::{parse_expr, sign_change_scan};
use meanineq::plot::T_FUNCTIONS;
use meanineq::sampling::GridSpec;

fn main() {
    let grid = GridSpec::default();
    for (name, text) in T_FUNCTIONS {
        let expr = parse_expr(text).unwrap();
        let report = sign_change_scan(&expr, &grid).unwrap();
        println!("{name}: {text}");
        println!("  conclusion: {}", report.conclusion);
        if let Some(p) = report.negative {
            println!("  negative at x = {:.6e} (value {:.6e})", p.x, p.value);
        }
        if let Some(p) = report.positive {
            println!("  positive at x = {:.6e} (value {:.6e})", p.x, p.value);
        }
        println!(
            "  smallest |value| at x = {:.6e} ({:.6e})",
            report.min_abs.x, report.min_abs.value
        );
        println!();
    }
}
