//! Evaluate the whole mean chain on a pair, plus a few parameterized kinds.
//!
//! ```text
//! cargo run --example eval_means -- 1 4
//! ```

use meanineq::means::{chain_mean, dp_mid, power_mean, ChainMean, PositivePair};

fn main() {
    let mut args = std::env::args().skip(1);
    let a: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1.0);
    let b: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(4.0);
    let p = PositivePair::new(a, b).expect("positive finite inputs");

    println!("chain at ({a}, {b}):");
    for kind in ChainMean::CHAIN {
        println!("  {:>2} = {:.17}", kind.symbol(), chain_mean(kind, p));
    }

    println!("\npower means:");
    for t in [
        f64::NEG_INFINITY,
        -1.0,
        0.0,
        0.5,
        1.0,
        2.0,
        3.0,
        f64::INFINITY,
    ] {
        println!("  B[{t:>4}] = {:.17}", power_mean(t, p));
    }

    println!("\nDragomir-Pearce form (degree r, not a mean of degree one):");
    for r in [0.25, 0.5, 0.75] {
        println!("  DP[{r}] = {:.17}", dp_mid(r, p).unwrap());
    }
}
