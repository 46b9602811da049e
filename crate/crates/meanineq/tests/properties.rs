//! Property-based invariants for the mean family and the claim DSL.

use meanineq::claims::{eval_claim, parse_claim};
use meanineq::claims::{Claim, CmpOp, Expr, MeanSymbol};
use meanineq::genfn::{convexity_pairs, gen_derivatives, phi_lift};
use meanineq::means::{chain_mean, dp_mid, power_mean, ChainMean, MeanKind, PositivePair};
use meanineq::oracle::Oracle;
use meanineq::rational::Rational;
use proptest::prelude::*;

fn log_uniform() -> impl Strategy<Value = f64> {
    (-6.0..6.0f64).prop_map(|e| 10f64.powf(e))
}

fn pairs() -> impl Strategy<Value = PositivePair> {
    (log_uniform(), log_uniform()).prop_map(|(a, b)| PositivePair::new(a, b).unwrap())
}

proptest! {
    /// Reordering the arguments never changes a chain mean, bit for bit.
    #[test]
    fn symmetry(p in pairs()) {
        let swapped = PositivePair::new(p.b(), p.a()).unwrap();
        for kind in ChainMean::CHAIN {
            prop_assert_eq!(
                chain_mean(kind, p).to_bits(),
                chain_mean(kind, swapped).to_bits()
            );
        }
    }

    /// Scaling both arguments scales every chain mean, to 1e-13 relative.
    #[test]
    fn homogeneity(p in pairs()) {
        for lambda in [1e-6, 1.0, 1e6] {
            let scaled = PositivePair::new(p.a() * lambda, p.b() * lambda).unwrap();
            for kind in ChainMean::CHAIN {
                let direct = chain_mean(kind, scaled);
                let reference = lambda * chain_mean(kind, p);
                prop_assert!(
                    (direct - reference).abs() <= 1e-13 * reference,
                    "{} lambda={}: {} vs {}", kind, lambda, direct, reference
                );
            }
        }
    }

    /// Every chain mean stays inside [min, max].
    #[test]
    fn betweenness(p in pairs()) {
        for kind in ChainMean::CHAIN {
            let v = chain_mean(kind, p);
            prop_assert!(p.min() <= v && v <= p.max(), "{}: {}", kind, v);
        }
    }

    /// The power mean is monotone non-decreasing in its order.
    #[test]
    fn power_mean_monotonicity(p in pairs(), mut t1 in -12.0..12.0f64, mut t2 in -12.0..12.0f64) {
        if t1 > t2 {
            std::mem::swap(&mut t1, &mut t2);
        }
        let b1 = power_mean(t1, p);
        let b2 = power_mean(t2, p);
        prop_assert!(b1 <= b2 + 1e-13 * b2, "B[{}]={} vs B[{}]={}", t1, b1, t2, b2);
    }

    /// The power mean interpolates between min and max at the infinite orders.
    #[test]
    fn power_mean_limits(p in pairs()) {
        prop_assert_eq!(power_mean(f64::NEG_INFINITY, p), p.min());
        prop_assert_eq!(power_mean(f64::INFINITY, p), p.max());
        let big = power_mean(500.0, p);
        prop_assert!(big <= p.max() && big >= power_mean(2.0, p) - 1e-13 * p.max());
    }

    /// The full eight-mean chain holds pointwise.
    #[test]
    fn chain_order(p in pairs()) {
        let mut last = 0.0f64;
        for kind in ChainMean::CHAIN {
            let v = chain_mean(kind, p);
            prop_assert!(v >= last - 1e-13 * v.abs(), "{} broke the chain", kind);
            last = v;
        }
    }

    /// The Dragomir-Pearce form obeys its defining bound and degree-r
    /// homogeneity.
    #[test]
    fn dp_bound_and_degree(p in pairs(), r in 0.05..0.95f64) {
        let mid = dp_mid(r, p).unwrap();
        let lower = (p.a().powf(r) + p.b().powf(r)) / 2.0;
        let upper = ((p.a() + p.b()) / 2.0).powf(r);
        let scale = upper.abs().max(1e-300);
        prop_assert!(lower <= mid + 1e-12 * scale, "r={}: {} vs {}", r, lower, mid);
        prop_assert!(mid <= upper + 1e-12 * scale, "r={}: {} vs {}", r, mid, upper);

        let scaled = PositivePair::new(p.a() * 16.0, p.b() * 16.0).unwrap();
        let lifted = dp_mid(r, scaled).unwrap();
        let reference = 16f64.powf(r) * mid;
        prop_assert!((lifted - reference).abs() <= 1e-12 * reference);
    }

    /// The lifted measure equals the difference of means, normalized by the
    /// pair scale.
    #[test]
    fn phi_lift_consistency(p in pairs()) {
        for pairing in convexity_pairs() {
            let lifted = phi_lift(pairing, p);
            let direct = chain_mean(pairing.upper(), p) - chain_mean(pairing.lower(), p);
            prop_assert!(
                (lifted - direct).abs() <= 1e-12 * p.max(),
                "{}: {} vs {}", pairing, lifted, direct
            );
            prop_assert!(lifted >= -1e-12 * p.max(), "{} negative: {}", pairing, lifted);
        }
    }

    /// Analytic curvature of every registered measure agrees with a binary64
    /// central difference of the measure away from the removable point. The
    /// abscissa range is kept where f64 differencing is meaningful (the
    /// curvature decays like x^-3 for the widest pairs, and the stencil's
    /// rounding floor would dominate further out); the extended-precision
    /// cross-check in the acceptance suite covers the full band.
    #[test]
    fn curvature_matches_finite_difference(exp in -1.5f64..1.5, pairing in prop::sample::select(convexity_pairs())) {
        let x = 10f64.powf(exp);
        prop_assume!((x - 1.0).abs() >= 1e-2);
        let h = x * 1e-4;
        let f = |x: f64| meanineq::genfn::gen_value(pairing, x);
        let fd = (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h)
            - f(x + 2.0 * h))
            / (12.0 * h * h);
        let analytic = gen_derivatives(pairing, x).f2;
        prop_assert!(
            (fd - analytic).abs() <= 1e-4 * analytic.abs(),
            "{} at {}: fd {} vs analytic {}", pairing, x, fd, analytic
        );
    }

    /// Near-equal log mean agrees with the extended-precision backend to
    /// 1e-13 relative across the whole stability band.
    #[test]
    fn log_mean_near_equal_stability(scale in log_uniform(), mag in -14.0..-2.0f64, sign in proptest::bool::ANY) {
        let u = if sign { 10f64.powf(mag) } else { -(10f64.powf(mag)) };
        let b = scale * (1.0 + u);
        prop_assume!(b > 0.0 && b != scale);
        let p = PositivePair::new(scale, b).unwrap();
        let fast = chain_mean(ChainMean::L, p);
        let mut oracle = Oracle::new();
        let slow = Oracle::to_f64(&oracle.chain_mean(ChainMean::L, scale, b));
        prop_assert!(
            (fast - slow).abs() <= 1e-13 * slow,
            "u={}: {} vs {}", u, fast, slow
        );
    }
}

// ---- claim DSL round-trip on generated trees ----

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d))
}

fn symbol_strategy() -> impl Strategy<Value = MeanSymbol> {
    prop_oneof![
        prop::sample::select(ChainMean::CHAIN.to_vec()).prop_map(MeanSymbol::Chain),
        rational_strategy().prop_map(MeanSymbol::Power),
        (1i64..9).prop_map(|n| MeanSymbol::DragomirPearce(Rational::new(n, 10))),
    ]
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        rational_strategy().prop_map(Expr::Number),
        symbol_strategy().prop_map(Expr::Mean),
    ];
    leaf.prop_recursive(4, 24, 8, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::Add(Box::new(l), Box::new(r))),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::Sub(Box::new(l), Box::new(r))),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::Mul(Box::new(l), Box::new(r))),
            // The parser folds literal quotients into fraction literals, so
            // canonical trees never hold Div(Number, Number); generate the
            // same canonical form.
            (inner.clone(), inner.clone()).prop_map(|(l, r)| match (l, r) {
                (Expr::Number(a), Expr::Number(b)) => match a.checked_div(&b) {
                    Some(q) => Expr::Number(q),
                    None => Expr::Div(Box::new(Expr::Number(a)), Box::new(Expr::Number(b))),
                },
                (l, r) => Expr::Div(Box::new(l), Box::new(r)),
            }),
            (inner.clone(), -3i32..4).prop_map(|(b, n)| Expr::Pow(Box::new(b), n)),
            inner.clone().prop_map(|e| Expr::Sqrt(Box::new(e))),
        ]
    })
}

proptest! {
    /// Printing any claim tree and parsing it back gives the identical tree.
    #[test]
    fn pretty_print_round_trips(head in expr_strategy(), tail in prop::collection::vec((prop_oneof![Just(CmpOp::Le), Just(CmpOp::Ge)], expr_strategy()), 1..4)) {
        let claim = Claim { head, links: tail };
        let printed = claim.to_string();
        let reparsed = parse_claim(&printed).unwrap();
        prop_assert_eq!(claim, reparsed, "printed: {}", printed);
    }

    /// Chain evaluation never panics on positive pairs; it either yields one
    /// margin per link or a typed fault.
    #[test]
    fn evaluation_is_total(head in expr_strategy(), tail in prop::collection::vec((Just(CmpOp::Le), expr_strategy()), 1..3), p in pairs()) {
        let links = tail.len();
        let claim = Claim { head, links: tail };
        if let Ok(margins) = eval_claim(&claim, p) {
            prop_assert_eq!(margins.len(), links);
        }
    }

    /// Margins are invariant under rescaling for degree-one claims.
    #[test]
    fn margins_scale_invariant(p in pairs()) {
        let claim = parse_claim("H <= G <= L <= N1 <= N3 <= N2 <= A <= S").unwrap();
        let base = eval_claim(&claim, p).unwrap();
        let scaled_pair = PositivePair::new(p.a() * 1e3, p.b() * 1e3).unwrap();
        let scaled = eval_claim(&claim, scaled_pair).unwrap();
        for (x, y) in base.iter().zip(&scaled) {
            prop_assert!((x - y).abs() <= 1e-12 + 1e-6 * x.abs());
        }
    }
}

/// The mean evaluator accepts every symbol the DSL can produce.
#[test]
fn every_symbol_kind_evaluates() {
    let p = PositivePair::new(2.0, 5.0).unwrap();
    for kind in ChainMean::CHAIN {
        assert!(meanineq::means::mean_value(MeanKind::Chain(kind), p).is_ok());
    }
    assert!(meanineq::means::mean_value(MeanKind::Power(0.7), p).is_ok());
    assert!(meanineq::means::mean_value(MeanKind::DragomirPearce(0.3), p).is_ok());
    assert!(meanineq::means::mean_value(MeanKind::DragomirPearce(1.3), p).is_err());
}
