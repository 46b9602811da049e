//! Deterministic seeded sample generation shared by the audit and the
//! verification harnesses.

use crate::means::PositivePair;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// A log-spaced grid specification.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub points: usize,
    pub x_min: f64,
    pub x_max: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            points: 10_000,
            x_min: 1e-6,
            x_max: 1e6,
        }
    }
}

impl GridSpec {
    pub fn new(points: usize, x_min: f64, x_max: f64) -> Self {
        assert!(points >= 2 && x_min > 0.0 && x_min < x_max);
        GridSpec {
            points,
            x_min,
            x_max,
        }
    }

    /// Log-spaced abscissas, inclusive of both ends.
    pub fn log_points(&self) -> Vec<f64> {
        let (l0, l1) = (self.x_min.log10(), self.x_max.log10());
        let n = self.points;
        (0..n)
            .map(|i| 10f64.powf(l0 + (l1 - l0) * i as f64 / (n - 1) as f64))
            .collect()
    }
}

/// Sampling plan for pair generation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleConfig {
    pub seed: u64,
    /// Pairs with log-uniform ratio in `[ratio_min, ratio_max]`.
    pub log_uniform: usize,
    /// Extra pairs with `|b/a - 1|` log-uniform in `[1e-12, 1e-2]`.
    pub near_equal: usize,
    pub ratio_min: f64,
    pub ratio_max: f64,
}

impl SampleConfig {
    pub fn new(seed: u64, samples: usize) -> Self {
        SampleConfig {
            seed,
            log_uniform: samples,
            // The near-equal batch stresses the removable point; one extra
            // pair per twenty broad ones keeps the audit budget flat.
            near_equal: samples / 20,
            ratio_min: 1e-8,
            ratio_max: 1e8,
        }
    }

    pub fn total(&self) -> usize {
        self.log_uniform + self.near_equal
    }
}

/// Generates the sample set for a plan. The sequence is a pure function of
/// the plan, so identical configs give identical samples.
pub fn generate_pairs(cfg: &SampleConfig) -> Vec<PositivePair> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(cfg.total());
    let (lr0, lr1) = (cfg.ratio_min.log10(), cfg.ratio_max.log10());
    for _ in 0..cfg.log_uniform {
        let scale = 10f64.powf(rng.gen_range(-2.0..2.0));
        let ratio = 10f64.powf(rng.gen_range(lr0..lr1));
        out.push(PositivePair::new(scale, scale * ratio).expect("generated pair"));
    }
    for _ in 0..cfg.near_equal {
        let scale = 10f64.powf(rng.gen_range(-2.0..2.0));
        let mag = 10f64.powf(rng.gen_range(-12.0..-2.0));
        let u = if rng.gen_bool(0.5) { mag } else { -mag };
        out.push(PositivePair::new(scale, scale * (1.0 + u)).expect("generated pair"));
    }
    out
}

/// Ordered pairs `b > a` for the first-order bound check.
pub fn generate_ordered_pairs(seed: u64, count: usize) -> Vec<PositivePair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    (0..count)
        .map(|_| {
            let a = 10f64.powf(rng.gen_range(-6.0..6.0));
            let ratio = 10f64.powf(rng.gen_range(1e-9..8.0));
            PositivePair::new(a, a * ratio).expect("ordered pair")
        })
        .collect()
}
