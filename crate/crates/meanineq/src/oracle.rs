//! Extended-precision evaluation backend.
//!
//! Everything here re-derives values straight from the defining formulas in
//! 256-bit arithmetic (~77 significant decimal digits, comfortably past the
//! 50-digit floor the adjudication policy requires). It deliberately shares no
//! code with the f64 path: no series windows, no factored forms. Brute
//! precision absorbs the cancellation the f64 path has to engineer around,
//! which is what makes this a usable second route for cross-checks and for
//! re-adjudicating margins too close to call in binary64.

use crate::means::{ChainMean, MeanKind};
use astro_float::{BigFloat, Consts, RoundingMode, Sign};

/// Working precision in bits. 256 bits is about 77 decimal digits.
pub const ORACLE_PRECISION_BITS: usize = 256;

/// Margins whose extended-precision value is above this are treated as
/// nonnegative during adjudication; true violations of interest are far
/// larger, and the backend's own noise is ~1e-70.
pub const ORACLE_MARGIN_TOLERANCE: f64 = 1e-30;

pub struct Oracle {
    p: usize,
    rm: RoundingMode,
    cc: Consts,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new()
    }
}

impl Oracle {
    pub fn new() -> Self {
        Oracle {
            p: ORACLE_PRECISION_BITS,
            rm: RoundingMode::ToEven,
            cc: Consts::new().expect("constants cache"),
        }
    }

    pub fn num(&self, v: f64) -> BigFloat {
        BigFloat::from_f64(v, self.p)
    }

    pub fn int(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.p)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, self.rm)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, self.rm)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, self.rm)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, self.rm)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.p, self.rm)
    }

    pub fn abs(&self, a: &BigFloat) -> BigFloat {
        let mut out = a.clone();
        out.set_sign(Sign::Pos);
        out
    }

    pub fn ln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.p, self.rm, &mut self.cc)
    }

    pub fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.p, self.rm, &mut self.cc)
    }

    pub fn powi(&self, base: &BigFloat, n: usize) -> BigFloat {
        base.powi(n, self.p, self.rm)
    }

    /// `base^t` decomposed by exponent shape.
    ///
    /// The backend's correctly-rounded general power cannot terminate when
    /// the true result is exactly representable (the round-or-not test never
    /// resolves), which happens routinely for integer exponents on f64
    /// inputs. Integer and half-integer exponents therefore go through
    /// `powi`/`sqrt`, which are exactness-aware; everything else goes through
    /// `exp(t ln base)`, whose transcendental results never hit that trap.
    pub fn pow_f64(&mut self, base: &BigFloat, t: f64) -> BigFloat {
        if t == 0.0 {
            return self.int(1);
        }
        let magnitude = t.abs();
        let value = if magnitude.fract() == 0.0 && magnitude <= 1e9 {
            self.powi(base, magnitude as usize)
        } else if (2.0 * magnitude).fract() == 0.0 && magnitude <= 1e9 {
            let whole = self.powi(base, magnitude.floor() as usize);
            let root = self.sqrt(base);
            self.mul(&whole, &root)
        } else {
            let tb = self.num(magnitude);
            self.pow_transcendental(base, &tb)
        };
        if t < 0.0 {
            let one = self.int(1);
            self.div(&one, &value)
        } else {
            value
        }
    }

    /// `base^t` via `exp(t ln base)` for a full-precision positive exponent.
    fn pow_transcendental(&mut self, base: &BigFloat, t: &BigFloat) -> BigFloat {
        let lb = self.ln(base);
        let product = self.mul(t, &lb);
        self.exp(&product)
    }

    /// Rounds to the nearest f64 (two top mantissa words).
    pub fn to_f64(v: &BigFloat) -> f64 {
        if v.is_zero() {
            return 0.0;
        }
        if v.is_nan() {
            return f64::NAN;
        }
        if v.is_inf_pos() {
            return f64::INFINITY;
        }
        if v.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        let (words, _n, sign, exp, _inexact) = v.as_raw_parts().expect("finite value");
        let hi = words[words.len() - 1] as f64;
        let lo = if words.len() > 1 {
            words[words.len() - 2] as f64
        } else {
            0.0
        };
        let mantissa = hi / 2f64.powi(64) + lo / 2f64.powi(128);
        let magnitude = if exp > 1024 {
            f64::INFINITY
        } else if exp < -1080 {
            0.0
        } else {
            mantissa * 2f64.powi(exp)
        };
        if sign == Sign::Neg {
            -magnitude
        } else {
            magnitude
        }
    }

    /// Decimal string with `digits` significant digits.
    pub fn to_decimal_string(&mut self, v: &BigFloat, digits: usize) -> String {
        let full = v
            .format(astro_float::Radix::Dec, self.rm, &mut self.cc)
            .unwrap_or_else(|_| format!("{v}"));
        trim_significant(&full, digits)
    }

    /// A chain mean evaluated from its definition at full precision.
    pub fn chain_mean(&mut self, kind: ChainMean, a: f64, b: f64) -> BigFloat {
        let (ab, bb) = (self.num(a), self.num(b));
        self.chain_mean_big(kind, &ab, &bb)
    }

    pub fn chain_mean_big(&mut self, kind: ChainMean, a: &BigFloat, b: &BigFloat) -> BigFloat {
        let two = self.int(2);
        match kind {
            ChainMean::H => {
                let sum = self.add(a, b);
                let prod = self.mul(a, b);
                let num = self.mul(&two, &prod);
                self.div(&num, &sum)
            }
            ChainMean::G => {
                let prod = self.mul(a, b);
                self.sqrt(&prod)
            }
            ChainMean::L => {
                if a.cmp(b) == Some(0) {
                    return a.clone();
                }
                let num = self.sub(b, a);
                let (la, lb) = (self.ln(a), self.ln(b));
                let den = self.sub(&lb, &la);
                self.div(&num, &den)
            }
            ChainMean::N1 => {
                let s = self.add(&self.sqrt(a), &self.sqrt(b));
                let half = self.div(&s, &two);
                self.mul(&half, &half)
            }
            ChainMean::N3 => {
                let prod = self.mul(a, b);
                let g = self.sqrt(&prod);
                let sum = self.add(&self.add(a, b), &g);
                let three = self.int(3);
                self.div(&sum, &three)
            }
            ChainMean::N2 => {
                let s = self.add(&self.sqrt(a), &self.sqrt(b));
                let left = self.div(&s, &two);
                let m = self.div(&self.add(a, b), &two);
                let right = self.sqrt(&m);
                self.mul(&left, &right)
            }
            ChainMean::A => {
                let sum = self.add(a, b);
                self.div(&sum, &two)
            }
            ChainMean::S => {
                let sq = self.add(&self.mul(a, a), &self.mul(b, b));
                let m = self.div(&sq, &two);
                self.sqrt(&m)
            }
        }
    }

    /// Any mean kind; `Power` and `DragomirPearce` go through `exp/ln`.
    pub fn mean_value(&mut self, kind: MeanKind, a: f64, b: f64) -> BigFloat {
        match kind {
            MeanKind::Chain(m) => self.chain_mean(m, a, b),
            MeanKind::Power(t) => self.power_mean(t, a, b),
            MeanKind::DragomirPearce(r) => self.dp_mid(r, a, b),
        }
    }

    pub fn power_mean(&mut self, t: f64, a: f64, b: f64) -> BigFloat {
        if t == f64::INFINITY {
            return self.num(a.max(b));
        }
        if t == f64::NEG_INFINITY {
            return self.num(a.min(b));
        }
        if t == 0.0 {
            return self.chain_mean(ChainMean::G, a, b);
        }
        let (ab, bb) = (self.num(a), self.num(b));
        let two = self.int(2);
        let at = self.pow_f64(&ab, t);
        let bt = self.pow_f64(&bb, t);
        let m = self.div(&self.add(&at, &bt), &two);
        // m^(1/t): keep 1/t at full precision when it is not exact in f64.
        let inv = 1.0 / t;
        if inv.fract() == 0.0 || (2.0 * inv).fract() == 0.0 {
            self.pow_f64(&m, inv)
        } else {
            let lm = self.ln(&m);
            let tb = self.num(t);
            let scaled = self.div(&lm, &tb);
            self.exp(&scaled)
        }
    }

    pub fn dp_mid(&mut self, r: f64, a: f64, b: f64) -> BigFloat {
        let (ab, bb) = (self.num(a), self.num(b));
        if a == b {
            return self.pow_f64(&ab, r);
        }
        let s = r + 1.0;
        let bs = self.pow_f64(&bb, s);
        let as_ = self.pow_f64(&ab, s);
        let num = self.sub(&bs, &as_);
        let diff = self.sub(&bb, &ab);
        let sb = self.num(s);
        let den = self.mul(&sb, &diff);
        self.div(&num, &den)
    }

    /// Generating-function value `f(x) = m_upper(x) - m_lower(x)` at a
    /// full-precision abscissa (used by the finite-difference stencil).
    pub fn gen_value_big(&mut self, upper: ChainMean, lower: ChainMean, x: &BigFloat) -> BigFloat {
        let one = self.int(1);
        let up = self.chain_mean_big(upper, &one, x);
        let lo = self.chain_mean_big(lower, &one, x);
        self.sub(&up, &lo)
    }

    /// First derivative of the normalized log mean,
    /// `(x ln x - x + 1) / (x ln^2 x)`, at full precision.
    pub fn log_mean_slope(&mut self, x: f64) -> BigFloat {
        if x == 1.0 {
            let one = self.int(1);
            let two = self.int(2);
            return self.div(&one, &two);
        }
        let xb = self.num(x);
        let one = self.int(1);
        let lx = self.ln(&xb);
        let num = {
            let xl = self.mul(&xb, &lx);
            let t = self.sub(&xl, &xb);
            self.add(&t, &one)
        };
        let den = {
            let l2 = self.mul(&lx, &lx);
            self.mul(&xb, &l2)
        };
        self.div(&num, &den)
    }

    /// `k(x) = ((x+1) ln x - 2(x-1)) / (x^2 ln^3 x)` at full precision.
    pub fn k_fn(&mut self, x: f64) -> BigFloat {
        let xb = self.num(x);
        let one = self.int(1);
        let two = self.int(2);
        if x == 1.0 {
            let six = self.int(6);
            return self.div(&one, &six);
        }
        let lx = self.ln(&xb);
        let num = {
            let left = self.mul(&self.add(&xb, &one), &lx);
            let right = self.mul(&two, &self.sub(&xb, &one));
            self.sub(&left, &right)
        };
        let den = {
            let x2 = self.mul(&xb, &xb);
            let l3 = self.powi(&lx, 3);
            self.mul(&x2, &l3)
        };
        self.div(&num, &den)
    }

    /// Second derivative of `x -> mean(1, x)` from the closed forms, at full
    /// precision (diagnostic route for the series validation tests).
    pub fn mean_second_derivative(&mut self, kind: ChainMean, x: f64) -> BigFloat {
        let xb = self.num(x);
        let one = self.int(1);
        let two = self.int(2);
        let x32 = {
            let r = self.sqrt(&xb);
            self.mul(&xb, &r)
        };
        match kind {
            ChainMean::A => self.int(0),
            ChainMean::H => {
                let c = self.add(&one, &xb);
                let c3 = self.powi(&c, 3);
                let four = self.int(4);
                self.div(&four, &c3).neg()
            }
            ChainMean::G => {
                let den = self.mul(&self.int(4), &x32);
                self.div(&one, &den).neg()
            }
            ChainMean::N1 => {
                let den = self.mul(&self.int(8), &x32);
                self.div(&one, &den).neg()
            }
            ChainMean::N3 => {
                let den = self.mul(&self.int(12), &x32);
                self.div(&one, &den).neg()
            }
            ChainMean::N2 => {
                let num = self.add(&x32, &one);
                let base = self.add(&self.mul(&two, &xb), &two);
                let b32 = {
                    let r = self.sqrt(&base);
                    self.mul(&base, &r)
                };
                let den = self.mul(&self.mul(&self.int(4), &x32), &b32);
                self.div(&num, &den).neg()
            }
            ChainMean::S => {
                let base = self.add(&self.mul(&two, &self.mul(&xb, &xb)), &two);
                let b32 = {
                    let r = self.sqrt(&base);
                    self.mul(&base, &r)
                };
                self.div(&two, &b32)
            }
            ChainMean::L => self.k_fn(x).neg(),
        }
    }
}

fn trim_significant(s: &str, digits: usize) -> String {
    // Strings look like "-1.2345...e+12"; keep `digits` mantissa digits.
    let (mantissa, exp) = match s.split_once('e') {
        Some((m, e)) => (m, Some(e)),
        None => (s, None),
    };
    let mut out = String::new();
    let mut count = 0;
    for ch in mantissa.chars() {
        if ch.is_ascii_digit() {
            if count >= digits {
                break;
            }
            count += 1;
        }
        out.push(ch);
    }
    if let Some(e) = exp {
        out.push('e');
        out.push_str(e);
    }
    out
}
