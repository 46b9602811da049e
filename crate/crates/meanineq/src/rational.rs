//! Exact rational arithmetic for claim literals and the curvature table.
//!
//! The quantities handled here are small (`5/2`, `-19/720`, ...), so a pair of
//! `i64` with an `i128` intermediate for products is ample. Operations panic on
//! zero denominators and on overflow, neither of which is reachable from the
//! bundled data.

use std::fmt;
use std::str::FromStr;

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs().max(1)
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num/den` in lowest terms. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den);
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let (num, den) = (
            i64::try_from(num).expect("rational overflow"),
            i64::try_from(den).expect("rational overflow"),
        );
        Rational::new(num, den)
    }

    pub fn add(&self, other: &Rational) -> Rational {
        Self::from_i128(
            self.num as i128 * other.den as i128 + other.num as i128 * self.den as i128,
            self.den as i128 * other.den as i128,
        )
    }

    pub fn sub(&self, other: &Rational) -> Rational {
        Self::from_i128(
            self.num as i128 * other.den as i128 - other.num as i128 * self.den as i128,
            self.den as i128 * other.den as i128,
        )
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        Self::from_i128(
            self.num as i128 * other.num as i128,
            self.den as i128 * other.den as i128,
        )
    }

    /// Panics if `other` is zero.
    pub fn div(&self, other: &Rational) -> Rational {
        assert!(!other.is_zero(), "rational division by zero");
        Self::from_i128(
            self.num as i128 * other.den as i128,
            self.den as i128 * other.num as i128,
        )
    }

    /// Division that reports failure instead of panicking on a zero divisor
    /// or an overflowing result.
    pub fn checked_div(&self, other: &Rational) -> Option<Rational> {
        if other.is_zero() {
            return None;
        }
        let num = self.num as i128 * other.den as i128;
        let den = self.den as i128 * other.num as i128;
        let (num, den) = (i64::try_from(num).ok()?, i64::try_from(den).ok()?);
        Some(Rational::new(num, den))
    }

    pub fn neg(&self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Parse error for rational literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal `{}`", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mk_err = || ParseRationalError(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let num: i64 = n.trim().parse().map_err(|_| mk_err())?;
                let den: i64 = d.trim().parse().map_err(|_| mk_err())?;
                if den == 0 {
                    return Err(mk_err());
                }
                Ok(Rational::new(num, den))
            }
            None => {
                let num: i64 = s.parse().map_err(|_| mk_err())?;
                Ok(Rational::from_int(num))
            }
        }
    }
}
