//! Floating products with a separately tracked binary exponent.
//!
//! Long products of differences (node gaps, root gaps) overflow or underflow
//! binary64 once the degree passes a few dozen. `Scaled` keeps the mantissa in
//! `[0.5, 1)` and the exponent as an `i64`.

use std::ops::{Div, Mul};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    mantissa: f64,
    exponent: i64,
}

impl Scaled {
    pub const ONE: Scaled = Scaled {
        mantissa: 0.5,
        exponent: 1,
    };

    pub fn new(x: f64) -> Self {
        let (m, e) = libm::frexp(x);
        Self {
            mantissa: m,
            exponent: e as i64,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }

    pub fn signum(&self) -> f64 {
        if self.mantissa == 0.0 {
            0.0
        } else {
            self.mantissa.signum()
        }
    }

    /// `log₂|x|`, `-∞` for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.mantissa.abs().log2() + self.exponent as f64
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let e = self.exponent.clamp(-2200, 2200) as i32;
        libm::ldexp(self.mantissa, e)
    }

    fn normalized(mantissa: f64, exponent: i64) -> Self {
        let (m, e) = libm::frexp(mantissa);
        if m == 0.0 {
            return Self {
                mantissa: 0.0,
                exponent: 0,
            };
        }
        Self {
            mantissa: m,
            exponent: exponent + e as i64,
        }
    }

    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    /// Exact-exponent sum: terms are aligned to the largest exponent first.
    pub fn sum<I: IntoIterator<Item = Scaled>>(terms: I) -> Self {
        let terms: Vec<Scaled> = terms.into_iter().filter(|t| !t.is_zero()).collect();
        let Some(emax) = terms.iter().map(|t| t.exponent).max() else {
            return Scaled::new(0.0);
        };
        let total: f64 = terms
            .iter()
            .map(|t| libm::ldexp(t.mantissa, (t.exponent - emax).max(-1100) as i32))
            .sum();
        Scaled::normalized(total, emax)
    }

    /// Product of all factors.
    pub fn product<I: IntoIterator<Item = f64>>(factors: I) -> Self {
        factors.into_iter().fold(Self::ONE, |acc, x| acc * x)
    }
}

impl Mul for Scaled {
    type Output = Scaled;

    fn mul(self, rhs: Scaled) -> Scaled {
        Scaled::normalized(self.mantissa * rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl Mul<f64> for Scaled {
    type Output = Scaled;

    fn mul(self, rhs: f64) -> Scaled {
        self * Scaled::new(rhs)
    }
}

impl Div for Scaled {
    type Output = Scaled;

    fn div(self, rhs: Scaled) -> Scaled {
        Scaled::normalized(self.mantissa / rhs.mantissa, self.exponent - rhs.exponent)
    }
}

impl Div<f64> for Scaled {
    type Output = Scaled;

    fn div(self, rhs: f64) -> Scaled {
        self / Scaled::new(rhs)
    }
}
