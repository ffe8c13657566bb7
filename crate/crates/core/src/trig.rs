//! Sines and cosines of rational multiples of π.
//!
//! Every trigonometric quantity in the toolkit has the form `sin(kπ/m)` with
//! integer `k`. The integer `k` is reduced modulo `2m` and folded into the
//! first quadrant before the float multiply, so `sin(kπ/m)` is exactly zero
//! when `m | k` and large products `k` lose no accuracy.

use std::f64::consts::PI;

/// `sin(k·π/m)` for `m > 0`.
pub fn sin_pi_ratio(k: i64, m: i64) -> f64 {
    debug_assert!(m > 0);
    let period = 2 * m;
    let mut r = k.rem_euclid(period);
    let mut sign = 1.0;
    if r >= m {
        r -= m;
        sign = -1.0;
    }
    // sin(π - x) = sin(x)
    if 2 * r > m {
        r = m - r;
    }
    if r == 0 {
        return 0.0;
    }
    if 2 * r == m {
        return sign;
    }
    sign * (PI * r as f64 / m as f64).sin()
}

/// `cos(k·π/m)` for `m > 0`.
pub fn cos_pi_ratio(k: i64, m: i64) -> f64 {
    // cos(kπ/m) = sin((m - 2k)π/(2m))
    sin_pi_ratio(m - 2 * k, 2 * m)
}
