//! Exact integer primitives.
//!
//! Every square-root expression in the bound formulas has the shape
//! `sqrt(d + 1/4)` for an integer `d`, which equals `sqrt(4d + 1) / 2`. The
//! helpers here evaluate the ceilings and floors of such expressions on the
//! odd integer radicand `4d + 1`, so no floating point is ever involved.

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative count.
pub type Count = BigUint;

/// `floor(sqrt(x))`.
pub fn isqrt(x: u128) -> u128 {
    x.isqrt()
}

/// Binomial coefficient `C(a, b)`, with `C(a, b) = 0` whenever `b > a`.
pub fn binom(a: u64, b: u64) -> Count {
    if b > a {
        return Count::default();
    }
    let b = b.min(a - b);
    if let Some(v) = binom_u128(a, b) {
        return Count::from(v);
    }
    let mut acc = Count::from(1u32);
    for j in 0..b {
        acc *= a - j;
        acc /= j + 1;
    }
    acc
}

/// `C(a, b)` when it fits in a `u128`, `None` on overflow. `b > a` gives `Some(0)`.
pub fn binom_u128(a: u64, b: u64) -> Option<u128> {
    if b > a {
        return Some(0);
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for j in 0..b as u128 {
        // acc = C(a, j) here, so acc * (a - j) is divisible by j + 1.
        acc = acc.checked_mul(a as u128 - j)? / (j + 1);
    }
    Some(acc)
}

/// `ceil(sqrt(d + 1/4) - 1/2)`.
pub fn ceil_sqrt_quarter_minus_half(d: u128) -> u128 {
    let radicand = 4 * d + 1;
    let root = isqrt(radicand);
    if root * root == radicand {
        // radicand is odd, so an exact root is odd too.
        (root - 1) / 2
    } else {
        root.div_ceil(2)
    }
}

/// `floor(sqrt(d + 1/4) + 1/2)`.
pub fn floor_sqrt_quarter_plus_half(d: u128) -> u128 {
    isqrt(4 * d + 1).div_ceil(2)
}

/// Whether the fractional part of `sqrt(d + 1/4)` is exactly one half.
pub fn sqrt_quarter_has_half_fraction(d: u128) -> bool {
    let radicand = 4 * d + 1;
    let root = isqrt(radicand);
    root * root == radicand
}

/// `s(s + 1) / 2` in `u128`.
pub(crate) fn triangle(s: u128) -> u128 {
    s * (s + 1) / 2
}

/// Writes `x = s(s-1)/2 + t` with `0 < t <= s`, returning `(s, t)`.
///
/// `s` is the smallest positive integer with `x <= s(s+1)/2`.
pub fn triangular_decompose(x: u64) -> Result<(u64, u64)> {
    if x == 0 {
        return Err(Error::ZeroDecomposition);
    }
    let x = x as u128;
    let mut s = ceil_sqrt_quarter_minus_half(2 * x).max(1);
    while triangle(s) < x {
        s += 1;
    }
    while s > 1 && triangle(s - 1) >= x {
        s -= 1;
    }
    let t = x - triangle(s - 1);
    debug_assert!(0 < t && t <= s);
    Ok((s as u64, t as u64))
}

/// Returns `s` if `x = s(s+1)/2` for some `s >= 1`.
pub fn is_exact_triangular(x: u64) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let d = 2 * x as u128;
    if !sqrt_quarter_has_half_fraction(d) {
        return None;
    }
    let s = ceil_sqrt_quarter_minus_half(d);
    debug_assert_eq!(triangle(s), x as u128);
    Some(s as u64)
}
