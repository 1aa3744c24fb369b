//! Integer n-th roots and perfect-power detection.

use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, Pow, Signed, ToPrimitive, Zero};

use crate::numeric::Int;

/// Largest `r` with `r^n <= x`, for `x >= 0` and `n >= 1`.
///
/// A floating-point estimate narrows the bracket when `x` is small enough to
/// convert; the answer itself is always settled by exact comparison.
pub fn nth_root_floor(x: &Int, n: u32) -> Int {
    assert!(!x.is_negative(), "nth_root_floor of negative value {x}");
    assert!(n >= 1, "nth_root_floor with n = 0");
    if n == 1 || x.is_zero() || x.is_one() {
        return x.clone();
    }
    let bits = x.bits();
    if bits <= 128 {
        return Int::from(nth_root_floor_u128(x.to_u128().unwrap(), n));
    }
    // r^n <= x < 2^bits  =>  r < 2^ceil(bits/n);  x >= 2^(bits-1)  =>  r >= 2^((bits-1)/n).
    let mut lo = Int::one() << ((bits - 1) / n as u64);
    let mut hi = Int::one() << bits.div_ceil(n as u64);
    if bits < 1000 {
        let estimate = x.to_f64().unwrap().powf(1.0 / n as f64);
        if let Some(seed) = BigInt::from_f64(estimate.floor()) {
            // Relative error of the estimate is far below 2^-40.
            let slack: Int = (&seed >> 40u32) + 2u32;
            let low = (&seed - &slack).max(Int::zero());
            let high = &seed + &slack;
            if Pow::pow(&low, n) <= *x && Pow::pow(&high, n) > *x {
                lo = low;
                hi = high;
            }
        }
    }
    // Invariant: lo^n <= x < hi^n.
    while &hi - &lo > Int::one() {
        let mid: Int = (&lo + &hi) >> 1u32;
        if Pow::pow(&mid, n) <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Returns `r` with `r^n = x` when `x` is a perfect n-th power.
pub fn perfect_power(x: &Int, n: u32) -> Option<Int> {
    let r = nth_root_floor(x, n);
    (Pow::pow(&r, n) == *x).then_some(r)
}

/// `x^n` if it fits in 128 bits.
#[inline]
pub fn checked_pow_u128(x: u128, n: u32) -> Option<u128> {
    x.checked_pow(n)
}

/// Machine-word version of [`nth_root_floor`].
pub fn nth_root_floor_u128(x: u128, n: u32) -> u128 {
    assert!(n >= 1);
    if n == 1 || x < 2 {
        return x;
    }
    let mut r = (x as f64).powf(1.0 / n as f64) as u128;
    // The estimate is within a couple of units; walk to the exact answer.
    while r > 0 && checked_pow_u128(r, n).is_none_or(|v| v > x) {
        r -= 1;
    }
    while checked_pow_u128(r + 1, n).is_some_and(|v| v <= x) {
        r += 1;
    }
    r
}

/// Machine-word version of [`perfect_power`].
#[inline]
pub fn perfect_power_u128(x: u128, n: u32) -> Option<u128> {
    let r = nth_root_floor_u128(x, n);
    (checked_pow_u128(r, n) == Some(x)).then_some(r)
}
