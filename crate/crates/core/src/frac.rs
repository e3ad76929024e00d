//! Exact range reduction of integer multiples of doubles modulo 1.
//!
//! A finite double `x` is the dyadic rational `m·2^(−s)`, so `a·x mod 1` can be
//! computed without rounding as `((a mod 2^s)·m mod 2^s) / 2^s`. Only the final
//! conversion back to `f64` rounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// `x − ⌊x⌋` in `[0, 1)`.
pub fn frac(x: f64) -> f64 {
    let f = x - x.floor();
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

/// Odd mantissa and shift with `x = m · 2^(−s)`, for `x ∈ (0, 1)`.
fn dyadic(x: f64) -> (u64, u32) {
    let bits = x.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac_bits = bits & ((1u64 << 52) - 1);
    let (m, e) = if exp == 0 {
        (frac_bits, -1074)
    } else {
        (frac_bits | (1u64 << 52), exp - 1075)
    };
    let s = (-e) as u32;
    let tz = m.trailing_zeros().min(s);
    (m >> tz, s - tz)
}

fn scale_down(r: f64, s: u32) -> f64 {
    let v = r * 2f64.powi(-(s as i32));
    if v >= 1.0 {
        0.0
    } else {
        v
    }
}

/// `a·x mod 1` for a small integer multiplier.
pub fn frac_mul_i64(a: i64, x: f64) -> f64 {
    let f = frac(x);
    if f == 0.0 || a == 0 {
        return 0.0;
    }
    let (m, s) = dyadic(f);
    if s <= 64 {
        let modulus: i128 = 1i128 << s;
        let a_mod = (a as i128).rem_euclid(modulus) as u128;
        let prod = a_mod * m as u128;
        let r = prod & ((1u128 << s) - 1);
        return scale_down(r as f64, s);
    }
    frac_mul_big(&BigInt::from(a), m, s)
}

/// `a·x mod 1` for an arbitrary-precision multiplier.
pub fn frac_mul(a: &BigInt, x: f64) -> f64 {
    if let Some(small) = a.to_i64() {
        return frac_mul_i64(small, x);
    }
    let f = frac(x);
    if f == 0.0 || a.is_zero() {
        return 0.0;
    }
    let (m, s) = dyadic(f);
    frac_mul_big(a, m, s)
}

fn frac_mul_big(a: &BigInt, m: u64, s: u32) -> f64 {
    let modulus = BigInt::from(1) << s;
    let r = (a.mod_floor(&modulus) * BigInt::from(m)).mod_floor(&modulus);
    // Keep the top 64 bits so the conversion does not overflow for large s.
    let shift = s.saturating_sub(64);
    let top = (&r >> shift).to_f64().expect("bounded");
    scale_down(top, s - shift)
}
