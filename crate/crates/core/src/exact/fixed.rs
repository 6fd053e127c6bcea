//! Binary fixed-point logarithms and exponentials on big integers.
//!
//! A value `v` at precision `prec` is stored as the integer `floor(v * 2^prec)`.
//! Internal work runs with `GUARD` extra bits so that the result is within a
//! few units in the last place of the true value.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const GUARD: u32 = 64;

/// Bound on the error of [`ln_biguint`] and [`ln_prime`], in units of `2^-prec`.
pub(crate) const LN_ERROR_ULPS: u32 = 4;

fn ln2_raw(w: u32) -> BigInt {
    // ln 2 = 2 atanh(1/3)
    let mut sum = BigInt::zero();
    let mut pow = (BigInt::one() << w) / 3u32;
    let mut k = 1u32;
    while !pow.is_zero() {
        sum += &pow / k;
        pow /= 9u32;
        k += 2;
    }
    sum * 2u32
}

fn atanh_raw(t: &BigInt, w: u32) -> BigInt {
    let t2: BigInt = (t * t) >> w;
    let mut pow = t.clone();
    let mut sum = BigInt::zero();
    let mut k = 1u32;
    while !pow.is_zero() {
        sum += &pow / k;
        pow = (pow * &t2) >> w;
        k += 2;
    }
    sum
}

/// `ln n` for `n >= 1`, accurate to [`LN_ERROR_ULPS`] units of `2^-prec`.
pub(crate) fn ln_biguint(n: &BigUint, prec: u32) -> BigInt {
    assert!(!n.is_zero(), "logarithm of zero");
    let w = prec + GUARD;
    let k = n.bits() - 1;
    let two_k = BigUint::one() << k;
    // n = 2^k * m with m in [1, 2); ln m = 2 atanh((m - 1) / (m + 1))
    let t = BigInt::from(((n - &two_k) << w) / (n + &two_k));
    let raw = ln2_raw(w) * BigInt::from(k) + atanh_raw(&t, w) * 2u32;
    raw >> GUARD
}

type LnCache = RwLock<HashMap<u64, (u32, BigInt)>>;

fn ln_cache() -> &'static LnCache {
    static CACHE: OnceLock<LnCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Cached `ln p`; one extra ulp of error is absorbed by [`LN_ERROR_ULPS`] when a
/// higher-precision cached value is truncated.
pub(crate) fn ln_prime(p: u64, prec: u32) -> BigInt {
    if let Some((cached_prec, value)) = ln_cache().read().unwrap().get(&p) {
        if *cached_prec >= prec {
            return value >> (cached_prec - prec);
        }
    }
    // one bit beyond the request so the truncation stays inside the bound
    let value = ln_biguint(&BigUint::from(p), prec + 1);
    let out = &value >> 1u32;
    ln_cache().write().unwrap().insert(p, (prec + 1, value));
    out
}

/// `exp(x)` where `x` is a fixed-point number at `prec`.
///
/// Returns the fixed-point result at `prec` together with the binary exponent
/// `k` of the range reduction (the result is about `2^k`).  The absolute error
/// of the result is below `2^(max(k, 0) + 1) + 1` ulps, not counting the error
/// already present in `x`.
pub(crate) fn exp_fixed(x: &BigInt, prec: u32) -> (BigUint, i64) {
    let w = prec + GUARD;
    let xw: BigInt = x << GUARD;
    let ln2 = ln2_raw(w);
    let (q, r0) = xw.div_mod_floor(&ln2);
    let (k, r) = if &r0 * 2u32 > ln2 {
        (q + 1u32, r0 - &ln2)
    } else {
        (q, r0)
    };
    let k = k.to_i64().expect("exponent range");

    const HALVINGS: u32 = 12;
    let rr: BigInt = r >> HALVINGS;
    let one = BigInt::one() << w;
    let mut sum = one.clone();
    let mut term = one;
    let mut i = 1u32;
    loop {
        term = ((term * &rr) >> w) / i;
        if term.is_zero() {
            break;
        }
        sum += &term;
        i += 1;
    }
    for _ in 0..HALVINGS {
        sum = (&sum * &sum) >> w;
    }
    let scaled = if k >= 0 {
        sum << (k as u64)
    } else {
        sum >> ((-k) as u64)
    };
    let out = (scaled >> GUARD).abs().to_biguint().unwrap();
    (out, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_f64(v: &BigInt, prec: u32) -> f64 {
        v.to_f64().unwrap() / 2f64.powi(prec as i32)
    }

    #[test]
    fn ln_small_values() {
        let prec = 200;
        for n in [1u64, 2, 3, 10, 97, 1 << 40] {
            let got = to_f64(&ln_biguint(&BigUint::from(n), prec), prec);
            assert!((got - (n as f64).ln()).abs() < 1e-12, "ln {n}");
        }
    }

    #[test]
    fn cached_prime_log_matches_direct() {
        let direct = ln_biguint(&BigUint::from(7u32), 300);
        let cached = ln_prime(7, 300);
        assert!((direct - cached).abs() <= BigInt::from(LN_ERROR_ULPS));
        // lower precision request served from cache
        let low = ln_prime(7, 100);
        let direct_low = ln_biguint(&BigUint::from(7u32), 100);
        assert!((direct_low - low).abs() <= BigInt::from(LN_ERROR_ULPS));
    }

    #[test]
    fn exp_inverts_ln() {
        let prec = 180;
        for x in [-5.5f64, -0.3, 0.0, 0.7, 3.2] {
            let fixed = BigInt::from((x * 2f64.powi(40)) as i64) << (prec - 40);
            let (v, _) = exp_fixed(&fixed, prec);
            let got = v.to_f64().unwrap() / 2f64.powi(prec as i32);
            assert!((got - x.exp()).abs() < 1e-12 * x.exp().max(1.0), "exp {x}");
        }
    }
}
