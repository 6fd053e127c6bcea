//! Exact ordering of factored reals.
//!
//! Comparisons first try a certified logarithm bound: `ln` of each prime is
//! known to within a few units of `2^-256`, so when the log of the quotient
//! is clearly away from zero the sign is settled with integer arithmetic
//! alone.  Otherwise exponent denominators are cleared and the two sides are
//! compared as big integers, subject to a bit budget.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::fixed::{ln_biguint, ln_prime, LN_ERROR_ULPS};
use super::{BigRational, ExactError, FactoredReal};

/// Largest big-integer operand an exact comparison may build, in bits.
pub const DEFAULT_BIT_BUDGET: u64 = 1 << 20;

const FILTER_PREC: u32 = 256;

/// Fixed-point `ln x` with an error bound, both in units of `2^-FILTER_PREC`.
fn log_bound(x: &FactoredReal) -> (BigInt, BigInt) {
    let mut sum = BigInt::zero();
    let mut err = BigInt::zero();
    for (p, e) in x.iter() {
        let ln_p = ln_prime(p, FILTER_PREC);
        sum += (e.numer() * ln_p) / e.denom();
        let (q, r) = (e.numer().abs() * LN_ERROR_ULPS).div_rem(e.denom());
        err += q + if r.is_zero() { 0 } else { 1 } + 1;
    }
    (sum, err)
}

fn decide(sum: &BigInt, err: &BigInt) -> Option<Ordering> {
    if sum > err {
        Some(Ordering::Greater)
    } else if -sum > *err {
        Some(Ordering::Less)
    } else {
        None
    }
}

pub fn cmp_reals(a: &FactoredReal, b: &FactoredReal) -> Result<Ordering, ExactError> {
    cmp_reals_with_budget(a, b, DEFAULT_BIT_BUDGET)
}

pub fn cmp_reals_with_budget(
    a: &FactoredReal,
    b: &FactoredReal,
    budget: u64,
) -> Result<Ordering, ExactError> {
    let quotient = a.div(b);
    if quotient.is_one() {
        return Ok(Ordering::Equal);
    }
    let (sum, err) = log_bound(&quotient);
    if let Some(ord) = decide(&sum, &err) {
        return Ok(ord);
    }
    cmp_by_clearing(&quotient, budget)
}

/// Integer exponents `e_p * D` for the common denominator `D`.
fn cleared(x: &FactoredReal) -> (BigInt, Vec<(u64, BigInt)>) {
    let d = x.common_denominator();
    let ns = x
        .iter()
        .map(|(p, e)| (p, e.numer() * (&d / e.denom())))
        .collect();
    (d, ns)
}

fn bit_cost(p: u64, n: &BigInt) -> u64 {
    let bits = 64 - p.leading_zeros() as u64;
    n.abs()
        .to_u64()
        .map_or(u64::MAX, |n| n.saturating_mul(bits))
}

fn build_power(factors: &[(u64, u64)]) -> BigUint {
    factors.iter().fold(BigUint::from(1u32), |acc, &(p, n)| {
        acc * BigUint::from(p).pow(n as u32)
    })
}

fn over_budget(needed: u64, budget: u64) -> Result<(), ExactError> {
    if needed > budget {
        Err(ExactError::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// Order of `x` relative to 1, by clearing exponent denominators to a common
/// `D` and comparing `prod_{n_p > 0} p^n_p` against `prod_{n_p < 0} p^-n_p`.
pub fn cmp_by_clearing(x: &FactoredReal, budget: u64) -> Result<Ordering, ExactError> {
    if x.is_one() {
        return Ok(Ordering::Equal);
    }
    let (_, ns) = cleared(x);
    let (mut pos_bits, mut neg_bits) = (0u64, 0u64);
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for (p, n) in &ns {
        let cost = bit_cost(*p, n);
        let side = if n.sign() == Sign::Minus {
            neg_bits = neg_bits.saturating_add(cost);
            &mut neg
        } else {
            pos_bits = pos_bits.saturating_add(cost);
            &mut pos
        };
        side.push((*p, n.abs().to_u64().unwrap_or(u64::MAX)));
    }
    over_budget(pos_bits.max(neg_bits), budget)?;
    Ok(build_power(&pos).cmp(&build_power(&neg)))
}

pub fn cmp_rational_real(r: &BigRational, x: &FactoredReal) -> Result<Ordering, ExactError> {
    cmp_rational_real_with_budget(r, x, DEFAULT_BIT_BUDGET)
}

/// Order of the rational `r` relative to the factored real `x`.
pub fn cmp_rational_real_with_budget(
    r: &BigRational,
    x: &FactoredReal,
    budget: u64,
) -> Result<Ordering, ExactError> {
    if !r.is_positive() {
        return Ok(Ordering::Less);
    }
    let num = r.numer().to_biguint().unwrap();
    let den = r.denom().to_biguint().unwrap();

    let (x_sum, x_err) = log_bound(x);
    let r_sum = ln_biguint(&num, FILTER_PREC) - ln_biguint(&den, FILTER_PREC);
    let sum = r_sum - x_sum;
    let err = x_err + 2 * LN_ERROR_ULPS;
    if let Some(ord) = decide(&sum, &err) {
        return Ok(ord);
    }

    // r^D against x^D
    let (d, ns) = cleared(x);
    let d = d.to_u64().unwrap_or(u64::MAX);
    let mut left_bits = d.saturating_mul(num.bits());
    let mut right_bits = d.saturating_mul(den.bits());
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (p, n) in &ns {
        let cost = bit_cost(*p, n);
        let magnitude = n.abs().to_u64().unwrap_or(u64::MAX);
        if n.sign() == Sign::Minus {
            left_bits = left_bits.saturating_add(cost);
            left.push((*p, magnitude));
        } else {
            right_bits = right_bits.saturating_add(cost);
            right.push((*p, magnitude));
        }
    }
    over_budget(left_bits.max(right_bits), budget)?;
    let d = d as u32;
    let lhs = num.pow(d) * build_power(&left);
    let rhs = den.pow(d) * build_power(&right);
    Ok(lhs.cmp(&rhs))
}
