//! Exact arithmetic: integers kept as prime-exponent maps, big rationals, and
//! positive reals of the form `p1^e1 * p2^e2 * ...` with rational exponents.
//!
//! Nothing in this module orders two values with floating point.  Decimal
//! rendering uses fixed-point logarithms only to pick a candidate and then
//! confirms truncation boundaries with exact comparisons.

mod compare;
mod decimal;
mod fixed;
mod integer;
mod primes;
mod real;

pub use num_rational::BigRational;

pub use compare::{
    cmp_by_clearing, cmp_rational_real, cmp_rational_real_with_budget, cmp_reals,
    cmp_reals_with_budget, DEFAULT_BIT_BUDGET,
};
pub use decimal::{Decimal, Rounding};
pub use integer::FactoredInteger;
pub use primes::{is_prime, odd_primes_up_to, primes_up_to, smallest_prime_factor};
pub use real::FactoredReal;

use num_bigint::BigInt;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("zero has no prime factorization")]
    Zero,
    #[error("exact comparison needs about {needed} bits, over the budget of {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("{0}")]
    InvalidArgument(String),
}

/// JSON number when the value fits in 64 bits, decimal string otherwise.
pub(crate) fn bigint_json(v: &BigInt) -> Value {
    use num_traits::ToPrimitive;
    match v.to_i64() {
        Some(small) => Value::from(small),
        None => Value::from(v.to_string()),
    }
}

/// Short `num/den` form, or just `num` for integers.
pub fn rational_text(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_json(r: &BigRational) -> Value {
    serde_json::json!({ "num": bigint_json(r.numer()), "den": bigint_json(r.denom()) })
}
