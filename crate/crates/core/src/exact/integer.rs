use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::Value;

use super::ExactError;

/// A positive integer stored as its prime factorization.
///
/// Keys are primes, values are strictly positive exponents; the empty map is 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredInteger {
    exps: BTreeMap<u64, BigUint>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        Self::default()
    }

    /// Trial-division factorization.
    pub fn factorize(n: u64) -> Result<Self, ExactError> {
        if n == 0 {
            return Err(ExactError::Zero);
        }
        let mut exps = BTreeMap::new();
        let mut rest = n;
        let mut d = 2u64;
        while d.saturating_mul(d) <= rest {
            let mut e = 0u32;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            if e > 0 {
                exps.insert(d, BigUint::from(e));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            *exps.entry(rest).or_insert_with(BigUint::zero) += 1u32;
        }
        Ok(Self { exps })
    }

    /// `p^e`; the caller guarantees `p` is prime.
    pub fn prime_power(p: u64, e: impl Into<BigUint>) -> Self {
        debug_assert!(super::is_prime(p));
        let e = e.into();
        let mut exps = BTreeMap::new();
        if !e.is_zero() {
            exps.insert(p, e);
        }
        Self { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, p: u64) -> BigUint {
        self.exps.get(&p).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigUint)> {
        self.exps.iter().map(|(&p, e)| (p, e))
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.exps.keys().copied()
    }

    /// Exponentwise sum.
    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (&p, e) in &other.exps {
            *exps.entry(p).or_insert_with(BigUint::zero) += e;
        }
        Self { exps }
    }

    /// Exponentwise scaling; `k = 0` gives 1.
    pub fn pow(&self, k: &BigUint) -> Self {
        if k.is_zero() {
            return Self::one();
        }
        let exps = self.exps.iter().map(|(&p, e)| (p, e * k)).collect();
        Self { exps }
    }

    /// Largest divisor that is a power of `p`.
    pub fn p_part(&self, p: u64) -> Self {
        match self.exps.get(&p) {
            Some(e) => Self::prime_power(p, e.clone()),
            None => Self::one(),
        }
    }

    /// Divisor with the `p`-power removed.
    pub fn p_prime_part(&self, p: u64) -> Self {
        let mut exps = self.exps.clone();
        exps.remove(&p);
        Self { exps }
    }

    /// Multiplies out the factorization.  Only for values known to be small or
    /// for tests; core computations never expand products of element orders.
    pub fn to_biguint(&self) -> BigUint {
        self.exps.iter().fold(BigUint::one(), |acc, (&p, e)| {
            acc * BigUint::from(p).pow(e.to_u32().expect("exponent too large to expand"))
        })
    }

    pub fn to_u64(&self) -> Option<u64> {
        let mut acc = 1u64;
        for (&p, e) in &self.exps {
            let e = e.to_u32()?;
            acc = acc.checked_mul(p.checked_pow(e)?)?;
        }
        Some(acc)
    }

    /// `[{"p": .., "e": ..}, ...]`
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.exps
                .iter()
                .map(|(&p, e)| {
                    let e = match e.to_u64() {
                        Some(v) => Value::from(v),
                        None => Value::from(e.to_string()),
                    };
                    serde_json::json!({ "p": p, "e": e })
                })
                .collect(),
        )
    }
}

impl Mul for &FactoredInteger {
    type Output = FactoredInteger;
    fn mul(self, rhs: Self) -> FactoredInteger {
        FactoredInteger::mul(self, rhs)
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(p, e)| {
                if e.is_one() {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fi(pairs: &[(u64, u32)]) -> FactoredInteger {
        pairs.iter().fold(FactoredInteger::one(), |acc, &(p, e)| {
            acc.mul(&FactoredInteger::prime_power(p, e))
        })
    }

    #[test]
    fn factorize_examples() {
        assert!(FactoredInteger::factorize(1).unwrap().is_one());
        assert_eq!(
            FactoredInteger::factorize(12).unwrap(),
            fi(&[(2, 2), (3, 1)])
        );
        assert_eq!(
            FactoredInteger::factorize(315).unwrap(),
            fi(&[(3, 2), (5, 1), (7, 1)])
        );
        assert_eq!(FactoredInteger::factorize(0), Err(ExactError::Zero));
        assert_eq!(
            FactoredInteger::factorize(4_294_967_311).unwrap().to_u64(),
            Some(4_294_967_311)
        );
    }

    #[test]
    fn mul_and_pow() {
        assert_eq!(fi(&[(2, 3)]).mul(&fi(&[(3, 2)])), fi(&[(2, 3), (3, 2)]));
        // rho(Q8) = 2 * 4^6 = 2^13
        assert_eq!(fi(&[(2, 1)]).pow(&BigUint::from(13u32)), fi(&[(2, 13)]));
        assert!(fi(&[(5, 7)]).pow(&BigUint::zero()).is_one());
    }

    #[test]
    fn factorization_is_multiplicative() {
        for a in (1..=10_000u64).step_by(97) {
            for b in (1..=10_000u64).step_by(89) {
                let lhs = FactoredInteger::factorize(a)
                    .unwrap()
                    .mul(&FactoredInteger::factorize(b).unwrap());
                assert_eq!(lhs, FactoredInteger::factorize(a * b).unwrap(), "{a} * {b}");
            }
        }
    }

    #[test]
    fn parts_and_text() {
        let n = FactoredInteger::factorize(360).unwrap();
        assert_eq!(n.p_part(2).to_u64(), Some(8));
        assert_eq!(n.p_prime_part(2).to_u64(), Some(45));
        assert_eq!(n.to_string(), "2^3 * 3^2 * 5");
        assert_eq!(
            n.to_json().to_string(),
            r#"[{"e":3,"p":2},{"e":2,"p":3},{"e":1,"p":5}]"#
        );
    }
}
