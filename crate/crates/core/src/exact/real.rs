use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::{bigint_json, BigRational, Decimal, ExactError, FactoredInteger};

/// A positive real `prod p^e_p` with rational exponents.
///
/// Keys are primes and no stored exponent is zero, so equal values have equal
/// maps.  The empty map is 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredReal {
    exps: BTreeMap<u64, BigRational>,
}

impl FactoredReal {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn prime_power(p: u64, e: BigRational) -> Self {
        debug_assert!(super::is_prime(p));
        let mut exps = BTreeMap::new();
        if !e.is_zero() {
            exps.insert(p, e);
        }
        Self { exps }
    }

    pub fn from_integer(n: &FactoredInteger) -> Self {
        let exps = n
            .iter()
            .map(|(p, e)| (p, BigRational::from_integer(BigInt::from(e.clone()))))
            .collect();
        Self { exps }
    }

    /// `n^(1/root)`, dividing each exponent exactly.
    pub fn root_of(n: &FactoredInteger, root: &BigUint) -> Result<Self, ExactError> {
        if root.is_zero() {
            return Err(ExactError::InvalidArgument(
                "root must be at least 1".into(),
            ));
        }
        let root = BigInt::from(root.clone());
        let exps = n
            .iter()
            .map(|(p, e)| (p, BigRational::new(BigInt::from(e.clone()), root.clone())))
            .collect();
        Ok(Self { exps })
    }

    /// `num / den` for positive machine integers.
    pub fn from_ratio(num: u64, den: u64) -> Result<Self, ExactError> {
        let n = Self::from_integer(&FactoredInteger::factorize(num)?);
        let d = Self::from_integer(&FactoredInteger::factorize(den)?);
        Ok(n.div(&d))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, p: u64) -> BigRational {
        self.exps.get(&p).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.exps.iter().map(|(&p, e)| (p, e))
    }

    fn combine(&self, other: &Self, sign: i32) -> Self {
        let mut exps = self.exps.clone();
        for (&p, e) in &other.exps {
            let slot = exps.entry(p).or_insert_with(BigRational::zero);
            if sign > 0 {
                *slot += e;
            } else {
                *slot -= e;
            }
            if slot.is_zero() {
                exps.remove(&p);
            }
        }
        Self { exps }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    pub fn recip(&self) -> Self {
        Self::one().div(self)
    }

    pub fn pow(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::one();
        }
        let exps = self.exps.iter().map(|(&p, e)| (p, e * q)).collect();
        Self { exps }
    }

    /// Exact order under the default bit budget.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering, ExactError> {
        super::cmp_reals(self, other)
    }

    /// Least common denominator of the exponents.
    pub fn common_denominator(&self) -> BigInt {
        use num_integer::Integer;
        self.exps
            .values()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()))
    }

    /// `true` when every exponent is an integer, i.e. the value is rational.
    pub fn is_rational(&self) -> bool {
        self.exps.values().all(|e| e.is_integer())
    }

    /// Truncated decimal expansion with `digits` places after the point.
    pub fn to_decimal(&self, digits: u32) -> Result<Decimal, ExactError> {
        super::decimal::truncated(self, digits)
    }

    pub fn to_decimal_with(
        &self,
        digits: u32,
        rounding: super::Rounding,
    ) -> Result<Decimal, ExactError> {
        super::decimal::rounded(self, digits, rounding)
    }

    /// `[{"prime": .., "num": .., "den": ..}, ...]`
    pub fn to_json(&self) -> Value {
        self.json_with_key("prime")
    }

    pub(crate) fn json_with_key(&self, key: &str) -> Value {
        Value::Array(
            self.exps
                .iter()
                .map(|(&p, e)| {
                    let mut m = serde_json::Map::new();
                    m.insert(key.to_string(), Value::from(p));
                    m.insert("num".into(), bigint_json(e.numer()));
                    m.insert("den".into(), bigint_json(e.denom()));
                    Value::Object(m)
                })
                .collect(),
        )
    }
}

impl Mul for &FactoredReal {
    type Output = FactoredReal;
    fn mul(self, rhs: Self) -> FactoredReal {
        FactoredReal::mul(self, rhs)
    }
}

impl Div for &FactoredReal {
    type Output = FactoredReal;
    fn div(self, rhs: Self) -> FactoredReal {
        FactoredReal::div(self, rhs)
    }
}

/// Canonical text: `2^(-1/2) * 3^(-2/3)`, factors sorted by prime, `1` when empty.
impl fmt::Display for FactoredReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (p, e) in &self.exps {
            if !first {
                f.write_str(" * ")?;
            }
            first = false;
            if e.is_integer() && e.is_positive() {
                if e.is_one() {
                    write!(f, "{p}")?;
                } else {
                    write!(f, "{p}^{}", e.numer())?;
                }
            } else {
                write!(f, "{p}^({})", super::rational_text(e))?;
            }
        }
        Ok(())
    }
}
