use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use super::fixed::{exp_fixed, ln_prime, LN_ERROR_ULPS};
use super::{cmp_rational_real, BigRational, ExactError, FactoredReal};

/// How a decimal expansion is cut to a fixed number of places.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Rounding {
    /// Drop the remaining digits.
    #[default]
    Truncate,
    /// Nearest value, ties upward.
    Nearest,
}

/// Decimal truncation of a positive real: `text` shows `digits` places and the
/// represented value `v` satisfies `t <= v < t + 10^-digits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    pub text: String,
    pub digits: u32,
}

impl Decimal {
    /// Upper bound on `v - t`.
    pub fn error_bound(&self) -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(10u32).pow(self.digits))
    }

    /// The truncated value as an exact rational.
    ///
    /// For a [`Rounding::Nearest`] result this is the rounded value instead.
    pub fn value(&self) -> BigRational {
        let digits: String = self.text.chars().filter(|c| *c != '.').collect();
        let n: BigInt = digits.parse().expect("decimal digits");
        BigRational::new(n, BigInt::from(10u32).pow(self.digits))
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

pub(crate) fn render(m: &BigUint, digits: u32) -> String {
    let s = m.to_string();
    let width = digits as usize + 1;
    let s = if s.len() < width {
        format!("{}{}", "0".repeat(width - s.len()), s)
    } else {
        s
    };
    let (int, frac) = s.split_at(s.len() - digits as usize);
    format!("{int}.{frac}")
}

/// Fixed-point `ln x` at `prec` and its error in ulps.
fn log_fixed(x: &FactoredReal, prec: u32) -> (BigInt, BigUint) {
    let mut sum = BigInt::zero();
    let mut err = BigUint::zero();
    for (p, e) in x.iter() {
        sum += (e.numer() * ln_prime(p, prec)) / e.denom();
        let bound = (e.numer().magnitude() * LN_ERROR_ULPS).div_ceil(e.denom().magnitude());
        err += bound + 1u32;
    }
    (sum, err)
}

pub(super) fn truncated(x: &FactoredReal, digits: u32) -> Result<Decimal, ExactError> {
    if digits == 0 {
        return Err(ExactError::InvalidArgument(
            "at least one decimal digit is required".into(),
        ));
    }
    let scale = BigUint::from(10u32).pow(digits);
    let mut prec = digits * 4 + 96;
    for _ in 0..6 {
        let (log, log_err) = log_fixed(x, prec);
        let (value, k) = exp_fixed(&log, prec);
        if k > 0 && (k as u64) + 32 > prec as u64 - digits as u64 * 4 {
            prec += k as u32 + 32;
            continue;
        }
        // |value - x| in ulps: exp rounding plus propagated log error
        let growth = BigUint::from(1u32) << (k.max(0) as u64 + 1);
        let err_ulps = (log_err + 2u32) * &growth + 1u32;

        let scaled = value * &scale;
        let err = err_ulps * &scale;
        let (m, frac) = scaled.div_rem(&(BigUint::from(1u32) << prec));
        let one = BigUint::from(1u32) << prec;
        if frac > err && &one - &frac > err {
            return Ok(Decimal {
                text: render(&m, digits),
                digits,
            });
        }

        // near a boundary: settle floor(x * 10^digits) exactly
        let bound =
            |n: &BigUint| BigRational::new(BigInt::from(n.clone()), BigInt::from(scale.clone()));
        let resolved = (|| -> Result<BigUint, ExactError> {
            let next = &m + 1u32;
            if cmp_rational_real(&bound(&next), x)? != Ordering::Greater {
                return Ok(next);
            }
            if !m.is_zero() && cmp_rational_real(&bound(&m), x)? == Ordering::Greater {
                return Ok(m.clone() - 1u32);
            }
            Ok(m.clone())
        })();
        match resolved {
            Ok(m) => {
                return Ok(Decimal {
                    text: render(&m, digits),
                    digits,
                })
            }
            Err(ExactError::BudgetExceeded { .. }) => prec *= 2,
            Err(e) => return Err(e),
        }
    }
    Err(ExactError::InvalidArgument(format!(
        "could not certify {digits} digits of {x}"
    )))
}

/// Rounds `x` to `digits` places; `Truncate` gives the same result as
/// [`truncated`].
pub(super) fn rounded(
    x: &FactoredReal,
    digits: u32,
    rounding: Rounding,
) -> Result<Decimal, ExactError> {
    let t = truncated(x, digits)?;
    if rounding == Rounding::Truncate {
        return Ok(t);
    }
    let scale = BigInt::from(10u32).pow(digits);
    let m = t.value() * BigRational::from_integer(scale.clone());
    let m = m.to_integer();
    let midpoint = BigRational::new(&m * 2 + 1, &scale * 2);
    let m = if cmp_rational_real(&midpoint, x)? != Ordering::Greater {
        m + 1
    } else {
        m
    };
    Ok(Decimal {
        text: render(m.magnitude(), digits),
        digits,
    })
}

#[cfg(test)]
fn approx_f64(x: &FactoredReal) -> f64 {
    use num_traits::ToPrimitive;
    x.iter()
        .map(|(p, e)| (p as f64).powf(e.numer().to_f64().unwrap() / e.denom().to_f64().unwrap()))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn fr(pairs: &[(u64, i64, i64)]) -> FactoredReal {
        pairs.iter().fold(FactoredReal::one(), |acc, &(p, n, d)| {
            acc.mul(&FactoredReal::prime_power(p, q(n, d)))
        })
    }

    #[test]
    fn table_values_truncate() {
        assert_eq!(fr(&[(2, -5, 4)]).to_decimal(3).unwrap().text, "0.420");
        assert_eq!(FactoredReal::one().to_decimal(3).unwrap().text, "1.000");
        assert_eq!(
            fr(&[(2, -7, 4), (3, -2, 3), (5, -3, 5)])
                .to_decimal(3)
                .unwrap()
                .text,
            "0.054"
        );
    }

    #[test]
    fn exact_decimal_boundaries() {
        // exactly representable values must not be pushed below the boundary
        assert_eq!(fr(&[(2, -1, 1)]).to_decimal(3).unwrap().text, "0.500");
        assert_eq!(
            fr(&[(2, -2, 1), (5, -1, 1)]).to_decimal(2).unwrap().text,
            "0.05"
        );
        assert_eq!(fr(&[(2, 3, 1)]).to_decimal(1).unwrap().text, "8.0");
        assert_eq!(fr(&[(2, 1, 2)]).to_decimal(6).unwrap().text, "1.414213");
        assert_eq!(
            fr(&[(2, 5, 1), (3, 4, 1)]).to_decimal(2).unwrap().text,
            "2592.00"
        );
    }

    #[test]
    fn nearest_rounding() {
        let d10 = fr(&[(2, -1, 2), (5, -3, 5)]);
        assert_eq!(d10.to_decimal(3).unwrap().text, "0.269");
        assert_eq!(rounded(&d10, 3, Rounding::Nearest).unwrap().text, "0.269");
        let d6 = fr(&[(2, -1, 2), (3, -2, 3)]);
        assert_eq!(rounded(&d6, 3, Rounding::Nearest).unwrap().text, "0.340");
        assert_eq!(rounded(&d6, 3, Rounding::Truncate).unwrap().text, "0.339");
        // exact tie goes up
        assert_eq!(
            rounded(&fr(&[(2, -3, 1)]), 2, Rounding::Nearest)
                .unwrap()
                .text,
            "0.13"
        );
        assert_eq!(
            rounded(&fr(&[(2, 3, 1)]), 1, Rounding::Nearest)
                .unwrap()
                .text,
            "8.0"
        );
    }

    #[test]
    fn value_and_bound() {
        let d = fr(&[(2, -1, 2)]).to_decimal(4).unwrap();
        assert_eq!(d.value(), q(7071, 10000));
        assert_eq!(d.error_bound(), q(1, 10000));
        assert!(fr(&[(2, 1, 1)]).to_decimal(0).is_err());
    }

    #[test]
    fn matches_float_on_samples() {
        for x in [
            fr(&[(3, -4, 9)]),
            fr(&[(7, -5, 7), (3, -1, 3)]),
            fr(&[(2, -1, 2), (173, -87, 173)]),
        ] {
            let d = x.to_decimal(9).unwrap();
            let v: f64 = d.text.parse().unwrap();
            let f = approx_f64(&x);
            assert!(
                f >= v - 1e-12 && f < v + 1e-9 + 1e-12,
                "{x}: {} vs {f}",
                d.text
            );
        }
    }
}
