//! The element-order sum `psi`, product `rho`, and the normalized means
//! `psi''(G) = psi(G) / |G|^2` and `l(G) = rho(G)^(1/|G|) / |G|`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde_json::{json, Value};

use crate::exact::{
    cmp_rational_real, cmp_reals, rational_json, rational_text, BigRational, Decimal, ExactError,
    FactoredInteger, FactoredReal, Rounding,
};
use crate::group::{OrderStatistics, PermGroup};

pub fn psi_from_statistics(stats: &OrderStatistics) -> BigUint {
    stats
        .entries()
        .iter()
        .map(|&(order, mult)| BigUint::from(order) * BigUint::from(mult))
        .sum()
}

pub fn rho_from_statistics(stats: &OrderStatistics) -> FactoredInteger {
    stats
        .entries()
        .iter()
        .fold(FactoredInteger::one(), |acc, &(order, mult)| {
            let f = FactoredInteger::factorize(order).expect("element orders are positive");
            acc.mul(&f.pow(&BigUint::from(mult)))
        })
}

pub fn psi(g: &PermGroup) -> BigUint {
    psi_from_statistics(g.order_statistics())
}

pub fn rho(g: &PermGroup) -> FactoredInteger {
    rho_from_statistics(g.order_statistics())
}

/// `psi / order^2`
pub fn psi_dd_from(psi: &BigUint, order: u64) -> BigRational {
    let n = BigInt::from(order);
    BigRational::new(BigInt::from(psi.clone()), &n * &n)
}

/// `rho^(1/order) / order`
pub fn ell_from(rho: &FactoredInteger, order: u64) -> FactoredReal {
    let root = FactoredReal::root_of(rho, &BigUint::from(order)).expect("order is positive");
    let n = FactoredInteger::factorize(order).expect("order is positive");
    root.div(&FactoredReal::from_integer(&n))
}

pub fn psi_dd(g: &PermGroup) -> BigRational {
    psi_dd_from(&psi(g), g.order() as u64)
}

pub fn ell(g: &PermGroup) -> FactoredReal {
    ell_from(&rho(g), g.order() as u64)
}

/// Arithmetic and geometric mean of the element orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Means {
    pub arithmetic: BigRational,
    pub geometric: FactoredReal,
}

impl Means {
    /// AM against GM, exactly.
    pub fn am_vs_gm(&self) -> Result<Ordering, ExactError> {
        cmp_rational_real(&self.arithmetic, &self.geometric)
    }
}

pub fn means(g: &PermGroup) -> Means {
    let n = g.order() as u64;
    Means {
        arithmetic: BigRational::new(BigInt::from(psi(g)), BigInt::from(n)),
        geometric: FactoredReal::root_of(&rho(g), &BigUint::from(n)).expect("order is positive"),
    }
}

/// All four invariants of one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBundle {
    pub order: FactoredInteger,
    pub psi: BigUint,
    pub rho: FactoredInteger,
    pub psi_dd: BigRational,
    pub ell: FactoredReal,
}

impl InvariantBundle {
    pub fn of(g: &PermGroup) -> Self {
        let n = g.order() as u64;
        let stats = g.order_statistics();
        let psi = psi_from_statistics(stats);
        let rho = rho_from_statistics(stats);
        Self {
            order: FactoredInteger::factorize(n).expect("order is positive"),
            psi_dd: psi_dd_from(&psi, n),
            ell: ell_from(&rho, n),
            psi,
            rho,
        }
    }

    /// `{order, psi, rho: [{p,e}], psi_dd: {num,den}, ell: [{p,num,den}], decimals: {psi_dd, ell}}`
    pub fn to_json(&self, digits: u32) -> Result<Value, ExactError> {
        Ok(json!({
            "order": self.order.to_u64(),
            "psi": crate::exact::bigint_json(&BigInt::from(self.psi.clone())),
            "rho": self.rho.to_json(),
            "psi_dd": rational_json(&self.psi_dd),
            "ell": self.ell.json_with_key("p"),
            "decimals": {
                "psi_dd": truncate_rational(&self.psi_dd, digits)?.text,
                "ell": self.ell.to_decimal(digits)?.text,
            },
        }))
    }
}

/// Truncated decimal of a nonnegative rational.
pub fn truncate_rational(r: &BigRational, digits: u32) -> Result<Decimal, ExactError> {
    round_rational(r, digits, Rounding::Truncate)
}

pub fn round_rational(
    r: &BigRational,
    digits: u32,
    rounding: Rounding,
) -> Result<Decimal, ExactError> {
    if digits == 0 {
        return Err(ExactError::InvalidArgument(
            "at least one decimal digit is required".into(),
        ));
    }
    let mut scaled = r * BigRational::from_integer(BigInt::from(10u32).pow(digits));
    if rounding == Rounding::Nearest {
        scaled += BigRational::new(1.into(), 2.into());
    }
    let m = scaled.floor().to_integer();
    let s = m.magnitude().to_string();
    let width = digits as usize + 1;
    let s = if s.len() < width {
        format!("{}{}", "0".repeat(width - s.len()), s)
    } else {
        s
    };
    let (int, frac) = s.split_at(s.len() - digits as usize);
    let sign = if m.sign() == num_bigint::Sign::Minus {
        "-"
    } else {
        ""
    };
    Ok(Decimal {
        text: format!("{sign}{int}.{frac}"),
        digits,
    })
}

/// Selects one of the two normalized means.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mean {
    /// `psi''(G) = psi(G) / |G|^2`
    PsiDd,
    /// `l(G) = rho(G)^(1/|G|) / |G|`
    Ell,
}

impl Mean {
    pub const BOTH: [Mean; 2] = [Mean::PsiDd, Mean::Ell];

    pub fn of(self, g: &PermGroup) -> MeanValue {
        match self {
            Mean::PsiDd => MeanValue::Rational(psi_dd(g)),
            Mean::Ell => MeanValue::Real(ell(g)),
        }
    }

    pub fn from_bundle(self, b: &InvariantBundle) -> MeanValue {
        match self {
            Mean::PsiDd => MeanValue::Rational(b.psi_dd.clone()),
            Mean::Ell => MeanValue::Real(b.ell.clone()),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Mean::PsiDd => "psi''",
            Mean::Ell => "l",
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            Mean::PsiDd => "psi_dd",
            Mean::Ell => "ell",
        }
    }
}

impl std::str::FromStr for Mean {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "psi_dd" | "psi''" | "psi" => Ok(Mean::PsiDd),
            "ell" | "l" => Ok(Mean::Ell),
            other => Err(format!("unknown mean `{other}` (expected psi_dd or ell)")),
        }
    }
}

/// A value of either mean: rational for `psi''`, factored real for `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MeanValue {
    Rational(BigRational),
    Real(FactoredReal),
}

impl MeanValue {
    pub fn try_cmp(&self, other: &MeanValue) -> Result<Ordering, ExactError> {
        use MeanValue::*;
        match (self, other) {
            (Rational(a), Rational(b)) => Ok(a.cmp(b)),
            (Real(a), Real(b)) => cmp_reals(a, b),
            (Rational(a), Real(b)) => cmp_rational_real(a, b),
            (Real(a), Rational(b)) => cmp_rational_real(b, a).map(Ordering::reverse),
        }
    }

    pub fn mul(&self, other: &MeanValue) -> Option<MeanValue> {
        use MeanValue::*;
        match (self, other) {
            (Rational(a), Rational(b)) => Some(Rational(a * b)),
            (Real(a), Real(b)) => Some(Real(a.mul(b))),
            _ => None,
        }
    }

    pub fn to_decimal(&self, digits: u32) -> Result<Decimal, ExactError> {
        self.to_decimal_with(digits, Rounding::Truncate)
    }

    pub fn to_decimal_with(&self, digits: u32, rounding: Rounding) -> Result<Decimal, ExactError> {
        match self {
            MeanValue::Rational(r) => round_rational(r, digits, rounding),
            MeanValue::Real(x) => x.to_decimal_with(digits, rounding),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            MeanValue::Rational(r) => rational_json(r),
            MeanValue::Real(x) => x.to_json(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            MeanValue::Rational(r) => r.is_one(),
            MeanValue::Real(x) => x.is_one(),
        }
    }
}

impl fmt::Display for MeanValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanValue::Rational(r) => f.write_str(&rational_text(r)),
            MeanValue::Real(x) => write!(f, "{x}"),
        }
    }
}

pub fn relation_symbol(ord: Ordering) -> &'static str {
    match ord {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}
