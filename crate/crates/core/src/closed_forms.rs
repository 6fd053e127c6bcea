//! Closed-form values of `psi''` and `l`, computed from parameters alone.
//!
//! Nothing here enumerates a group except [`l_semidirect`], which needs
//! `l(H)` of the complement.  Agreement with enumeration is checked by tests.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{is_prime, BigRational, FactoredInteger, FactoredReal};
use crate::group::PermGroup;
use crate::invariants;

fn q(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// `l(D_2p) = 2^(-1/2) * p^(-(p+1)/(2p))`
pub fn l_dihedral_2p(p: u64) -> Result<FactoredReal> {
    require_odd_prime(p)?;
    Ok(FactoredReal::prime_power(2, q(-1, 2))
        .mul(&FactoredReal::prime_power(p, q(-(p as i64 + 1), 2 * p))))
}

/// `psi''(D_2p) = (p^2 + p + 1) / (4 p^2)`
pub fn psi_dd_dihedral_2p(p: u64) -> Result<BigRational> {
    require_odd_prime(p)?;
    let p = BigInt::from(p);
    Ok(q(&p * &p + &p + 1, &p * &p * 4))
}

/// Closed forms for a cyclic group of order `p^n`, with the bracket
/// `p^(-1/(p-1)) <= l <= p^(-1/p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPrimePower {
    pub psi_dd: BigRational,
    pub ell: FactoredReal,
    pub lower: FactoredReal,
    pub upper: FactoredReal,
}

pub fn cyclic_prime_power(p: u64, n: u32) -> Result<CyclicPrimePower> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("exponent must be at least 1".into()));
    }
    let pb = BigInt::from(p);
    let top = pb.pow(2 * n + 1);
    let psi_dd = q(&top + 1, &top + pb.pow(2 * n));
    let pn = pb.pow(n);
    let ell = FactoredReal::prime_power(p, q(BigInt::from(1) - &pn, &pn * (&pb - 1)));
    Ok(CyclicPrimePower {
        psi_dd,
        ell,
        lower: FactoredReal::prime_power(p, q(-1, p - 1)),
        upper: FactoredReal::prime_power(p, q(-1, p)),
    })
}

/// `theta_p(x) = p^((-1 + p - p x) / (p x))` for `x > 0`.
pub fn theta(p: u64, x: &BigRational) -> Result<FactoredReal> {
    require_odd_prime(p)?;
    if x <= &BigRational::from_integer(0.into()) {
        return Err(Error::InvalidArgument(
            "theta needs a positive argument".into(),
        ));
    }
    let pr = BigRational::from_integer(p.into());
    let exponent = (&pr - BigRational::one() - &pr * x) / (&pr * x);
    Ok(FactoredReal::prime_power(p, exponent))
}

/// Invariants of a split extension `G = P H` with `P ≅ C_p` normal and
/// self-centralizing, derived from the complement `H` alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectForm {
    /// `theta_p(|H|) * l(H)`
    pub ell: FactoredReal,
    /// `p^(p-1) * rho(H)^p`
    pub rho: FactoredInteger,
}

pub fn l_semidirect(p: u64, h: &PermGroup) -> Result<SemidirectForm> {
    require_odd_prime(p)?;
    let order = h.order() as u64;
    if order <= 1 || order.is_multiple_of(p) {
        return Err(Error::InvalidArgument(format!(
            "complement order {order} must exceed 1 and be coprime to {p}"
        )));
    }
    let ell = theta(p, &BigRational::from_integer(order.into()))?.mul(&invariants::ell(h));
    let rho =
        FactoredInteger::prime_power(p, p - 1).mul(&invariants::rho(h).pow(&BigUint::from(p)));
    Ok(SemidirectForm { ell, rho })
}

fn prime_power_parts(n: u64) -> Result<Vec<(u64, u32)>> {
    let f = FactoredInteger::factorize(n)?;
    Ok(f.iter()
        .map(|(p, e)| (p, u32::try_from(e).expect("exponent of a u64")))
        .collect())
}

/// `l(C_n)` as the product of the prime-power forms.
pub fn l_cyclic(n: u64) -> Result<FactoredReal> {
    prime_power_parts(n)?
        .into_iter()
        .try_fold(FactoredReal::one(), |acc, (p, e)| {
            Ok(acc.mul(&cyclic_prime_power(p, e)?.ell))
        })
}

/// `psi''(C_n)` as the product of the prime-power forms.
pub fn psi_dd_cyclic(n: u64) -> Result<BigRational> {
    prime_power_parts(n)?
        .into_iter()
        .try_fold(BigRational::one(), |acc, (p, e)| {
            Ok(acc * cyclic_prime_power(p, e)?.psi_dd)
        })
}

/// Lower bounds that `f(O_p'(G))` inherits when `f(G) > f(D_2p)` and the
/// Sylow `p`-subgroup splits off as a cyclic direct factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementBounds {
    /// `psi''(D_2p) / psi''(C_p) = (p^2 + p + 1) / (4 (p^2 - p + 1))`
    pub psi_dd: BigRational,
    /// `l(D_2p) / l(C_p) = 2^(-1/2) p^((1-p)/(2p))`
    pub ell: FactoredReal,
}

pub fn complement_bounds(p: u64) -> Result<ComplementBounds> {
    require_odd_prime(p)?;
    let pb = BigInt::from(p);
    let psi_dd = q(&pb * &pb + &pb + 1, (&pb * &pb - &pb + 1) * 4);
    let ell = FactoredReal::prime_power(2, q(-1, 2))
        .mul(&FactoredReal::prime_power(p, q(1 - p as i64, 2 * p)));
    Ok(ComplementBounds { psi_dd, ell })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdEntry {
    pub p: u64,
    pub ell: FactoredReal,
    pub psi_dd: BigRational,
}

/// `l(D_2p)` and `psi''(D_2p)` for odd primes up to a bound, with on-demand
/// entries beyond it.
#[derive(Clone, Debug)]
pub struct ThresholdTable {
    entries: BTreeMap<u64, ThresholdEntry>,
}

impl ThresholdTable {
    pub fn up_to(limit: u64) -> Self {
        let entries = crate::exact::odd_primes_up_to(limit)
            .into_iter()
            .map(|p| (p, Self::entry(p).expect("odd prime")))
            .collect();
        Self { entries }
    }

    fn entry(p: u64) -> Result<ThresholdEntry> {
        Ok(ThresholdEntry {
            p,
            ell: l_dihedral_2p(p)?,
            psi_dd: psi_dd_dihedral_2p(p)?,
        })
    }

    pub fn get(&self, p: u64) -> Result<ThresholdEntry> {
        match self.entries.get(&p) {
            Some(e) => Ok(e.clone()),
            None => Self::entry(p),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &ThresholdEntry> {
        self.entries.values()
    }
}

impl Default for ThresholdTable {
    fn default() -> Self {
        Self::up_to(200)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::cmp_reals;
    use crate::group::{cyclic, dihedral, metacyclic};
    use std::cmp::Ordering;

    fn fr(pairs: &[(u64, i64, i64)]) -> FactoredReal {
        pairs.iter().fold(FactoredReal::one(), |acc, &(p, n, d)| {
            acc.mul(&FactoredReal::prime_power(p, q(n, d)))
        })
    }

    #[test]
    fn dihedral_thresholds() {
        assert_eq!(l_dihedral_2p(3).unwrap(), fr(&[(2, -1, 2), (3, -2, 3)]));
        assert_eq!(
            l_dihedral_2p(13).unwrap().to_decimal(3).unwrap().text,
            "0.177"
        );
        assert_eq!(
            l_dihedral_2p(173).unwrap().to_decimal(3).unwrap().text,
            "0.052"
        );
        assert!(l_dihedral_2p(2).is_err());
        assert!(l_dihedral_2p(9).is_err());
        assert_eq!(psi_dd_dihedral_2p(3).unwrap(), q(13, 36));
        assert_eq!(psi_dd_dihedral_2p(5).unwrap(), q(31, 100));
        assert_eq!(psi_dd_dihedral_2p(7).unwrap(), q(57, 196));
    }

    #[test]
    fn dihedral_forms_match_enumeration() {
        for p in [3u64, 5, 7, 11, 13] {
            let d = dihedral(2 * p).unwrap();
            assert_eq!(l_dihedral_2p(p).unwrap(), invariants::ell(&d));
            assert_eq!(psi_dd_dihedral_2p(p).unwrap(), invariants::psi_dd(&d));
        }
    }

    #[test]
    fn cyclic_prime_powers() {
        let c2 = cyclic_prime_power(2, 1).unwrap();
        assert_eq!(c2.psi_dd, q(3, 4));
        assert_eq!(c2.ell, fr(&[(2, -1, 2)]));
        assert_eq!(cyclic_prime_power(3, 2).unwrap().ell, fr(&[(3, -4, 9)]));
        for (p, n) in [(2u64, 5u32), (3, 3), (5, 2), (7, 1)] {
            let c = cyclic_prime_power(p, n).unwrap();
            assert_ne!(cmp_reals(&c.ell, &c.lower).unwrap(), Ordering::Less);
            assert_ne!(cmp_reals(&c.ell, &c.upper).unwrap(), Ordering::Greater);
        }
        assert!(cyclic_prime_power(4, 1).is_err());
        assert!(cyclic_prime_power(3, 0).is_err());
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta(3, &q(2, 1)).unwrap(), fr(&[(3, -2, 3)]));
        for p in [3u64, 5, 7, 11] {
            assert_eq!(theta(p, &q(1, 1)).unwrap(), fr(&[(p, -1, p as i64)]));
        }
        let t3 = theta(7, &q(3, 1)).unwrap();
        let t2 = theta(7, &q(2, 1)).unwrap();
        assert_eq!(cmp_reals(&t3, &t2), Ok(Ordering::Less));
        assert!(theta(7, &q(0, 1)).is_err());
        assert!(theta(7, &q(-1, 2)).is_err());
    }

    #[test]
    fn semidirect_forms() {
        let f = l_semidirect(7, &cyclic(3).unwrap()).unwrap();
        assert_eq!(f.ell, fr(&[(7, -5, 7), (3, -1, 3)]));
        let g = metacyclic(7, 3, 2).unwrap();
        assert_eq!(f.ell, invariants::ell(&g));
        assert_eq!(f.rho, invariants::rho(&g));
        assert_eq!(
            l_semidirect(3, &cyclic(2).unwrap()).unwrap().ell,
            l_dihedral_2p(3).unwrap()
        );
        let d10 = l_semidirect(5, &cyclic(2).unwrap()).unwrap().ell;
        assert_eq!(d10, l_dihedral_2p(5).unwrap());
        assert_eq!(d10.to_decimal(3).unwrap().text, "0.269");
        assert!(l_semidirect(7, &cyclic(7).unwrap()).is_err());
        assert!(l_semidirect(7, &crate::group::trivial()).is_err());
    }

    #[test]
    fn cyclic_products() {
        assert!(l_cyclic(1).unwrap().is_one());
        assert_eq!(psi_dd_cyclic(1).unwrap(), q(1, 1));
        let c315 = l_cyclic(315).unwrap();
        assert_eq!(c315.to_decimal(3).unwrap().text, "0.336");
        assert_eq!(
            c315.to_decimal_with(3, crate::exact::Rounding::Nearest)
                .unwrap()
                .text,
            "0.337"
        );
        let d6 = l_dihedral_2p(3).unwrap();
        let c12 = l_cyclic(12).unwrap();
        let klein = fr(&[(2, -5, 4)]);
        assert_eq!(cmp_reals(&d6, &c12), Ok(Ordering::Less));
        assert_eq!(cmp_reals(&c12, &klein), Ok(Ordering::Less));
        for n in [12u64, 30, 36, 45] {
            let c = cyclic(n).unwrap();
            assert_eq!(l_cyclic(n).unwrap(), invariants::ell(&c));
            assert_eq!(psi_dd_cyclic(n).unwrap(), invariants::psi_dd(&c));
        }
    }

    #[test]
    fn complement_constants() {
        assert_eq!(complement_bounds(3).unwrap().psi_dd, q(13, 28));
        assert_eq!(complement_bounds(5).unwrap().psi_dd, q(31, 84));
        let b13 = complement_bounds(13).unwrap().ell;
        assert_eq!(b13, fr(&[(2, -1, 2), (13, -12, 26)]));
        let a4 = invariants::ell(&crate::group::alternating(4).unwrap());
        assert_eq!(cmp_reals(&b13, &a4), Ok(Ordering::Greater));
        for p in [3u64, 5, 7, 11, 13] {
            let b = complement_bounds(p).unwrap();
            assert_eq!(
                b.ell,
                l_dihedral_2p(p)
                    .unwrap()
                    .div(&cyclic_prime_power(p, 1).unwrap().ell)
            );
            assert_eq!(
                b.psi_dd,
                psi_dd_dihedral_2p(p).unwrap() / cyclic_prime_power(p, 1).unwrap().psi_dd
            );
        }
    }

    #[test]
    fn threshold_table() {
        let t = ThresholdTable::default();
        let ps: Vec<u64> = t.entries().map(|e| e.p).collect();
        assert_eq!(ps.first(), Some(&3));
        assert_eq!(ps.last(), Some(&199));
        assert_eq!(t.get(179).unwrap().ell, l_dihedral_2p(179).unwrap());
        assert_eq!(t.get(211).unwrap().ell, l_dihedral_2p(211).unwrap());
        assert!(t.get(4).is_err());
    }
}
