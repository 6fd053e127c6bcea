//! Sweeps over closed forms and generated families, beyond the corpus.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use rayon::prelude::*;

use super::Corpus;
use crate::closed_forms::{l_cyclic, l_dihedral_2p, l_semidirect};
use crate::error::Result;
use crate::exact::{cmp_rational_real, cmp_reals, is_prime, odd_primes_up_to, BigRational};
use crate::group::{cyclic, metacyclic, OrderStatistics};
use crate::invariants::{ell, ell_from, psi_dd_from, psi_from_statistics, rho_from_statistics};
use crate::structure::prime_divisors;

/// Number of cases examined and a description of each counterexample.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepOutcome {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SweepOutcome {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    fn from_results(results: Vec<Result<Option<String>>>) -> Result<Self> {
        let cases = results.len();
        let mut failures = Vec::new();
        for r in results {
            if let Some(f) = r? {
                failures.push(f);
            }
        }
        Ok(Self { cases, failures })
    }

    pub fn detail(&self, what: &str) -> String {
        match self.failures.first() {
            None => format!("{} {what}, no counterexample", self.cases),
            Some(first) => format!(
                "{} {what}, {} counterexamples, first: {first}",
                self.cases,
                self.failures.len()
            ),
        }
    }
}

fn inverse(p: u64) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(p))
}

/// `l(D_2p) > 1/p` for odd primes up to `limit`.
pub fn dihedral_above_inverse_p(limit: u64) -> Result<SweepOutcome> {
    let results = odd_primes_up_to(limit)
        .into_par_iter()
        .map(|p| {
            let d = l_dihedral_2p(p)?;
            Ok((cmp_rational_real(&inverse(p), &d)? != Ordering::Less)
                .then(|| format!("p = {p}: l(D_2p) = {d}")))
        })
        .collect();
    SweepOutcome::from_results(results)
}

/// `l(D_2p)` strictly decreasing over odd primes up to `limit`.
pub fn dihedral_decreasing(limit: u64) -> Result<SweepOutcome> {
    let primes = odd_primes_up_to(limit);
    let results = primes
        .par_windows(2)
        .map(|w| {
            let (a, b) = (l_dihedral_2p(w[0])?, l_dihedral_2p(w[1])?);
            Ok((cmp_reals(&a, &b)? != Ordering::Greater)
                .then(|| format!("l(D_{}) <= l(D_{})", 2 * w[0], 2 * w[1])))
        })
        .collect();
    SweepOutcome::from_results(results)
}

/// `l(C_n) > l(D_2p)` for odd `n <= limit` with smallest prime `p` and at
/// most `(p+1)/2` distinct prime divisors.
pub fn cyclic_few_divisors(limit: u64) -> Result<SweepOutcome> {
    let ns: Vec<u64> = (3..=limit)
        .step_by(2)
        .filter(|&n| {
            let ps = prime_divisors(n);
            ps.len() as u64 <= ps[0].div_ceil(2)
        })
        .collect();
    let results = ns
        .into_par_iter()
        .map(|n| {
            let p = prime_divisors(n)[0];
            let (c, d) = (l_cyclic(n)?, l_dihedral_2p(p)?);
            Ok((cmp_reals(&c, &d)? != Ordering::Greater)
                .then(|| format!("n = {n}: l(C_n) = {c}, l(D_{}) = {d}", 2 * p)))
        })
        .collect();
    SweepOutcome::from_results(results)
}

/// `1/p < l(C_p ⋊ C_q) < l(D_2p)` by enumeration, for primes `q >= 3`
/// dividing `p - 1` with `pq <= limit`; also checks the value against the
/// closed form.
pub fn semidirect_sandwich(limit: u64) -> Result<SweepOutcome> {
    let mut pairs = Vec::new();
    for p in odd_primes_up_to(limit / 3) {
        for q in (3..p).filter(|&q| is_prime(q) && (p - 1) % q == 0 && p * q <= limit) {
            pairs.push((p, q));
        }
    }
    let results = pairs
        .into_par_iter()
        .map(|(p, q)| {
            let g = metacyclic(p, q, 0)?;
            let l = ell(&g);
            let formula = l_semidirect(p, &cyclic(q)?)?.ell;
            let below = cmp_rational_real(&inverse(p), &l)? == Ordering::Less;
            let above = cmp_reals(&l, &l_dihedral_2p(p)?)? == Ordering::Less;
            Ok((!(below && above && l == formula))
                .then(|| format!("F({p},{q}): l = {l}, closed form {formula}")))
        })
        .collect();
    SweepOutcome::from_results(results)
}

/// Element-order statistics of `G x H`, from the orders `lcm(o(g), o(h))`.
pub fn product_statistics(a: &OrderStatistics, b: &OrderStatistics) -> OrderStatistics {
    let mut entries = Vec::with_capacity(a.entries().len() * b.entries().len());
    for &(x, m) in a.entries() {
        for &(y, k) in b.entries() {
            entries.push((x.lcm(&y), m * k));
        }
    }
    OrderStatistics::from_entries(entries)
}

/// `f(G x H) = f(G) f(H)` and `rho(G x H) = rho(G)^|H| rho(H)^|G|` for coprime corpus pairs with `|G| |H| <= limit`.
/// The product values come from the product's element orders, not from the
/// factors' means.
pub fn multiplicative_pairs(corpus: &Corpus, limit: u64) -> Result<SweepOutcome> {
    let entries: Vec<_> = corpus.iter().filter(|e| e.order() > 1).collect();
    let mut pairs = Vec::new();
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if a.order() * b.order() <= limit && a.order().gcd(&b.order()) == 1 {
                pairs.push((*a, *b));
            }
        }
    }
    let results = pairs
        .into_par_iter()
        .map(|(a, b)| {
            let n = a.order() * b.order();
            let stats = product_statistics(a.group.order_statistics(), b.group.order_statistics());
            let psi_dd = psi_dd_from(&psi_from_statistics(&stats), n);
            let rho = rho_from_statistics(&stats);
            let l = ell_from(&rho, n);
            let rho_identity = a
                .invariants
                .rho
                .pow(&BigUint::from(b.order()))
                .mul(&b.invariants.rho.pow(&BigUint::from(a.order())));
            let ok = psi_dd == &a.invariants.psi_dd * &b.invariants.psi_dd
                && l == a.invariants.ell.mul(&b.invariants.ell)
                && rho == rho_identity;
            Ok((!ok).then(|| format!("{} x {}", a.spec, b.spec)))
        })
        .collect();
    SweepOutcome::from_results(results)
}
