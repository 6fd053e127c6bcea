//! Sylow subgroups, `O_p`, `O_p'`, and the structural predicates the
//! threshold statements conclude.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{is_prime, smallest_prime_factor};
use crate::group::{PermGroup, Subgroup};

/// Groups up to this order get a complete normal-subgroup list.
pub const NORMAL_LATTICE_CAP: usize = 500;

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{p} is not prime")))
    }
}

/// Primes dividing `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n).expect("n > 1");
        out.push(p);
        while n.is_multiple_of(p) {
            n /= p;
        }
    }
    out
}

/// `(p-part, p'-part)` of `n`.
pub fn split_order(n: u64, p: u64) -> (u64, u64) {
    let mut part = 1;
    let mut rest = n;
    while rest.is_multiple_of(p) {
        rest /= p;
        part *= p;
    }
    (part, rest)
}

fn is_p_power(n: u64, p: u64) -> bool {
    split_order(n, p).1 == 1
}

/// A Sylow `p`-subgroup, grown from a largest cyclic `p`-subgroup by
/// adjoining `p`-elements of its normalizer.  Trivial when `p` does not
/// divide the order.
pub fn sylow(g: &PermGroup, p: u64) -> Result<Subgroup<'_>> {
    require_prime(p)?;
    let (target, _) = split_order(g.order() as u64, p);
    let n = g.order() as u32;
    let start = (0..n)
        .filter(|&x| is_p_power(g.element_order(x), p))
        .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
        .unwrap_or(0);
    let mut sub = g.cyclic_subgroup(start);
    while (sub.order() as u64) < target {
        let norm = g.normalizer(&sub);
        let x = norm
            .members()
            .iter()
            .copied()
            .find(|&x| !sub.contains(x) && is_p_power(g.element_order(x), p))
            .ok_or_else(|| {
                Error::Consistency(
                    "normalizer of a non-Sylow p-subgroup has no new p-element".into(),
                )
            })?;
        let mut gens = sub.generators().to_vec();
        gens.push(x);
        sub = g.subgroup_generated(&gens);
    }
    if sub.order() as u64 != target {
        return Err(Error::Consistency(format!(
            "Sylow {p}-subgroup of order {}",
            sub.order()
        )));
    }
    Ok(sub)
}

/// `O_p(G)`: the elements whose whole conjugacy class lies in one Sylow
/// `p`-subgroup, i.e. the intersection of its conjugates.
pub fn core_p(g: &PermGroup, p: u64) -> Result<Subgroup<'_>> {
    let s = sylow(g, p)?;
    let members: Vec<u32> = g
        .conjugacy_classes()
        .iter()
        .filter(|c| c.members.iter().all(|&x| s.contains(x)))
        .flat_map(|c| c.members.iter().copied())
        .collect();
    Ok(g.subgroup_from_members(members))
}

/// `O_p'(G)`: generated by the `p'`-elements whose normal closure has
/// `p'`-order.
pub fn o_p_prime(g: &PermGroup, p: u64) -> Result<Subgroup<'_>> {
    require_prime(p)?;
    let mut current = g.trivial_subgroup();
    for class in g.conjugacy_classes() {
        let x = class.representative;
        if class.element_order % p == 0 || current.contains(x) {
            continue;
        }
        let closure = g.normal_closure(&[x]);
        if !(closure.order() as u64).is_multiple_of(p) {
            let mut gens = current.generators().to_vec();
            gens.extend_from_slice(closure.generators());
            current = g.normal_closure(&gens);
        }
    }
    if (current.order() as u64).is_multiple_of(p) {
        return Err(Error::Consistency(format!(
            "O_{p}' has order {} divisible by {p}",
            current.order()
        )));
    }
    Ok(current)
}

/// Has a normal `p`-complement.
pub fn is_p_nilpotent(g: &PermGroup, p: u64) -> Result<bool> {
    let (_, complement) = split_order(g.order() as u64, p);
    Ok(o_p_prime(g, p)?.order() as u64 == complement)
}

pub fn is_cyclic(g: &PermGroup) -> bool {
    g.is_cyclic()
}

pub fn is_abelian(g: &PermGroup) -> bool {
    g.is_abelian()
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(g: &PermGroup) -> bool {
    prime_divisors(g.order() as u64).into_iter().all(|p| {
        let s = sylow(g, p).expect("prime divisor");
        g.is_normal(&s)
    })
}

/// The derived series reaches the trivial subgroup.
pub fn is_soluble(g: &PermGroup) -> bool {
    let mut h = g.whole();
    loop {
        if h.is_trivial() {
            return true;
        }
        let d = g.derived_subgroup_of(&h);
        if d.order() == h.order() {
            return false;
        }
        h = d;
    }
}

/// Some normal subgroup of prime order, if any.
fn prime_order_normal(g: &PermGroup) -> Option<Subgroup<'_>> {
    g.conjugacy_classes()
        .iter()
        .filter(|c| is_prime(c.element_order) && (c.members.len() as u64) < c.element_order)
        .map(|c| g.cyclic_subgroup(c.representative))
        .find(|n| g.is_normal(n))
}

/// Peels off normal subgroups of prime order.  One choice suffices: with
/// `N` of prime order normal, `G` is supersoluble iff `G/N` is.
pub fn is_supersoluble(g: &PermGroup) -> Result<bool> {
    if g.order() == 1 || is_nilpotent(g) {
        return Ok(true);
    }
    let Some(n) = prime_order_normal(g) else {
        return Ok(false);
    };
    let q = g.quotient(&n)?;
    is_supersoluble(&q)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub holds: bool,
    pub op_order: usize,
    pub op_prime_order: usize,
    pub op_cyclic: bool,
}

/// Whether `G = O_p(G) x O_p'(G)`.  Both factors are normal with coprime
/// orders, so the order product decides it.
pub fn decomposes_as_op_times_opprime(g: &PermGroup, p: u64) -> Result<Decomposition> {
    let op = core_p(g, p)?;
    let opp = o_p_prime(g, p)?;
    Ok(Decomposition {
        holds: op.order() * opp.order() == g.order(),
        op_order: op.order(),
        op_prime_order: opp.order(),
        op_cyclic: op.is_cyclic(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeProfile {
    pub p: u64,
    pub sylow_order: usize,
    pub sylow_normal: bool,
    pub sylow_cyclic: bool,
    pub op_order: usize,
    pub op_prime_order: usize,
    pub op_cyclic: bool,
    pub p_nilpotent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureProfile {
    pub cyclic: bool,
    pub abelian: bool,
    pub nilpotent: bool,
    pub supersoluble: bool,
    pub soluble: bool,
    pub primes: Vec<PrimeProfile>,
}

impl StructureProfile {
    pub fn of(g: &PermGroup) -> Result<Self> {
        let mut primes = Vec::new();
        for p in prime_divisors(g.order() as u64) {
            let s = sylow(g, p)?;
            let op = core_p(g, p)?;
            let opp = o_p_prime(g, p)?;
            primes.push(PrimeProfile {
                p,
                sylow_order: s.order(),
                sylow_normal: g.is_normal(&s),
                sylow_cyclic: s.is_cyclic(),
                op_order: op.order(),
                op_prime_order: opp.order(),
                op_cyclic: op.is_cyclic(),
                p_nilpotent: opp.order() as u64 == split_order(g.order() as u64, p).1,
            });
        }
        Ok(Self {
            cyclic: g.is_cyclic(),
            abelian: g.is_abelian(),
            nilpotent: is_nilpotent(g),
            supersoluble: is_supersoluble(g)?,
            soluble: is_soluble(g),
            primes,
        })
    }

    /// cyclic => abelian => nilpotent => supersoluble => soluble
    pub fn hierarchy_holds(&self) -> bool {
        let chain = [
            self.cyclic,
            self.abelian,
            self.nilpotent,
            self.supersoluble,
            self.soluble,
        ];
        chain.windows(2).all(|w| !w[0] || w[1])
    }

    /// Record for `p`; `None` when `p` does not divide the order.
    pub fn prime(&self, p: u64) -> Option<&PrimeProfile> {
        self.primes.iter().find(|r| r.p == p)
    }

    /// `p`-nilpotent, including the trivial case `p ∤ |G|`.
    pub fn p_nilpotent(&self, p: u64) -> bool {
        self.prime(p).is_none_or(|r| r.p_nilpotent)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "cyclic": self.cyclic,
            "abelian": self.abelian,
            "nilpotent": self.nilpotent,
            "supersoluble": self.supersoluble,
            "soluble": self.soluble,
            "primes": self.primes.iter().map(|r| json!({
                "p": r.p,
                "sylow_order": r.sylow_order,
                "sylow_normal": r.sylow_normal,
                "sylow_cyclic": r.sylow_cyclic,
                "op_order": r.op_order,
                "op_prime_order": r.op_prime_order,
                "op_cyclic": r.op_cyclic,
                "p_nilpotent": r.p_nilpotent,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Normal subgroups of `g`.  Complete up to [`NORMAL_LATTICE_CAP`], found as
/// joins of normal closures of classes; above the cap only the centre,
/// derived subgroup, `O_p`, `O_p'` and class closures are returned.  Sorted
/// by order, then members.
pub fn normal_subgroups(g: &PermGroup) -> Vec<Subgroup<'_>> {
    normal_subgroups_with_cap(g, NORMAL_LATTICE_CAP)
}

pub fn normal_subgroups_with_cap(g: &PermGroup, cap: usize) -> Vec<Subgroup<'_>> {
    let mut closures: Vec<Subgroup<'_>> = Vec::new();
    for class in g.conjugacy_classes().iter().skip(1) {
        let k = g.normal_closure(&[class.representative]);
        if !closures.contains(&k) {
            closures.push(k);
        }
    }
    let mut found = Found::default();
    found.push(g.trivial_subgroup());
    if g.order() <= cap {
        let mut next = 0;
        while next < found.list.len() {
            let n = found.list[next].clone();
            next += 1;
            for k in &closures {
                if !k.is_subgroup_of(&n) {
                    let gens: Vec<u32> = n
                        .generators()
                        .iter()
                        .chain(k.generators())
                        .copied()
                        .collect();
                    found.push(g.normal_closure(&gens));
                }
            }
        }
    } else {
        for k in closures {
            found.push(k);
        }
        found.push(g.whole());
        found.push(g.center());
        found.push(g.derived_subgroup());
        for p in prime_divisors(g.order() as u64) {
            if let Ok(h) = core_p(g, p) {
                found.push(h);
            }
            if let Ok(h) = o_p_prime(g, p) {
                found.push(h);
            }
        }
    }
    let mut list = found.list;
    list.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    list
}

#[derive(Default)]
struct Found<'g> {
    list: Vec<Subgroup<'g>>,
    keys: BTreeSet<Vec<u32>>,
}

impl<'g> Found<'g> {
    fn push(&mut self, h: Subgroup<'g>) {
        if self.keys.insert(h.members().to_vec()) {
            self.list.push(h);
        }
    }
}
