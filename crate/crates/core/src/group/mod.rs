//! Finite permutation groups, enumerated in full.
//!
//! A [`PermGroup`] is built from generating permutations and immediately
//! closed into its complete, lexicographically sorted element list.  Elements
//! are then referred to by their index in that list (`0` is the identity).
//! Conjugacy classes and order statistics are computed on first use.

mod families;
mod perm;
mod subgroup;

pub use families::{
    alternating, cyclic, dihedral, is_isomorphic_small, metacyclic, metacyclic_auto_root,
    metacyclic_root, quaternion8, symmetric, trivial,
};
pub use perm::Permutation;
pub use subgroup::Subgroup;

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use num_integer::Integer;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group too large: {what} exceeds the limit of {limit}")]
    CapExceeded { what: &'static str, limit: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Size limits applied while enumerating a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of elements.
    pub max_order: usize,
    /// Maximum of `order * degree`, the number of stored image entries.
    pub max_points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_order: 1_000_000,
            max_points: 1 << 28,
        }
    }
}

/// One conjugacy class: its smallest member is the representative.
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: u32,
    pub members: Vec<u32>,
    pub element_order: u64,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Multiset of element orders as `(order, multiplicity)` sorted by order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderStatistics {
    entries: Vec<(u64, u64)>,
}

impl OrderStatistics {
    pub fn from_entries(mut entries: Vec<(u64, u64)>) -> Self {
        entries.sort_unstable();
        let mut merged: Vec<(u64, u64)> = Vec::with_capacity(entries.len());
        for (o, m) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == o => last.1 += m,
                _ if m > 0 => merged.push((o, m)),
                _ => {}
            }
        }
        Self { entries: merged }
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn multiplicity(&self, order: u64) -> u64 {
        self.entries
            .iter()
            .find(|e| e.0 == order)
            .map_or(0, |e| e.1)
    }

    pub fn max_order(&self) -> u64 {
        self.entries.last().map_or(1, |e| e.0)
    }
}

#[derive(Debug)]
struct ClassTable {
    class_of: Vec<u32>,
    classes: Vec<ConjugacyClass>,
}

pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    limits: Limits,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    orders: Vec<u64>,
    inverses: Vec<u32>,
    generator_ids: Vec<u32>,
    classes: OnceLock<ClassTable>,
    statistics: OnceLock<OrderStatistics>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.elements.len())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        Self::with_limits(degree, generators, Limits::default())
    }

    /// Closes the generators into the full element list.
    pub fn with_limits(
        degree: usize,
        generators: Vec<Permutation>,
        limits: Limits,
    ) -> Result<Self, GroupError> {
        let degree = degree.max(1);
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::InvalidParameters(format!(
                "generator of degree {} in a group of degree {degree}",
                bad.degree()
            )));
        }
        let generators: Vec<Permutation> = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();

        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut found = vec![identity];
        let mut next = 0;
        while next < found.len() {
            let x = found[next].clone();
            next += 1;
            for g in &generators {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    found.push(y);
                    if found.len() > limits.max_order {
                        return Err(GroupError::CapExceeded {
                            what: "group order",
                            limit: limits.max_order,
                        });
                    }
                    if found.len().saturating_mul(degree) > limits.max_points {
                        return Err(GroupError::CapExceeded {
                            what: "stored points (order x degree)",
                            limit: limits.max_points,
                        });
                    }
                }
            }
        }
        drop(seen);
        found.sort_unstable();

        let index: HashMap<Permutation, u32> = found
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let orders = found.iter().map(Permutation::order).collect();
        let inverses = found.iter().map(|p| index[&p.inverse()]).collect();
        let generator_ids = generators.iter().map(|g| index[g]).collect();
        Ok(Self {
            degree,
            generators,
            limits,
            elements: found,
            index,
            orders,
            inverses,
            generator_ids,
            classes: OnceLock::new(),
            statistics: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element ids of the (non-identity) generators.
    pub fn generator_ids(&self) -> &[u32] {
        &self.generator_ids
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements in lexicographic order of their image arrays.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, id: u32) -> &Permutation {
        &self.elements[id as usize]
    }

    pub fn id_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn element_order(&self, id: u32) -> u64 {
        self.orders[id as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.elements[a as usize].then(&self.elements[b as usize]);
        self.index[&p]
    }

    pub fn inverse(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// `g^-1 x g`
    pub fn conjugate(&self, x: u32, g: u32) -> u32 {
        let p = self.elements[x as usize].conjugate_by(&self.elements[g as usize]);
        self.index[&p]
    }

    /// `x^-1 y^-1 x y`
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(self.inverse(yx), xy)
    }

    pub fn power(&self, x: u32, k: u64) -> u32 {
        let k = k % self.element_order(x);
        let mut acc = self.elements[0].clone();
        let base = &self.elements[x as usize];
        for _ in 0..k {
            acc = acc.then(base);
        }
        self.index[&acc]
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.orders.contains(&n)
    }

    fn class_table(&self) -> &ClassTable {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![u32::MAX; n];
            let mut classes = Vec::new();
            for start in 0..n as u32 {
                if class_of[start as usize] != u32::MAX {
                    continue;
                }
                let cid = classes.len() as u32;
                class_of[start as usize] = cid;
                let mut members = vec![start];
                let mut next = 0;
                while next < members.len() {
                    let x = members[next];
                    next += 1;
                    for &g in &self.generator_ids {
                        let y = self.conjugate(x, g);
                        if class_of[y as usize] == u32::MAX {
                            class_of[y as usize] = cid;
                            members.push(y);
                        }
                    }
                }
                members.sort_unstable();
                classes.push(ConjugacyClass {
                    representative: start,
                    element_order: self.orders[start as usize],
                    members,
                });
            }
            ClassTable { class_of, classes }
        })
    }

    /// Conjugacy classes ordered by representative (the smallest member).
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_table().classes
    }

    pub fn class_of(&self, id: u32) -> &ConjugacyClass {
        let t = self.class_table();
        &t.classes[t.class_of[id as usize] as usize]
    }

    /// Element orders with multiplicities, aggregated over conjugacy classes.
    pub fn order_statistics(&self) -> &OrderStatistics {
        self.statistics.get_or_init(|| {
            OrderStatistics::from_entries(
                self.conjugacy_classes()
                    .iter()
                    .map(|c| (c.element_order, c.size() as u64))
                    .collect(),
            )
        })
    }

    /// Order statistics from a sweep over every element, without classes.
    pub fn order_statistics_by_sweep(&self) -> OrderStatistics {
        OrderStatistics::from_entries(self.orders.iter().map(|&o| (o, 1)).collect())
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &o| acc.lcm(&o))
    }

    /// Acts on the disjoint union of both point sets; order `|G| * |H|`.
    pub fn direct_product(&self, other: &PermGroup) -> Result<PermGroup, GroupError> {
        let total = self.degree + other.degree;
        let gens = self
            .generators
            .iter()
            .map(|g| g.embed(0, total))
            .chain(other.generators.iter().map(|g| g.embed(self.degree, total)))
            .collect();
        let limits = Limits {
            max_order: self.limits.max_order.min(other.limits.max_order),
            max_points: self.limits.max_points.min(other.limits.max_points),
        };
        PermGroup::with_limits(total, gens, limits)
    }
}
