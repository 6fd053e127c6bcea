use std::fmt;

use super::{GroupError, PermGroup};

/// A subgroup of an enumerated [`PermGroup`], held as a sorted set of element
/// ids of the parent together with a generating set.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g PermGroup,
    members: Vec<u32>,
    mask: Vec<bool>,
    generators: Vec<u32>,
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.members.len())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Incremental closure under right multiplication by a growing generator list.
struct Closure<'g> {
    group: &'g PermGroup,
    members: Vec<u32>,
    mask: Vec<bool>,
    generators: Vec<u32>,
}

impl<'g> Closure<'g> {
    fn new(group: &'g PermGroup) -> Self {
        let mut mask = vec![false; group.order()];
        mask[0] = true;
        Self {
            group,
            members: vec![0],
            mask,
            generators: Vec::new(),
        }
    }

    /// Adds `x` as a generator unless it is already inside; returns whether
    /// the subgroup grew.
    fn adjoin(&mut self, x: u32) -> bool {
        if self.mask[x as usize] {
            return false;
        }
        self.generators.push(x);
        let old = self.members.len();
        let mut next = 0;
        while next < self.members.len() {
            let y = self.members[next];
            if next < old {
                self.visit(self.group.mul(y, x));
            } else {
                for k in 0..self.generators.len() {
                    let g = self.generators[k];
                    self.visit(self.group.mul(y, g));
                }
            }
            next += 1;
        }
        true
    }

    fn visit(&mut self, z: u32) {
        if !self.mask[z as usize] {
            self.mask[z as usize] = true;
            self.members.push(z);
        }
    }

    fn finish(mut self) -> Subgroup<'g> {
        self.members.sort_unstable();
        Subgroup {
            group: self.group,
            members: self.members,
            mask: self.mask,
            generators: self.generators,
        }
    }
}

impl<'g> Subgroup<'g> {
    pub fn group(&self) -> &'g PermGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Sorted element ids.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn contains(&self, id: u32) -> bool {
        self.mask[id as usize]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.group.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.members
            .iter()
            .any(|&x| self.group.element_order(x) == n)
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.group;
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// The subgroup as a group in its own right, on the same points.
    pub fn to_group(&self) -> Result<PermGroup, GroupError> {
        let gens = self
            .generators
            .iter()
            .map(|&x| self.group.element(x).clone())
            .collect();
        PermGroup::with_limits(self.group.degree(), gens, self.group.limits())
    }
}

impl PermGroup {
    pub fn trivial_subgroup(&self) -> Subgroup<'_> {
        Closure::new(self).finish()
    }

    pub fn whole(&self) -> Subgroup<'_> {
        self.subgroup_generated(self.generator_ids())
    }

    pub fn subgroup_generated(&self, ids: &[u32]) -> Subgroup<'_> {
        let mut c = Closure::new(self);
        for &x in ids {
            c.adjoin(x);
        }
        c.finish()
    }

    pub fn cyclic_subgroup(&self, x: u32) -> Subgroup<'_> {
        self.subgroup_generated(&[x])
    }

    /// Builds a subgroup from a member list already known to be closed.
    pub(crate) fn subgroup_from_members(&self, mut members: Vec<u32>) -> Subgroup<'_> {
        members.sort_unstable();
        let mut c = Closure::new(self);
        for &x in &members {
            c.adjoin(x);
        }
        let sub = c.finish();
        debug_assert_eq!(sub.members, members, "member list is not a subgroup");
        sub
    }

    /// Smallest normal subgroup containing `ids`.
    pub fn normal_closure(&self, ids: &[u32]) -> Subgroup<'_> {
        let mut c = Closure::new(self);
        let mut work: Vec<u32> = ids.to_vec();
        while let Some(x) = work.pop() {
            if c.adjoin(x) {
                for &g in self.generator_ids() {
                    let y = self.conjugate(x, g);
                    if !c.mask[y as usize] {
                        work.push(y);
                    }
                }
            }
        }
        // generators conjugated into the subgroup; closure is normal
        c.finish()
    }

    pub fn is_normal(&self, h: &Subgroup<'_>) -> bool {
        self.generator_ids().iter().all(|&g| {
            h.generators()
                .iter()
                .all(|&x| h.contains(self.conjugate(x, g)))
        })
    }

    pub fn intersect<'a>(&'a self, h: &Subgroup<'a>, k: &Subgroup<'a>) -> Subgroup<'a> {
        let members = h
            .members()
            .iter()
            .copied()
            .filter(|&x| k.contains(x))
            .collect();
        self.subgroup_from_members(members)
    }

    pub fn join<'a>(&'a self, h: &Subgroup<'a>, k: &Subgroup<'a>) -> Subgroup<'a> {
        let gens: Vec<u32> = h
            .generators()
            .iter()
            .chain(k.generators())
            .copied()
            .collect();
        self.subgroup_generated(&gens)
    }

    /// `g^-1 H g`
    pub fn conjugate_subgroup<'a>(&'a self, h: &Subgroup<'a>, g: u32) -> Subgroup<'a> {
        let gens: Vec<u32> = h
            .generators()
            .iter()
            .map(|&x| self.conjugate(x, g))
            .collect();
        self.subgroup_generated(&gens)
    }

    pub fn centralizer(&self, x: u32) -> Subgroup<'_> {
        let members = (0..self.order() as u32)
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .collect();
        self.subgroup_from_members(members)
    }

    /// Elements commuting with every member of `h`.
    pub fn centralizer_of(&self, h: &Subgroup<'_>) -> Subgroup<'_> {
        let members = (0..self.order() as u32)
            .filter(|&g| {
                h.generators()
                    .iter()
                    .all(|&x| self.mul(g, x) == self.mul(x, g))
            })
            .collect();
        self.subgroup_from_members(members)
    }

    pub fn normalizer(&self, h: &Subgroup<'_>) -> Subgroup<'_> {
        let members = (0..self.order() as u32)
            .filter(|&g| {
                h.generators()
                    .iter()
                    .all(|&x| h.contains(self.conjugate(x, g)))
            })
            .collect();
        self.subgroup_from_members(members)
    }

    pub fn center(&self) -> Subgroup<'_> {
        let whole = self.whole();
        self.centralizer_of(&whole)
    }

    /// Normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Subgroup<'_> {
        self.derived_subgroup_of(&self.whole())
    }

    /// `[H, H]`, as the closure of generator commutators under conjugation by `H`.
    pub fn derived_subgroup_of<'a>(&'a self, h: &Subgroup<'a>) -> Subgroup<'a> {
        let gens = h.generators();
        let mut c = Closure::new(self);
        let mut work = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                work.push(self.commutator(a, b));
            }
        }
        while let Some(x) = work.pop() {
            if c.adjoin(x) {
                for &g in gens {
                    let y = self.conjugate(x, g);
                    if !c.mask[y as usize] {
                        work.push(y);
                    }
                }
            }
        }
        c.finish()
    }

    /// `G / N` acting on the right cosets of `N`.
    pub fn quotient(&self, n: &Subgroup<'_>) -> Result<PermGroup, GroupError> {
        if !std::ptr::eq(n.group(), self) {
            return Err(GroupError::Precondition(
                "subgroup of a different group".into(),
            ));
        }
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        if n.is_whole() && self.order() > 1 {
            return Err(GroupError::Precondition(
                "quotient by the whole group".into(),
            ));
        }
        let size = self.order();
        let mut coset_of = vec![u32::MAX; size];
        let mut reps = Vec::new();
        for x in 0..size as u32 {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &m in n.members() {
                coset_of[self.mul(m, x) as usize] = c;
            }
        }
        let degree = reps.len();
        let gens = self
            .generator_ids()
            .iter()
            .map(|&s| {
                let images = reps
                    .iter()
                    .map(|&r| coset_of[self.mul(r, s) as usize])
                    .collect();
                super::Permutation::from_images(images)
            })
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::with_limits(degree, gens, self.limits())
    }
}
