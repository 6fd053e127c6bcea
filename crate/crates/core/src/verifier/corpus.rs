use std::sync::OnceLock;

use num_integer::Integer;
use rayon::prelude::*;

use crate::dsl::GroupExpr;
use crate::error::{Error, Result};
use crate::exact::is_prime;
use crate::group::PermGroup;
use crate::invariants::{InvariantBundle, Mean, MeanValue};
use crate::structure::StructureProfile;

/// Which atom families enter the corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Families {
    pub cyclic: bool,
    pub dihedral: bool,
    pub symmetric: bool,
    pub alternating: bool,
    pub quaternion: bool,
    pub metacyclic: bool,
    /// Coprime direct products of two atoms, not both cyclic.
    pub products: bool,
    /// `C2xC2` and `S3xC3`.
    pub extras: bool,
}

impl Families {
    pub const ALL: Families = Families {
        cyclic: true,
        dihedral: true,
        symmetric: true,
        alternating: true,
        quaternion: true,
        metacyclic: true,
        products: true,
        extras: true,
    };
}

impl Default for Families {
    fn default() -> Self {
        Self::ALL
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusParams {
    pub max_order: u64,
    pub families: Families,
}

impl Default for CorpusParams {
    fn default() -> Self {
        Self {
            max_order: 360,
            families: Families::ALL,
        }
    }
}

pub struct CorpusEntry {
    pub spec: String,
    pub expr: GroupExpr,
    pub group: PermGroup,
    pub invariants: InvariantBundle,
    profile: OnceLock<std::result::Result<StructureProfile, Error>>,
}

impl CorpusEntry {
    pub fn new(expr: GroupExpr) -> Result<Self> {
        let group = expr.build()?;
        let invariants = InvariantBundle::of(&group);
        Ok(Self {
            spec: expr.to_string(),
            expr,
            group,
            invariants,
            profile: OnceLock::new(),
        })
    }

    pub fn parse(spec: &str) -> Result<Self> {
        Self::new(crate::dsl::parse_spec(spec)?)
    }

    pub fn order(&self) -> u64 {
        self.group.order() as u64
    }

    pub fn mean(&self, f: Mean) -> MeanValue {
        f.from_bundle(&self.invariants)
    }

    pub fn profile(&self) -> Result<&StructureProfile> {
        self.profile
            .get_or_init(|| StructureProfile::of(&self.group))
            .as_ref()
            .map_err(Clone::clone)
    }
}

impl std::fmt::Debug for CorpusEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CorpusEntry")
            .field("spec", &self.spec)
            .field("order", &self.order())
            .finish()
    }
}

/// Enumerated groups in a fixed order: by order, then spec.
#[derive(Debug)]
pub struct Corpus {
    pub params: CorpusParams,
    pub entries: Vec<CorpusEntry>,
}

fn atoms(params: &CorpusParams) -> Vec<GroupExpr> {
    let max = params.max_order;
    let fam = params.families;
    let mut out = Vec::new();
    if fam.cyclic {
        out.extend((1..=max).map(GroupExpr::Cyclic));
    }
    if fam.dihedral {
        out.extend((2..=max / 2).map(|n| GroupExpr::Dihedral(2 * n)));
    }
    if fam.symmetric {
        out.extend((3..=5).map(GroupExpr::Symmetric));
    }
    if fam.alternating {
        out.extend((4..=5).map(GroupExpr::Alternating));
    }
    if fam.quaternion {
        out.push(GroupExpr::Quaternion8);
    }
    if fam.metacyclic {
        for p in (3..=max / 3).filter(|&p| is_prime(p)) {
            for q in (3..p).filter(|q| (p - 1) % q == 0 && p * q <= max) {
                out.push(GroupExpr::Metacyclic { p, q, r: None });
            }
        }
    }
    out.retain(|e| e.order().is_some_and(|n| n <= max));
    out
}

fn is_cyclic_atom(e: &GroupExpr) -> bool {
    matches!(e, GroupExpr::Cyclic(_))
}

/// The corpus specs, without building any group.
pub fn corpus_specs(params: &CorpusParams) -> Vec<GroupExpr> {
    let max = params.max_order;
    let atoms = atoms(params);
    let mut out = atoms.clone();
    if params.families.products {
        for (i, a) in atoms.iter().enumerate() {
            for b in &atoms[i + 1..] {
                let (na, nb) = (a.order().unwrap(), b.order().unwrap());
                if na == 1 || nb == 1 || na.gcd(&nb) != 1 || na * nb > max {
                    continue;
                }
                if is_cyclic_atom(a) && is_cyclic_atom(b) {
                    continue;
                }
                let (x, y) = if is_cyclic_atom(b) { (b, a) } else { (a, b) };
                out.push(x.times(y));
            }
        }
    }
    if params.families.extras {
        for s in ["C2xC2", "S3xC3"] {
            let e = crate::dsl::parse_spec(s).expect("valid spec");
            if e.order().is_some_and(|n| n <= max) {
                out.push(e);
            }
        }
    }
    let mut keyed: Vec<(u64, String, GroupExpr)> = out
        .into_iter()
        .map(|e| (e.order().unwrap(), e.to_string(), e))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.dedup_by(|a, b| a.1 == b.1);
    keyed.into_iter().map(|k| k.2).collect()
}

impl Corpus {
    pub fn build(params: CorpusParams) -> Result<Self> {
        if params.max_order < 8 {
            return Err(Error::InvalidArgument(format!(
                "corpus max order must be at least 8, got {}",
                params.max_order
            )));
        }
        let entries = corpus_specs(&params)
            .into_par_iter()
            .map(CorpusEntry::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { params, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, spec: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.spec == spec)
    }

    pub fn iter(&self) -> impl Iterator<Item = &CorpusEntry> {
        self.entries.iter()
    }
}
