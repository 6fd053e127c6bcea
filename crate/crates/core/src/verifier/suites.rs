use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::report::{Anomaly, Check, GroupRecord, Status, Witness};
use super::sweeps::{
    cyclic_few_divisors, dihedral_above_inverse_p, dihedral_decreasing, multiplicative_pairs,
    semidirect_sandwich,
};
use super::{Corpus, CorpusEntry, SuiteParams};
use crate::closed_forms::{cyclic_prime_power, l_dihedral_2p, psi_dd_dihedral_2p};
use crate::dsl::GroupExpr;
use crate::error::{Error, Result};
use crate::exact::BigRational;
use crate::group::{self, is_isomorphic_small};
use crate::invariants::{means, relation_symbol, Mean, MeanValue};
use crate::structure::{self, prime_divisors, StructureProfile};

pub(super) type SuiteOutput = (Vec<GroupRecord>, Vec<Witness>, Vec<Anomaly>);

fn approx(v: &MeanValue) -> String {
    v.to_decimal(6).map_or_else(|_| "?".to_string(), |d| d.text)
}

fn dihedral_value(f: Mean, p: u64) -> Result<MeanValue> {
    Ok(match f {
        Mean::PsiDd => MeanValue::Rational(psi_dd_dihedral_2p(p)?),
        Mean::Ell => MeanValue::Real(l_dihedral_2p(p)?),
    })
}

fn rational(n: u64, d: u64) -> MeanValue {
    MeanValue::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// `a ? b`, where a hypothesis holds when `trigger` accepts the relation and
/// `conclusion` then decides the check.
fn implication(
    label: String,
    a: &MeanValue,
    b: &MeanValue,
    trigger: impl FnOnce(Ordering) -> bool,
    predicate: &str,
    conclusion: impl FnOnce(Ordering) -> Result<bool>,
) -> Check {
    let mut check = Check {
        label,
        status: Status::Vacuous,
        lhs: a.to_string(),
        rhs: b.to_string(),
        relation: String::new(),
        approx: Some((approx(a), approx(b))),
        predicate: predicate.to_string(),
    };
    let ord = match a.try_cmp(b) {
        Ok(ord) => ord,
        Err(e) => {
            check.status = Status::Failed;
            check.predicate = format!("exact comparison failed: {e}");
            return check;
        }
    };
    check.relation = relation_symbol(ord).to_string();
    if trigger(ord) {
        check.status = match conclusion(ord) {
            Ok(true) => Status::Checked,
            Ok(false) => Status::Failed,
            Err(e) => {
                check.predicate = format!("{predicate} (error: {e})");
                Status::Failed
            }
        };
    }
    check
}

/// A check without a comparison.
fn assertion(
    label: impl Into<String>,
    hypothesis: bool,
    predicate: &str,
    conclusion: impl FnOnce() -> Result<bool>,
) -> Check {
    let mut check = Check {
        label: label.into(),
        status: Status::Vacuous,
        lhs: String::new(),
        rhs: String::new(),
        relation: String::new(),
        approx: None,
        predicate: predicate.to_string(),
    };
    if hypothesis {
        check.status = match conclusion() {
            Ok(true) => Status::Checked,
            Ok(false) => Status::Failed,
            Err(e) => {
                check.predicate = format!("{predicate} (error: {e})");
                Status::Failed
            }
        };
    }
    check
}

fn greater(ord: Ordering) -> bool {
    ord == Ordering::Greater
}

fn per_group(
    corpus: &Corpus,
    checks: impl Fn(&CorpusEntry) -> Vec<Check> + Sync,
) -> Vec<GroupRecord> {
    corpus
        .entries
        .par_iter()
        .map(|e| GroupRecord {
            spec: e.spec.clone(),
            order: e.order(),
            checks: checks(e),
        })
        .collect()
}

fn entry<'a>(corpus: &'a Corpus, spec: &str) -> Result<EntryRef<'a>> {
    match corpus.get(spec) {
        Some(e) => Ok(EntryRef::Borrowed(e)),
        None => Ok(EntryRef::Owned(Box::new(CorpusEntry::parse(spec)?))),
    }
}

/// A corpus entry, or one built on the spot when the corpus lacks it.
enum EntryRef<'a> {
    Borrowed(&'a CorpusEntry),
    Owned(Box<CorpusEntry>),
}

impl std::ops::Deref for EntryRef<'_> {
    type Target = CorpusEntry;
    fn deref(&self) -> &CorpusEntry {
        match self {
            EntryRef::Borrowed(e) => e,
            EntryRef::Owned(e) => e,
        }
    }
}

fn cmp_means(a: &MeanValue, b: &MeanValue) -> Result<Ordering> {
    a.try_cmp(b).map_err(Error::from)
}

fn shown(f: Mean, spec: &str, a: &MeanValue, ord: Ordering, other: &str, b: &MeanValue) -> String {
    format!(
        "{0}({spec}) = {1} {2} {0}({other}) = {3}",
        f.symbol(),
        approx(a),
        relation_symbol(ord),
        approx(b)
    )
}

type Predicate = fn(&StructureProfile) -> bool;

pub(super) fn cascade(corpus: &Corpus) -> Result<SuiteOutput> {
    let rules: [(&str, &str, Predicate); 5] = [
        ("C2xC2", "cyclic", |s| s.cyclic),
        ("Q8", "abelian", |s| s.abelian),
        ("S3", "nilpotent", |s| s.nilpotent),
        ("A4", "supersoluble", |s| s.supersoluble),
        ("A5", "soluble", |s| s.soluble),
    ];
    let thresholds: Vec<(Mean, &str, &str, Predicate, MeanValue)> = Mean::BOTH
        .into_iter()
        .flat_map(|f| rules.iter().map(move |&(t, name, pred)| (f, t, name, pred)))
        .map(|(f, t, name, pred)| Ok((f, t, name, pred, CorpusEntry::parse(t)?.mean(f))))
        .collect::<Result<_>>()?;
    let records = per_group(corpus, |e| {
        thresholds
            .iter()
            .map(|(f, t, name, pred, value)| {
                implication(
                    format!("{0}(G) > {0}({t}) => {name}", f.symbol()),
                    &e.mean(*f),
                    value,
                    greater,
                    name,
                    |_| Ok(pred(e.profile()?)),
                )
            })
            .collect()
    });

    let mut witnesses = Vec::new();
    for (f, middle) in [(Mean::Ell, "C12"), (Mean::PsiDd, "C180")] {
        let (d6, m, klein) = (
            entry(corpus, "D6")?,
            entry(corpus, middle)?,
            entry(corpus, "C2xC2")?,
        );
        let lo = cmp_means(&d6.mean(f), &m.mean(f))?;
        let hi = cmp_means(&m.mean(f), &klein.mean(f))?;
        witnesses.push(Witness::asserted(
            format!("{0}(D6) < {0}({middle}) < {0}(C2xC2)", f.symbol()),
            lo == Ordering::Less && hi == Ordering::Less,
            format!(
                "{}; {}",
                shown(f, "D6", &d6.mean(f), lo, middle, &m.mean(f)),
                shown(f, middle, &m.mean(f), hi, "C2xC2", &klein.mean(f))
            ),
        ));
    }
    if let Some(r) = records.iter().find(|r| r.spec == "A5") {
        witnesses.push(Witness::asserted(
            "A5 is vacuous for every threshold",
            r.status() == Status::Vacuous,
            format!("A5 record: {}", r.status().as_str()),
        ));
    }
    Ok((records, witnesses, Vec::new()))
}

pub(super) fn two_nilpotent(corpus: &Corpus) -> Result<SuiteOutput> {
    let a4 = entry(corpus, "A4")?;
    let threshold = a4.mean(Mean::Ell);
    let records = per_group(corpus, |e| {
        vec![implication(
            "l(G) > l(A4) => 2-nilpotent".into(),
            &e.mean(Mean::Ell),
            &threshold,
            greater,
            "2-nilpotent",
            |_| Ok(e.profile()?.p_nilpotent(2)),
        )]
    });
    let a4_nilpotent = a4.profile()?.p_nilpotent(2);
    let a4_vacuous = records
        .iter()
        .find(|r| r.spec == "A4")
        .is_none_or(|r| r.status() == Status::Vacuous);
    let witnesses = vec![Witness::asserted(
        "A4 is not 2-nilpotent",
        !a4_nilpotent && a4_vacuous,
        format!(
            "O_2'(A4) has order {}; A4 record vacuous: {a4_vacuous}",
            a4.profile()?.prime(2).map_or(0, |r| r.op_prime_order)
        ),
    )];
    Ok((records, witnesses, Vec::new()))
}

pub(super) fn dihedral(corpus: &Corpus, params: &SuiteParams) -> Result<SuiteOutput> {
    let thresholds: Vec<(u64, MeanValue, crate::group::PermGroup)> = params
        .primes
        .iter()
        .map(|&p| Ok((p, dihedral_value(Mean::Ell, p)?, group::dihedral(2 * p)?)))
        .collect::<Result<_>>()?;
    let records = per_group(corpus, |e| {
        thresholds
            .iter()
            .filter(|(p, _, _)| e.order() % p == 0)
            .map(|(p, value, d2p)| {
                implication(
                    format!("l(G) >= l(D{}) => G = D{0} or G = O_{p} x O_{p}' with O_{p} cyclic", 2 * p),
                    &e.mean(Mean::Ell),
                    value,
                    |ord| ord != Ordering::Less,
                    "G = D_2p when equal; otherwise O_p x O_p' decomposition, O_p cyclic, p-nilpotent",
                    |ord| {
                        if ord == Ordering::Equal {
                            return Ok(e.order() == 2 * p && is_isomorphic_small(&e.group, d2p)?);
                        }
                        let d = structure::decomposes_as_op_times_opprime(&e.group, *p)?;
                        Ok(d.holds && d.op_cyclic && e.profile()?.p_nilpotent(*p))
                    },
                )
            })
            .collect()
    });

    let mut witnesses = Vec::new();
    for (p, value, d2p) in &thresholds {
        let nilpotent = structure::is_p_nilpotent(d2p, *p)?;
        let equal = cmp_means(&Mean::Ell.of(d2p), value)? == Ordering::Equal;
        witnesses.push(Witness::asserted(
            format!("D{} is not {p}-nilpotent", 2 * p),
            !nilpotent && equal,
            format!(
                "{p}-nilpotent: {nilpotent}; l(D{}) equals the closed form: {equal}",
                2 * p
            ),
        ));
    }
    let c5q8 = entry(corpus, "C5xQ8")?;
    let ord = cmp_means(&c5q8.mean(Mean::Ell), &dihedral_value(Mean::Ell, 5)?)?;
    let d = structure::decomposes_as_op_times_opprime(&c5q8.group, 5)?;
    witnesses.push(Witness::asserted(
        "C5xQ8 exceeds l(D10) and splits as O_5 x O_5'",
        ord == Ordering::Greater && d.holds && d.op_cyclic,
        format!(
            "{}; |O_5| = {}, |O_5'| = {}",
            shown(
                Mean::Ell,
                "C5xQ8",
                &c5q8.mean(Mean::Ell),
                ord,
                "D10",
                &dihedral_value(Mean::Ell, 5)?
            ),
            d.op_order,
            d.op_prime_order
        ),
    ));
    let f73 = entry(corpus, "F(7,3)")?;
    let ord = cmp_means(&f73.mean(Mean::Ell), &dihedral_value(Mean::Ell, 7)?)?;
    witnesses.push(Witness::asserted(
        "F(7,3) lies below l(D14)",
        ord == Ordering::Less,
        shown(
            Mean::Ell,
            "F(7,3)",
            &f73.mean(Mean::Ell),
            ord,
            "D14",
            &dihedral_value(Mean::Ell, 7)?,
        ),
    ));
    Ok((records, witnesses, equality_anomalies(corpus)))
}

/// Corpus groups sharing `l` with a dihedral group of the corpus while having
/// different element-order statistics.
fn equality_anomalies(corpus: &Corpus) -> Vec<Anomaly> {
    let mut by_value: BTreeMap<String, Vec<&CorpusEntry>> = BTreeMap::new();
    for e in corpus.iter() {
        by_value
            .entry(e.invariants.ell.to_string())
            .or_default()
            .push(e);
    }
    let mut out = Vec::new();
    for (value, group) in &by_value {
        for d in group
            .iter()
            .filter(|e| matches!(e.expr, GroupExpr::Dihedral(_)))
        {
            for e in group.iter().filter(|e| e.spec != d.spec) {
                if e.group.order_statistics() != d.group.order_statistics() {
                    out.push(Anomaly {
                        spec: e.spec.clone(),
                        dihedral: d.spec.clone(),
                        value: value.clone(),
                    });
                }
            }
        }
    }
    out
}

pub(super) fn small_primes(corpus: &Corpus, params: &SuiteParams) -> Result<SuiteOutput> {
    let mut thresholds = Vec::new();
    for f in Mean::BOTH {
        for &p in params.primes.iter().filter(|&&p| p <= 13) {
            thresholds.push((f, p, dihedral_value(f, p)?));
        }
    }
    let records = per_group(corpus, |e| {
        thresholds
            .iter()
            .filter(|(_, p, _)| e.order() % p == 0)
            .map(|(f, p, value)| {
                let predicate = match p {
                    3 => "cyclic",
                    5 => "nilpotent",
                    _ => "supersoluble",
                };
                implication(
                    format!("{0}(G) > {0}(D{1}) => {predicate}", f.symbol(), 2 * p),
                    &e.mean(*f),
                    value,
                    greater,
                    predicate,
                    |_| {
                        let s = e.profile()?;
                        Ok(match p {
                            3 => s.cyclic,
                            5 => s.nilpotent,
                            _ => s.supersoluble,
                        })
                    },
                )
            })
            .collect()
    });

    let mut witnesses = Vec::new();
    for f in Mean::BOTH {
        for (spec, p, holds, what) in [
            (
                "C5xQ8",
                5,
                (|s: &StructureProfile| s.nilpotent && !s.cyclic) as Predicate,
                "nilpotent, not cyclic",
            ),
            (
                "C7xS3",
                7,
                |s: &StructureProfile| s.supersoluble && !s.nilpotent,
                "supersoluble, not nilpotent",
            ),
        ] {
            let g = entry(corpus, spec)?;
            let t = dihedral_value(f, p)?;
            let ord = cmp_means(&g.mean(f), &t)?;
            witnesses.push(Witness::asserted(
                format!("{spec} exceeds {}(D{}) and is {what}", f.symbol(), 2 * p),
                ord == Ordering::Greater && holds(g.profile()?),
                shown(f, spec, &g.mean(f), ord, &format!("D{}", 2 * p), &t),
            ));
        }
    }
    Ok((records, witnesses, Vec::new()))
}

pub(super) fn corollaries(corpus: &Corpus, params: &SuiteParams) -> Result<SuiteOutput> {
    let records = per_group(corpus, |e| {
        let n = e.order();
        let primes = prime_divisors(n);
        let l = e.mean(Mean::Ell);
        let mut checks = Vec::new();
        if primes.len() <= 2 {
            for &p in primes.iter().filter(|&&p| p != 2) {
                let Ok(t) = dihedral_value(Mean::Ell, p) else {
                    continue;
                };
                checks.push(implication(
                    format!(
                        "|G| has two prime divisors, l(G) > l(D{}) => nilpotent",
                        2 * p
                    ),
                    &l,
                    &t,
                    greater,
                    "nilpotent",
                    |_| Ok(e.profile()?.nilpotent),
                ));
            }
        }
        if n > 1 && n % 2 == 1 {
            let p = primes[0];
            if let Ok(t) = dihedral_value(Mean::Ell, p) {
                checks.push(implication(
                    format!("odd order, l(G) > l(D{}) => cyclic", 2 * p),
                    &l,
                    &t,
                    greater,
                    "cyclic",
                    |_| Ok(e.group.is_cyclic()),
                ));
                if primes.len() as u64 <= p.div_ceil(2) {
                    checks.push(implication(
                        format!(
                            "odd order, at most (p+1)/2 primes, cyclic => l(G) > l(D{})",
                            2 * p
                        ),
                        &l,
                        &t,
                        |_| e.group.is_cyclic(),
                        "l(G) > l(D_2p)",
                        |ord| Ok(ord == Ordering::Greater),
                    ));
                }
            }
        }
        checks
    });

    let c315 = entry(corpus, "C315")?;
    let t = dihedral_value(Mean::Ell, 3)?;
    let ord = cmp_means(&c315.mean(Mean::Ell), &t)?;
    let sweep = cyclic_few_divisors(params.cyclic_sweep_limit)?;
    let f73 = entry(corpus, "F(7,3)")?;
    let ord73 = cmp_means(&f73.mean(Mean::Ell), &dihedral_value(Mean::Ell, 7)?)?;
    let witnesses = vec![
        Witness::asserted(
            "C315 is cyclic with l(C315) < l(D6)",
            c315.group.is_cyclic() && ord == Ordering::Less,
            format!(
                "{}; three prime divisors exceed (3+1)/2",
                shown(Mean::Ell, "C315", &c315.mean(Mean::Ell), ord, "D6", &t)
            ),
        ),
        Witness::asserted(
            format!(
                "odd cyclic n <= {} with few prime divisors exceed l(D_2p)",
                params.cyclic_sweep_limit
            ),
            sweep.holds(),
            sweep.detail("values of n"),
        ),
        Witness::asserted(
            "F(7,3) is odd, below l(D14), and not cyclic",
            ord73 == Ordering::Less && !f73.group.is_cyclic(),
            shown(
                Mean::Ell,
                "F(7,3)",
                &f73.mean(Mean::Ell),
                ord73,
                "D14",
                &dihedral_value(Mean::Ell, 7)?,
            ),
        ),
    ];
    Ok((records, witnesses, Vec::new()))
}

fn lemma_checks(e: &CorpusEntry, params: &SuiteParams) -> Vec<Check> {
    let g = &e.group;
    let n = e.order();
    let nontrivial = n > 1;
    let (psi_dd, l) = (e.mean(Mean::PsiDd), e.mean(Mean::Ell));
    let mut checks = Vec::new();

    checks.push(implication(
        "0 < l(G) <= psi''(G)".into(),
        &l,
        &psi_dd,
        |_| nontrivial,
        "l <= psi''",
        |ord| Ok(ord != Ordering::Greater),
    ));
    checks.push(implication(
        "psi''(G) < 1".into(),
        &psi_dd,
        &rational(1, 1),
        |_| nontrivial,
        "psi'' < 1",
        |ord| Ok(ord == Ordering::Less),
    ));
    checks.push(assertion(
        "arithmetic mean >= geometric mean",
        true,
        "AM >= GM",
        || Ok(means(g).am_vs_gm()? != Ordering::Less),
    ));

    if g.order() <= params.lattice_cap {
        let normals = structure::normal_subgroups_with_cap(g, params.lattice_cap);
        let proper: Vec<_> = normals
            .iter()
            .filter(|h| !h.is_trivial() && !h.is_whole())
            .collect();
        for f in Mean::BOTH {
            let mut worst: Option<String> = None;
            for h in &proper {
                let outcome = g
                    .quotient(h)
                    .map_err(Error::from)
                    .and_then(|q| cmp_means(&f.of(&q), &e.mean(f)));
                match outcome {
                    Ok(Ordering::Greater) => {}
                    Ok(ord) => {
                        worst = Some(format!(
                            "|N| = {}: {}(G/N) {} {}(G)",
                            h.order(),
                            f.symbol(),
                            relation_symbol(ord),
                            f.symbol()
                        ));
                        break;
                    }
                    Err(err) => {
                        worst = Some(format!("|N| = {}: {err}", h.order()));
                        break;
                    }
                }
            }
            let label = format!(
                "{0}(G) < {0}(G/N) for {1} proper nontrivial normal N",
                f.symbol(),
                proper.len()
            );
            let mut c = assertion(
                label,
                !proper.is_empty(),
                "strict quotient inequality",
                || Ok(worst.is_none()),
            );
            if let Some(w) = worst {
                c.predicate = format!("strict quotient inequality; {w}");
            }
            checks.push(c);
        }
    }

    if g.is_cyclic() {
        for f in Mean::BOTH {
            let mut bad = None;
            for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
                let x = (0..g.order() as u32)
                    .find(|&x| g.element_order(x) == d)
                    .expect("cyclic group");
                let outcome = g
                    .cyclic_subgroup(x)
                    .to_group()
                    .map_err(Error::from)
                    .and_then(|k| cmp_means(&e.mean(f), &f.of(&k)));
                if !matches!(outcome, Ok(Ordering::Less)) {
                    bad = Some(d);
                    break;
                }
            }
            let mut c = assertion(
                format!("{0}(C_n) < {0}(K) for proper K", f.symbol()),
                n > 1,
                "proper subgroups have larger mean",
                || Ok(bad.is_none()),
            );
            if let Some(d) = bad {
                c.predicate = format!("proper subgroups have larger mean; fails for |K| = {d}");
            }
            checks.push(c);
        }
    }

    let factors = e.expr.factors();
    let orders: Vec<u64> = factors.iter().filter_map(GroupExpr::order).collect();
    let coprime = factors.len() > 1
        && orders.len() == factors.len()
        && orders.iter().enumerate().all(|(i, a)| {
            orders[i + 1..]
                .iter()
                .all(|b| num_integer::gcd(*a, *b) == 1)
        });
    if factors.len() > 1 {
        for f in Mean::BOTH {
            checks.push(assertion(
                format!("{0}(G x H) = {0}(G) {0}(H) for coprime factors", f.symbol()),
                coprime,
                "multiplicativity",
                || {
                    let mut product = match f {
                        Mean::PsiDd => rational(1, 1),
                        Mean::Ell => MeanValue::Real(crate::exact::FactoredReal::one()),
                    };
                    for x in factors {
                        product = product.mul(&f.of(&x.build()?)).expect("same mean");
                    }
                    Ok(product == e.mean(f))
                },
            ));
        }
    }

    let cyclic_index = n / g.order_statistics().max_order();
    for f in Mean::BOTH {
        checks.push(implication(
            format!("{0}(G) <= 1 / min [G : <x>]", f.symbol()),
            &e.mean(f),
            &rational(1, cyclic_index),
            |_| true,
            "an element of index below 1/alpha exists for every alpha < f(G)",
            |ord| Ok(ord != Ordering::Greater),
        ));
    }

    for &p in &params.primes {
        let Ok(t) = dihedral_value(Mean::Ell, p) else {
            continue;
        };
        checks.push(implication(
            format!("l(G) > l(D{}) => some [G : <x>] < 1 / l(D{0})", 2 * p),
            &l,
            &t,
            greater,
            "index below 1/alpha",
            |_| Ok(cmp_means(&t, &rational(1, cyclic_index))? == Ordering::Less),
        ));
    }

    for p in prime_divisors(n) {
        for f in Mean::BOTH {
            checks.push(implication(
                format!(
                    "{}(G) > 1/{p} => Sylow {p}-subgroup normal and cyclic",
                    f.symbol()
                ),
                &e.mean(f),
                &rational(1, p),
                greater,
                "normal cyclic Sylow subgroup",
                |_| {
                    let r = e.profile()?.prime(p).expect("p divides |G|").clone();
                    Ok(r.sylow_normal && r.sylow_cyclic)
                },
            ));
        }
        let lift = (|| -> Result<(bool, bool)> {
            let opp = structure::o_p_prime(g, p)?;
            let q = g.quotient(&opp)?;
            Ok((
                structure::is_p_nilpotent(&q, p)?,
                e.profile()?.p_nilpotent(p),
            ))
        })();
        checks.push(match lift {
            Ok((hyp, concl)) => assertion(
                format!("G/O_{p}'(G) {p}-nilpotent => G {p}-nilpotent"),
                hyp,
                "p-nilpotent",
                || Ok(concl),
            ),
            Err(err) => assertion(
                format!("G/O_{p}'(G) {p}-nilpotent => G {p}-nilpotent"),
                true,
                "p-nilpotent",
                || Err(err),
            ),
        });
    }
    checks
}

pub(super) fn lemmas(corpus: &Corpus, params: &SuiteParams) -> Result<SuiteOutput> {
    let records = per_group(corpus, |e| lemma_checks(e, params));

    let mut witnesses = Vec::new();
    let sweeps = [
        (
            format!(
                "l(D_2p) > 1/p for odd primes p <= {}",
                params.prime_sweep_limit
            ),
            dihedral_above_inverse_p(params.prime_sweep_limit)?,
            "primes",
        ),
        (
            "l(D_2p) strictly decreasing for odd primes p <= 200".to_string(),
            dihedral_decreasing(200)?,
            "consecutive pairs",
        ),
        (
            format!(
                "1/p < l(F(p,q)) < l(D_2p) for primes q >= 3, pq <= {}",
                params.semidirect_limit
            ),
            semidirect_sandwich(params.semidirect_limit)?,
            "groups",
        ),
        (
            format!(
                "odd cyclic n <= {} with few prime divisors exceed l(D_2p)",
                params.cyclic_sweep_limit
            ),
            cyclic_few_divisors(params.cyclic_sweep_limit)?,
            "values of n",
        ),
        (
            format!(
                "multiplicativity on coprime corpus pairs with |G||H| <= {}",
                params.pair_product_limit
            ),
            multiplicative_pairs(corpus, params.pair_product_limit)?,
            "pairs",
        ),
    ];
    for (name, outcome, what) in sweeps {
        witnesses.push(Witness::asserted(
            name,
            outcome.holds(),
            outcome.detail(what),
        ));
    }

    for (p, base) in [(17u64, "A4"), (179, "A5")] {
        let b = entry(corpus, base)?;
        let product = MeanValue::Real(cyclic_prime_power(p, 1)?.ell)
            .mul(&b.mean(Mean::Ell))
            .expect("same mean");
        let t = dihedral_value(Mean::Ell, p)?;
        let ord = cmp_means(&product, &t)?;
        let spec = format!("C{p}x{base}");
        let g = CorpusEntry::parse(&spec)?;
        let (structural, what) = if base == "A4" {
            (!structure::is_supersoluble(&g.group)?, "not supersoluble")
        } else {
            (!structure::is_soluble(&g.group), "not soluble")
        };
        let enumerated = g.mean(Mean::Ell) == product;
        witnesses.push(Witness::asserted(
            format!("l(C{p}) l({base}) > l(D{}) and {spec} is {what}", 2 * p),
            ord == Ordering::Greater && structural && enumerated,
            format!(
                "{}; enumeration agrees: {enumerated}",
                shown(Mean::Ell, &spec, &product, ord, &format!("D{}", 2 * p), &t)
            ),
        ));
    }
    for (p, base) in [(13u64, "A4"), (173, "A5")] {
        let b = entry(corpus, base)?;
        let product = MeanValue::Real(cyclic_prime_power(p, 1)?.ell)
            .mul(&b.mean(Mean::Ell))
            .expect("same mean");
        let t = dihedral_value(Mean::Ell, p)?;
        let ord = cmp_means(&product, &t)?;
        witnesses.push(Witness::informational(
            format!("boundary l(C{p}) l({base}) vs l(D{})", 2 * p),
            shown(
                Mean::Ell,
                &format!("C{p}x{base}"),
                &product,
                ord,
                &format!("D{}", 2 * p),
                &t,
            ),
        ));
    }
    Ok((records, witnesses, Vec::new()))
}
