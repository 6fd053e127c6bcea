//! Group-theoretic invariants checked over a small corpus.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;

use ordmeans::exact::{cmp_reals, FactoredReal};
use ordmeans::invariants::{means, psi, psi_dd, rho};
use ordmeans::structure::{
    core_p, is_nilpotent, is_p_nilpotent, normal_subgroups, o_p_prime, prime_divisors, split_order,
    sylow, StructureProfile,
};
use ordmeans::verifier::{Corpus, CorpusParams, Families};

fn corpus() -> &'static Corpus {
    static C: OnceLock<Corpus> = OnceLock::new();
    C.get_or_init(|| {
        Corpus::build(CorpusParams {
            max_order: 120,
            families: Families::ALL,
        })
        .unwrap()
    })
}

#[test]
fn class_sizes_partition_and_divide() {
    for e in corpus().iter() {
        let g = &e.group;
        let n = g.order();
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), n, "{}", e.spec);
        assert!(sizes.iter().all(|s| n % s == 0), "{}", e.spec);
        assert_eq!(sizes[0], 1, "{}: identity class first", e.spec);
        assert_eq!(g.order_statistics().total() as usize, n, "{}", e.spec);
        assert_eq!(
            g.order_statistics(),
            &g.order_statistics_by_sweep(),
            "{}",
            e.spec
        );
    }
}

#[test]
fn element_orders_divide_group_order() {
    for e in corpus().iter() {
        let n = e.order();
        for &(k, c) in e.group.order_statistics().entries() {
            assert_eq!(n % k, 0, "{}: element order {k}", e.spec);
            // elements of order k come in blocks of phi(k)
            let phi = (1..=k).filter(|i| i.gcd(&k) == 1).count() as u64;
            assert_eq!(c % phi, 0, "{}: {c} elements of order {k}", e.spec);
        }
    }
}

#[test]
fn quotients_have_the_index_as_order() {
    for e in corpus().iter().filter(|e| e.order() <= 60) {
        let g = &e.group;
        for n in normal_subgroups(g).into_iter().filter(|n| !n.is_whole()) {
            assert!(g.is_normal(&n));
            let q = g.quotient(&n).unwrap();
            assert_eq!(
                q.order() * n.order(),
                g.order(),
                "{} / {}",
                e.spec,
                n.order()
            );
        }
    }
}

#[test]
fn means_respect_basic_bounds() {
    for e in corpus().iter() {
        let g = &e.group;
        let n = e.order();
        let m = means(g);
        assert_ne!(
            m.am_vs_gm().unwrap(),
            std::cmp::Ordering::Less,
            "{}",
            e.spec
        );
        assert!(psi(g) >= BigUint::from(2 * n - 1) || n == 1, "{}", e.spec);
        assert!(psi_dd(g) <= num_rational::BigRational::from_integer(1.into()));
        assert!(rho(g).primes().all(|p| n % p == 0), "{}", e.spec);
        let ell = &e.invariants.ell;
        if n > 1 {
            assert_eq!(
                cmp_reals(ell, &FactoredReal::one()).unwrap(),
                std::cmp::Ordering::Less,
                "{}",
                e.spec
            );
        }
    }
}

#[test]
fn coprime_products_multiply_statistics() {
    let small: Vec<_> = corpus().iter().filter(|e| e.order() <= 12).collect();
    for a in &small {
        for b in &small {
            let (m, n) = (a.order(), b.order());
            if m * n > 60 {
                continue;
            }
            let g = a.group.direct_product(&b.group).unwrap();
            assert_eq!(g.order() as u64, m * n);
            if m.gcd(&n) == 1 {
                assert_eq!(
                    psi(&g),
                    psi(&a.group) * psi(&b.group),
                    "{} x {}",
                    a.spec,
                    b.spec
                );
                let rg = rho(&g);
                let expected = rho(&a.group)
                    .pow(&BigUint::from(n))
                    .mul(&rho(&b.group).pow(&BigUint::from(m)));
                assert_eq!(rg, expected, "{} x {}", a.spec, b.spec);
            }
        }
    }
}

#[test]
fn structure_hierarchy_and_prime_data() {
    for e in corpus().iter() {
        let g = &e.group;
        let n = e.order();
        let profile = StructureProfile::of(g).unwrap();
        assert!(profile.hierarchy_holds(), "{}", e.spec);
        let all_p_nilpotent = prime_divisors(n)
            .iter()
            .all(|&p| is_p_nilpotent(g, p).unwrap());
        assert_eq!(is_nilpotent(g), all_p_nilpotent, "{}", e.spec);
        for p in prime_divisors(n) {
            let (pp, rest) = split_order(n, p);
            let s = sylow(g, p).unwrap();
            assert_eq!(s.order() as u64, pp, "{}: Sylow {p}", e.spec);
            let op = core_p(g, p).unwrap();
            assert!(
                g.is_normal(&op) && op.is_subgroup_of(&s),
                "{}: O_{p}",
                e.spec
            );
            let opp = o_p_prime(g, p).unwrap();
            assert!(g.is_normal(&opp), "{}", e.spec);
            assert_eq!(
                (opp.order() as u64).gcd(&p),
                1,
                "{}: O_{p}' is a p'-group",
                e.spec
            );
            assert_eq!(rest % opp.order() as u64, 0, "{}: O_{p}' order", e.spec);
            // p-nilpotent exactly when O_p' is a full complement
            assert_eq!(
                is_p_nilpotent(g, p).unwrap(),
                opp.order() as u64 == rest,
                "{}: {p}",
                e.spec
            );
        }
    }
}

#[test]
fn known_structure() {
    let c = corpus();
    let profile = |s: &str| StructureProfile::of(&c.get(s).unwrap().group).unwrap();
    assert!(!profile("A4").supersoluble && profile("A4").soluble);
    assert!(!profile("A5").soluble);
    assert!(profile("S3").supersoluble && !profile("S3").nilpotent);
    assert!(profile("Q8").nilpotent && !profile("Q8").abelian);
    assert!(!profile("A4").p_nilpotent(2) && profile("A4").p_nilpotent(3));
    assert!(profile("F(7,3)").supersoluble);
}
