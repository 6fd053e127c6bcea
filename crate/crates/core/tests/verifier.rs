use std::collections::HashSet;

use ordmeans::verifier::{run_suite, Corpus, CorpusParams, Families, Status, Suite, SuiteParams};

fn small_corpus() -> Corpus {
    Corpus::build(CorpusParams {
        max_order: 60,
        families: Families::ALL,
    })
    .unwrap()
}

fn fast_params() -> SuiteParams {
    SuiteParams {
        cyclic_sweep_limit: 2_000,
        prime_sweep_limit: 500,
        semidirect_limit: 300,
        pair_product_limit: 300,
        ..SuiteParams::default()
    }
}

#[test]
fn corpus_has_unique_sorted_specs_and_named_members() {
    let c = small_corpus();
    let specs: HashSet<&str> = c.iter().map(|e| e.spec.as_str()).collect();
    assert_eq!(specs.len(), c.len());
    let orders: Vec<u64> = c.iter().map(|e| e.order()).collect();
    assert!(orders.windows(2).all(|w| w[0] <= w[1]));
    for spec in ["A5", "D58", "F(7,3)", "Q8", "S4", "C2xC2", "C60"] {
        assert!(c.get(spec).is_some(), "{spec} missing");
    }
    assert!(Corpus::build(CorpusParams {
        max_order: 7,
        families: Families::ALL
    })
    .is_err());
}

#[test]
fn default_corpus_contains_the_sharpness_groups() {
    let specs = ordmeans::verifier::corpus_specs(&CorpusParams::default());
    let names: Vec<String> = specs.iter().map(|e| e.to_string()).collect();
    for spec in ["C5xQ8", "S3xC3", "C7xS3", "F(31,5)", "S5"] {
        assert!(names.iter().any(|n| n == spec), "{spec} missing");
    }
}

#[test]
fn every_suite_passes_and_is_deterministic() {
    let c = small_corpus();
    let params = fast_params();
    for suite in Suite::ALL {
        let a = run_suite(suite, &c, &params).unwrap();
        let b = run_suite(suite, &c, &params).unwrap();
        assert!(
            a.passed(),
            "{suite}: {:?}",
            a.failures().map(|r| &r.spec).collect::<Vec<_>>()
        );
        assert_eq!(a.to_json(), b.to_json(), "{suite} differs between runs");
        let s = a.summary();
        assert_eq!(s.groups, c.len());
        assert_eq!(s.checked + s.vacuous + s.failed, c.len(), "{suite}");
        assert!(a.witnesses.iter().all(|w| w.holds), "{suite}");
    }
}

#[test]
fn equality_case_is_reported_as_an_anomaly() {
    let c = Corpus::build(CorpusParams {
        max_order: 18,
        families: Families::ALL,
    })
    .unwrap();
    let r = run_suite(Suite::Dihedral, &c, &fast_params()).unwrap();
    assert!(r.passed());
    assert!(
        r.anomalies
            .iter()
            .any(|a| a.spec == "S3xC3" && a.dihedral == "D18"),
        "{:?}",
        r.anomalies
    );
}

#[test]
fn reports_render_in_every_format() {
    let c = small_corpus();
    let r = run_suite(Suite::Cascade, &c, &fast_params()).unwrap();
    let csv = r.to_csv();
    assert!(csv.starts_with("spec,status,lhs,rhs,predicate"));
    assert_eq!(
        csv.lines().count(),
        1 + r
            .records
            .iter()
            .map(|rec| rec.checks.len().max(1))
            .sum::<usize>()
    );
    let text = r.to_text(false);
    assert!(text.contains("cascade"));
    let json = r.to_json();
    assert_eq!(json["results"].as_array().unwrap().len(), c.len());
    let a5 = r.record("A5").unwrap();
    assert_eq!(a5.status(), Status::Vacuous);
}
