use centrum_core::harness::{corpus_default, run_all, CorpusEntry, Report, RowResult, RunOptions, Tier, TierFilter};
use centrum_core::properties::{check_property, verify_witness, PropertyId};
use centrum_core::{build_str, Error, Limits, Verdict};

fn only(ids: &[&str]) -> RunOptions {
    RunOptions {
        only: Some(ids.iter().map(|s| s.to_string()).collect()),
        ..RunOptions::default()
    }
}

fn row<'r>(report: &'r Report, theorem: &str, ring: &str) -> &'r centrum_core::harness::Row {
    report
        .rows
        .iter()
        .find(|r| r.theorem == theorem && r.ring == ring)
        .unwrap_or_else(|| panic!("no {theorem} row for {ring}"))
}

#[test]
fn standard_tier_is_clean() {
    let report = run_all(&corpus_default(), &RunOptions::default()).unwrap();
    assert_eq!(report.violations(), 0, "{}", report.render());
    assert!(report.mismatches.is_empty());
    assert!(report.rings >= 20);
    assert!(report.non_vacuous_theorems() >= 15);
    for id in report.fully_vacuous() {
        assert!(["T8", "T21"].contains(&id), "{id} is vacuous everywhere");
    }
    assert!(report.expectations_checked > 0);
}

#[test]
fn slow_tier_adds_only_the_large_ring() {
    let report = run_all(
        &corpus_default(),
        &RunOptions {
            tier: TierFilter::Slow,
            ..RunOptions::default()
        },
    )
    .unwrap();
    assert_eq!(report.rings, 1);
    assert!(report.rows.iter().all(|r| r.ring == "Ex2.14"));
    assert_eq!(report.violations(), 0);
    assert!(report.is_clean());
}

#[test]
fn abelian_ring_that_is_not_central_reduced_is_flagged() {
    let report = run_all(&corpus_default(), &only(&["T12"])).unwrap();
    let r = row(&report, "T12", "Ex2.18");
    assert_eq!(r.result, RowResult::Vacuous);
    assert!(r.detail.contains("abelian holds"), "{}", r.detail);
    assert_eq!(report.violations(), 0);
}

#[test]
fn trivial_extension_rows() {
    let report = run_all(&corpus_default(), &only(&["T18"])).unwrap();
    assert!(report.rows.iter().all(|r| r.theorem == "T18"));
    assert_eq!(row(&report, "T18", "TrivZ4").result, RowResult::Pass);
    let ut = row(&report, "T18", "TrivUT2Z2");
    assert_eq!(ut.result, RowResult::Pass);
    assert!(ut.detail.contains("not commutative") && ut.detail.contains("T(R,R) not central_reduced"));

    // (0, E12) is nilpotent and does not commute with (E11, 0).
    let t = build_str("Triv(UT(2, Z 2))", &Limits::default()).unwrap();
    let a = t.element_by_name("([[0,0],[0,0]],[[0,1],[0,0]])").unwrap();
    let x = t.element_by_name("([[1,0],[0,0]],[[0,0],[0,0]])").unwrap();
    assert!(verify_witness(&t, PropertyId::CentralReduced, &Verdict::fails(&[("a", a), ("x", x)])));
}

#[test]
fn domain_row_for_the_matrix_ring() {
    let report = run_all(&corpus_default(), &only(&["T5"])).unwrap();
    let r = row(&report, "T5", "Ex2.23b");
    assert_eq!(r.result, RowResult::Pass);
    assert!(r.detail.contains("not domain"));
    let m = build_str("Mat(2, Z 2)", &Limits::default()).unwrap();
    assert!(check_property(&m, PropertyId::Prime).is_favorable());
    let e12 = m.element_by_name("[[0,1],[0,0]]").unwrap();
    assert_eq!(m.mul(e12, e12), m.zero());
}

#[test]
fn empty_corpus_warns() {
    let report = run_all(&[], &RunOptions::default()).unwrap();
    assert_eq!(report.rings, 0);
    assert!(report.rows.is_empty());
    assert!(report.is_clean());
    assert!(report.render().contains("warning: empty corpus"));
}

#[test]
fn unknown_theorem_is_an_error() {
    match run_all(&corpus_default(), &only(&["T99"])) {
        Err(Error::UnknownTheorem(id)) => assert_eq!(id, "T99"),
        other => panic!("{:?}", other.map(|r| r.rows.len())),
    }
}

#[test]
fn wrong_expectation_is_reported() {
    let corpus = vec![CorpusEntry::new("Z4wrong", "Z 4", Tier::Standard, &[(PropertyId::Reduced, true)])];
    let report = run_all(&corpus, &only(&["T1"])).unwrap();
    assert_eq!(report.mismatches.len(), 1);
    assert!(!report.is_clean());
    assert!(report.render().contains("expectation ring=Z4wrong property=reduced expected=holds result=MISMATCH"));
}

#[test]
fn reports_are_deterministic() {
    let a = run_all(&corpus_default(), &RunOptions::default()).unwrap().render();
    let b = run_all(&corpus_default(), &RunOptions::default()).unwrap().render();
    assert_eq!(a, b);
}

#[test]
fn corpus_expressions_build() {
    for e in corpus_default() {
        let r = centrum_core::build(&e.expr).unwrap_or_else(|err| panic!("{}: {err}", e.name));
        for &(p, expected) in &e.expected {
            assert_eq!(check_property(&r, p).is_favorable(), expected, "{} {p}", e.name);
        }
    }
}
