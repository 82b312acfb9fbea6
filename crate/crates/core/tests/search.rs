use centrum_core::properties::PropertyId;
use centrum_core::search::{search, Generator, SearchOptions};
use centrum_core::{Error, Limits};

fn opts(max_order: usize, satisfy: &[PropertyId], violate: &[PropertyId]) -> SearchOptions {
    SearchOptions {
        max_order,
        satisfy: satisfy.to_vec(),
        violate: violate.to_vec(),
        ..SearchOptions::default()
    }
}

#[test]
fn central_reduced_but_not_reduced() {
    let out = search(&opts(16, &[PropertyId::CentralReduced], &[PropertyId::Reduced]), &Limits::default()).unwrap();
    let names: Vec<String> = out.hits.iter().map(|h| h.expr.to_string()).collect();
    assert!(names.contains(&"PolyNil(Z 2, 2)".to_string()), "{names:?}");
    assert_eq!(out.hits[0].order, 4);
    assert!(out.hits.windows(2).all(|w| w[0].order <= w[1].order));
}

#[test]
fn abelian_but_not_central_reduced() {
    let out = search(&opts(32, &[PropertyId::Abelian], &[PropertyId::CentralReduced]), &Limits::default()).unwrap();
    assert!(!out.hits.is_empty());
    assert!(out.hits.iter().all(|h| h.order <= 32));
}

#[test]
fn nothing_prime_and_not_central_reduced_at_order_four() {
    let out = search(&opts(4, &[PropertyId::Prime], &[PropertyId::CentralReduced]), &Limits::default()).unwrap();
    assert!(out.hits.is_empty());
    assert!(out.examined > 0);
    assert!(out.warning.is_none());
}

#[test]
fn order_one_has_no_candidates() {
    let out = search(&opts(1, &[PropertyId::Reduced], &[]), &Limits::default()).unwrap();
    assert!(out.hits.is_empty());
    assert!(out.warning.is_some());
}

#[test]
fn generator_filter_restricts_expressions() {
    let o = SearchOptions {
        generators: vec![Generator::Z, Generator::Prod],
        ..opts(12, &[PropertyId::Reduced], &[])
    };
    let out = search(&o, &Limits::default()).unwrap();
    for h in &out.hits {
        let s = h.expr.to_string();
        assert!(s.starts_with("Z ") || s.starts_with("Prod("), "{s}");
    }
    // Z 6 and Prod(Z 2, Z 3) share a fingerprint; only one is listed.
    assert_eq!(out.hits.iter().filter(|h| h.order == 6).count(), 1);
}

#[test]
fn cap_above_global_limit_is_rejected() {
    let limits = Limits {
        max_order: 8,
        ..Limits::default()
    };
    assert!(matches!(
        search(&opts(16, &[PropertyId::Reduced], &[]), &limits),
        Err(Error::OrderCap { order: 16, cap: 8 })
    ));
}
