use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use centrum_core::harness::{corpus_default, run_all, RunOptions};
use centrum_core::poly::{check_poly_property, PolyPropertyId};
use centrum_core::properties::{check_property, PropertyId};
use centrum_core::radicals::prime_radical;
use centrum_core::search::{search, SearchOptions};
use centrum_core::{build_str, Limits};

fn construction(c: &mut Criterion) {
    let limits = Limits::default();
    let mut g = c.benchmark_group("build");
    for src in ["Mat(2, Z 2)", "Triv(UT(2, Z 2))", "CongMat(4)"] {
        g.bench_with_input(BenchmarkId::from_parameter(src), src, |b, src| {
            b.iter(|| build_str(black_box(src), &limits).unwrap())
        });
    }
    g.finish();
}

fn properties(c: &mut Criterion) {
    let limits = Limits::default();
    let mut g = c.benchmark_group("property");
    for src in ["EqDiagUT(3, Z 2)", "CongMat(4)"] {
        let r = build_str(src, &limits).unwrap();
        for p in [PropertyId::CentralReduced, PropertyId::WeaklySemicommutative, PropertyId::RightPp] {
            g.bench_function(format!("{p}/{src}"), |b| {
                b.iter_batched(|| r.clone(), |r| check_property(&r, p), criterion::BatchSize::SmallInput)
            });
        }
        g.bench_function(format!("prime_radical/{src}"), |b| b.iter(|| prime_radical(black_box(&r))));
    }
    g.finish();
}

fn polynomial_search(c: &mut Criterion) {
    let limits = Limits::default();
    let mut g = c.benchmark_group("armendariz");
    g.sample_size(10);
    for (src, p) in [
        ("PolyNil(Z 2, 2)", PolyPropertyId::Armendariz),
        ("PolyNil(Z 4, 2)", PolyPropertyId::Armendariz),
        ("PolyNil(Z 2, 3)", PolyPropertyId::WeakArmendariz),
        ("PolyNil(Z 2, 2)", PolyPropertyId::NilArmendariz),
    ] {
        let r = build_str(src, &limits).unwrap();
        g.bench_function(format!("{p}/{src}"), |b| {
            b.iter(|| check_poly_property(&r, p, 2, limits.budget).unwrap())
        });
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    let corpus = corpus_default();
    g.bench_function("theorems/standard", |b| b.iter(|| run_all(&corpus, &RunOptions::default()).unwrap()));
    let opts = SearchOptions {
        max_order: 16,
        satisfy: vec![PropertyId::CentralReduced],
        violate: vec![PropertyId::Reduced],
        ..SearchOptions::default()
    };
    g.bench_function("search/16", |b| b.iter(|| search(&opts, &Limits::default()).unwrap()));
    g.finish();
}

criterion_group!(benches, construction, properties, polynomial_search, suites);
criterion_main!(benches);
