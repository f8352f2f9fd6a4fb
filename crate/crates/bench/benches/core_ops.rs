use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gsg_bench::{chain_min, parity};
use gsg_core::search::{enumerate_orders, enumerate_tables, run_search, Predicate, SearchQuery};
use gsg_core::substructs::filter_generated;
use gsg_core::theorem::equivalence_verdict;

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_tables n=3 k=1", |b| {
        b.iter(|| enumerate_tables(black_box(3), black_box(1)).unwrap().count())
    });
    c.bench_function("enumerate n=2 k=2 with orders", |b| {
        b.iter(|| {
            enumerate_tables(black_box(2), black_box(2))
                .unwrap()
                .map(|s| enumerate_orders(&s).len())
                .sum::<usize>()
        })
    });
}

fn condition_checking(c: &mut Criterion) {
    let two = parity();
    c.bench_function("equivalence_verdict n=2 k=2", |b| {
        b.iter(|| equivalence_verdict(black_box(&two)).unwrap().consistent)
    });
    let five = chain_min(5);
    c.bench_function("equivalence_verdict chain n=5", |b| {
        b.iter(|| equivalence_verdict(black_box(&five)).unwrap().consistent)
    });
}

fn filters(c: &mut Criterion) {
    let subject = chain_min(10);
    c.bench_function("filter_generated chain n=10", |b| {
        b.iter(|| {
            (0..subject.n())
                .map(|a| filter_generated(black_box(&subject), a).count())
                .sum::<usize>()
        })
    });
}

fn searching(c: &mut Criterion) {
    c.bench_function("search C1 without C5 at n=2 k=1", |b| {
        b.iter(|| {
            let mut query = SearchQuery::new(2, 1);
            query.sat = vec![Predicate::Condition(gsg_core::ConditionId::C1)];
            query.unsat = vec![Predicate::Condition(gsg_core::ConditionId::C5)];
            run_search(black_box(&query)).unwrap().len()
        })
    });
}

criterion_group!(benches, enumeration, condition_checking, filters, searching);
criterion_main!(benches);
