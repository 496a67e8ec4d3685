use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use seifert_bench::chain;
use seifert_core::blanchfield::isometry_search;
use seifert_core::sequiv::{chain_search, compare, ChainBudget, CompareBudget};
use seifert_core::{IsometryBudget, SeifertMatrix};

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    for g in [1, 2] {
        let ch = chain(g, 3);
        let target = ch.apply().unwrap();
        group.bench_with_input(BenchmarkId::new("chain_search", 2 * g), &(ch.start.clone(), target), |b, (a, t)| {
            b.iter(|| chain_search(a, t, &ChainBudget::default()))
        });
    }
    let t = SeifertMatrix::trefoil();
    let e = chain(1, 2).apply().unwrap();
    group.bench_function("compare/trefoil_vs_figure_eight", |b| {
        b.iter(|| compare(&t, &SeifertMatrix::figure_eight(), &CompareBudget::default()))
    });
    group.bench_function("isometry_search/genus_1", |b| {
        let start = chain(1, 2).start;
        b.iter(|| isometry_search(&start, &e, &IsometryBudget::default()))
    });
    group.finish();
}

criterion_group!(benches, searches);
criterion_main!(benches);
