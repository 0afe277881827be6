use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use skewalg::checks::{associativity_suites, daha_suite, one_sided_suite};
use skewalg::par::Execution;

fn modes() -> [(&'static str, Execution); 2] {
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)]
}

fn bench(c: &mut Criterion) {
    let mut g = c.benchmark_group("suites");
    g.sample_size(10);
    for (name, mode) in modes() {
        g.bench_with_input(BenchmarkId::new("daha", name), &mode, |b, &m| {
            b.iter(|| daha_suite(1, 5, m))
        });
        g.bench_with_input(BenchmarkId::new("associativity", name), &mode, |b, &m| {
            b.iter(|| associativity_suites(1, 20, m))
        });
        g.bench_with_input(BenchmarkId::new("one-sided", name), &mode, |b, &m| {
            b.iter(|| one_sided_suite(1, 10, m))
        });
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
