use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use subword_core::search::{run_search, SearchConfig, SearchRun};

fn exhaustive(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_entropy");
    group.sample_size(10);
    for n in [12, 14] {
        for hints in [true, false] {
            let config = SearchConfig { use_hints: hints, ..SearchConfig::default() };
            let id = BenchmarkId::new(if hints { "hints" } else { "no_hints" }, n);
            group.bench_with_input(id, &n, |b, &n| {
                b.iter(|| match run_search(n, &config).unwrap() {
                    SearchRun::Completed(r) => r.min_maxocc,
                    SearchRun::Interrupted { .. } => unreachable!(),
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, exhaustive);
criterion_main!(benches);
