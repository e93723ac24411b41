use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gapord::harness::{default_spec, run_suite};

const SUITES: &[(&str, usize)] = &[
    ("seq-equivalence", 1),
    ("ord-laws", 5_000),
    ("reflect-left-set", 1_000),
    ("reify-descent", 100),
];

fn parallel_vs_sequential(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites");
    group.sample_size(10).measurement_time(Duration::from_secs(5));
    for &(name, samples) in SUITES {
        let mut spec = default_spec(name).expect("registered suite");
        spec.samples = samples;
        for (mode, parallel) in [("parallel", true), ("sequential", false)] {
            spec.parallel = parallel;
            group.bench_with_input(BenchmarkId::new(mode, name), &spec, |b, spec| {
                b.iter(|| black_box(run_suite(name, spec).expect("valid spec")))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, parallel_vs_sequential);
criterion_main!(benches);
