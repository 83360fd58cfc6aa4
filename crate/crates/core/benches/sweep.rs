use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use supercong::curves::{char_sum, CubicCurve};
use supercong::par::Parallelism;
use supercong::theorems::{select, verify_range, VerifyOptions};
use supercong::PrimeCtx;

fn sweep(c: &mut Criterion) {
    let specs = select("all-proven").unwrap();
    let opts = VerifyOptions::default();
    let mut group = c.benchmark_group("verify_range_5_300");
    group.sample_size(10);
    for (name, mode) in [
        ("sequential", Parallelism::Sequential),
        ("parallel", Parallelism::Auto),
    ] {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| verify_range(&specs, 5, 300, &opts, mode).unwrap())
        });
    }
    group.finish();
}

fn charsum(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_sum");
    for p in [1009u64, 65537, 1_000_003] {
        let ctx = PrimeCtx::new(p).unwrap();
        let curve = CubicCurve::new(21, 112, 0, &ctx);
        group.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, _| {
            b.iter(|| char_sum(&curve, &ctx))
        });
    }
    group.finish();
}

criterion_group!(benches, sweep, charsum);
criterion_main!(benches);
