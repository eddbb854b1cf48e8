//! Compares the parallel chain sweep against the sequential fallback on
//! the full builtin catalog. With the `parallel` feature disabled the two
//! benchmarks measure the same code path.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use meandiv::inequalities::builtin_chains;
use meandiv::sweep::{sweep_chains, sweep_chains_sequential, SweepConfig};

fn bench_sweeps(c: &mut Criterion) {
    let chains = builtin_chains();
    let mut group = c.benchmark_group("chain_sweep");
    for seeds in [1_000u64, 10_000] {
        let cfg = SweepConfig {
            seeds,
            ..SweepConfig::default()
        };
        group.bench_with_input(BenchmarkId::new("parallel", seeds), &cfg, |b, cfg| {
            b.iter(|| sweep_chains(&chains, cfg).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", seeds), &cfg, |b, cfg| {
            b.iter(|| sweep_chains_sequential(&chains, cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweeps);
criterion_main!(benches);
