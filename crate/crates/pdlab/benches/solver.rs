//! Solver benchmarks: the parallel prefix-split driver against the
//! sequential fallback on an exhaustive exclusion workload, and the pruned
//! solver against the brute-force oracle.
//!
//! With `--no-default-features` the parallel variants degrade to the
//! sequential path, which makes the comparison a no-op by construction.

use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pdlab::dist::all_pairs_distances;
use pdlab::graph::{build, FamilySpec};
use pdlab::naive::naive_partition_dimension;
use pdlab::solver::{
    exists_resolving_partition, partition_dimension, KOutcome, SolveOpts, SymmetryMode,
};

/// Exhaustive k = 3 exclusion on corona(complete:2, wheel:5): an UNSAT
/// search that visits its whole tree, the workload the prefix split targets.
fn bench_k_exclusion(c: &mut Criterion) {
    let spec = FamilySpec::parse("corona:complete:2,wheel:5").unwrap();
    let g = build(&spec).unwrap();
    let dist = all_pairs_distances(&g);
    let tag = spec.family_tag();

    let mut group = c.benchmark_group("k3_exclusion_k2w5");
    group
        .sample_size(10)
        .measurement_time(Duration::from_secs(20));
    for (label, threads) in [("sequential", 1usize), ("parallel", 4)] {
        group.bench_with_input(BenchmarkId::from_parameter(label), &threads, |b, &t| {
            let opts = SolveOpts {
                threads: Some(t),
                symmetry: SymmetryMode::Off,
                ..SolveOpts::default()
            };
            b.iter(|| {
                let (outcome, _) = exists_resolving_partition(&g, &dist, 3, &opts, tag).unwrap();
                assert_eq!(outcome, KOutcome::Exhausted);
            });
        });
    }
    group.finish();
}

/// Full pd decision with symmetry breaking on versus off.
fn bench_symmetry(c: &mut Criterion) {
    let spec = FamilySpec::parse("corona:complete:3,wheel:3").unwrap();
    let g = build(&spec).unwrap();
    let tag = spec.family_tag();

    let mut group = c.benchmark_group("pd_k3w3");
    group
        .sample_size(10)
        .measurement_time(Duration::from_secs(20));
    for (label, symmetry) in [
        ("symmetry-off", SymmetryMode::Off),
        ("symmetry-family", SymmetryMode::Family),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(label), &symmetry, |b, &sym| {
            let opts = SolveOpts {
                threads: Some(1),
                symmetry: sym,
                ..SolveOpts::default()
            };
            b.iter(|| {
                let result = partition_dimension(&g, &opts, tag).unwrap();
                assert_eq!(result.pd(), Some(5));
            });
        });
    }
    group.finish();
}

/// Pruned solver against the brute-force oracle on a small wheel.
fn bench_solver_vs_oracle(c: &mut Criterion) {
    let g = build(&FamilySpec::parse("wheel:7").unwrap()).unwrap();

    let mut group = c.benchmark_group("pd_wheel7");
    group.sample_size(10);
    group.bench_function("pruned", |b| {
        let opts = SolveOpts {
            threads: Some(1),
            ..SolveOpts::default()
        };
        b.iter(|| partition_dimension(&g, &opts, None).unwrap().pd().unwrap());
    });
    group.bench_function("naive", |b| {
        b.iter(|| naive_partition_dimension(&g, 12).unwrap());
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_k_exclusion,
    bench_symmetry,
    bench_solver_vs_oracle
);
criterion_main!(benches);
