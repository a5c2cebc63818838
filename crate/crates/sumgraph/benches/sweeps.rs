//! Parallel-vs-sequential timings for the three batch workloads: edge-sum
//! partitions over random label sets, constructive colorings over the
//! interval grid, and the exact solver across the small-family instances.
//!
//! `par::map_collect` follows the `parallel` feature (rayon by default);
//! `par::map_collect_seq` is the always-sequential baseline.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use sumgraph::coloring::{
    exact_chromatic_index, theorem_coloring, verify_coloring, DEFAULT_EDGE_BUDGET,
};
use sumgraph::edge_sum::EdgeSumPartition;
use sumgraph::graph::IntegralSumGraph;
use sumgraph::par;
use sumgraph::suite::random_label_sets;

fn partition_workload(labels: &[i64]) -> usize {
    let g = IntegralSumGraph::from_labels(labels.iter().copied()).unwrap();
    EdgeSumPartition::of(&g).chromatic_number()
}

fn coloring_workload(&(r, s): &(i64, i64)) -> bool {
    let g = IntegralSumGraph::interval(r, s).unwrap();
    let c = theorem_coloring(r, s).unwrap();
    verify_coloring(&g, &c).unwrap().is_valid()
}

fn solver_workload(&(r, s): &(i64, i64)) -> usize {
    let g = IntegralSumGraph::interval(r, s).unwrap();
    exact_chromatic_index(&g, DEFAULT_EDGE_BUDGET).unwrap().chi
}

fn bench_partition_sweep(c: &mut Criterion) {
    let sets = random_label_sets(500);
    let mut group = c.benchmark_group("partition_sweep");
    group.bench_function("sequential", |b| {
        b.iter(|| par::map_collect_seq(black_box(&sets), |s| partition_workload(s)))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| par::map_collect(black_box(&sets), |s| partition_workload(s)))
    });
    group.finish();
}

fn bench_coloring_sweep(c: &mut Criterion) {
    let mut grid = Vec::new();
    for s in 2..=10i64 {
        for r in -s..=-1 {
            grid.push((r, s));
        }
    }
    let mut group = c.benchmark_group("theorem_coloring_sweep");
    group.bench_function("sequential", |b| {
        b.iter(|| par::map_collect_seq(black_box(&grid), coloring_workload))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| par::map_collect(black_box(&grid), coloring_workload))
    });
    group.finish();
}

fn bench_exact_batch(c: &mut Criterion) {
    // The instances the acceptance suite solves exactly.
    let mut instances = vec![(-1, 1)];
    for s in 1..=9 {
        instances.push((0, s));
    }
    for s in 2..=8 {
        instances.push((-1, s));
    }
    for s in 2..=4 {
        instances.push((-s, s));
    }
    let mut group = c.benchmark_group("exact_solver_batch");
    group.bench_function("sequential", |b| {
        b.iter(|| par::map_collect_seq(black_box(&instances), solver_workload))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| par::map_collect(black_box(&instances), solver_workload))
    });
    group.finish();
}

criterion_group!(
    sweeps,
    bench_partition_sweep,
    bench_coloring_sweep,
    bench_exact_batch
);
criterion_main!(sweeps);
