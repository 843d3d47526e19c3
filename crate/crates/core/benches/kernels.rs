//! Sequential-versus-parallel timings for the enumeration kernels: graph
//! construction, disk lattice tallies, the exhaustive isoperimetric sweep,
//! the local witness search (fixed restart budget), and the relaxation
//! solver (mode-independent, included for scale).

use criterion::{criterion_group, criterion_main, Criterion};
use pgiso_core::circle::circle_counts;
use pgiso_core::construct::alpha_witness_search;
use pgiso_core::graph::IncidenceGraph;
use pgiso_core::par::ExecMode;
use pgiso_core::relax;
use pgiso_core::search::brute_force_iv;
use std::hint::black_box;

const MODES: [(&str, ExecMode); 2] = [
    ("seq", ExecMode::Sequential),
    ("par", ExecMode::Parallel),
];

fn graph_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("graph_build");
    group.sample_size(20);
    for q in [16u64, 64] {
        for (label, mode) in MODES {
            group.bench_function(format!("q{q}/{label}"), |b| {
                b.iter(|| IncidenceGraph::build_with(2, black_box(q), mode).unwrap())
            });
        }
    }
    group.finish();
}

fn disk_tally(c: &mut Criterion) {
    let mut group = c.benchmark_group("disk_tally");
    group.sample_size(20);
    for (label, mode) in MODES {
        group.bench_function(format!("r1e5/{label}"), |b| {
            b.iter(|| circle_counts(black_box(1.0e5), mode).unwrap())
        });
    }
    group.finish();
}

fn exhaustive_sweep(c: &mut Criterion) {
    let g = IncidenceGraph::build(2, 2).unwrap();
    let mut group = c.benchmark_group("exhaustive_sweep");
    group.sample_size(20);
    for (label, mode) in MODES {
        group.bench_function(format!("q2/{label}"), |b| {
            b.iter(|| brute_force_iv(black_box(&g), mode).unwrap())
        });
    }
    group.finish();
}

fn witness_search(c: &mut Criterion) {
    let g = IncidenceGraph::build(2, 9).unwrap();
    let mut group = c.benchmark_group("witness_search");
    group.sample_size(10);
    for (label, mode) in MODES {
        group.bench_function(format!("q9_fixed64/{label}"), |b| {
            // Unreachable target: every restart in the fixed budget runs,
            // so both modes do identical work.
            b.iter(|| {
                let _ = alpha_witness_search(black_box(&g), 40, 1, 64, mode);
            })
        });
    }
    group.finish();
}

fn relaxation(c: &mut Criterion) {
    let mut group = c.benchmark_group("relaxation");
    group.bench_function("q16", |b| {
        b.iter(|| relax::solve(black_box(16), black_box(52)).unwrap())
    });
    group.finish();
}

criterion_group!(
    kernels,
    graph_build,
    disk_tally,
    exhaustive_sweep,
    witness_search,
    relaxation
);
criterion_main!(kernels);
