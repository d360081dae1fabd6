use std::hint::black_box;

use chemgraph::families::DEFAULT_NODE_BUDGET;
use chemgraph::{canon, classify, enumerate_connected_maxdeg3, realize_census, Graph, Oracle, DEFAULT_EPSILON};
use chemgraph_bench::{family_workload, sample_indices};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [6, 7, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_connected_maxdeg3(black_box(n), 1).unwrap().len())
        });
    }
    group.finish();
}

fn canonical_labeling(c: &mut Criterion) {
    let petersen = Graph::petersen();
    let cycle = Graph::cycle(12);
    c.bench_function("canon/petersen", |b| b.iter(|| canon::certificate(black_box(&petersen))));
    c.bench_function("canon/cycle12", |b| b.iter(|| canon::certificate(black_box(&cycle))));
}

fn extremal(c: &mut Criterion) {
    let oracle = Oracle::new(1);
    oracle.atlas(8).unwrap();
    let indices = sample_indices();
    c.bench_function("extremal/n8_all_sizes", |b| {
        b.iter(|| {
            for f in &indices {
                for m in 7..=10 {
                    for dir in chemgraph::Direction::BOTH {
                        black_box(oracle.extremal_censuses(f, 8, m, dir).unwrap());
                    }
                }
            }
        })
    });
}

fn classification(c: &mut Criterion) {
    let all = chemgraph::index::all_builtins();
    c.bench_function("classify/builtins", |b| {
        b.iter(|| all.iter().map(|f| classify(f, DEFAULT_EPSILON)).collect::<Vec<_>>())
    });
}

fn realization(c: &mut Criterion) {
    let work = family_workload(7, 10);
    let mut group = c.benchmark_group("realize");
    group.sample_size(10);
    group.bench_function("families_n7_to_10", |b| {
        b.iter(|| {
            work.iter()
                .filter(|x| realize_census(x, DEFAULT_NODE_BUDGET).unwrap().is_some())
                .count()
        })
    });
    group.finish();
}

criterion_group!(benches, enumeration, canonical_labeling, extremal, classification, realization);
criterion_main!(benches);
