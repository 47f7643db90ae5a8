use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use minorlab::boolfn::{canonical, zhegalkin};
use minorlab::catalog::enumerate_functions;
use minorlab::hypergraph::isomorphic;
use minorlab::irreducibility::{cover_report, hyper_report, Backend};
use minorlab::steiner::{ag_2_3, fano, steiner_report};
use minorlab::TruthTable;

/// A fixed table with no symmetry to speak of.
fn scrambled(n: usize) -> TruthTable {
    TruthTable::from_fn(n, |a| (a.wrapping_mul(0x9e37_79b9) >> 7) & 1 == 1).unwrap()
}

fn transforms(c: &mut Criterion) {
    let mut g = c.benchmark_group("zhegalkin");
    for n in [6, 10, 16] {
        let f = scrambled(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| b.iter(|| zhegalkin(black_box(f))));
    }
    g.finish();

    let mut g = c.benchmark_group("canonical");
    for n in [4, 6, 8] {
        let f = scrambled(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| b.iter(|| canonical(black_box(f))));
    }
    g.finish();
}

fn deciders(c: &mut Criterion) {
    let f = scrambled(6);
    c.bench_function("cover_report/6", |b| b.iter(|| cover_report(black_box(&f))));
    let plane = fano();
    c.bench_function("hyper_report/fano", |b| {
        b.iter(|| hyper_report(black_box(&plane), Backend::Auto))
    });
    let ag = ag_2_3();
    c.bench_function("isomorphic/ag9", |b| b.iter(|| isomorphic(black_box(&ag), black_box(&ag))));
    c.bench_function("steiner_report/fano", |b| b.iter(|| steiner_report(black_box(&plane))));
}

fn catalog(c: &mut Criterion) {
    let mut g = c.benchmark_group("catalog");
    g.sample_size(10);
    g.bench_function("enumerate/3", |b| b.iter(|| enumerate_functions(black_box(3))));
    g.finish();
}

criterion_group!(benches, transforms, deciders, catalog);
criterion_main!(benches);
