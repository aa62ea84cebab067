use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gicc_bench::{random_digraphs, structures};
use gicc_core::cover::{gicc_cover, Effort};
use gicc_core::{encode, mais, minrank_gf2, validate_gic, MessageVector};

fn validation(c: &mut Criterion) {
    let mut group = c.benchmark_group("validate");
    for (name, d, inner) in structures() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &(d, inner), |b, (d, inner)| {
            b.iter(|| validate_gic(black_box(d), black_box(inner)).unwrap())
        });
    }
    group.finish();
}

fn encoding(c: &mut Criterion) {
    let mut group = c.benchmark_group("encode-t64");
    for (name, d, inner) in structures() {
        let g = validate_gic(&d, &inner).unwrap();
        let m = MessageVector::random(g.n(), 64, 1);
        group.bench_function(&name, |b| b.iter(|| encode(black_box(&g), black_box(&m)).unwrap()));
    }
    group.finish();
}

fn lower_bounds(c: &mut Criterion) {
    let mut group = c.benchmark_group("mais");
    for (name, d) in random_digraphs() {
        group.bench_function(&name, |b| b.iter(|| mais(black_box(&d)).unwrap()));
    }
    group.finish();

    let (_, fig4a, _) = structures().swap_remove(0);
    c.bench_function("minrank/fig4a", |b| b.iter(|| minrank_gf2(black_box(&fig4a)).unwrap()));
}

fn covers(c: &mut Criterion) {
    let mut group = c.benchmark_group("cover");
    group.sample_size(10);
    for (name, d) in random_digraphs() {
        let effort = if d.vertex_count() <= 10 { Effort::Exhaustive } else { Effort::Budget(500) };
        group.bench_function(&name, |b| b.iter(|| gicc_cover(black_box(&d), effort, 0).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, validation, encoding, lower_bounds, covers);
criterion_main!(benches);
