use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use phi4_core::classifier::{classify, consistency_check};
use phi4_core::frobenius::sample_density;
use phi4_core::polyring::rat;

fn membership_and_classification(c: &mut Criterion) {
    let params = [rat(1, 1), rat(-1, 8), rat(-8, 3), rat(-31, 48), rat(19, 16), rat(12345, 6789)];
    c.bench_function("classify six parameters", |b| {
        b.iter(|| {
            for p in &params {
                black_box(classify(black_box(p)).unwrap());
            }
        })
    });
    c.bench_function("consistency check c = -155/72", |b| {
        b.iter(|| consistency_check(black_box(&rat(-155, 72))).unwrap())
    });
}

fn sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("frobenius");
    group.sample_size(10);
    group.bench_function("sample c = 1 to 10^4", |b| {
        b.iter(|| sample_density(black_box(&rat(1, 1)), 10_000).unwrap())
    });
    group.finish();
}

criterion_group!(benches, membership_and_classification, sampling);
criterion_main!(benches);
