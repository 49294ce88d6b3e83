use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use splitsig::{build_gss, torus_scan, ConwayForm, DEFAULT_TOL};
use splitsig_bench::chain_system;

fn bench_scan(c: &mut Criterion) {
    let gss = build_gss(&"4,3,2".parse::<ConwayForm>().unwrap()).unwrap();
    c.bench_function("scan C(4,3,2) 31x31", |b| {
        b.iter(|| torus_scan(black_box(&gss), 31, DEFAULT_TOL).unwrap())
    });

    let chain = chain_system(12);
    c.bench_function("scan chain rank 11 16x16", |b| {
        b.iter(|| torus_scan(black_box(&chain), 16, DEFAULT_TOL).unwrap())
    });
}

criterion_group!(benches, bench_scan);
criterion_main!(benches);
