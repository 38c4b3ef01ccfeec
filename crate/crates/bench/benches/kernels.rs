use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ramanujan49::partition::partition_numbers;
use ramanujan49::qseries::eta;
use ramanujan49::symbolic::{
    build_matrix_a, cofactor_first_row, det5, reduce, LaurentPoly, PolyMatrix,
};
use ramanujan49::witness::{default_tables, rhs_series};

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for order in [500usize, 2000] {
        let a = eta(1, order);
        let b = eta(7, order).pow(3).unwrap();
        g.bench_with_input(BenchmarkId::new("mul", order), &order, |bch, _| {
            bch.iter(|| black_box(&a).mul(black_box(&b)))
        });
        g.bench_with_input(BenchmarkId::new("inverse", order), &order, |bch, _| {
            bch.iter(|| black_box(&b).inverse().unwrap())
        });
    }
    g.finish();
}

fn partitions(c: &mut Criterion) {
    c.bench_function("partition_numbers/9800", |b| {
        b.iter(|| partition_numbers(black_box(9800)))
    });
}

fn symbolic(c: &mut Criterion) {
    let a = build_matrix_a();
    let five = a.minor(0, 2).minor(0, 0);
    c.bench_function("det5/fourth-power-minor", |b| {
        b.iter(|| det5(black_box(&five)).unwrap())
    });
    c.bench_function("cofactor/ell4-col3", |b| {
        b.iter(|| cofactor_first_row(black_box(&a), 3).unwrap())
    });
    let cf = cofactor_first_row(&a, 3).unwrap();
    c.bench_function("reduce/ell4-col3", |b| b.iter(|| reduce(black_box(&cf))));
    let ints = PolyMatrix::from_fn(5, |i, j| {
        LaurentPoly::mono((i * 5 + j) as i64 % 7 - 3, 0, 0, 0, 0)
    });
    c.bench_function("det5/integer", |b| {
        b.iter(|| det5(black_box(&ints)).unwrap())
    });
}

fn witness(c: &mut Criterion) {
    let set = default_tables();
    let t = set.get(19).unwrap().clone();
    let mut g = c.benchmark_group("witness");
    g.sample_size(10);
    g.bench_function("rhs_series/19/300", |b| {
        b.iter(|| rhs_series(black_box(&t), 300).unwrap())
    });
    g.finish();
}

criterion_group!(benches, series, partitions, symbolic, witness);
criterion_main!(benches);
