use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use ginbetti::exactla::{rank, FieldSpec};
use ginbetti::gin::generic_initial_ideal;
use ginbetti::groebner::buchberger;
use ginbetti::koszul::{annihilator_numbers, graded_betti};
use ginbetti::monideal::ek_graded_betti;
use ginbetti::ring::TermOrder;
use ginbetti_bench::{
    dense_quadrics, integer_matrix, maximal_power, squares_plus_cube, twisted_cubic,
};

fn bench_rank(c: &mut Criterion) {
    let q = integer_matrix(FieldSpec::rationals(), 40, 40, 1);
    let p = integer_matrix(FieldSpec::prime(32003).unwrap(), 80, 80, 1);
    c.bench_function("rank Q 40x40", |b| b.iter(|| rank(black_box(&q))));
    c.bench_function("rank Fp 80x80", |b| b.iter(|| rank(black_box(&p))));
}

fn bench_buchberger(c: &mut Criterion) {
    let t = twisted_cubic();
    let d = dense_quadrics(4, 3);
    c.bench_function("buchberger twisted cubic", |b| {
        b.iter(|| buchberger(black_box(&t), TermOrder::DegRevLex).unwrap())
    });
    c.bench_function("buchberger dense quadrics n=4", |b| {
        b.iter(|| buchberger(black_box(&d), TermOrder::DegRevLex).unwrap())
    });
}

fn bench_eliahou_kervaire(c: &mut Criterion) {
    let m = maximal_power(5, 4);
    c.bench_function("ek betti m^4 n=5", |b| {
        b.iter(|| ek_graded_betti(black_box(&m)).unwrap())
    });
}

fn bench_koszul(c: &mut Criterion) {
    let t = twisted_cubic();
    let e = squares_plus_cube();
    let mut g = c.benchmark_group("koszul");
    g.sample_size(10);
    g.bench_function("graded betti twisted cubic", |b| {
        b.iter(|| graded_betti(black_box(&t)).unwrap())
    });
    g.bench_function("annihilator numbers twisted cubic", |b| {
        b.iter(|| annihilator_numbers(black_box(&t), 1).unwrap())
    });
    g.bench_function("gin (x1^2,x2^2)+m^3", |b| {
        b.iter(|| generic_initial_ideal(black_box(&e), TermOrder::DegRevLex, 1).unwrap())
    });
    g.finish();
}

criterion_group!(
    kernels,
    bench_rank,
    bench_buchberger,
    bench_eliahou_kervaire,
    bench_koszul
);
criterion_main!(kernels);
