//! Benchmarks for the pipeline stages: Gröbner basis construction,
//! quotient-algebra assembly, nil-polynomial expansion, inverse-system
//! verification, and the associated-form computation.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use socle_core::algebra::{milnor_algebra, quotient_algebra};
use socle_core::groebner::buchberger;
use socle_core::invariants::associated_form;
use socle_core::nilpoly::{inverse_system_r, nil_polynomial};
use socle_core::order::MonomialOrder;
use socle_core::{family_generators, hesse_cubic};

fn q(n: i64) -> socle_core::poly::Rat {
    socle_core::poly::Rat::from_integer(n.into())
}

fn bench_buchberger(c: &mut Criterion) {
    let gens = family_generators(&q(3));
    let order = MonomialOrder::degrevlex(2);
    c.bench_function("buchberger/family t=3", |b| {
        b.iter(|| buchberger(black_box(&gens), order.clone()).unwrap())
    });

    let cubic = hesse_cubic(&q(5));
    let jac: Vec<_> = (0..3).map(|i| cubic.partial_derivative(i)).collect();
    let order3 = MonomialOrder::degrevlex(3);
    c.bench_function("buchberger/cubic jacobian t=5", |b| {
        b.iter(|| buchberger(black_box(&jac), order3.clone()).unwrap())
    });
}

fn bench_quotient(c: &mut Criterion) {
    let gens = family_generators(&q(3));
    c.bench_function("quotient_algebra/family t=3", |b| {
        b.iter(|| quotient_algebra(black_box(&gens)).unwrap())
    });
}

fn bench_nil_polynomial(c: &mut Criterion) {
    let gens = family_generators(&q(3));
    let a = quotient_algebra(&gens).unwrap();
    c.bench_function("nil_polynomial/family t=3 (dim 15)", |b| {
        b.iter(|| nil_polynomial(black_box(&a)).unwrap())
    });
}

fn bench_inverse_system(c: &mut Criterion) {
    let gens = family_generators(&q(3));
    let a = quotient_algebra(&gens).unwrap();
    let npd = nil_polynomial(&a).unwrap();
    c.bench_function("inverse_system_r/family t=3", |b| {
        b.iter(|| inverse_system_r(black_box(&npd)).unwrap())
    });
}

fn bench_associated_form(c: &mut Criterion) {
    let cubic = hesse_cubic(&q(5));
    c.bench_function("associated_form/cubic t=5", |b| {
        b.iter(|| associated_form(black_box(&cubic)).unwrap())
    });

    c.bench_function("milnor_algebra/cubic t=5 (dim 8)", |b| {
        b.iter(|| milnor_algebra(black_box(&cubic)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_buchberger,
    bench_quotient,
    bench_nil_polynomial,
    bench_inverse_system,
    bench_associated_form
);
criterion_main!(benches);
