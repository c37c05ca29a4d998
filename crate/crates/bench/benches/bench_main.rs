use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use vafa_core::catalog::{generate, CatalogFamily};
use vafa_core::cyclotomic::CycloNum;
use vafa_core::fusion_ring::{fp_dims, PerronOptions};
use vafa_core::modular::{central_charge, exponent, twist_orders, vafa_quotient, verify_modular};

fn cyclotomic(c: &mut Criterion) {
    let a = CycloNum::from_int_terms(60, &[(1, 3), (7, -2), (11, 1), (29, 5)]);
    let b = CycloNum::from_int_terms(60, &[(2, 1), (13, 4), (31, -1)]);
    c.bench_function("cyclo mul conductor 60", |bench| {
        bench.iter(|| black_box(&a) * black_box(&b))
    });
    c.bench_function("cyclo inverse conductor 60", |bench| {
        bench.iter(|| black_box(&a).inverse().unwrap())
    });
    c.bench_function("cyclo integrality conductor 60", |bench| {
        bench.iter(|| black_box(&a).is_algebraic_integer())
    });
    let z = CycloNum::zeta(48, 10);
    c.bench_function("cyclo root-of-unity order", |bench| {
        bench.iter(|| black_box(&z).as_root_of_unity())
    });
}

fn modular(c: &mut Criterion) {
    let su2 = generate(&CatalogFamily::Su2 { level: 4 }).unwrap();
    let ising = generate(&CatalogFamily::Ising).unwrap();
    c.bench_function("generate su2 level 6", |bench| {
        bench.iter(|| generate(black_box(&CatalogFamily::Su2 { level: 6 })).unwrap())
    });
    c.bench_function("verify_modular ising", |bench| {
        bench.iter(|| verify_modular(black_box(&ising)))
    });
    c.bench_function("verify_modular su2 level 4", |bench| {
        bench.iter(|| verify_modular(black_box(&su2)))
    });
    c.bench_function("central charge su2 level 4", |bench| {
        bench.iter(|| central_charge(black_box(&su2)))
    });
    c.bench_function("vafa quotient su2 level 4", |bench| {
        bench.iter(|| {
            let n = twist_orders(&su2).lcm;
            vafa_quotient(black_box(&su2), n).is_algebraic_integer()
        })
    });
    c.bench_function("exponent su2 level 4", |bench| bench.iter(|| exponent(black_box(&su2))));
    let opts = PerronOptions::default();
    c.bench_function("fp_dims su2 level 4", |bench| {
        bench.iter(|| fp_dims(black_box(su2.ring()), &opts))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = cyclotomic, modular
}
criterion_main!(benches);
