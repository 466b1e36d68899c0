use criterion::{criterion_group, criterion_main, Criterion};
use mirrorcheck_core::stdbasis::{
    groebner, jacobian_ideal, local_quotient, LocalMethod, LocalOptions,
};
use mirrorcheck_core::{
    build_group, deformed_potential, fermat_potential, hochschild_dimensions, koszul_mf,
    qh_dimension, verify_mf, GroupVariant, HHOptions, MonomialOrder,
};
use std::hint::black_box;

fn bench_groebner(c: &mut Criterion) {
    let w = fermat_potential(2, 6).unwrap();
    let ideal = jacobian_ideal(&w, MonomialOrder::degrevlex()).unwrap();
    c.bench_function("groebner fermat (2,6)", |b| {
        b.iter(|| groebner(black_box(&ideal)).unwrap())
    });

    let w = deformed_potential(2, 6).unwrap();
    let ideal = jacobian_ideal(&w, MonomialOrder::degrevlex()).unwrap();
    c.bench_function("groebner deformed (2,6)", |b| {
        b.iter(|| groebner(black_box(&ideal)).unwrap())
    });

    let group = build_group(GroupVariant::G, 2, 6).unwrap();
    for method in [LocalMethod::Truncation, LocalMethod::Operators] {
        let opts = LocalOptions::for_potential(2, 6).with_method(method);
        c.bench_function(&format!("local quotient (2,6) {method:?}"), |b| {
            b.iter(|| {
                local_quotient(black_box(&ideal), &group, &opts)
                    .unwrap()
                    .dim()
            })
        });
    }
}

fn bench_counts(c: &mut Criterion) {
    c.bench_function("hodge (3,8)", |b| {
        b.iter(|| qh_dimension(black_box(3), black_box(8)).unwrap())
    });
    c.bench_function("hodge (6,20)", |b| {
        b.iter(|| qh_dimension(black_box(6), black_box(20)).unwrap())
    });
    let mut g = c.benchmark_group("hochschild");
    g.sample_size(10);
    g.bench_function("fast (2,6)", |b| {
        b.iter(|| hochschild_dimensions(2, 6, &HHOptions::fast()).unwrap())
    });
    g.bench_function("honest (2,6)", |b| {
        b.iter(|| hochschild_dimensions(2, 6, &HHOptions::default()).unwrap())
    });
    g.finish();
}

fn bench_koszul(c: &mut Criterion) {
    let w = deformed_potential(2, 6).unwrap();
    c.bench_function("koszul build+verify (2,6)", |b| {
        b.iter(|| verify_mf(&koszul_mf(2, 6, None).unwrap(), &w).pass)
    });
}

criterion_group!(benches, bench_groebner, bench_counts, bench_koszul);
criterion_main!(benches);
