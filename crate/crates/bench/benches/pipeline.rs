use axial_core::catalog::{ns_algebra, FusionLaw, NsType};
use axial_core::engine::{construct, Caps};
use axial_core::fpgrp::{cover, group_order, EnumOptions};
use axial_core::shapes::enumerate_shapes;
use axial_core::shapes::library::standard_action;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn catalog(c: &mut Criterion) {
    let law = FusionLaw::monster();
    c.bench_function("verify 6A", |b| b.iter(|| ns_algebra(black_box(NsType::A6)).verify(&law)));
}

fn cosets(c: &mut Criterion) {
    let mut g = c.benchmark_group("coset enumeration");
    for name in ["G4", "G8", "G14"] {
        let p = cover(name).unwrap().presentation();
        g.bench_function(name, |b| b.iter(|| group_order(black_box(&p), EnumOptions::default()).unwrap()));
    }
    g.finish();
}

fn shapes(c: &mut Criterion) {
    let mut g = c.benchmark_group("shapes");
    for (group, axes) in [("S4", "3+6"), ("PSL(2,7)", "21")] {
        let act = standard_action(group, axes).unwrap();
        g.bench_function(format!("{} {}", group, axes), |b| b.iter(|| enumerate_shapes(black_box(&act), 4)));
    }
    g.finish();
}

fn engine(c: &mut Criterion) {
    let mut g = c.benchmark_group("construct");
    g.sample_size(10);
    for (group, axes, text) in [("S3", "1+3", "3A 2A"), ("2^2", "1+2+2", "4A (2A)^2"), ("S4", "6", "3A 2A")] {
        let act = standard_action(group, axes).unwrap();
        let shape = enumerate_shapes(&act, 4).shapes.into_iter().find(|s| s.to_string() == text).unwrap();
        g.bench_function(format!("{} {} {}", group, axes, text), |b| b.iter(|| construct(black_box(&shape), Caps::default()).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, catalog, cosets, shapes, engine);
criterion_main!(benches);
