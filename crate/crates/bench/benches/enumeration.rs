use adideals::affine::{element_of_ideal, lattice_points_in_simplex};
use adideals::ideals::{for_each_antichain, StatTable};
use adideals::{enumerate_ideals, CartanType, RootSystem};
use adideals_bench::bench_systems;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn antichains(c: &mut Criterion) {
    let mut group = c.benchmark_group("antichains");
    for rs in bench_systems() {
        group.bench_with_input(BenchmarkId::from_parameter(rs.label()), &rs, |b, rs| {
            b.iter(|| {
                let mut n = 0u64;
                for_each_antichain(rs, |_| n += 1);
                black_box(n)
            })
        });
    }
    group.finish();
}

fn stat_table(c: &mut Criterion) {
    let f4 = RootSystem::new(CartanType::F, 4).unwrap();
    c.bench_function("stats/F4", |b| b.iter(|| black_box(StatTable::build(&f4))));
}

fn affine_elements(c: &mut Criterion) {
    let c4 = RootSystem::new(CartanType::C, 4).unwrap();
    let ideals = enumerate_ideals(&c4);
    c.bench_function("element_of_ideal/C4", |b| {
        b.iter(|| {
            for i in &ideals {
                black_box(element_of_ideal(i));
            }
        })
    });
    let e6 = RootSystem::new(CartanType::E, 6).unwrap();
    c.bench_function("lattice_points/E6", |b| {
        b.iter(|| black_box(lattice_points_in_simplex(&e6).len()))
    });
}

criterion_group!(benches, antichains, stat_table, affine_elements);
criterion_main!(benches);
