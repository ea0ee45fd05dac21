use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use wonderful_core::affine::building_window;
use wonderful_core::apartment::reduce_to_alcove;
use wonderful_core::covers::roundtrip_check;
use wonderful_core::parahoric::parahoric_lattice;
use wonderful_core::rational::q;
use wonderful_core::sample;
use wonderful_core::{Coweight, RootSystem};

fn root_systems(c: &mut Criterion) {
    let mut group = c.benchmark_group("root_system");
    for tag in ["A3", "C3", "F4"] {
        group.bench_with_input(BenchmarkId::from_parameter(tag), tag, |b, tag| {
            b.iter(|| RootSystem::from_type_tag(black_box(tag)).unwrap())
        });
    }
    group.finish();
    let b3 = RootSystem::from_type_tag("B3").unwrap();
    c.bench_function("weyl_elements/B3", |b| b.iter(|| black_box(&b3).weyl_elements().len()));
}

fn lattices(c: &mut Criterion) {
    let rs = RootSystem::from_type_tag("C3").unwrap();
    let mut rng = sample::rng(0);
    let points: Vec<Coweight> = (0..64).map(|_| sample::alcove_point(&rs, &mut rng)).collect();
    c.bench_function("parahoric_lattice/C3x64", |b| {
        b.iter(|| points.iter().map(|p| parahoric_lattice(&rs, p).shift(0)).sum::<i64>())
    });
    c.bench_function("roundtrip_check/C3x64", |b| {
        b.iter(|| points.iter().filter(|p| roundtrip_check(&rs, p).unwrap()).count())
    });
    let far = Coweight::new(vec![q(37, 3), q(-41, 5), q(17, 2)]);
    c.bench_function("reduce_to_alcove/C3", |b| b.iter(|| reduce_to_alcove(&rs, black_box(&far)).unwrap()));
}

fn buildings(c: &mut Criterion) {
    let rs = RootSystem::from_type_tag("A2").unwrap();
    let mut group = c.benchmark_group("building_window/A2");
    for radius in [1usize, 3, 5] {
        group.bench_with_input(BenchmarkId::from_parameter(radius), &radius, |b, &r| {
            b.iter(|| building_window(&rs, r).nodes.len())
        });
    }
    group.finish();
}

criterion_group!(benches, root_systems, lattices, buildings);
criterion_main!(benches);
