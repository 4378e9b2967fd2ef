use criterion::{black_box, criterion_group, criterion_main, Criterion};

use cp2kit_bench::{alternating_5, coordinate_shift_243, frobenius_80, quaternion_256, symmetric_5};
use cp2kit_core::checkers::{classify_cp2, cp2_by_order_layers, cp2_oracle, is_cn};
use cp2kit_core::group::{Group, PermutationSpec};
use cp2kit_core::structure::{subgroup_lattice, sylow};

fn bench_pairwise_oracle(c: &mut Criterion) {
    let a5 = alternating_5();
    let q256 = quaternion_256();
    let shift = coordinate_shift_243();
    c.bench_function("oracle/A5", |b| b.iter(|| cp2_oracle(black_box(&a5))));
    c.bench_function("oracle/Q256", |b| b.iter(|| cp2_oracle(black_box(&q256))));
    c.bench_function("oracle/shift243", |b| b.iter(|| cp2_oracle(black_box(&shift))));
}

fn bench_layer_route(c: &mut Criterion) {
    let s5 = symmetric_5();
    let shift = coordinate_shift_243();
    c.bench_function("layers/S5", |b| b.iter(|| cp2_by_order_layers(black_box(&s5))));
    c.bench_function("layers/shift243", |b| b.iter(|| cp2_by_order_layers(black_box(&shift))));
}

fn bench_classifier(c: &mut Criterion) {
    let f80 = frobenius_80();
    c.bench_function("classify/frobenius80", |b| b.iter(|| classify_cp2(black_box(&f80))));
}

fn bench_structure(c: &mut Criterion) {
    let s5 = symmetric_5();
    let a5 = alternating_5();
    c.bench_function("sylow2/S5", |b| b.iter(|| sylow(black_box(&s5), 2).unwrap()));
    c.bench_function("lattice/A5", |b| b.iter(|| subgroup_lattice(black_box(&a5)).unwrap()));
    c.bench_function("cn/S5", |b| b.iter(|| is_cn(black_box(&s5))));
}

fn bench_closure(c: &mut Criterion) {
    let spec = PermutationSpec {
        degree: 6,
        generators: vec![vec![1, 0, 2, 3, 4, 5], vec![1, 2, 3, 4, 5, 0]],
    };
    c.bench_function("closure/S6", |b| {
        b.iter(|| Group::from_permutations(black_box(&spec)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_pairwise_oracle,
    bench_layer_route,
    bench_classifier,
    bench_structure,
    bench_closure
);
criterion_main!(benches);
