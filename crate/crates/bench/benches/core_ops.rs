//! Throughput of the hot paths: amplitude tables, single-point evaluation, the
//! axis operator, and a full Gram matrix.

use criterion::{criterion_group, criterion_main, Criterion};
use genylm::amplitudes::chi_matrix;
use genylm::harmonics::{gen_ylm_composed, Family};
use genylm::quadrature::sphere_grid;
use genylm::verify::{apply_L_a, orthonormality_report};
use genylm::wigner::rotation_coefficients;
use genylm::{AngularPosition, Direction, HalfInt};
use std::hint::black_box;

fn bench_core(c: &mut Criterion) {
    let dir = Direction::new(1.1, 0.7).unwrap();
    let pos = AngularPosition::new(2.0, 5.1).unwrap();

    c.bench_function("chi_matrix", |b| b.iter(|| chi_matrix(black_box(dir))));

    c.bench_function("rotation_coefficients_j2", |b| {
        b.iter(|| rotation_coefficients(HalfInt::from_int(2), black_box(dir)).unwrap())
    });

    c.bench_function("gen_ylm_composed_point", |b| {
        b.iter(|| gen_ylm_composed(black_box(0), black_box(dir), black_box(pos)).unwrap())
    });

    c.bench_function("apply_axis_operator_point", |b| {
        b.iter(|| apply_L_a(black_box(1), black_box(dir), black_box(pos)).unwrap())
    });

    let grid = sphere_grid(16, 16).unwrap();
    c.bench_function("gram_matrix_16x16_composed", |b| {
        b.iter(|| orthonormality_report(Family::Composed, black_box(dir), &grid).unwrap())
    });
}

criterion_group!(benches, bench_core);
criterion_main!(benches);
