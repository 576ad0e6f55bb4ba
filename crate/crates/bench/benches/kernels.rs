use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use detrep::curve::{image_sheaf_basis, kernel_sheaf_basis, rank_profile, reconstruct_bundle_pair, restrict_to_param_curve};
use detrep::frobenius::frobenius_decompose;
use detrep::generate::{gen_curve_instance, gen_frobenius_instance};
use detrep::linform::LinFormMatrix;

fn determinant(c: &mut Criterion) {
    let mut group = c.benchmark_group("determinant");
    for n in 2..=4 {
        let m = LinFormMatrix::coordinate(n, n * n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| black_box(m).determinant_hypersurface())
        });
    }
    group.finish();
}

fn frobenius(c: &mut Criterion) {
    let mut group = c.benchmark_group("frobenius_decompose");
    for r in 1..=3 {
        let inst = gen_frobenius_instance(r, (r + 1) * (r + 1), r % 2 == 0, 7).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(r), &inst, |b, inst| {
            b.iter(|| frobenius_decompose(black_box(&inst.a), black_box(&inst.b)).unwrap())
        });
    }
    group.finish();
}

fn curve(c: &mut Criterion) {
    let mut group = c.benchmark_group("curve");
    for (r, g, d) in [(1, 4, 2), (2, 10, 4)] {
        let inst = gen_curve_instance(r, g, d, 11).unwrap();
        let m = restrict_to_param_curve(&inst.lambda, &inst.curve).unwrap();
        let id = format!("r{r}_g{g}_d{d}");
        group.bench_with_input(BenchmarkId::new("restrict", &id), &inst, |b, inst| {
            b.iter(|| restrict_to_param_curve(&inst.lambda, &inst.curve).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("rank_profile", &id), &m, |b, m| b.iter(|| rank_profile(m)));
        group.bench_with_input(BenchmarkId::new("image_sheaf", &id), &m, |b, m| {
            b.iter(|| image_sheaf_basis(m).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("kernel_sheaf", &id), &m, |b, m| {
            b.iter(|| kernel_sheaf_basis(m).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("reconstruct", &id), &inst, |b, inst| {
            b.iter(|| reconstruct_bundle_pair(&inst.lambda, &inst.curve, Some(&inst.lambda)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, determinant, frobenius, curve);
criterion_main!(benches);
