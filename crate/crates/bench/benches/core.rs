use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use locsparse::bounds::sparse_iset;
use locsparse::coloring::{random_cover, solve_exact, Twist};
use locsparse::gen::families;
use locsparse::hardcore::{glauber_sample, independence_polynomial, transfer_z, Family};
use locsparse::occupancy::check_certificate;
use locsparse::sparsity::certify_uniform;
use locsparse_bench::{dense_graph, passing_certificate, sparse_graph, triangle_free};

fn polynomial(c: &mut Criterion) {
    let mut group = c.benchmark_group("independence_polynomial");
    for n in [20, 26, 32] {
        let g = dense_graph(n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| independence_polynomial(black_box(g)).unwrap())
        });
    }
    group.finish();
    c.bench_function("transfer_z/path_100000", |b| {
        b.iter(|| transfer_z(Family::Path, black_box(100_000), 1.0).unwrap())
    });
}

fn sparsity(c: &mut Criterion) {
    let g = sparse_graph(2000, 20, 3);
    c.bench_function("certify_uniform/n2000_r3", |b| b.iter(|| certify_uniform(black_box(&g), 4.0, 3).unwrap()));
}

fn occupancy(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_certificate");
    for max_degree in [8, 12, 16] {
        let g = sparse_graph(300, max_degree, 5);
        let cert = passing_certificate(&g, 1.0);
        group.bench_with_input(BenchmarkId::from_parameter(max_degree), &(g, cert), |b, (g, cert)| {
            b.iter(|| check_certificate(black_box(g), black_box(cert)).unwrap())
        });
    }
    group.finish();
}

fn independent_sets(c: &mut Criterion) {
    let g = triangle_free(1500, 7);
    c.bench_function("sparse_iset/triangle_free_1500", |b| b.iter(|| sparse_iset(black_box(&g), 1.0, 3).unwrap()));
}

fn coloring(c: &mut Criterion) {
    let g = families::petersen();
    let covers: Vec<_> = (0..16).map(|s| random_cover(&g, 3, s, Twist::Full).unwrap()).collect();
    c.bench_function("solve_exact/petersen_3fold_x16", |b| {
        b.iter(|| covers.iter().filter(|cv| solve_exact(&g, cv).unwrap().is_sat()).count())
    });
}

fn sampling(c: &mut Criterion) {
    let g = families::petersen();
    c.bench_function("glauber/petersen_1e5", |b| b.iter(|| glauber_sample(black_box(&g), 1.0, 100_000, 1).unwrap()));
}

criterion_group!(benches, polynomial, sparsity, occupancy, independent_sets, coloring, sampling);
criterion_main!(benches);
