use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use cubeturan::{enumerate_copies, extremal_number, find_nice_coloring, find_representation};
use cubeturan_bench::{budget, c4, copies_input, h3, theta3};

fn copies(c: &mut Criterion) {
    let (host, guest) = copies_input();
    c.bench_function("enumerate_copies C6 in Q5", |b| {
        b.iter(|| enumerate_copies(black_box(&host), black_box(&guest), 0, budget()))
    });
}

fn extremal(c: &mut Criterion) {
    let g = c4();
    for n in [3, 4] {
        c.bench_function(&format!("extremal_number C4 in Q{n}"), |b| {
            b.iter(|| extremal_number(black_box(n), black_box(&g), budget()).unwrap())
        });
    }
}

fn colouring(c: &mut Criterion) {
    let h = h3();
    c.bench_function("find_nice_coloring H(3)", |b| {
        b.iter(|| find_nice_coloring(black_box(&h), 10, budget()).unwrap())
    });
}

fn representation(c: &mut Criterion) {
    let t = theta3();
    c.bench_function("find_representation theta(3) k=2 n=6", |b| {
        b.iter(|| find_representation(black_box(&t), 2, 6, budget()).unwrap())
    });
    let h = h3();
    c.bench_function("find_representation H(3) k=3 n=7", |b| {
        b.iter(|| find_representation(black_box(&h), 3, 7, budget()).unwrap())
    });
}

criterion_group!(kernels, copies, extremal, colouring, representation);
criterion_main!(kernels);
