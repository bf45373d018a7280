use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mrook_core::catalan::qt_catalan;
use mrook_core::equivalence::{class_partition, Relation};
use mrook_core::factorization::{verify_mft, verify_pqmft, PqMode};
use mrook_core::hitnumbers::pq_hit_numbers;
use mrook_core::placement::{rook_vector, rook_vector_brute_force};
use mrook_core::FerrersBoard;

fn board(s: &str) -> FerrersBoard {
    s.parse().unwrap()
}

fn placements(c: &mut Criterion) {
    let b = board("1,2,3,4,5,6,7");
    c.bench_function("rook_vector (1..7) m=2", |z| z.iter(|| rook_vector(black_box(&b), 2)));
    c.bench_function("rook_vector_brute_force (1..7) m=2", |z| z.iter(|| rook_vector_brute_force(black_box(&b), 2)));
}

fn factorization(c: &mut Criterion) {
    let b = board("1,1,2,3,5,7");
    c.bench_function("verify_mft (1,1,2,3,5,7) m=3", |z| z.iter(|| verify_mft(black_box(&b), 3).unwrap()));
    let small = board("1,2,4");
    c.bench_function("verify_pqmft symbolic (1,2,4) m=2", |z| {
        z.iter(|| verify_pqmft(black_box(&small), 2, PqMode::Symbolic).unwrap())
    });
}

fn classes(c: &mut Criterion) {
    c.bench_function("class_partition size 10 m=2 weight", |z| z.iter(|| class_partition(black_box(10), 2, Relation::Weight)));
}

fn catalan(c: &mut Criterion) {
    c.bench_function("qt_catalan n=5 m=2", |z| z.iter(|| qt_catalan(black_box(5), 2)));
}

fn hits(c: &mut Criterion) {
    let b = board("1,1,1");
    c.bench_function("pq_hit_numbers (1,1,1) n=3 m=2", |z| z.iter(|| pq_hit_numbers(black_box(&b), 3, 2).unwrap()));
}

criterion_group!(benches, placements, factorization, classes, catalan, hits);
criterion_main!(benches);
