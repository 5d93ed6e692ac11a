use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use superbgg::bruhat_order::{prefix_leq, ClosureOracle};
use superbgg::characters::{euler_verify, hook_schur};
use superbgg::replab::{build_kac, cohomology, irreducible_quotient, verma_gl12_report};
use superbgg::weyl_cosets::{enumerate_w0k, oracle_w0k};
use superbgg::{Partition, Rank, SuperWeight};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn cosets(c: &mut Criterion) {
    let base = SuperWeight::split_hook(&p("2,1"), 2, Rank::Inf).unwrap();
    c.bench_function("enumerate_w0k m=2 (2,1) k<=6", |b| b.iter(|| enumerate_w0k(black_box(&base), 6).unwrap()));
    c.bench_function("oracle_w0k m=2 N=5 (2,1) k=3", |b| b.iter(|| oracle_w0k(black_box(&base), 2, 5, 3).unwrap()));
}

fn characters(c: &mut Criterion) {
    let lam = p("3,2,1");
    c.bench_function("hook_schur (3,2,1) gl(2|2)", |b| b.iter(|| hook_schur(black_box(&lam), 2, 2).unwrap()));
    let lam = p("2,2,1");
    c.bench_function("euler_verify gl(2|2) (2,2,1) depth 6", |b| {
        b.iter(|| euler_verify(black_box(&lam), 2, Rank::Finite(2), 6).unwrap())
    });
}

fn bruhat(c: &mut Criterion) {
    let u = [0, 1, 2, 3, 4, 5];
    let v = [5, 4, 3, 2, 1, 0];
    c.bench_function("prefix_leq n=6", |b| b.iter(|| prefix_leq(black_box(&u), black_box(&v))));
    c.bench_function("closure oracle n=6 cold", |b| {
        b.iter(|| ClosureOracle::new().leq_sequences(black_box(&u), black_box(&v)))
    });
}

fn realizations(c: &mut Criterion) {
    let nu = SuperWeight::split_hook(&p("2,1"), 2, Rank::Finite(1))
        .and_then(|w| w.natural())
        .and_then(|w| w.with_rank(Rank::Finite(1)))
        .unwrap();
    c.bench_function("build_kac gl(2|1) (2,1)", |b| b.iter(|| build_kac(black_box(&nu)).unwrap()));
    let kac = build_kac(&nu).unwrap();
    c.bench_function("irreducible_quotient gl(2|1) (2,1)", |b| b.iter(|| irreducible_quotient(black_box(&kac)).unwrap()));
    c.bench_function("verma gl(1|2) depth 6", |b| b.iter(|| verma_gl12_report(6).unwrap()));
    let lam = p("1");
    c.bench_function("cohomology gl(2|1) (1) k<=2", |b| b.iter(|| cohomology(2, 1, black_box(&lam), 2).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = cosets, characters, bruhat, realizations
}
criterion_main!(benches);
