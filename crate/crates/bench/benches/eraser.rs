use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use eraser_core::word::words_of_len;
use eraser_core::{
    factorize, member_lk, staged_erase_up, viable_prefix, CodedWord, StagedSymbol, StagedWord, Symbol, Theta,
    UpWord,
};
use std::hint::black_box;

fn staged_erasure(c: &mut Criterion) {
    let w: StagedWord = "0 1 E2 0 E1 1 E3 E1 0 E2".parse().unwrap();
    c.bench_function("member_lk/k=3", |b| b.iter(|| member_lk(black_box(&w), 3)));

    let x: UpWord<StagedSymbol> = "1 0 E2|1 0 E1 0 1 E2 E1".parse().unwrap();
    c.bench_function("staged_erase_up/k=2", |b| b.iter(|| staged_erase_up(black_box(&x), 2)));
}

fn factorization(c: &mut Criterion) {
    let mut group = c.benchmark_group("factorize");
    for len in [4usize, 6, 8] {
        let words: Vec<CodedWord> = words_of_len(&Symbol::ALL, len).collect();
        group.bench_with_input(BenchmarkId::from_parameter(len), &words, |b, words| {
            b.iter(|| words.iter().filter(|w| factorize(w).count == 1).count())
        });
    }
    group.finish();

    let w: CodedWord = "0abba0aba10abbba0aba1".parse().unwrap();
    c.bench_function("viable_prefix/21", |b| b.iter(|| viable_prefix(black_box(&w))));
}

fn theta(c: &mut Criterion) {
    c.bench_function("theta/cold/200", |b| b.iter(|| Theta::new().get(black_box(200))));
}

criterion_group!(benches, staged_erasure, factorization, theta);
criterion_main!(benches);
