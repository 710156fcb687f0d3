use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fqt_core::poly::kernels;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn mod_p_threshold(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut group = c.benchmark_group("mod3_mul");
    for n in [32usize, 64, 128, 512] {
        let a: Vec<u64> = (0..n).map(|_| rng.random_range(0..3)).collect();
        let b: Vec<u64> = (0..n).map(|_| rng.random_range(0..3)).collect();
        for th in [16usize, 32, 64, 128, usize::MAX] {
            group.bench_with_input(BenchmarkId::new(format!("th{th}"), n), &n, |bench, _| {
                bench.iter(|| kernels::mod_p_mul(3, black_box(&a), black_box(&b), th))
            });
        }
    }
    group.finish();
}

fn gf2_threshold(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut group = c.benchmark_group("gf2_mul");
    for words in [8usize, 32, 128, 256] {
        let a: Vec<u64> = (0..words).map(|_| rng.random()).collect();
        let b: Vec<u64> = (0..words).map(|_| rng.random()).collect();
        group.bench_with_input(BenchmarkId::new("schoolbook", words), &words, |bench, _| {
            bench.iter(|| kernels::gf2_mul_schoolbook(black_box(&a), black_box(&b)))
        });
        for th in [4usize, 8, 16, 32] {
            group.bench_with_input(
                BenchmarkId::new(format!("karatsuba{th}"), words),
                &words,
                |bench, _| {
                    bench.iter(|| kernels::gf2_mul_karatsuba(black_box(&a), black_box(&b), th))
                },
            );
        }
    }
    group.finish();
}

criterion_group!(benches, mod_p_threshold, gf2_threshold);
criterion_main!(benches);
