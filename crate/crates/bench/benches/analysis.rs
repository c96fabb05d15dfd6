//! Cost of the heavier analyses: equilibrium scans and supremum searches.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use qbos_bench::default_table;
use qbos_core::analysis::{
    channel_payoff_supremum, restricted_equilibria, unitary_payoff_supremum, ChannelSearchMode,
};
use qbos_core::game::classical_equilibria;
use qbos_core::{LocalUnitary, TwoQubitState};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bench_equilibria(c: &mut Criterion) {
    let table = default_table();
    let phi = TwoQubitState::phi_plus();
    let mut group = c.benchmark_group("equilibria");
    group.sample_size(20);
    group.bench_function("classical_101", |b| {
        b.iter(|| black_box(classical_equilibria(&table, 101, 1e-6).unwrap()))
    });
    group.bench_function("restricted_101", |b| {
        b.iter(|| black_box(restricted_equilibria(&phi, &table, 101, 1e-6).unwrap()))
    });
    group.finish();
}

fn bench_suprema(c: &mut Criterion) {
    let table = default_table();
    let phi = TwoQubitState::phi_plus();
    let mut group = c.benchmark_group("suprema");
    group.sample_size(10);
    group.bench_function("unitary_8x100", |b| {
        b.iter(|| black_box(unitary_payoff_supremum(&table, &phi, 8, 100, 42).unwrap()))
    });
    group.bench_function("channel_demo", |b| {
        b.iter(|| {
            black_box(channel_payoff_supremum(&table, &phi, ChannelSearchMode::Demo).unwrap())
        })
    });
    group.finish();
}

fn bench_haar_sampling(c: &mut Criterion) {
    c.bench_function("random_su2", |b| {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        b.iter(|| black_box(LocalUnitary::random_su2(&mut rng)))
    });
}

criterion_group!(analysis, bench_equilibria, bench_suprema, bench_haar_sampling);
criterion_main!(analysis);
