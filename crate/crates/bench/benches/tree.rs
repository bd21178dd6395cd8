use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use nsg_bench::{even_offsets, lottery, unconstrained};
use nsg_core::{closure, enumerate, oracle_solve, solve, OracleOptions, TreeOptions};

fn bench_closure(c: &mut Criterion) {
    c.bench_function("closure/lottery", |b| {
        b.iter(|| closure(black_box(&[1, 2]), black_box(&[4, 1]), black_box(&[5])))
    });
    c.bench_function("closure/large_seed", |b| {
        b.iter(|| {
            closure(
                black_box(&[2, 3]),
                black_box(&[5, 7]),
                black_box(&[97, 101]),
            )
        })
    });
}

fn bench_solve(c: &mut Criterion) {
    let opts = TreeOptions::default();
    c.bench_function("solve/lottery", |b| {
        b.iter(|| solve(black_box(&lottery(6)), &opts))
    });
    c.bench_function("solve/even_offsets_g8", |b| {
        b.iter(|| solve(black_box(&even_offsets(8, 0)), &opts))
    });
    c.bench_function("oracle/even_offsets_g4_r3", |b| {
        b.iter(|| oracle_solve(black_box(&even_offsets(4, 3)), &OracleOptions::default()))
    });
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate/unconstrained_g16");
    group.sample_size(10);
    for threads in [1, 4] {
        let opts = TreeOptions {
            threads,
            ..Default::default()
        };
        group.bench_with_input(BenchmarkId::from_parameter(threads), &opts, |b, opts| {
            b.iter(|| enumerate(black_box(&unconstrained(16)), 16, opts))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_closure, bench_solve, bench_enumerate);
criterion_main!(benches);
