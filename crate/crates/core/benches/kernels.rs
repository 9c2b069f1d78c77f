use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ulrich_core::graded::{generic_writability_trial, trial_rng};
use ulrich_core::matfac::{random_decomposition, verify_batch, Decomposition};
use ulrich_core::par::ExecMode;
use ulrich_core::polyring::{Domain, PolyRing};

const MODES: [(&str, ExecMode); 2] = [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)];

fn genericity(c: &mut Criterion) {
    let mut group = c.benchmark_group("generic_writability");
    group.sample_size(10);
    for m in [2u32, 3] {
        for (name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(name, m), &m, |b, &m| {
                b.iter(|| generic_writability_trial(4, m, Domain::PrimeField(101), 16, 0, mode).unwrap())
            });
        }
    }
    group.finish();
}

fn factorizations(c: &mut Criterion) {
    let r = PolyRing::new(Domain::PrimeField(101), &["x", "y", "z", "w"]).unwrap();
    let decs: Vec<Decomposition> = (0..24u64)
        .map(|i| random_decomposition(&r, 2, 2 + (i % 3) as usize, 1 + (i % 2) as u32, &mut trial_rng(1, i)).unwrap())
        .collect();
    let mut group = c.benchmark_group("verify_batch");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(name, |b| b.iter(|| verify_batch(&decs, None, mode).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, genericity, factorizations);
criterion_main!(benches);
