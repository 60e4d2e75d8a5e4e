use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use splitcheck::spectra::thom_cyclic_dims_with;
use splitcheck::steinberg::summand_dims_with;
use splitcheck::verify::{adem_faithfulness, random_words};
use splitcheck::Execution;

const MODES: [Execution; 2] = [Execution::Sequential, Execution::Parallel];

fn summand(c: &mut Criterion) {
    let mut group = c.benchmark_group("summand_dims");
    group.sample_size(10);
    for exec in MODES {
        group.bench_with_input(BenchmarkId::new("n2_k-1", format!("{exec:?}")), &exec, |b, &e| {
            b.iter(|| summand_dims_with(e, 2, -1, -2, 15).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("n3_k0", format!("{exec:?}")), &exec, |b, &e| {
            b.iter(|| summand_dims_with(e, 3, 0, 0, 10).unwrap())
        });
    }
    group.finish();
}

fn thom(c: &mut Criterion) {
    let mut group = c.benchmark_group("thom_cyclic_dims");
    for exec in MODES {
        group.bench_with_input(BenchmarkId::new("n2", format!("{exec:?}")), &exec, |b, &e| {
            b.iter(|| thom_cyclic_dims_with(e, 2, 13).unwrap())
        });
    }
    group.finish();
}

fn faithfulness(c: &mut Criterion) {
    let words = random_words(1, 200, 12, 4);
    let mut group = c.benchmark_group("adem_faithfulness");
    group.sample_size(10);
    for exec in MODES {
        group.bench_with_input(BenchmarkId::new("200_words", format!("{exec:?}")), &exec, |b, &e| {
            b.iter(|| adem_faithfulness(e, &words, 12).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, summand, thom, faithfulness);
criterion_main!(benches);
