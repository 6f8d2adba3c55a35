use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

use ratcap_bench::{chain_case, validity_formulas, CHAIN_SIZES};
use ratcap_core::gen::agent_names;
use ratcap_core::mc::{mc, McOptions};
use ratcap_core::validity::{builtin_suite, Decider};

fn chain_scaling(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain");
    group.sample_size(10);
    for n in CHAIN_SIZES {
        let (model, phi) = chain_case(n);
        group.throughput(Throughput::Elements(model.num_transitions() as u64));
        for opts in [McOptions::default(), McOptions::all()[3]] {
            let id = format!("{n}/{}-{}", opts.rat_scope, opts.future);
            group.bench_with_input(BenchmarkId::from_parameter(id), &model, |b, m| {
                b.iter(|| mc(m, &phi, opts).unwrap())
            });
        }
    }
    group.finish();
}

fn validity(c: &mut Criterion) {
    let mut group = c.benchmark_group("validity");
    group.sample_size(10);
    let formulas = validity_formulas(50, 2, 17);
    group.bench_function("random-depth-2", |b| {
        b.iter(|| {
            // fresh memo per iteration
            let mut d = Decider::new(agent_names(2)).unwrap();
            formulas.iter().filter(|f| d.valid(f).unwrap()).count()
        })
    });
    group.bench_function("builtin-suite", |b| b.iter(builtin_suite));
    group.finish();
}

criterion_group!(benches, chain_scaling, validity);
criterion_main!(benches);
