use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use prefarg_bench::{run_point, Caps, Mode};
use prefarg_core::fixtures::{ext, running_example};
use prefarg_core::{
    compute_all, compute_approx, enumerate, sample_instance, DefenderPolicy, GeneratorConfig, Semantics,
};

fn running_example_inference(c: &mut Criterion) {
    let f = running_example();
    let e = ext("A,C,E");
    c.bench_function("compute_all/running_example", |b| {
        b.iter(|| compute_all(&f, &e, DefenderPolicy::AnyExtensionDefender).unwrap())
    });
}

fn approximate_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("approximate_pipeline");
    group.sample_size(10);
    for pr in [0.25, 0.5, 0.75] {
        let inst = sample_instance(&GeneratorConfig::new(60, pr, 1), Semantics::Stable, 1000);
        let Ok(inst) = inst else { continue };
        group.bench_with_input(BenchmarkId::new("stable_n60", pr), &inst, |b, inst| {
            b.iter(|| {
                run_point(
                    &inst.framework,
                    &inst.extension,
                    Semantics::Stable,
                    Mode::Approximate,
                    DefenderPolicy::UnattackedDefender,
                    &Caps::default(),
                    7,
                )
                .unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("compute_approx_n60", pr), &inst, |b, inst| {
            b.iter(|| compute_approx(&inst.framework, &inst.extension, DefenderPolicy::UnattackedDefender, 7))
        });
    }
    group.finish();
}

fn exhaustive_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive_pipeline");
    group.sample_size(10);
    for n in [6, 8, 10] {
        let inst = sample_instance(&GeneratorConfig::new(n, 0.25, 3), Semantics::Grounded, 1000).unwrap();
        group.bench_with_input(BenchmarkId::new("grounded", n), &inst, |b, inst| {
            b.iter(|| {
                run_point(
                    &inst.framework,
                    &inst.extension,
                    Semantics::Grounded,
                    Mode::Exhaustive,
                    DefenderPolicy::UnattackedDefender,
                    &Caps::default(),
                    0,
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

fn semantics(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for n in [10, 20, 30] {
        let f = prefarg_core::random_aaf(&GeneratorConfig::new(n, 0.25, 9)).unwrap();
        group.bench_with_input(BenchmarkId::new("preferred", n), &f, |b, f| {
            b.iter(|| enumerate(f, Semantics::Preferred))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    running_example_inference,
    approximate_pipeline,
    exhaustive_pipeline,
    semantics
);
criterion_main!(benches);
