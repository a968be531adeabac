use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use superpose::config_models::{ConfigModel, ModelOptions};
use superpose::fixtures;
use superpose::par;
use superpose::simplicial::{subdivide_times, Cochain, Cohomology, SimplicialComplex};
use superpose::superposition::sup;

fn disk() -> SimplicialComplex {
    subdivide_times(&fixtures::complex("disk").unwrap(), 2)
}

const MODES: [(&str, bool); 2] = [("parallel", false), ("sequential", true)];

fn build(c: &mut Criterion) {
    let k = disk();
    let mut g = c.benchmark_group("build unordered model");
    for (mode, seq) in MODES {
        par::set_sequential(seq);
        g.bench_with_input(BenchmarkId::new(mode, 3), &k, |b, k| {
            b.iter(|| ConfigModel::unordered(k, 3, ModelOptions::default()).unwrap())
        });
    }
    g.finish();
    par::set_sequential(false);
}

fn cohomology(c: &mut Criterion) {
    let m = ConfigModel::unordered(&disk(), 2, ModelOptions::default()).unwrap();
    let mut g = c.benchmark_group("cohomology");
    for (mode, seq) in MODES {
        par::set_sequential(seq);
        g.bench_function(BenchmarkId::new(mode, 2), |b| b.iter(|| Cohomology::new(m.complex()).betti()));
    }
    g.finish();
    par::set_sequential(false);
}

fn superposition(c: &mut Criterion) {
    let k = disk();
    let opts = ModelOptions {
        max_dim: Some(2),
        guard: usize::MAX,
    };
    let one = ConfigModel::unordered(&k, 1, opts).unwrap();
    let two = ConfigModel::unordered(&k, 2, opts).unwrap();
    let three = ConfigModel::unordered(&k, 3, opts).unwrap();
    let h2 = Cohomology::new(two.complex());
    let beta = h2.group(1).unwrap().generators[0].clone();
    let alpha = Cochain::constant_one(0, one.complex().count(0));
    let mut g = c.benchmark_group("sup");
    for (mode, seq) in MODES {
        par::set_sequential(seq);
        g.bench_function(BenchmarkId::new(mode, "1x2"), |b| {
            b.iter(|| sup(&one, &two, &three, &alpha, &beta).unwrap())
        });
    }
    g.finish();
    par::set_sequential(false);
}

fn config() -> Criterion {
    Criterion::default()
        .sample_size(10)
        .measurement_time(Duration::from_secs(5))
}

criterion_group!(
    name = benches;
    config = config();
    targets = build, cohomology, superposition
);
criterion_main!(benches);
