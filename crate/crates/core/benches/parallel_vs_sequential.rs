use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cycgraph::classifier::classify;
use cycgraph::closure::{gr_k_membership, OracleConfig};
use cycgraph::group::cyclic_group;
use cycgraph::par;
use cycgraph::spec::CyclicSpec;
use cycgraph::Parallelism;

const MODES: [(&str, Parallelism); 2] = [
    ("sequential", Parallelism::Sequential),
    ("parallel", Parallelism::Parallel),
];

/// Exhaustive GR(2) enumeration that finds no member, so every coloring is examined.
fn membership_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("gr2_exhaustive");
    group.sample_size(10);
    for (p, sizes, fixed) in [(2u64, vec![4u64, 4], 2usize), (3, vec![3, 3], 3)] {
        let spec = CyclicSpec::from_orbit_sizes(p, &sizes, fixed).unwrap();
        let a = cyclic_group(&spec).unwrap();
        for (name, mode) in MODES {
            let cfg = OracleConfig {
                budget: 1 << 20,
                parallelism: mode,
                ..OracleConfig::default()
            };
            group.bench_with_input(BenchmarkId::new(name, &spec), &a, |b, a| {
                b.iter(|| black_box(gr_k_membership(a, 2, &cfg).unwrap()))
            });
        }
    }
    group.finish();
}

/// Classify every spec up to degree 16, one spec per task.
fn classify_sweep(c: &mut Criterion) {
    let specs = CyclicSpec::enumerate(&[2, 3, 5, 7, 11, 13], 16);
    let mut group = c.benchmark_group("classify_sweep_degree_16");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| black_box(par::map(mode, &specs, |s| classify(s).unwrap().class)))
        });
    }
    group.finish();
}

criterion_group!(benches, membership_enumeration, classify_sweep);
criterion_main!(benches);
