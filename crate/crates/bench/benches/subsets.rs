use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use tropevol_bench::instances;
use tropevol_core::cells::enumerate_triangulation;
use tropevol_core::ehrhart::{coeffs_via_formula, count_tropical, DEFAULT_GUARD};
use tropevol_core::linalg::tdet;
use tropevol_core::volumes::{tlvol_subsets, LatticeEmbedding};

fn subsets(c: &mut Criterion) {
    let mut group = c.benchmark_group("tlvol_subsets");
    for (d, m) in [(3, 8), (4, 10), (5, 12)] {
        let inputs = instances(d, m, 20, 4);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("d{d}_m{m}")),
            &inputs,
            |b, inputs| {
                b.iter(|| {
                    inputs
                        .iter()
                        .map(|x| tlvol_subsets(black_box(x)).unwrap().0)
                        .collect::<Vec<_>>()
                })
            },
        );
    }
    group.finish();
}

fn triangulation(c: &mut Criterion) {
    let inputs = instances(3, 5, 4, 4);
    c.bench_function("tlvol_triangulation/d3_m5", |b| {
        b.iter(|| {
            inputs
                .iter()
                .map(|x| LatticeEmbedding::new(black_box(x)).unwrap().tlvol().0)
                .collect::<Vec<_>>()
        })
    });
}

fn assignment(c: &mut Criterion) {
    let inputs = instances(12, 12, 100, 4);
    c.bench_function("tdet/r12", |b| {
        b.iter(|| {
            inputs
                .iter()
                .map(|x| tdet(black_box(x)).unwrap().value)
                .collect::<Vec<_>>()
        })
    });
}

fn ehrhart(c: &mut Criterion) {
    let inputs = instances(2, 4, 4, 4);
    c.bench_function("count_tropical/d2_k1", |b| {
        b.iter(|| {
            inputs
                .iter()
                .map(|x| count_tropical(black_box(x), 2, 1, DEFAULT_GUARD).unwrap())
                .collect::<Vec<_>>()
        })
    });
    let complexes: Vec<_> = inputs
        .iter()
        .map(|x| enumerate_triangulation(x).unwrap())
        .collect();
    c.bench_function("coeffs_via_formula/d2_b3", |b| {
        b.iter(|| {
            complexes
                .iter()
                .map(|t| coeffs_via_formula(black_box(t), 3, DEFAULT_GUARD).unwrap())
                .collect::<Vec<_>>()
        })
    });
}

criterion_group!(benches, subsets, triangulation, assignment, ehrhart);
criterion_main!(benches);
