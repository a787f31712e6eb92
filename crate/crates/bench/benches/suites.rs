use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qci_core::algebra::make_qci;
use qci_core::derivation::{derivation_values_qci, derivations_generic};
use qci_core::hh1::hh1_qci;
use qci_core::lift::{lifted_commutator_space, make_lifted_algebra, normalized_f};
use qci_core::verify::scan_row;

fn algebra(c: &mut Criterion) {
    let mut g = c.benchmark_group("algebra");
    for (p, e) in [(5u64, 2u64), (7, 3), (11, 5)] {
        let a = make_qci(p, e, None).unwrap();
        g.bench_with_input(BenchmarkId::new("center", format!("{p},{e}")), &a, |b, a| {
            b.iter(|| a.algebra().center().dim())
        });
        g.bench_with_input(BenchmarkId::new("radical_powers", format!("{p},{e}")), &a, |b, a| {
            b.iter(|| a.algebra().radical_powers().len())
        });
    }
    g.finish();
}

fn derivations(c: &mut Criterion) {
    let mut g = c.benchmark_group("derivations");
    g.sample_size(10);
    let a = make_qci(5, 2, None).unwrap();
    g.bench_function("generic 5,2", |b| b.iter(|| derivations_generic(a.algebra()).unwrap().dim()));
    for (p, e) in [(5u64, 2u64), (13, 4)] {
        let a = make_qci(p, e, None).unwrap();
        g.bench_with_input(BenchmarkId::new("closed_form", format!("{p},{e}")), &a, |b, a| {
            b.iter(|| derivation_values_qci(a).dim())
        });
    }
    g.finish();
}

fn lie(c: &mut Criterion) {
    let mut g = c.benchmark_group("hh1");
    g.sample_size(10);
    for (p, e) in [(5u64, 4u64), (7, 2)] {
        let a = make_qci(p, e, None).unwrap();
        g.bench_with_input(BenchmarkId::new("structure", format!("{p},{e}")), &a, |b, a| {
            b.iter(|| hh1_qci(a).unwrap().dim())
        });
        g.bench_function(BenchmarkId::new("scan_row", format!("{p},{e}")), |b| {
            b.iter(|| scan_row(black_box(p), black_box(e)).unwrap())
        });
    }
    g.finish();
}

fn lift(c: &mut Criterion) {
    let mut g = c.benchmark_group("lift");
    g.sample_size(10);
    g.bench_function("normalized_f 97", |b| b.iter(|| normalized_f(black_box(97))));
    let l = make_lifted_algebra(5).unwrap();
    g.bench_function("commutator_lattice 5", |b| b.iter(|| lifted_commutator_space(&l).unwrap().pure));
    g.finish();
}

criterion_group!(benches, algebra, derivations, lie, lift);
criterion_main!(benches);
