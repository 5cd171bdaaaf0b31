//! Benchmarks for the hot paths: the controlled-gate kernel at growing
//! register widths, family generation, the full non-destructive readout,
//! and the table audit with its repair search.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cndd::bits::BitString;
use cndd::cluster::{audit, generate, generator_circuit, ClusterTable, Family, TableMode};
use cndd::gates::h;
use cndd::ndd::{branch_ndd, build_ndd_circuit};
use cndd::qstate::StateVector;

fn gate_kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("gate-kernel");
    for n in [10usize, 14, 18] {
        let state = StateVector::basis_state(n, &BitString::from_index(0, n)).unwrap();
        let gate = h(n / 2);
        group.bench_with_input(BenchmarkId::new("h-mid", n), &n, |b, _| {
            b.iter(|| black_box(&state).apply_gate(black_box(&gate)).unwrap())
        });
    }
    group.finish();
}

fn generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("generate");
    for family in [Family::C4, Family::C5] {
        let input = BitString::from_index(0, family.n_qubits());
        group.bench_function(family.tag(), |b| {
            b.iter(|| generate(black_box(family), black_box(&input)).unwrap())
        });
    }
    group.bench_function("c5-circuit-build", |b| {
        b.iter(|| generator_circuit(black_box(Family::C5)))
    });
    group.finish();
}

fn readout(c: &mut Criterion) {
    let mut group = c.benchmark_group("readout");
    for family in [Family::C4, Family::C5] {
        let state = generate(family, &BitString::from_index(0, family.n_qubits())).unwrap();
        group.bench_function(family.tag(), |b| {
            b.iter(|| {
                branch_ndd(black_box(family), TableMode::Repaired, black_box(&state)).unwrap()
            })
        });
        group.bench_function(format!("{}-circuit-build", family.tag()), |b| {
            b.iter(|| build_ndd_circuit(black_box(family)))
        });
    }
    group.finish();
}

fn table_audit(c: &mut Criterion) {
    let mut group = c.benchmark_group("audit");
    // Parse fresh each iteration so the audit sees a cold table, matching
    // how the CLI exercises it.
    let source = ClusterTable::source_text(Family::C5);
    group.bench_function("c5-parse-and-audit", |b| {
        b.iter(|| {
            let table = ClusterTable::parse(Family::C5, black_box(source)).unwrap();
            audit(black_box(&table))
        })
    });
    group.finish();
}

criterion_group!(benches, gate_kernel, generation, readout, table_audit);
criterion_main!(benches);
