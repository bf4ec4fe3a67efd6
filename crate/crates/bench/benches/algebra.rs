use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gwa::iso::iso_quantum;
use gwa::{FieldMode, GwaElement};
use gwa_bench::{classical_presentation, mixed_element, quantum_presentation, scaled_pair};

fn multiply(c: &mut Criterion) {
    let mut group = c.benchmark_group("multiply");
    for (name, pres) in [
        ("quantum", quantum_presentation()),
        ("classical", classical_presentation()),
    ] {
        for span in [1i64, 3, 5] {
            let u = mixed_element(span);
            group.bench_with_input(BenchmarkId::new(name, span), &u, |b, u| {
                b.iter(|| pres.multiply(black_box(u), black_box(u)))
            });
        }
    }
    group.finish();
}

fn iso(c: &mut Criterion) {
    let mut group = c.benchmark_group("iso_quantum");
    let q = gwa::exactpoly::int(2);
    for degree in [4u32, 8, 16] {
        let (a, b) = scaled_pair(degree);
        group.bench_with_input(
            BenchmarkId::from_parameter(degree),
            &(a, b),
            |bch, (a, b)| {
                bch.iter(|| {
                    iso_quantum(&q, black_box(a), black_box(b), FieldMode::OverRationals).unwrap()
                })
            },
        );
    }
    group.finish();
}

fn normality(c: &mut Criterion) {
    let pres = quantum_presentation();
    let normal = GwaElement::term(0, gwa::LaurentPoly::monomial(gwa::exactpoly::int(7), 3));
    let mixed = mixed_element(2);
    c.bench_function("normality/monomial", |b| {
        b.iter(|| pres.normality_witness(black_box(&normal)).unwrap())
    });
    c.bench_function("normality/mixed", |b| {
        b.iter(|| pres.normality_witness(black_box(&mixed)).unwrap())
    });
}

criterion_group!(benches, multiply, iso, normality);
criterion_main!(benches);
