use criterion::{black_box, criterion_group, criterion_main, Criterion};
use dpcodes_core::verify::{check_perfect_d3, max_anticode_size, min_distance, shorten_scan};
use dpcodes_core::{build_d3, build_d5, parse_operator, FieldSpec};

fn op(m: u32, lit: &str) -> dpcodes_core::MOperator {
    parse_operator(lit, FieldSpec::default_for(m).unwrap()).unwrap()
}

fn verifier(c: &mut Criterion) {
    let d3 = build_d3(op(3, "matrix3")).unwrap();
    let d5 = build_d5(op(3, "pow:3")).unwrap();
    let d3_16 = build_d3(op(4, "gamma")).unwrap();

    c.bench_function("min distance d3 m=3", |b| b.iter(|| min_distance(black_box(d3.words())).unwrap()));
    c.bench_function("min distance d5 m=3", |b| b.iter(|| min_distance(black_box(d5.words())).unwrap()));
    c.bench_function("perfect d3 m=4", |b| b.iter(|| check_perfect_d3(16, black_box(d3_16.words())).unwrap()));
    c.bench_function("shorten scan k=4 m=4", |b| b.iter(|| shorten_scan(16, black_box(d3_16.words()), 4)));
    c.bench_function("max anticode n=6 d=3", |b| b.iter(|| max_anticode_size(black_box(6), 3).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = verifier
}
criterion_main!(benches);
