use criterion::{black_box, criterion_group, criterion_main, Criterion};
use dpcodes_core::{build_d3, build_d5, build_preparata, parse_operator, FieldSpec, D3Construction};

fn op(m: u32, lit: &str) -> dpcodes_core::MOperator {
    parse_operator(lit, FieldSpec::default_for(m).unwrap()).unwrap()
}

fn constructions(c: &mut Criterion) {
    c.bench_function("d3 m=3", |b| b.iter(|| build_d3(black_box(op(3, "matrix3"))).unwrap()));
    c.bench_function("d3 m=4", |b| b.iter(|| build_d3(black_box(op(4, "gamma"))).unwrap()));
    c.bench_function("d5 m=3", |b| b.iter(|| build_d5(black_box(op(3, "pow:3"))).unwrap()));
    c.bench_function("preparata m=3", |b| b.iter(|| build_preparata(black_box(op(3, "pow:3"))).unwrap()));

    let big = D3Construction::new(op(5, "gamma")).unwrap();
    let probe = big.words().nth(12345).unwrap();
    c.bench_function("d3 m=5 membership", |b| b.iter(|| big.contains(black_box(&probe))));
}

criterion_group!(benches, constructions);
criterion_main!(benches);
