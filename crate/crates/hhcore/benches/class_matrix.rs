use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hhcore::chartab::{class_constants, conjugacy, enumerate_group, Exec, DEFAULT_CAP};
use hhcore::classgrp::parse_group_id;

fn class_matrix(c: &mut Criterion) {
    let mut group = c.benchmark_group("class_constants");
    group.sample_size(10);
    for id in ["SL2_13", "GU3_3", "Sp4_3"] {
        let spec = parse_group_id(id).unwrap();
        let g = enumerate_group(&spec, DEFAULT_CAP).unwrap();
        let conj = conjugacy(&g).unwrap();
        for (name, exec) in [
            ("sequential", Exec::Sequential),
            ("parallel", Exec::Parallel),
        ] {
            group.bench_with_input(BenchmarkId::new(name, id), &exec, |b, &exec| {
                b.iter(|| class_constants(&g, &conj, exec))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, class_matrix);
criterion_main!(benches);
