use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use fiblie_core::homology::ChainComplex;
use fiblie_core::{AlgebraId, Execution};

fn h2_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("h2_table");
    group.sample_size(10);
    for max_degree in [20, 25] {
        let complex = ChainComplex::new(AlgebraId::L, max_degree);
        for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, max_degree), &exec, |b, &exec| {
                b.iter(|| complex.dims(2, exec))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, h2_table);
criterion_main!(benches);
