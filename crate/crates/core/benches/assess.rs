use criterion::{criterion_group, criterion_main, Criterion};
use ordvga::pipeline::{assess_with, Execution};
use ordvga::{load_matrix, Tolerances};

fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn bench_assess(c: &mut Criterion) {
    let tol = Tolerances::default();
    for name in ["laptops", "provinces"] {
        let m = load_matrix(fixture(&format!("{name}.csv"))).unwrap();
        let mut group = c.benchmark_group(name);
        for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_function(label, |b| b.iter(|| assess_with(&m, exec, &tol).unwrap()));
        }
        group.finish();
    }
}

criterion_group!(benches, bench_assess);
criterion_main!(benches);
