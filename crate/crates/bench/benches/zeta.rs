use criterion::{black_box, criterion_group, criterion_main, Criterion};
use epstein::{epstein_zeta, epstein_zeta_reg};
use epstein_bench::fixtures;

fn zeta(c: &mut Criterion) {
    let mut group = c.benchmark_group("epstein_zeta");
    for f in fixtures() {
        group.bench_function(f.name, |b| {
            b.iter(|| epstein_zeta(black_box(f.nu), &f.lattice, black_box(&f.x), black_box(&f.y)).unwrap())
        });
        group.bench_function(format!("{}_reg", f.name), |b| {
            b.iter(|| epstein_zeta_reg(black_box(f.nu), &f.lattice, black_box(&f.x), black_box(&f.y)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, zeta);
criterion_main!(benches);
