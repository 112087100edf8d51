use criterion::{black_box, criterion_group, criterion_main, BatchSize, Criterion, Throughput};
use qtcomb::bijections::{sweep, zeta};
use qtcomb::dyck::{dd_qt_table, enumerate_dd_filtered, DdFilter};
use qtcomb::polyomino::{enumerate_rp, rp_qt};
use qtcomb::{DyckFlavor, FEvaluator, FIndex, PolyFlavor};

fn bench_dyck_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("dd_qt_table");
    for (m, n) in [(1, 4), (2, 4), (2, 5)] {
        for flavor in [DyckFlavor::Ddd, DyckFlavor::DdbStar] {
            group.bench_function(format!("{flavor}/{m}/{n}"), |b| {
                b.iter(|| dd_qt_table(black_box(m), black_box(n), flavor));
            });
        }
    }
    group.finish();
}

fn bench_polyomino_enumerators(c: &mut Criterion) {
    let mut group = c.benchmark_group("rp_qt");
    for (m, n) in [(2, 2), (3, 3), (3, 4)] {
        for flavor in [PolyFlavor::Star, PolyFlavor::Circ] {
            group.bench_function(format!("{flavor}/{m}/{n}"), |b| {
                b.iter(|| rp_qt(black_box(m), 1, black_box(n), 1, 1, flavor));
            });
        }
    }
    group.finish();
}

fn bench_recursion(c: &mut Criterion) {
    let mut group = c.benchmark_group("f_eval");
    for n in [4, 6, 8] {
        // A fresh evaluator per iteration measures the full memo build.
        group.bench_function(format!("cold/{n}"), |b| {
            b.iter_batched(
                FEvaluator::new,
                |ev| ev.eval(FIndex::new(n, 1, 2, 1, 1)).unwrap(),
                BatchSize::SmallInput,
            );
        });
    }
    let warm = FEvaluator::new();
    warm.eval(FIndex::new(8, 1, 2, 1, 1)).unwrap();
    group.bench_function("warm/8", |b| {
        b.iter(|| warm.eval(black_box(FIndex::new(8, 1, 2, 1, 1))).unwrap());
    });
    group.finish();
}

fn bench_bijections(c: &mut Criterion) {
    let mut group = c.benchmark_group("bijections");

    let paths: Vec<_> = enumerate_dd_filtered(2, 4, DdFilter::default(), DyckFlavor::Ddd).collect();
    group.throughput(Throughput::Elements(paths.len() as u64));
    group.bench_function("sweep/2/4", |b| {
        b.iter(|| {
            for d in &paths {
                black_box(sweep(d).unwrap());
            }
        });
    });

    let polyominoes = enumerate_rp(3, None, 3, 1, 1, PolyFlavor::Circ);
    group.throughput(Throughput::Elements(polyominoes.len() as u64));
    group.bench_function("zeta/3/3", |b| {
        b.iter(|| {
            for p in &polyominoes {
                black_box(zeta(p).unwrap());
            }
        });
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_dyck_tables,
    bench_polyomino_enumerators,
    bench_recursion,
    bench_bijections
);
criterion_main!(benches);
