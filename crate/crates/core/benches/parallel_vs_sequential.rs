use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use greenbox::based_cells::{compute_cells_with, Closure, DiagramBasis};
use greenbox::diagrams::DiagramFamily;
use greenbox::exact_arith::rank_rational;
use greenbox::exec::Exec;
use greenbox::sandwich_reduction::gram_matrix_with;
use num_rational::BigRational;

const MODES: [(&str, Exec); 2] = [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)];

fn gram_fill(c: &mut Criterion) {
    let mut group = c.benchmark_group("gram_fill");
    for (family, n, lambda) in [(DiagramFamily::Brauer, 6, 2), (DiagramFamily::Partition, 4, 1)] {
        for (name, exec) in MODES {
            let id = BenchmarkId::new(name, format!("{family} n={n} lambda={lambda}"));
            group.bench_function(id, |b| b.iter(|| gram_matrix_with(family, n, lambda, exec).unwrap()));
        }
    }
    group.finish();
}

fn gram_rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("gram_rank");
    group.sample_size(10);
    let g = gram_matrix_with(DiagramFamily::Partition, 4, 1, Exec::Sequential).unwrap();
    let m = g.at(&BigRational::from_integer(3.into()));
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "p n=4 lambda=1 delta=3"), |b| b.iter(|| rank_rational(&m, exec)));
    }
    group.finish();
}

fn cells(c: &mut Criterion) {
    let mut group = c.benchmark_group("cells");
    group.sample_size(10);
    for (family, n) in [(DiagramFamily::Brauer, 4), (DiagramFamily::RookBrauer, 3)] {
        let basis = DiagramBasis::new(family, n).unwrap();
        let alg = basis.algebra_at(&BigRational::from_integer(2.into()));
        for (name, exec) in MODES {
            let id = BenchmarkId::new(name, format!("{family} n={n}"));
            group.bench_function(id, |b| b.iter(|| compute_cells_with(&alg, Closure::FullBasis, exec).unwrap()));
        }
    }
    group.finish();
}

criterion_group!(benches, gram_fill, gram_rank, cells);
criterion_main!(benches);
