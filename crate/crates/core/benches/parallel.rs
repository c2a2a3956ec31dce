use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use tropbase::newton::enumerate_qn;
use tropbase::poly::parse_polynomial;
use tropbase::tropical::{grid, membership_scan};
use tropbase::{compute_tropical_basis, tropicalize, BasisOptions, Exec, KernelSource, PAdic, Rational, Ring};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn example() -> Vec<tropbase::Polynomial<Rational>> {
    let ring = Ring::new(["x", "y", "z"]);
    ["2*x+y-4", "x+2*y+z-1"].iter().map(|s| parse_polynomial(s, &ring).unwrap()).collect()
}

fn membership(c: &mut Criterion) {
    let mut group = c.benchmark_group("membership_scan");
    let ring = Ring::new(["x", "y", "z"]);
    let v = PAdic::new(2).unwrap();
    let basis = [
        "2*x+y-4",
        "x+2*y+z-1",
        "6*x^2*z+6*x^2+y*z^2+14*y*z+49*y",
        "3*x*y+2*x-y*z+4*z",
    ];
    let forms: Vec<_> =
        basis.iter().map(|s| tropicalize(&parse_polynomial::<Rational>(s, &ring).unwrap(), &v).unwrap()).collect();
    let step = Rational::new(1.into(), 4.into());
    let points = grid(3, &Rational::from_integer((-4).into()), &Rational::from_integer(4.into()), &step);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, points.len()), &points, |b, pts| {
            b.iter(|| membership_scan(black_box(&forms), pts, exec))
        });
    }
    group.finish();
}

fn qn(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_qn");
    for v in [vec![6, 3, 1], vec![8, 5, 2]] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, format!("{v:?}")), &v, |b, v| {
                b.iter(|| enumerate_qn(black_box(v), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn basis(c: &mut Criterion) {
    let mut group = c.benchmark_group("tropical_basis");
    group.sample_size(10);
    let gens = example();
    for (name, exec) in MODES {
        let opts = BasisOptions {
            kernels: KernelSource::Random { seed: 3, bound: 10, retry_cap: 32 },
            exec,
            ..BasisOptions::default()
        };
        group.bench_function(name, |b| b.iter(|| compute_tropical_basis(black_box(&gens), &opts).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, membership, qn, basis);
criterion_main!(benches);
