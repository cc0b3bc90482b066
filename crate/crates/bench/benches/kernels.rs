use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use g2check::cohomology::{cocycle_of, fiber_demo_for, restrict, CoboundarySearch, SigmaAction};
use g2check::counterexample::ConjugatorSearch;
use g2check::{Fe, Gf2m, Mat, VSpace};
use g2check_bench::{counterexample, mixed_element};

fn field(c: &mut Criterion) {
    let f = Gf2m::new(4).unwrap();
    c.bench_function("gf16 mul all pairs", |b| {
        b.iter(|| {
            let mut acc = Fe::ZERO;
            for x in f.elements() {
                for y in f.elements() {
                    acc += f.mul(x, y);
                }
            }
            black_box(acc)
        })
    });
}

fn matrices(c: &mut Criterion) {
    let (ce, _) = counterexample(7, 3);
    let f = ce.field();
    let g = mixed_element(&ce);
    let t = ce.t().clone();
    c.bench_function("matmul dense", |b| {
        b.iter(|| black_box(&g).mul(black_box(&g), f))
    });
    c.bench_function("matmul diagonal", |b| {
        b.iter(|| black_box(&t).mul(black_box(&g), f))
    });
    c.bench_function("products_equal", |b| {
        b.iter(|| Mat::products_equal(black_box(&g), &t, &t, &g, f))
    });
}

fn searches(c: &mut Criterion) {
    let (ce, en) = counterexample(7, 3);
    let search = ConjugatorSearch::new(&ce, &en);
    c.bench_function("conjugator search prefilter (7,3)", |b| {
        b.iter(|| ConjugatorSearch::new(black_box(&ce), &en).survivors())
    });
    c.bench_function("conjugator search pair (7,3)", |b| {
        b.iter(|| search.search(Fe(2), Fe(5)).unwrap())
    });

    let vs = VSpace::new(ce.g2());
    let f = ce.field().clone();
    let x = ce.g2().kappa(g2check::roots::OMEGA, Fe::ONE);
    let mut group = c.benchmark_group("v scan");
    group.sample_size(10);
    group.bench_function("filter centralizer (7,3)", |b| {
        b.iter(|| vs.filter_indices(|v| v.commutes_with(&x, &f)).len())
    });
    let act = SigmaAction::new(&ce).unwrap();
    let down: Vec<_> = [Fe(0), Fe(6)]
        .iter()
        .map(|&a| restrict(&cocycle_of(&ce.build_rho(a).unwrap(), &act, &vs).unwrap()).unwrap())
        .collect();
    group.bench_function("sylow coboundary search (7,3)", |b| {
        b.iter(|| {
            CoboundarySearch::new(&vs, &act)
                .search(&down[0], &down[1])
                .unwrap()
        })
    });
    group.bench_function("fiber (7,3) first four values", |b| {
        b.iter(|| {
            fiber_demo_for(&ce, &vs, &[Fe(0), Fe(1), Fe(2), Fe(3)])
                .unwrap()
                .fiber_lower_bound
        })
    });
    group.finish();
}

criterion_group!(benches, field, matrices, searches);
criterion_main!(benches);
