use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polycontact::adjacency::{connected_spaces, untie};
use polycontact::logic::{find_countermodel, parse_formula};
use polycontact::pipeline::TRIANGLE_FORMULA;
use polycontact::{random, synthesize};

fn plane_pairs(
    n: usize,
    bounded: bool,
) -> Vec<(polycontact::PlanePolytope, polycontact::PlanePolytope)> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    (0..n)
        .map(|_| {
            (
                random::plane_polytope(&mut rng, bounded),
                random::plane_polytope(&mut rng, bounded),
            )
        })
        .collect()
}

fn geometry(c: &mut Criterion) {
    let bounded = plane_pairs(32, true);
    c.bench_function("plane strong contact, 32 bounded pairs", |b| {
        b.iter(|| {
            bounded
                .iter()
                .filter(|(p, q)| black_box(p).contact_sc(black_box(q)))
                .count()
        })
    });
    let mixed = plane_pairs(8, false);
    c.bench_function("plane complement, 8 unbounded polytopes", |b| {
        b.iter(|| {
            mixed
                .iter()
                .map(|(p, _)| black_box(p).complement().parts().len())
                .sum::<usize>()
        })
    });
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let lines: Vec<_> = (0..256)
        .map(|_| random::interval_polytope(&mut rng))
        .collect();
    c.bench_function("interval union and contact, 255 pairs", |b| {
        b.iter(|| {
            lines
                .windows(2)
                .filter(|w| w[0].union(&w[1]).contact_sc(&w[0]))
                .count()
        })
    });
}

fn discrete(c: &mut Criterion) {
    let six: Vec<_> = connected_spaces(6).to_vec();
    c.bench_function("untie all 112 six-cell classes", |b| {
        b.iter(|| {
            six.iter()
                .map(|s| untie(black_box(s)).unwrap().space.len())
                .sum::<usize>()
        })
    });
    let phi = parse_formula(TRIANGLE_FORMULA).unwrap();
    c.bench_function("countermodel search, triangle formula", |b| {
        b.iter(|| find_countermodel(black_box(&phi), 4).unwrap().space.len())
    });
    c.bench_function("synthesize, triangle formula in the plane", |b| {
        b.iter(|| {
            synthesize(black_box(&phi), 4, 2)
                .unwrap()
                .unwrap()
                .untied_space
                .len()
        })
    });
}

criterion_group!(benches, geometry, discrete);
criterion_main!(benches);
