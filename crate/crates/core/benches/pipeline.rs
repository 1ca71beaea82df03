use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hyperph::gen::{self, Shape};
use hyperph::persist::MorphismLadder;
use hyperph::{hypergraph_distance, par, Direction, PrimeField};

fn distances(c: &mut Criterion) {
    let mut rng = gen::rng(42);
    let shape = Shape {
        max_vertices: 9,
        max_edges: 40,
        max_edge_size: 4,
    };
    let pairs: Vec<_> = (0..8)
        .map(|_| {
            let h = gen::hypergraph(&mut rng, shape);
            let f = gen::filtration(&mut rng, &h);
            let g = gen::perturb(&mut rng, &f, 0.5);
            (f, g)
        })
        .collect();
    let run = || {
        for (f, g) in &pairs {
            for n in 0..=2 {
                hypergraph_distance(f, g, n, 2.0, PrimeField::TWO).unwrap();
            }
        }
    };
    let mut group = c.benchmark_group("hypergraph_distance");
    group.bench_function(BenchmarkId::new("mode", "parallel"), |b| b.iter(run));
    group.bench_function(BenchmarkId::new("mode", "sequential"), |b| b.iter(|| par::sequential(run)));
    group.finish();
}

fn ladders(c: &mut Criterion) {
    let mut rng = gen::rng(7);
    let instances: Vec<_> = (0..4)
        .map(|_| {
            let phi = gen::morphism(&mut rng, Shape::default());
            let f = gen::filtration(&mut rng, phi.domain());
            (phi, f)
        })
        .collect();
    let run = || {
        for (phi, f) in &instances {
            MorphismLadder::build(phi, f, Direction::Pushforward, 1, PrimeField::TWO).unwrap();
        }
    };
    let mut group = c.benchmark_group("morphism_ladder");
    group.bench_function(BenchmarkId::new("mode", "parallel"), |b| b.iter(run));
    group.bench_function(BenchmarkId::new("mode", "sequential"), |b| b.iter(|| par::sequential(run)));
    group.finish();
}

criterion_group!(benches, distances, ladders);
criterion_main!(benches);
