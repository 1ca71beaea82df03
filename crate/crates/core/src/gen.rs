//! Seeded random instances for tests and benchmarks.
//!
//! All real values are multiples of 1/16 so sums, differences and
//! comparisons of weights are exact in binary floating point.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypercore::{FilteredHypergraph, Hyperedge, Hypergraph, HypergraphMorphism};
use crate::persist::PersistenceDiagram;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size limits for random hypergraphs.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_edge_size: usize,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            max_vertices: 7,
            max_edges: 20,
            max_edge_size: 4,
        }
    }
}

/// A uniform multiple of 1/16 in `[lo, hi]`.
pub fn dyadic(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    let (a, b) = ((lo * 16.0).ceil() as i64, (hi * 16.0).floor() as i64);
    rng.gen_range(a..=b) as f64 / 16.0
}

fn random_edge(rng: &mut impl Rng, n: usize, max_size: usize) -> Hyperedge {
    let size = rng.gen_range(1..=max_size.min(n));
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(size);
    Hyperedge::new(all).expect("nonempty")
}

pub fn hypergraph(rng: &mut impl Rng, shape: Shape) -> Hypergraph {
    let n = rng.gen_range(1..=shape.max_vertices);
    let m = rng.gen_range(1..=shape.max_edges);
    let edges: BTreeSet<Hyperedge> = (0..m).map(|_| random_edge(rng, n, shape.max_edge_size)).collect();
    let vertices = (0..n).map(|i| format!("v{i}")).collect();
    Hypergraph::new(vertices, edges).expect("valid by construction")
}

/// Independent weights in `[0, 4]`.
pub fn filtration(rng: &mut impl Rng, base: &Hypergraph) -> FilteredHypergraph {
    FilteredHypergraph::new(
        base.clone(),
        base.edges().map(|e| (e.clone(), dyadic(rng, 0.0, 4.0))).collect(),
    )
    .expect("valid by construction")
}

/// Adds independent offsets in `[-radius, radius]` to every weight.
pub fn perturb(rng: &mut impl Rng, f: &FilteredHypergraph, radius: f64) -> FilteredHypergraph {
    let weights = f
        .weights()
        .iter()
        .map(|(e, &w)| (e.clone(), w + dyadic(rng, -radius, radius)))
        .collect();
    FilteredHypergraph::new(f.base().clone(), weights).expect("valid by construction")
}

/// A filtered simplicial complex: the closure of a random hypergraph with
/// weights raised so every face enters no later than its cofaces.
pub fn simplicial_filtration(rng: &mut impl Rng, shape: Shape) -> FilteredHypergraph {
    let complex = hypergraph(rng, shape).associated_complex();
    let mut by_size: Vec<&Hyperedge> = complex.edges().collect();
    by_size.sort_by_key(|e| e.len());
    let mut weights: BTreeMap<Hyperedge, f64> = BTreeMap::new();
    for e in by_size {
        let own = dyadic(rng, 0.0, 4.0);
        let w = e
            .facets()
            .filter(|f| !f.is_empty())
            .map(|f| weights[&f])
            .fold(own, f64::max);
        weights.insert(e.clone(), w);
    }
    FilteredHypergraph::new(complex, weights).expect("valid by construction")
}

/// A random morphism: a vertex map onto a smaller vertex set whose codomain
/// holds every image hyperedge plus a few extra hyperedges.
pub fn morphism(rng: &mut impl Rng, shape: Shape) -> HypergraphMorphism {
    let domain = hypergraph(rng, shape);
    let n = domain.vertices().len();
    let k = rng.gen_range(1..=n);
    let vertex_map: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    let mut edges: BTreeSet<Hyperedge> = domain
        .edges()
        .map(|e| Hyperedge::new(e.vertices().iter().map(|&v| vertex_map[v]).collect()).expect("nonempty"))
        .collect();
    for _ in 0..rng.gen_range(0..=3) {
        edges.insert(random_edge(rng, k, shape.max_edge_size));
    }
    let codomain = Hypergraph::new((0..k).map(|i| format!("w{i}")).collect(), edges).expect("valid by construction");
    HypergraphMorphism::new(domain, codomain, vertex_map).expect("images are hyperedges")
}

/// Up to `max_points` points with births in `[0, 4]`; roughly one in five is essential.
pub fn diagram(rng: &mut impl Rng, max_points: usize) -> PersistenceDiagram {
    let count = rng.gen_range(0..=max_points);
    let points = (0..count)
        .map(|_| {
            let b = dyadic(rng, 0.0, 4.0);
            let d = if rng.gen_bool(0.2) {
                f64::INFINITY
            } else {
                b + dyadic(rng, 1.0 / 16.0, 4.0)
            };
            (b, d)
        })
        .collect();
    PersistenceDiagram::new(points).expect("valid by construction")
}
