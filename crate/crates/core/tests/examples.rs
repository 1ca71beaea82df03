mod support;

use hyperph::chains::{embedded_homology, ChainComplex, SimplicialChains};
use hyperph::metric::{map_distance_p, variant_distance};
use hyperph::persist::{
    build_persistent_map, commutative_diagram_triples, map_diagram_triple, MorphismLadder, PersistentMap,
    SURFACED_ARROWS,
};
use hyperph::{
    build_persistence_module, map_distance, module_diagram, Direction, FilteredHypergraph, HypergraphMorphism,
    PersistenceDiagram, PrimeField, Variant,
};
use std::sync::Arc;

use support::*;

const F2: PrimeField = PrimeField::TWO;
const INF: f64 = f64::INFINITY;

fn diagram(f: &FilteredHypergraph, variant: Variant, n: usize) -> PersistenceDiagram {
    module_diagram(&build_persistence_module(f, variant, n, F2).unwrap()).unwrap()
}

fn points(list: &[(f64, f64)]) -> PersistenceDiagram {
    PersistenceDiagram::new(list.to_vec()).unwrap()
}

#[test]
fn hollow_triangle_chain_spaces() {
    let h = hollow_triangle();
    let ambient = Arc::new(SimplicialChains::of_associated(F2, &h));
    let inf = ChainComplex::infimum(ambient.clone(), &h).unwrap();
    let sup = ChainComplex::supremum(ambient, &h).unwrap();
    assert_eq!((inf.top(0).dim(), inf.top(1).dim()), (0, 1));
    assert_eq!((sup.top(0).dim(), sup.top(1).dim()), (2, 3));
    assert!(h.lower_associated_complex().is_empty());
    assert_eq!(h.associated_complex().len(), 6);
}

#[test]
fn wedge_lower_complex_diagrams() {
    for k in 1..=3 {
        let (f, g) = wedge_pair(k);
        assert_eq!(f.critical_values(), vec![A, A + EPS]);
        let module = build_persistence_module(&f, Variant::Lower, 1, F2).unwrap();
        assert_eq!(module.dims(), &[0, k]);
        assert_eq!(diagram(&f, Variant::Lower, 1), points(&vec![(A + EPS, INF); k]));
        assert_eq!(diagram(&g, Variant::Lower, 1), points(&vec![(A, INF); k]));
        assert_eq!(diagram(&f, Variant::Embedded, 1), points(&vec![(A, INF); k]));
    }
}

#[test]
fn simplex_edges_embedded_dims() {
    for m in 3..=4 {
        let (f, g) = simplex_pair(m);
        let module = build_persistence_module(&f, Variant::Embedded, 1, F2).unwrap();
        assert_eq!(module.dims(), &[0, m * (m - 1) / 2]);
        assert_eq!(f.sublevel(A).len(), 1);
        let full = embedded_homology(F2, g.base(), 1).unwrap();
        assert_eq!(full.dim(), m * (m - 1) / 2);
        assert_eq!(diagram(&f, Variant::Lower, 1), diagram(&g, Variant::Lower, 1));
    }
}

#[test]
fn corner_blocks_have_no_embedded_cycles() {
    let h = filled_corner_blocks(1);
    let ambient = Arc::new(SimplicialChains::of_associated(F2, &h));
    let inf = ChainComplex::infimum(ambient, &h).unwrap();
    assert_eq!((inf.top(1).dim(), inf.top(2).dim()), (0, 0));
    let (f, g) = corner_pair(2);
    assert_eq!(diagram(&f, Variant::Delta, 1), points(&[(A, INF), (A, INF)]));
    assert_eq!(diagram(&g, Variant::Delta, 1), points(&[(A + EPS, INF), (A + EPS, INF)]));
    assert_eq!(variant_distance(&f, &g, Variant::Delta, 1, 1.0, F2).unwrap(), 2.0 * EPS);
}

#[test]
fn identity_triples_recover_module_distance() {
    let (f, g) = wedge_pair(2);
    let triple = |x: &FilteredHypergraph| {
        let m = build_persistence_module(x, Variant::Lower, 1, F2).unwrap();
        map_diagram_triple(&PersistentMap::identity(m)).unwrap()
    };
    let (a, b) = (triple(&f), triple(&g));
    assert!(a.ker.is_empty() && a.coker.is_empty());
    assert_eq!(map_distance(&a, &b), EPS);
    assert_eq!(map_distance_p(&a, &b, 1.0).unwrap(), 2.0 * EPS);
}

#[test]
fn collapsing_a_triangle_kills_its_cycle() {
    let h = hollow_triangle();
    let point = hyperph::Hypergraph::from_index_lists(1, &[&[0]]).unwrap();
    let phi = HypergraphMorphism::new(h.clone(), point, vec![0, 0, 0]).unwrap();
    let f = FilteredHypergraph::constant(h, 0.0).unwrap();
    let map = build_persistent_map(&phi, &f, Direction::Pushforward, Variant::Embedded, 1, F2).unwrap();
    let triple = map_diagram_triple(&map).unwrap();
    assert_eq!(triple.ker, points(&[(0.0, INF)]));
    assert!(triple.im.is_empty() && triple.coker.is_empty());
}

#[test]
fn all_arrows_are_reported() {
    let (f, _) = wedge_pair(1);
    let phi = HypergraphMorphism::identity(f.base());
    for direction in [Direction::Pushforward, Direction::Pullback] {
        let all = commutative_diagram_triples(&phi, &f, direction, 1, F2).unwrap();
        assert_eq!(all.len(), 24);
        let ladder = MorphismLadder::build(&phi, &f, direction, 1, F2).unwrap();
        for arrow in SURFACED_ARROWS {
            let t = ladder.triple(arrow).unwrap();
            if arrow.is_horizontal() {
                assert!(t.ker.is_empty() && t.coker.is_empty(), "{arrow}");
            }
            assert_eq!(all[&arrow.name()], t);
        }
    }
}
