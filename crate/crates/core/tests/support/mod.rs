#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use hyperph::{FilteredHypergraph, Hyperedge, Hypergraph, PersistenceDiagram};

pub const A: f64 = 0.0;
pub const EPS: f64 = 1.0;

pub fn edge(v: &[usize]) -> Hyperedge {
    Hyperedge::new(v.to_vec()).unwrap()
}

pub fn hollow_triangle() -> Hypergraph {
    Hypergraph::from_index_lists(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap()
}

/// `k` hollow triangles (vertices and edges) sharing the vertex `v0`.
pub fn wedge_of_triangles(k: usize) -> Hypergraph {
    let mut lists: Vec<Vec<usize>> = vec![vec![0]];
    for i in 0..k {
        let (x, y) = (2 * i + 1, 2 * i + 2);
        lists.extend([vec![x], vec![y], vec![0, x], vec![0, y], vec![x, y]]);
    }
    let refs: Vec<&[usize]> = lists.iter().map(Vec::as_slice).collect();
    Hypergraph::from_index_lists(2 * k + 1, &refs).unwrap()
}

/// `f(v0) = a + ε`, everything else at `a`; `g ≡ a`.
pub fn wedge_pair(k: usize) -> (FilteredHypergraph, FilteredHypergraph) {
    let h = wedge_of_triangles(k);
    let apex = edge(&[0]);
    let f = FilteredHypergraph::from_fn(h.clone(), |e| if *e == apex { A + EPS } else { A }).unwrap();
    let g = FilteredHypergraph::constant(h, A).unwrap();
    (f, g)
}

/// Edges and the top face of the `m`-simplex.
pub fn simplex_edges_and_top(m: usize) -> Hypergraph {
    let mut lists: Vec<Vec<usize>> = Vec::new();
    for i in 0..=m {
        for j in i + 1..=m {
            lists.push(vec![i, j]);
        }
    }
    lists.push((0..=m).collect());
    let refs: Vec<&[usize]> = lists.iter().map(Vec::as_slice).collect();
    Hypergraph::from_index_lists(m + 1, &refs).unwrap()
}

/// `f = a + ε` on edges and `a` on the top face; `g ≡ a`.
pub fn simplex_pair(m: usize) -> (FilteredHypergraph, FilteredHypergraph) {
    let h = simplex_edges_and_top(m);
    let f = FilteredHypergraph::from_fn(h.clone(), |e| if e.len() == 2 { A + EPS } else { A }).unwrap();
    let g = FilteredHypergraph::constant(h, A).unwrap();
    (f, g)
}

/// `k` disjoint blocks `{0,1,2}, {1,3}, {2,3}` shifted by four.
pub fn filled_corner_blocks(k: usize) -> Hypergraph {
    let mut lists: Vec<Vec<usize>> = Vec::new();
    for b in 0..k {
        let o = 4 * b;
        lists.extend([vec![o, o + 1, o + 2], vec![o + 1, o + 3], vec![o + 2, o + 3]]);
    }
    let refs: Vec<&[usize]> = lists.iter().map(Vec::as_slice).collect();
    Hypergraph::from_index_lists(4 * k, &refs).unwrap()
}

/// `f ≡ a`, `g ≡ a + ε`.
pub fn corner_pair(k: usize) -> (FilteredHypergraph, FilteredHypergraph) {
    let h = filled_corner_blocks(k);
    (
        FilteredHypergraph::constant(h.clone(), A).unwrap(),
        FilteredHypergraph::constant(h, A + EPS).unwrap(),
    )
}

/// Persistence pairs of a filtered simplicial complex by the standard column
/// reduction over F2, with simplices ordered by (weight, dimension, vertices).
/// Zero-length pairs are dropped.
pub fn reduction_diagrams(f: &FilteredHypergraph, max_degree: usize) -> Vec<PersistenceDiagram> {
    let mut order: Vec<(&Hyperedge, f64)> = f.weights().iter().map(|(e, &w)| (e, w)).collect();
    order.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.len().cmp(&b.0.len())).then(a.0.cmp(b.0)));
    let position: BTreeMap<&Hyperedge, usize> = order.iter().enumerate().map(|(i, (e, _))| (*e, i)).collect();

    let mut columns: Vec<BTreeSet<usize>> = order
        .iter()
        .map(|(e, _)| {
            if e.len() == 1 {
                BTreeSet::new()
            } else {
                e.facets().map(|face| position[&face]).collect()
            }
        })
        .collect();
    let mut owner_of_low: BTreeMap<usize, usize> = BTreeMap::new();
    let mut paired = vec![false; order.len()];
    let mut points: Vec<Vec<(f64, f64)>> = vec![Vec::new(); max_degree + 1];
    for j in 0..columns.len() {
        while let Some(&low) = columns[j].iter().next_back() {
            match owner_of_low.get(&low) {
                Some(&k) => {
                    let other = columns[k].clone();
                    let col = &mut columns[j];
                    for x in other {
                        if !col.insert(x) {
                            col.remove(&x);
                        }
                    }
                }
                None => break,
            }
        }
        if let Some(&low) = columns[j].iter().next_back() {
            owner_of_low.insert(low, j);
            paired[low] = true;
            paired[j] = true;
            let degree = order[low].0.len() - 1;
            let (b, d) = (order[low].1, order[j].1);
            if degree <= max_degree && b < d {
                points[degree].push((b, d));
            }
        }
    }
    for (i, (e, w)) in order.iter().enumerate() {
        let degree = e.len() - 1;
        if !paired[i] && degree <= max_degree {
            points[degree].push((*w, f64::INFINITY));
        }
    }
    points.into_iter().map(|p| PersistenceDiagram::new(p).unwrap()).collect()
}

fn pair_cost(a: (f64, f64), b: (f64, f64)) -> f64 {
    match (a.1.is_finite(), b.1.is_finite()) {
        (true, true) => (a.0 - b.0).abs().max((a.1 - b.1).abs()),
        (false, false) => (a.0 - b.0).abs(),
        _ => f64::INFINITY,
    }
}

fn diagonal_cost(a: (f64, f64)) -> f64 {
    (a.1 - a.0) / 2.0
}

/// Every partial matching between the two point sets; unmatched points go to
/// the diagonal. Calls `visit` with the list of costs of each matching.
fn enumerate_matchings(a: &[(f64, f64)], b: &[(f64, f64)], visit: &mut impl FnMut(&[f64])) {
    fn go(
        i: usize,
        a: &[(f64, f64)],
        b: &[(f64, f64)],
        used: &mut Vec<bool>,
        costs: &mut Vec<f64>,
        visit: &mut impl FnMut(&[f64]),
    ) {
        if i == a.len() {
            let before = costs.len();
            for (j, &q) in b.iter().enumerate() {
                if !used[j] {
                    costs.push(diagonal_cost(q));
                }
            }
            visit(costs);
            costs.truncate(before);
            return;
        }
        costs.push(diagonal_cost(a[i]));
        go(i + 1, a, b, used, costs, visit);
        costs.pop();
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                costs.push(pair_cost(a[i], b[j]));
                go(i + 1, a, b, used, costs, visit);
                costs.pop();
                used[j] = false;
            }
        }
    }
    go(0, a, b, &mut vec![false; b.len()], &mut Vec::new(), visit);
}

/// Exhaustive `d_B^p`, with `p = ∞` giving the bottleneck distance.
pub fn brute_force_distance(a: &PersistenceDiagram, b: &PersistenceDiagram, p: f64) -> f64 {
    let mut best = f64::INFINITY;
    enumerate_matchings(a.points(), b.points(), &mut |costs| {
        let value = if p.is_infinite() {
            costs.iter().copied().fold(0.0, f64::max)
        } else {
            let total: f64 = costs.iter().map(|c| c.powf(p)).sum();
            total.powf(1.0 / p)
        };
        best = best.min(value);
    });
    best
}
