//! Exact bottleneck distances between persistence diagrams.
//!
//! The ground distance between points is the `ℓ∞` distance in the plane, and
//! a point `(b, d)` can be matched to the diagonal at cost `(d - b) / 2`.
//! Points with infinite death are matched among themselves by sorted birth;
//! if the two diagrams have different numbers of them the distance is `+∞`.

use thiserror::Error;

use crate::fieldlin::PrimeField;
use crate::hypercore::{FilteredHypergraph, HypergraphError};
use crate::matching::{hungarian, max_matching_size};
use crate::persist::{build_persistence_module, module_diagram, DiagramTriple, PersistError, PersistenceDiagram, Variant};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("p must be at least 1, got {0}")]
    InvalidExponent(f64),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Persist(#[from] PersistError),
}

fn linf(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).abs().max((a.1 - b.1).abs())
}

fn to_diagonal(a: (f64, f64)) -> f64 {
    (a.1 - a.0) / 2.0
}

/// Sorted-birth matching of essential points; `None` when counts differ.
fn essential_costs(a: &PersistenceDiagram, b: &PersistenceDiagram) -> Option<Vec<f64>> {
    let (x, y) = (a.essential_births(), b.essential_births());
    if x.len() != y.len() {
        return None;
    }
    Some(x.iter().zip(&y).map(|(p, q)| (p - q).abs()).collect())
}

/// Whether the finite parts admit a matching with every cost `≤ delta`.
fn feasible(a: &[(f64, f64)], b: &[(f64, f64)], delta: f64) -> bool {
    let (na, nb) = (a.len(), b.len());
    // left: a points then diagonal copies of b; right: b points then diagonal copies of a
    let mut adj: Vec<Vec<usize>> = Vec::with_capacity(na + nb);
    for (i, &p) in a.iter().enumerate() {
        let mut row: Vec<usize> = (0..nb).filter(|&j| linf(p, b[j]) <= delta).collect();
        if to_diagonal(p) <= delta {
            row.push(nb + i);
        }
        adj.push(row);
    }
    for (j, &q) in b.iter().enumerate() {
        let mut row: Vec<usize> = (0..na).map(|i| nb + i).collect();
        if to_diagonal(q) <= delta {
            row.push(j);
        }
        adj.push(row);
    }
    max_matching_size(&adj, na + nb) == na + nb
}

/// `d_B^∞` computed exactly: the optimum is one of the finitely many pairwise
/// costs, so the smallest feasible candidate is found by binary search.
pub fn bottleneck_infinity(a: &PersistenceDiagram, b: &PersistenceDiagram) -> f64 {
    let Some(ess) = essential_costs(a, b) else {
        return f64::INFINITY;
    };
    let ess_max = ess.into_iter().fold(0.0, f64::max);
    let fa: Vec<(f64, f64)> = a.finite().collect();
    let fb: Vec<(f64, f64)> = b.finite().collect();
    let mut candidates = vec![0.0];
    for &p in &fa {
        candidates.push(to_diagonal(p));
        candidates.extend(fb.iter().map(|&q| linf(p, q)));
    }
    candidates.extend(fb.iter().map(|&q| to_diagonal(q)));
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    // the largest candidate is always feasible
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(&fa, &fb, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo].max(ess_max)
}

/// `d_B^p` for `1 ≤ p ≤ ∞`; finite `p` uses a minimum-cost perfect matching on
/// the diagonal-augmented cost matrix.
pub fn bottleneck_p(a: &PersistenceDiagram, b: &PersistenceDiagram, p: f64) -> Result<f64, MetricError> {
    if p.is_nan() || p < 1.0 {
        return Err(MetricError::InvalidExponent(p));
    }
    if p == f64::INFINITY {
        return Ok(bottleneck_infinity(a, b));
    }
    let Some(ess) = essential_costs(a, b) else {
        return Ok(f64::INFINITY);
    };
    let fa: Vec<(f64, f64)> = a.finite().collect();
    let fb: Vec<(f64, f64)> = b.finite().collect();
    let (na, nb) = (fa.len(), fb.len());
    let n = na + nb;
    let mut ground = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            ground[i * n + j] = match (i < na, j < nb) {
                (true, true) => linf(fa[i], fb[j]),
                (true, false) => {
                    if j - nb == i {
                        to_diagonal(fa[i])
                    } else {
                        f64::INFINITY
                    }
                }
                (false, true) => {
                    if i - na == j {
                        to_diagonal(fb[j])
                    } else {
                        f64::INFINITY
                    }
                }
                (false, false) => 0.0,
            };
        }
    }
    // forbidden pairs get a cost no optimal matching can afford
    let finite_total: f64 = ground.iter().filter(|c| c.is_finite()).map(|c| c.powf(p)).sum();
    let big = 2.0 * finite_total + 1.0;
    let cost: Vec<f64> = ground
        .iter()
        .map(|&c| if c.is_finite() { c.powf(p) } else { big })
        .collect();
    let assignment = hungarian(&cost, n);
    let mut terms: Vec<f64> = assignment
        .iter()
        .enumerate()
        .map(|(i, &j)| ground[i * n + j])
        .chain(ess)
        .map(|c| c.powf(p))
        .collect();
    debug_assert!(terms.iter().all(|t| t.is_finite()));
    terms.sort_by(f64::total_cmp);
    let total: f64 = terms.iter().sum();
    Ok(if p == 1.0 { total } else { total.powf(1.0 / p) })
}

/// Max over the three variants of `d_B^p` between the degree-`n` diagrams of `f` and `g`.
pub fn hypergraph_distance(
    f: &FilteredHypergraph,
    g: &FilteredHypergraph,
    n: usize,
    p: f64,
    field: PrimeField,
) -> Result<f64, MetricError> {
    if f.base() != g.base() {
        return Err(HypergraphError::BaseMismatch.into());
    }
    if p.is_nan() || p < 1.0 {
        return Err(MetricError::InvalidExponent(p));
    }
    let per_variant = crate::par::try_map_range(Variant::ALL.len(), |k| {
        variant_distance(f, g, Variant::ALL[k], n, p, field)
    })?;
    Ok(per_variant.into_iter().fold(0.0, f64::max))
}

/// `d_B^p` between the degree-`n` diagrams of one variant.
pub fn variant_distance(
    f: &FilteredHypergraph,
    g: &FilteredHypergraph,
    variant: Variant,
    n: usize,
    p: f64,
    field: PrimeField,
) -> Result<f64, MetricError> {
    let a = module_diagram(&build_persistence_module(f, variant, n, field)?)?;
    let b = module_diagram(&build_persistence_module(g, variant, n, field)?)?;
    bottleneck_p(&a, &b, p)
}

/// Max of `d_B^∞` over the kernel, image and cokernel diagrams.
pub fn map_distance(a: &DiagramTriple, b: &DiagramTriple) -> f64 {
    [
        bottleneck_infinity(&a.ker, &b.ker),
        bottleneck_infinity(&a.im, &b.im),
        bottleneck_infinity(&a.coker, &b.coker),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

/// Max of `d_B^p` over the three components; an extension of [`map_distance`] to finite `p`.
pub fn map_distance_p(a: &DiagramTriple, b: &DiagramTriple, p: f64) -> Result<f64, MetricError> {
    Ok(bottleneck_p(&a.ker, &b.ker, p)?
        .max(bottleneck_p(&a.im, &b.im, p)?)
        .max(bottleneck_p(&a.coker, &b.coker, p)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: f64 = f64::INFINITY;

    fn d(points: &[(f64, f64)]) -> PersistenceDiagram {
        PersistenceDiagram::new(points.to_vec()).unwrap()
    }

    #[test]
    fn identical_diagrams() {
        let a = d(&[(0.0, 1.0), (0.5, INF), (2.0, 3.5)]);
        assert_eq!(bottleneck_infinity(&a, &a), 0.0);
        assert_eq!(bottleneck_p(&a, &a, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn single_point_against_empty() {
        let a = d(&[(0.0, 1.0)]);
        let e = PersistenceDiagram::empty();
        assert_eq!(bottleneck_infinity(&a, &e), 0.5);
        assert_eq!(bottleneck_p(&a, &e, 1.0).unwrap(), 0.5);
    }

    #[test]
    fn shifted_essential_classes() {
        for k in 1..=3 {
            let a = d(&vec![(1.0, INF); k]);
            let b = d(&vec![(0.0, INF); k]);
            assert_eq!(bottleneck_infinity(&a, &b), 1.0);
            assert_eq!(bottleneck_p(&a, &b, 1.0).unwrap(), k as f64);
            let two = bottleneck_p(&a, &b, 2.0).unwrap();
            assert!((two - (k as f64).sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn essential_count_mismatch() {
        let a = d(&[(0.0, INF)]);
        assert_eq!(bottleneck_infinity(&a, &PersistenceDiagram::empty()), INF);
        assert_eq!(bottleneck_p(&a, &PersistenceDiagram::empty(), 1.0).unwrap(), INF);
    }

    #[test]
    fn prefers_diagonal_when_cheaper() {
        let a = d(&[(0.0, 1.0)]);
        let b = d(&[(10.0, 11.0)]);
        assert_eq!(bottleneck_infinity(&a, &b), 0.5);
        assert_eq!(bottleneck_p(&a, &b, 1.0).unwrap(), 1.0);
    }

    #[test]
    fn rejects_small_exponent() {
        let e = PersistenceDiagram::empty();
        assert!(matches!(bottleneck_p(&e, &e, 0.5), Err(MetricError::InvalidExponent(_))));
    }
}
