//! Hypergraphs, sublevel filtrations and hypergraph morphisms.
//!
//! A hypergraph is a set of nonempty vertex subsets over a totally ordered,
//! finite vertex list. Vertex order is the order of the vertex list; every
//! orientation sign downstream is derived from it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HypergraphError {
    #[error("empty hyperedge")]
    EmptyHyperedge,
    #[error("hyperedge references vertex index {index}, but there are only {count} vertices")]
    InvalidVertex { index: usize, count: usize },
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate hyperedge {0}")]
    DuplicateHyperedge(Hyperedge),
    #[error("no weight for hyperedge {0}")]
    MissingWeight(Hyperedge),
    #[error("weight {weight} of hyperedge {edge} is not finite")]
    NonFiniteWeight { edge: Hyperedge, weight: f64 },
    #[error("weight given for {0}, which is not a hyperedge")]
    UnknownHyperedge(Hyperedge),
    #[error("the two filtrations live on different hypergraphs")]
    BaseMismatch,
    #[error("{0} is not a hyperedge of the domain")]
    NotInDomain(Hyperedge),
    #[error("invalid morphism: {0}")]
    Morphism(#[from] MorphismViolation),
}

/// A hyperedge: a nonempty, strictly ascending list of vertex indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Hyperedge(Vec<usize>);

impl Hyperedge {
    /// Sorts and deduplicates the vertex indices.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self, HypergraphError> {
        if vertices.is_empty() {
            return Err(HypergraphError::EmptyHyperedge);
        }
        vertices.sort_unstable();
        vertices.dedup();
        Ok(Hyperedge(vertices))
    }

    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Hyperedge(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Geometric dimension: cardinality minus one.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Every nonempty subset, including the hyperedge itself.
    pub fn faces(&self) -> impl Iterator<Item = Hyperedge> + '_ {
        let n = self.0.len();
        assert!(n < 64, "hyperedge too large to enumerate faces");
        (1u64..(1u64 << n)).map(move |mask| {
            Hyperedge(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    /// Codimension-one faces, in the order of the removed vertex.
    pub fn facets(&self) -> impl Iterator<Item = Hyperedge> + '_ {
        let n = self.0.len();
        (0..if n > 1 { n } else { 0 }).map(move |skip| {
            Hyperedge(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }

    pub fn is_subset_of(&self, other: &Hyperedge) -> bool {
        self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite hypergraph on an ordered vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<String>,
    edges: BTreeSet<Hyperedge>,
}

impl Hypergraph {
    pub fn new(
        vertices: Vec<String>,
        edges: impl IntoIterator<Item = Hyperedge>,
    ) -> Result<Self, HypergraphError> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(HypergraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut set = BTreeSet::new();
        for e in edges {
            if let Some(&bad) = e.vertices().iter().find(|&&v| v >= vertices.len()) {
                return Err(HypergraphError::InvalidVertex {
                    index: bad,
                    count: vertices.len(),
                });
            }
            if set.contains(&e) {
                return Err(HypergraphError::DuplicateHyperedge(e));
            }
            set.insert(e);
        }
        Ok(Hypergraph {
            vertices,
            edges: set,
        })
    }

    /// Vertices labelled `v0, v1, …`; hyperedges given as index lists.
    pub fn from_index_lists(
        vertex_count: usize,
        lists: &[&[usize]],
    ) -> Result<Self, HypergraphError> {
        let vertices = (0..vertex_count).map(|i| format!("v{i}")).collect();
        let edges = lists
            .iter()
            .map(|l| Hyperedge::new(l.to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vertices, edges)
    }

    /// Same vertex list, different hyperedges (no validation beyond debug asserts).
    pub(crate) fn with_edges(&self, edges: BTreeSet<Hyperedge>) -> Hypergraph {
        debug_assert!(edges
            .iter()
            .all(|e| e.vertices().iter().all(|&v| v < self.vertices.len())));
        Hypergraph {
            vertices: self.vertices.clone(),
            edges,
        }
    }

    pub fn empty(vertices: Vec<String>) -> Self {
        Hypergraph {
            vertices,
            edges: BTreeSet::new(),
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn edges(&self) -> impl Iterator<Item = &Hyperedge> + '_ {
        self.edges.iter()
    }

    pub fn edge_set(&self) -> &BTreeSet<Hyperedge> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &Hyperedge) -> bool {
        self.edges.contains(e)
    }

    /// Largest hyperedge dimension, `None` for the empty hypergraph.
    pub fn max_dim(&self) -> Option<usize> {
        self.edges.iter().map(Hyperedge::dim).max()
    }

    /// Hyperedges of dimension `n`, in lexicographic order.
    pub fn edges_of_dim(&self, n: usize) -> impl Iterator<Item = &Hyperedge> + '_ {
        self.edges.iter().filter(move |e| e.dim() == n)
    }

    /// Number of hyperedges with `n + 1` vertices.
    pub fn count_simplices(&self, n: usize) -> usize {
        self.edges_of_dim(n).count()
    }

    /// Closed under taking nonempty subsets.
    pub fn is_simplicial(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.facets().all(|f| self.edges.contains(&f)))
    }

    pub fn is_subhypergraph_of(&self, other: &Hypergraph) -> bool {
        self.edges.is_subset(&other.edges)
    }

    /// Δℋ: the downward closure, the smallest simplicial complex containing ℋ.
    pub fn associated_complex(&self) -> Hypergraph {
        let mut closure = BTreeSet::new();
        for e in &self.edges {
            if closure.contains(e) {
                continue;
            }
            closure.extend(e.faces());
        }
        self.with_edges(closure)
    }

    /// δℋ: hyperedges all of whose nonempty subsets are hyperedges.
    pub fn lower_associated_complex(&self) -> Hypergraph {
        // A hyperedge qualifies iff every facet is present and qualifies.
        let mut keep = BTreeSet::new();
        let mut by_dim: Vec<&Hyperedge> = self.edges.iter().collect();
        by_dim.sort_by_key(|e| e.len());
        for e in by_dim {
            if e.facets().all(|f| keep.contains(&f)) {
                keep.insert(e.clone());
            }
        }
        self.with_edges(keep)
    }
}

/// A hypergraph with a real weight on every hyperedge; sublevel sets give the filtration.
#[derive(Clone, Debug, PartialEq)]
pub struct FilteredHypergraph {
    base: Hypergraph,
    weights: BTreeMap<Hyperedge, f64>,
}

impl FilteredHypergraph {
    pub fn new(base: Hypergraph, weights: BTreeMap<Hyperedge, f64>) -> Result<Self, HypergraphError> {
        for (e, &w) in &weights {
            if !base.contains(e) {
                return Err(HypergraphError::UnknownHyperedge(e.clone()));
            }
            if !w.is_finite() {
                return Err(HypergraphError::NonFiniteWeight {
                    edge: e.clone(),
                    weight: w,
                });
            }
        }
        if let Some(missing) = base.edges().find(|e| !weights.contains_key(*e)) {
            return Err(HypergraphError::MissingWeight(missing.clone()));
        }
        Ok(FilteredHypergraph { base, weights })
    }

    pub fn constant(base: Hypergraph, weight: f64) -> Result<Self, HypergraphError> {
        let weights = base.edges().map(|e| (e.clone(), weight)).collect();
        Self::new(base, weights)
    }

    /// Weights from a function of the hyperedge.
    pub fn from_fn(base: Hypergraph, f: impl Fn(&Hyperedge) -> f64) -> Result<Self, HypergraphError> {
        let weights = base.edges().map(|e| (e.clone(), f(e))).collect();
        Self::new(base, weights)
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn weights(&self) -> &BTreeMap<Hyperedge, f64> {
        &self.weights
    }

    pub fn weight(&self, e: &Hyperedge) -> Option<f64> {
        self.weights.get(e).copied()
    }

    /// `f^{-1}((-∞, t])`. No closure is applied.
    pub fn sublevel(&self, t: f64) -> Hypergraph {
        let edges = self
            .weights
            .iter()
            .filter(|(_, &w)| w <= t)
            .map(|(e, _)| e.clone())
            .collect();
        self.base.with_edges(edges)
    }

    /// Distinct weight values in increasing order.
    pub fn critical_values(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.weights.values().copied().collect();
        v.sort_by(f64::total_cmp);
        v.dedup();
        v
    }

    /// `max_σ |f(σ) - g(σ)|`; zero for the empty hypergraph.
    pub fn linf_distance(&self, other: &FilteredHypergraph) -> Result<f64, HypergraphError> {
        if self.base != other.base {
            return Err(HypergraphError::BaseMismatch);
        }
        Ok(self
            .weights
            .iter()
            .map(|(e, w)| (w - other.weights[e]).abs())
            .fold(0.0, f64::max))
    }
}

/// Why a vertex map fails to be a hypergraph morphism.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismViolation {
    #[error("vertex map has {found} entries, domain has {expected} vertices")]
    WrongLength { expected: usize, found: usize },
    #[error("vertex {vertex} maps to {target}, outside the codomain")]
    VertexOutOfRange { vertex: usize, target: usize },
    #[error("image {image} of hyperedge {hyperedge} is not a hyperedge of the codomain")]
    ImageNotHyperedge { hyperedge: Hyperedge, image: Hyperedge },
}

/// Checks that every hyperedge image is a hyperedge of the codomain; reports the first failure.
pub fn validate_morphism(
    vertex_map: &[usize],
    domain: &Hypergraph,
    codomain: &Hypergraph,
) -> Result<(), MorphismViolation> {
    if vertex_map.len() != domain.vertices().len() {
        return Err(MorphismViolation::WrongLength {
            expected: domain.vertices().len(),
            found: vertex_map.len(),
        });
    }
    if let Some((vertex, &target)) = vertex_map
        .iter()
        .enumerate()
        .find(|(_, &t)| t >= codomain.vertices().len())
    {
        return Err(MorphismViolation::VertexOutOfRange { vertex, target });
    }
    for e in domain.edges() {
        let image = image_set(vertex_map, e);
        if !codomain.contains(&image) {
            return Err(MorphismViolation::ImageNotHyperedge {
                hyperedge: e.clone(),
                image,
            });
        }
    }
    Ok(())
}

fn image_set(vertex_map: &[usize], e: &Hyperedge) -> Hyperedge {
    let mut img: Vec<usize> = e.vertices().iter().map(|&v| vertex_map[v]).collect();
    img.sort_unstable();
    img.dedup();
    Hyperedge::from_sorted(img)
}

/// A vertex map sending every hyperedge of the domain onto a hyperedge of the codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphMorphism {
    domain: Hypergraph,
    codomain: Hypergraph,
    vertex_map: Vec<usize>,
}

impl HypergraphMorphism {
    pub fn new(
        domain: Hypergraph,
        codomain: Hypergraph,
        vertex_map: Vec<usize>,
    ) -> Result<Self, MorphismViolation> {
        validate_morphism(&vertex_map, &domain, &codomain)?;
        Ok(HypergraphMorphism {
            domain,
            codomain,
            vertex_map,
        })
    }

    pub fn identity(h: &Hypergraph) -> Self {
        HypergraphMorphism {
            domain: h.clone(),
            codomain: h.clone(),
            vertex_map: (0..h.vertices().len()).collect(),
        }
    }

    pub fn domain(&self) -> &Hypergraph {
        &self.domain
    }

    pub fn codomain(&self) -> &Hypergraph {
        &self.codomain
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// Sorted, deduplicated image of a domain hyperedge.
    pub fn map_hyperedge(&self, e: &Hyperedge) -> Result<Hyperedge, HypergraphError> {
        if !self.domain.contains(e) {
            return Err(HypergraphError::NotInDomain(e.clone()));
        }
        Ok(image_set(&self.vertex_map, e))
    }

    /// Image of any vertex set (not required to be a hyperedge).
    pub fn image_of(&self, e: &Hyperedge) -> Hyperedge {
        image_set(&self.vertex_map, e)
    }

    /// φ(ℋ) as a hypergraph on the codomain vertices.
    pub fn image_hypergraph(&self) -> Hypergraph {
        let edges = self.domain.edges().map(|e| self.image_of(e)).collect();
        self.codomain.with_edges(edges)
    }

    /// Weights `f'(φ(σ))` on the domain; sublevels are `{σ | φ(σ) ∈ ℋ'_t}`.
    pub fn pullback_filtration(
        &self,
        target: &FilteredHypergraph,
    ) -> Result<FilteredHypergraph, HypergraphError> {
        if target.base() != &self.codomain {
            return Err(HypergraphError::BaseMismatch);
        }
        let weights = self
            .domain
            .edges()
            .map(|e| (e.clone(), target.weights[&self.image_of(e)]))
            .collect();
        FilteredHypergraph::new(self.domain.clone(), weights)
    }

    /// Weights on φ(ℋ): the minimum weight over preimages, so sublevels are `{φ(σ) | σ ∈ ℋ_t}`.
    pub fn pushforward_filtration(
        &self,
        source: &FilteredHypergraph,
    ) -> Result<FilteredHypergraph, HypergraphError> {
        if source.base() != &self.domain {
            return Err(HypergraphError::BaseMismatch);
        }
        let mut weights: BTreeMap<Hyperedge, f64> = BTreeMap::new();
        for (e, &w) in source.weights() {
            weights
                .entry(self.image_of(e))
                .and_modify(|cur| *cur = cur.min(w))
                .or_insert(w);
        }
        FilteredHypergraph::new(self.image_hypergraph(), weights)
    }
}
