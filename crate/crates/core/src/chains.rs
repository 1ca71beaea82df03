//! Chain complexes of hypergraphs and the maps between them.
//!
//! Every complex here is a graded subquotient `top_n / bottom_n` of the
//! simplicial chains of one fixed simplicial complex (the *ambient*).
//! Simplicial complexes, infimum and supremum complexes use `bottom = 0`;
//! cokernel complexes use a nonzero `bottom`. Keeping all spaces in ambient
//! coordinates lets homology classes of different complexes over the same
//! ambient be compared and mapped without any change of basis.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::fieldlin::{preimage_subspace, LinAlgError, Matrix, PrimeField, Quotient, Subspace};
use crate::hypercore::{Hyperedge, Hypergraph, HypergraphMorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("not a simplicial complex: face {face} of {simplex} is missing")]
    NotClosed { simplex: Hyperedge, face: Hyperedge },
    #[error("{0} is not a simplex of the ambient complex")]
    NotInAmbient(Hyperedge),
    #[error("map is not a chain map between the given complexes in degree {degree}")]
    NotWellDefined { degree: usize },
    #[error("spaces are not a chain complex in degree {degree}")]
    NotAComplex { degree: usize },
    #[error("embedded homology mismatch in degree {degree}: infimum {inf}, supremum {sup}")]
    InfSupMismatch { degree: usize, inf: usize, sup: usize },
    #[error("complexes live over different ambient chains")]
    AmbientMismatch,
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// Oriented simplicial chains of a simplicial complex with lexicographically
/// ordered simplices in each dimension.
#[derive(Debug)]
pub struct SimplicialChains {
    field: PrimeField,
    simplices: Vec<Vec<Hyperedge>>,
    index: HashMap<Hyperedge, usize>,
    boundaries: Vec<Matrix>,
}

impl SimplicialChains {
    /// Fails unless `k` is closed under taking nonempty subsets.
    pub fn new(field: PrimeField, k: &Hypergraph) -> Result<Self, ChainError> {
        for s in k.edges() {
            if let Some(face) = s.facets().find(|f| !k.contains(f)) {
                return Err(ChainError::NotClosed {
                    simplex: s.clone(),
                    face,
                });
            }
        }
        let levels = k.max_dim().map_or(0, |d| d + 1);
        let mut simplices: Vec<Vec<Hyperedge>> = vec![Vec::new(); levels];
        for s in k.edges() {
            simplices[s.dim()].push(s.clone());
        }
        let mut index = HashMap::new();
        for level in &simplices {
            for (i, s) in level.iter().enumerate() {
                index.insert(s.clone(), i);
            }
        }
        let mut boundaries = Vec::with_capacity(levels);
        for n in 0..levels {
            let rows = if n == 0 { 0 } else { simplices[n - 1].len() };
            let mut m = Matrix::zeros(field, rows, simplices[n].len());
            if n > 0 {
                for (j, s) in simplices[n].iter().enumerate() {
                    for (i, face) in s.facets().enumerate() {
                        m.set(index[&face], j, field.sign(i % 2 == 0));
                    }
                }
            }
            boundaries.push(m);
        }
        Ok(SimplicialChains {
            field,
            simplices,
            index,
            boundaries,
        })
    }

    /// Chains of the associated complex `Δℋ`.
    pub fn of_associated(field: PrimeField, h: &Hypergraph) -> Self {
        Self::new(field, &h.associated_complex()).expect("associated complex is closed")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Number of nonzero chain groups.
    pub fn levels(&self) -> usize {
        self.simplices.len()
    }

    /// Dimension of `C_n`.
    pub fn rank(&self, n: usize) -> usize {
        self.simplices.get(n).map_or(0, Vec::len)
    }

    pub fn simplices(&self, n: usize) -> &[Hyperedge] {
        self.simplices.get(n).map_or(&[], Vec::as_slice)
    }

    /// Position of a simplex within its dimension.
    pub fn index_of(&self, s: &Hyperedge) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// `∂_n : C_n → C_{n-1}` with `∂[v_0..v_n] = Σ (-1)^i [.. v̂_i ..]`.
    pub fn boundary(&self, n: usize) -> Matrix {
        match self.boundaries.get(n) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.field, self.rank(n.wrapping_sub(1)), 0),
        }
    }

    fn boundary_ref(&self, n: usize) -> Option<&Matrix> {
        self.boundaries.get(n)
    }

    /// `R(ℋ)_n`: the span of the `n`-dimensional hyperedges of `h`.
    pub fn span(&self, h: &Hypergraph, n: usize) -> Result<Subspace, ChainError> {
        let mut idx = Vec::new();
        for e in h.edges_of_dim(n) {
            idx.push(
                self.index_of(e)
                    .ok_or_else(|| ChainError::NotInAmbient(e.clone()))?,
            );
        }
        Ok(Subspace::coordinate(self.field, self.rank(n), idx))
    }

    /// Elementary chain of a simplex.
    pub fn elementary(&self, s: &Hyperedge) -> Option<Vec<u32>> {
        let i = self.index_of(s)?;
        let mut v = vec![0; self.rank(s.dim())];
        v[i] = 1;
        Some(v)
    }

    fn zero_space(&self, n: usize) -> Subspace {
        Subspace::zero(self.field, self.rank(n))
    }

    fn full_space(&self, n: usize) -> Subspace {
        Subspace::full(self.field, self.rank(n))
    }

    /// `∂_n x` for `x ∈ C_n` (zero in degree 0).
    pub fn apply_boundary(&self, n: usize, x: &[u32]) -> Vec<u32> {
        match self.boundary_ref(n) {
            Some(m) => m.apply(x),
            None => vec![0; self.rank(n.wrapping_sub(1))],
        }
    }
}

/// Matrices of the simplicial chain map `Δ(φ)_#` between two ambients.
///
/// A simplex goes to its image simplex with the sign of the sorting
/// permutation, or to zero when two of its vertices collapse.
pub fn simplicial_map_matrices(
    source: &SimplicialChains,
    target: &SimplicialChains,
    vertex_map: &[usize],
) -> Result<Vec<Matrix>, ChainError> {
    let f = source.field;
    let mut out = Vec::with_capacity(source.levels());
    for n in 0..source.levels() {
        let mut m = Matrix::zeros(f, target.rank(n), source.rank(n));
        for (j, s) in source.simplices(n).iter().enumerate() {
            let image: Vec<usize> = s.vertices().iter().map(|&v| vertex_map[v]).collect();
            let inversions = (0..image.len())
                .flat_map(|a| (a + 1..image.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| image[a] > image[b])
                .count();
            let mut sorted = image;
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let t = Hyperedge::new(sorted).expect("nonempty image");
            let i = target
                .index_of(&t)
                .ok_or(ChainError::NotInAmbient(t))?;
            m.set(i, j, f.sign(inversions % 2 == 0));
        }
        out.push(m);
    }
    Ok(out)
}

/// A linear map between two ambients, degree by degree.
#[derive(Clone, Debug)]
pub enum AmbientMap {
    Identity,
    Linear(Arc<Vec<Matrix>>),
}

impl AmbientMap {
    pub fn linear(matrices: Vec<Matrix>) -> Self {
        AmbientMap::Linear(Arc::new(matrices))
    }

    pub fn apply(&self, n: usize, x: &[u32], out_dim: usize) -> Vec<u32> {
        match self {
            AmbientMap::Identity => {
                assert_eq!(x.len(), out_dim, "identity between unequal ambients");
                x.to_vec()
            }
            AmbientMap::Linear(ms) => match ms.get(n) {
                Some(m) => m.apply(x),
                None => vec![0; out_dim],
            },
        }
    }

    pub fn matrix(&self, field: PrimeField, n: usize, in_dim: usize, out_dim: usize) -> Matrix {
        match self {
            AmbientMap::Identity => Matrix::identity(field, in_dim),
            AmbientMap::Linear(ms) => match ms.get(n) {
                Some(m) => m.clone(),
                None => Matrix::zeros(field, out_dim, in_dim),
            },
        }
    }

    /// `next ∘ self` over ambients `a → b → c`.
    pub fn then(&self, next: &AmbientMap, a: &SimplicialChains, b: &SimplicialChains, c: &SimplicialChains) -> AmbientMap {
        match (self, next) {
            (AmbientMap::Identity, other) | (other, AmbientMap::Identity) => other.clone(),
            _ => {
                let f = a.field();
                let levels = a.levels();
                AmbientMap::linear(
                    (0..levels)
                        .map(|n| {
                            next.matrix(f, n, b.rank(n), c.rank(n))
                                .mul(&self.matrix(f, n, a.rank(n), b.rank(n)))
                        })
                        .collect(),
                )
            }
        }
    }
}

/// Graded subquotient `top_n / bottom_n` of an ambient chain complex.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ambient: Arc<SimplicialChains>,
    top: Vec<Subspace>,
    bottom: Vec<Subspace>,
}

impl ChainComplex {
    /// Checks `bottom ⊆ top`, `∂ top ⊆ top` and `∂ bottom ⊆ bottom` in every degree.
    pub fn subquotient(
        ambient: Arc<SimplicialChains>,
        top: Vec<Subspace>,
        bottom: Vec<Subspace>,
    ) -> Result<Self, ChainError> {
        let c = Self::unchecked(ambient, top, bottom);
        c.validate()?;
        Ok(c)
    }

    fn unchecked(ambient: Arc<SimplicialChains>, top: Vec<Subspace>, bottom: Vec<Subspace>) -> Self {
        debug_assert_eq!(top.len(), ambient.levels());
        debug_assert_eq!(bottom.len(), ambient.levels());
        ChainComplex {
            ambient,
            top,
            bottom,
        }
    }

    pub fn validate(&self) -> Result<(), ChainError> {
        let amb = &self.ambient;
        for n in 0..amb.levels() {
            let bad = ChainError::NotAComplex { degree: n };
            if !self.top[n].contains_subspace(&self.bottom[n]) {
                return Err(bad);
            }
            if n > 0 {
                let closed = |space: &Subspace, into: &Subspace| {
                    space
                        .basis()
                        .iter()
                        .all(|x| into.contains(&amb.apply_boundary(n, x)))
                };
                if !closed(&self.top[n], &self.top[n - 1])
                    || !closed(&self.bottom[n], &self.bottom[n - 1])
                {
                    return Err(bad);
                }
            }
        }
        Ok(())
    }

    /// The whole ambient complex.
    pub fn full(ambient: Arc<SimplicialChains>) -> Self {
        let top = (0..ambient.levels()).map(|n| ambient.full_space(n)).collect();
        let bottom = (0..ambient.levels()).map(|n| ambient.zero_space(n)).collect();
        Self::unchecked(ambient, top, bottom)
    }

    /// Chains of a simplicial subcomplex `k` of the ambient.
    pub fn simplicial(ambient: Arc<SimplicialChains>, k: &Hypergraph) -> Result<Self, ChainError> {
        for s in k.edges() {
            if let Some(face) = s.facets().find(|f| !k.contains(f)) {
                return Err(ChainError::NotClosed {
                    simplex: s.clone(),
                    face,
                });
            }
        }
        let top = (0..ambient.levels())
            .map(|n| ambient.span(k, n))
            .collect::<Result<Vec<_>, _>>()?;
        let bottom = (0..ambient.levels()).map(|n| ambient.zero_space(n)).collect();
        Ok(Self::unchecked(ambient, top, bottom))
    }

    /// `Inf_n = R(ℋ)_n ∩ ∂_n^{-1}(R(ℋ)_{n-1})`, the largest subcomplex inside the hyperedge spans.
    pub fn infimum(ambient: Arc<SimplicialChains>, h: &Hypergraph) -> Result<Self, ChainError> {
        let spans = (0..ambient.levels())
            .map(|n| ambient.span(h, n))
            .collect::<Result<Vec<_>, _>>()?;
        let mut top = Vec::with_capacity(spans.len());
        for n in 0..spans.len() {
            if n == 0 {
                top.push(spans[0].clone());
            } else {
                let pre = preimage_subspace(&ambient.boundary(n), &spans[n - 1])?;
                top.push(spans[n].intersection(&pre)?);
            }
        }
        let bottom = (0..ambient.levels()).map(|n| ambient.zero_space(n)).collect();
        Ok(Self::unchecked(ambient, top, bottom))
    }

    /// `Sup_n = R(ℋ)_n + ∂_{n+1} R(ℋ)_{n+1}`, the smallest subcomplex containing the hyperedge spans.
    pub fn supremum(ambient: Arc<SimplicialChains>, h: &Hypergraph) -> Result<Self, ChainError> {
        let spans = (0..ambient.levels())
            .map(|n| ambient.span(h, n))
            .collect::<Result<Vec<_>, _>>()?;
        let mut top = Vec::with_capacity(spans.len());
        for n in 0..spans.len() {
            match spans.get(n + 1) {
                Some(next) => {
                    let bd = next.image_under(&ambient.boundary(n + 1))?;
                    top.push(spans[n].sum(&bd)?);
                }
                None => top.push(spans[n].clone()),
            }
        }
        let bottom = (0..ambient.levels()).map(|n| ambient.zero_space(n)).collect();
        Ok(Self::unchecked(ambient, top, bottom))
    }

    pub fn ambient(&self) -> &Arc<SimplicialChains> {
        &self.ambient
    }

    pub fn field(&self) -> PrimeField {
        self.ambient.field()
    }

    pub fn levels(&self) -> usize {
        self.ambient.levels()
    }

    /// Numerator space in degree `n` (zero beyond the top degree).
    pub fn top(&self, n: usize) -> Subspace {
        self.top
            .get(n)
            .cloned()
            .unwrap_or_else(|| self.ambient.zero_space(n))
    }

    /// Denominator space in degree `n`.
    pub fn bottom(&self, n: usize) -> Subspace {
        self.bottom
            .get(n)
            .cloned()
            .unwrap_or_else(|| self.ambient.zero_space(n))
    }

    /// Dimension of the chain group `top_n / bottom_n`.
    pub fn chain_rank(&self, n: usize) -> usize {
        self.top.get(n).map_or(0, Subspace::dim) - self.bottom.get(n).map_or(0, Subspace::dim)
    }

    /// Generators of `top_n / bottom_n`.
    pub fn generators(&self, n: usize) -> Result<Quotient, ChainError> {
        Ok(Quotient::new(&self.top(n), &self.bottom(n))?)
    }

    /// Boundary `∂_n` in the coordinates of [`ChainComplex::generators`].
    pub fn boundary_matrix(&self, n: usize) -> Result<Matrix, ChainError> {
        let src = self.generators(n)?;
        let tgt = self.generators(n.wrapping_sub(1))?;
        let mut cols = Vec::with_capacity(src.dim());
        for x in src.representatives() {
            let y = self.ambient.apply_boundary(n, x);
            cols.push(
                tgt.coordinates(&y)
                    .ok_or(ChainError::NotAComplex { degree: n })?,
            );
        }
        Ok(Matrix::from_columns(self.field(), tgt.dim(), &cols))
    }

    /// Cycles `{x ∈ top_n : ∂x ∈ bottom_{n-1}}`.
    pub fn cycles(&self, n: usize) -> Result<Subspace, ChainError> {
        let top = self.top(n);
        if n == 0 || n >= self.levels() {
            return Ok(top);
        }
        let pre = preimage_subspace(&self.ambient.boundary(n), &self.bottom[n - 1])?;
        Ok(top.intersection(&pre)?)
    }

    /// Boundaries `bottom_n + ∂ top_{n+1}`.
    pub fn boundaries(&self, n: usize) -> Result<Subspace, ChainError> {
        let bottom = self.bottom(n);
        match self.top.get(n + 1) {
            Some(next) if n + 1 < self.levels() => {
                let bd = next.image_under(&self.ambient.boundary(n + 1))?;
                Ok(bottom.sum(&bd)?)
            }
            _ => Ok(bottom),
        }
    }

    pub fn homology(&self, n: usize) -> Result<HomologySpace, ChainError> {
        let z = self.cycles(n)?;
        let b = self.boundaries(n)?;
        let quotient = Quotient::new(&z, &b).map_err(|e| match e {
            LinAlgError::NotContained => ChainError::NotAComplex { degree: n },
            other => other.into(),
        })?;
        Ok(HomologySpace { degree: n, quotient })
    }

    fn same_ambient(&self, other: &ChainComplex) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient)
    }
}

/// `H_n` of a subquotient complex, with representative cycles in ambient coordinates.
#[derive(Clone, Debug)]
pub struct HomologySpace {
    degree: usize,
    quotient: Quotient,
}

impl HomologySpace {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn representatives(&self) -> &[Vec<u32>] {
        self.quotient.representatives()
    }

    pub fn cycles(&self) -> &Subspace {
        self.quotient.numerator()
    }

    pub fn boundaries(&self) -> &Subspace {
        self.quotient.denominator()
    }

    pub fn ambient_dim(&self) -> usize {
        self.quotient.numerator().ambient_dim()
    }

    /// Class of an ambient chain, or `None` if it is not a cycle here.
    pub fn coordinates(&self, x: &[u32]) -> Option<Vec<u32>> {
        self.quotient.coordinates(x)
    }
}

/// Matrix of the map `src → tgt` induced by an ambient map.
pub fn homology_map(
    src: &HomologySpace,
    tgt: &HomologySpace,
    map: &AmbientMap,
) -> Result<Matrix, ChainError> {
    let field = src.cycles().field();
    let mut cols = Vec::with_capacity(src.dim());
    for z in src.representatives() {
        let y = map.apply(src.degree, z, tgt.ambient_dim());
        cols.push(
            tgt.coordinates(&y)
                .ok_or(ChainError::NotWellDefined { degree: src.degree })?,
        );
    }
    Ok(Matrix::from_columns(field, tgt.dim(), &cols))
}

/// A chain map between subquotient complexes, given by an ambient map.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    map: AmbientMap,
}

impl ChainMap {
    /// Verifies that `top` lands in `top`, `bottom` in `bottom`, and that the
    /// map commutes with `∂` modulo the target's `bottom`.
    pub fn new(source: ChainComplex, target: ChainComplex, map: AmbientMap) -> Result<Self, ChainError> {
        if matches!(map, AmbientMap::Identity) && !source.same_ambient(&target) {
            return Err(ChainError::AmbientMismatch);
        }
        let (sa, ta) = (&source.ambient, &target.ambient);
        for n in 0..source.levels() {
            let bad = ChainError::NotWellDefined { degree: n };
            let out = ta.rank(n);
            let top_t = target.top(n);
            let bottom_t = target.bottom(n);
            for x in source.top[n].basis() {
                let y = map.apply(n, x, out);
                if !top_t.contains(&y) {
                    return Err(bad);
                }
                if n > 0 {
                    let lhs = ta.apply_boundary(n, &y);
                    let rhs = map.apply(n - 1, &sa.apply_boundary(n, x), ta.rank(n - 1));
                    let diff: Vec<u32> = lhs
                        .iter()
                        .zip(&rhs)
                        .map(|(&a, &b)| source.field().sub(a, b))
                        .collect();
                    if !target.bottom(n - 1).contains(&diff) {
                        return Err(bad);
                    }
                }
            }
            for x in source.bottom[n].basis() {
                if !bottom_t.contains(&map.apply(n, x, out)) {
                    return Err(bad);
                }
            }
        }
        Ok(ChainMap {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn ambient_map(&self) -> &AmbientMap {
        &self.map
    }

    /// Ambient matrix in degree `n`.
    pub fn matrix(&self, n: usize) -> Matrix {
        self.map.matrix(
            self.source.field(),
            n,
            self.source.ambient.rank(n),
            self.target.ambient.rank(n),
        )
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ChainMap) -> Result<ChainMap, ChainError> {
        if !self.target.same_ambient(&next.source) {
            return Err(ChainError::AmbientMismatch);
        }
        let map = self.map.then(
            &next.map,
            &self.source.ambient,
            &self.target.ambient,
            &next.target.ambient,
        );
        ChainMap::new(self.source.clone(), next.target.clone(), map)
    }
}

pub fn induced_homology_map(f: &ChainMap, n: usize) -> Result<Matrix, ChainError> {
    let src = f.source.homology(n)?;
    let tgt = f.target.homology(n)?;
    homology_map(&src, &tgt, &f.map)
}

/// `{x ∈ top_n : f x ∈ bottom'_n} / bottom_n`, a subcomplex of the source.
pub fn kernel_complex(f: &ChainMap) -> Result<ChainComplex, ChainError> {
    let src = &f.source;
    let mut top = Vec::with_capacity(src.levels());
    for n in 0..src.levels() {
        let pre = preimage_subspace(&f.matrix(n), &f.target.bottom(n))?;
        top.push(src.top[n].intersection(&pre)?);
    }
    Ok(ChainComplex::unchecked(
        src.ambient.clone(),
        top,
        src.bottom.clone(),
    ))
}

/// `top'_n / (bottom'_n + f(top_n))`, the quotient of the target by the image.
pub fn cokernel_complex(f: &ChainMap) -> Result<ChainComplex, ChainError> {
    let tgt = &f.target;
    let mut bottom = Vec::with_capacity(tgt.levels());
    for n in 0..tgt.levels() {
        let image = f.source.top(n).image_under(&f.matrix(n))?;
        bottom.push(tgt.bottom[n].sum(&image)?);
    }
    Ok(ChainComplex::unchecked(
        tgt.ambient.clone(),
        tgt.top.clone(),
        bottom,
    ))
}

/// `H_n(Δℋ)` for the simplicial complex `k`, in its own ambient.
pub fn simplicial_chain_complex(field: PrimeField, k: &Hypergraph) -> Result<ChainComplex, ChainError> {
    let ambient = Arc::new(SimplicialChains::new(field, k)?);
    Ok(ChainComplex::full(ambient))
}

/// Infimum complex of `h` inside the chains of `Δh`.
pub fn infimum_complex(field: PrimeField, h: &Hypergraph) -> ChainComplex {
    let ambient = Arc::new(SimplicialChains::of_associated(field, h));
    ChainComplex::infimum(ambient, h).expect("hyperedges lie in the associated complex")
}

/// Supremum complex of `h` inside the chains of `Δh`.
pub fn supremum_complex(field: PrimeField, h: &Hypergraph) -> ChainComplex {
    let ambient = Arc::new(SimplicialChains::of_associated(field, h));
    ChainComplex::supremum(ambient, h).expect("hyperedges lie in the associated complex")
}

/// Embedded homology `H_n(ℋ)` computed from the infimum complex inside `ambient`.
///
/// The supremum complex is computed as well and its homology dimension must agree.
pub fn embedded_homology_in(
    ambient: &Arc<SimplicialChains>,
    h: &Hypergraph,
    n: usize,
) -> Result<HomologySpace, ChainError> {
    let inf = ChainComplex::infimum(ambient.clone(), h)?.homology(n)?;
    let sup = ChainComplex::supremum(ambient.clone(), h)?.homology(n)?;
    if inf.dim() != sup.dim() {
        return Err(ChainError::InfSupMismatch {
            degree: n,
            inf: inf.dim(),
            sup: sup.dim(),
        });
    }
    Ok(inf)
}

pub fn embedded_homology(field: PrimeField, h: &Hypergraph, n: usize) -> Result<HomologySpace, ChainError> {
    let ambient = Arc::new(SimplicialChains::of_associated(field, h));
    embedded_homology_in(&ambient, h, n)
}

/// The vertical inclusions `δℋ → Inf → Sup → Δℋ` on one side of a morphism.
#[derive(Clone, Debug)]
pub struct InclusionLadder {
    pub lower_to_inf: ChainMap,
    pub inf_to_sup: ChainMap,
    pub sup_to_upper: ChainMap,
}

impl InclusionLadder {
    fn new(ambient: &Arc<SimplicialChains>, h: &Hypergraph) -> Result<(Self, [ChainComplex; 4]), ChainError> {
        let upper = ChainComplex::full(ambient.clone());
        let sup = ChainComplex::supremum(ambient.clone(), h)?;
        let inf = ChainComplex::infimum(ambient.clone(), h)?;
        let lower = ChainComplex::simplicial(ambient.clone(), &h.lower_associated_complex())?;
        let ladder = InclusionLadder {
            lower_to_inf: ChainMap::new(lower.clone(), inf.clone(), AmbientMap::Identity)?,
            inf_to_sup: ChainMap::new(inf.clone(), sup.clone(), AmbientMap::Identity)?,
            sup_to_upper: ChainMap::new(sup.clone(), upper.clone(), AmbientMap::Identity)?,
        };
        Ok((ladder, [upper, sup, inf, lower]))
    }
}

/// The four chain maps induced by a morphism, plus both inclusion ladders.
#[derive(Clone, Debug)]
pub struct MorphismChainMaps {
    /// `Δ(φ)_#`
    pub upper: ChainMap,
    pub sup: ChainMap,
    pub inf: ChainMap,
    /// `δ(φ)_#`
    pub lower: ChainMap,
    pub source_ladder: InclusionLadder,
    pub target_ladder: InclusionLadder,
}

pub fn morphism_chain_maps(
    field: PrimeField,
    phi: &HypergraphMorphism,
) -> Result<MorphismChainMaps, ChainError> {
    let sa = Arc::new(SimplicialChains::of_associated(field, phi.domain()));
    let ta = Arc::new(SimplicialChains::of_associated(field, phi.codomain()));
    let map = AmbientMap::linear(simplicial_map_matrices(&sa, &ta, phi.vertex_map())?);
    let (source_ladder, [su, ss, si, sl]) = InclusionLadder::new(&sa, phi.domain())?;
    let (target_ladder, [tu, ts, ti, tl]) = InclusionLadder::new(&ta, phi.codomain())?;
    Ok(MorphismChainMaps {
        upper: ChainMap::new(su, tu, map.clone())?,
        sup: ChainMap::new(ss, ts, map.clone())?,
        inf: ChainMap::new(si, ti, map.clone())?,
        lower: ChainMap::new(sl, tl, map)?,
        source_ladder,
        target_ladder,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hollow_triangle() -> Hypergraph {
        Hypergraph::from_index_lists(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap()
    }

    fn full_simplex(m: usize) -> Hypergraph {
        let h = Hypergraph::from_index_lists(m + 1, &[&(0..=m).collect::<Vec<_>>()]).unwrap();
        h.associated_complex()
    }

    fn betti(c: &ChainComplex, n: usize) -> usize {
        c.homology(n).unwrap().dim()
    }

    #[test]
    fn boundary_squares_to_zero() {
        for p in [2, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            let amb = SimplicialChains::new(f, &full_simplex(3)).unwrap();
            for n in 1..amb.levels() - 1 {
                assert!(amb.boundary(n).mul(&amb.boundary(n + 1)).is_zero());
            }
        }
    }

    #[test]
    fn triangle_boundary_shape() {
        let k = hollow_triangle().associated_complex();
        let amb = SimplicialChains::new(PrimeField::THREE, &k).unwrap();
        let d1 = amb.boundary(1);
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        assert_eq!(d1.rank(), 2);
        let disk = SimplicialChains::new(PrimeField::TWO, &full_simplex(2)).unwrap();
        assert_eq!(disk.boundary(2).rank(), 1);
        assert_eq!(disk.boundary(1).rank(), 2);
    }

    #[test]
    fn not_closed_is_rejected() {
        let r = SimplicialChains::new(PrimeField::TWO, &hollow_triangle());
        assert!(matches!(r, Err(ChainError::NotClosed { .. })));
    }

    #[test]
    fn hollow_triangle_homology() {
        for f in [PrimeField::TWO, PrimeField::THREE] {
            let h = hollow_triangle();
            assert_eq!(embedded_homology(f, &h, 0).unwrap().dim(), 0);
            assert_eq!(embedded_homology(f, &h, 1).unwrap().dim(), 1);
            let upper = simplicial_chain_complex(f, &h.associated_complex()).unwrap();
            assert_eq!((betti(&upper, 0), betti(&upper, 1)), (1, 1));
            let inf = infimum_complex(f, &h);
            assert_eq!((inf.top(0).dim(), inf.top(1).dim()), (0, 1));
            let sup = supremum_complex(f, &h);
            assert_eq!((sup.top(0).dim(), sup.top(1).dim()), (2, 3));
        }
    }

    #[test]
    fn simplex_is_acyclic() {
        let c = simplicial_chain_complex(PrimeField::THREE, &full_simplex(3)).unwrap();
        assert_eq!(betti(&c, 0), 1);
        for n in 1..4 {
            assert_eq!(betti(&c, n), 0);
        }
    }

    #[test]
    fn embedded_equals_simplicial_for_complexes() {
        let k = hollow_triangle().associated_complex();
        for n in 0..3 {
            let e = embedded_homology(PrimeField::TWO, &k, n).unwrap().dim();
            let s = betti(&simplicial_chain_complex(PrimeField::TWO, &k).unwrap(), n);
            assert_eq!(e, s);
        }
    }

    #[test]
    fn edge_cycle_without_triangle_boundary() {
        // one block of the triangle-with-tail example
        let h = Hypergraph::from_index_lists(4, &[&[0, 1, 2], &[1, 3], &[2, 3]]).unwrap();
        let inf = infimum_complex(PrimeField::TWO, &h);
        assert_eq!(inf.top(1).dim(), 0);
        assert_eq!(inf.top(2).dim(), 0);
        let upper = simplicial_chain_complex(PrimeField::TWO, &h.associated_complex()).unwrap();
        assert_eq!(betti(&upper, 1), 1);
    }

    #[test]
    fn local_boundaries_compose_to_zero() {
        let h = Hypergraph::from_index_lists(4, &[&[0, 1, 2], &[1, 2], &[2, 3], &[0, 2, 3]]).unwrap();
        for c in [infimum_complex(PrimeField::THREE, &h), supremum_complex(PrimeField::THREE, &h)] {
            c.validate().unwrap();
            for n in 1..c.levels() - 1 {
                let d = c.boundary_matrix(n).unwrap().mul(&c.boundary_matrix(n + 1).unwrap());
                assert!(d.is_zero());
            }
        }
    }

    #[test]
    fn transposition_carries_a_sign() {
        let f = PrimeField::THREE;
        let edge = Hypergraph::from_index_lists(2, &[&[0], &[1], &[0, 1]]).unwrap();
        let phi = HypergraphMorphism::new(edge.clone(), edge, vec![1, 0]).unwrap();
        let maps = morphism_chain_maps(f, &phi).unwrap();
        assert_eq!(maps.upper.matrix(1).get(0, 0), f.element(-1));
    }

    #[test]
    fn collapse_sends_edge_to_zero() {
        let f = PrimeField::TWO;
        let dom = Hypergraph::from_index_lists(2, &[&[0], &[1], &[0, 1]]).unwrap();
        let cod = Hypergraph::new(vec!["u".into()], [Hyperedge::new(vec![0]).unwrap()]).unwrap();
        let phi = HypergraphMorphism::new(dom, cod, vec![0, 0]).unwrap();
        let maps = morphism_chain_maps(f, &phi).unwrap();
        assert!(maps.upper.matrix(1).is_zero());
    }

    #[test]
    fn identity_morphism_maps() {
        let h = Hypergraph::from_index_lists(4, &[&[0, 1, 2], &[1, 3], &[2, 3], &[3]]).unwrap();
        let maps = morphism_chain_maps(PrimeField::THREE, &HypergraphMorphism::identity(&h)).unwrap();
        for m in [&maps.upper, &maps.sup, &maps.inf, &maps.lower] {
            for n in 0..3 {
                let hm = induced_homology_map(m, n).unwrap();
                assert_eq!(hm, Matrix::identity(PrimeField::THREE, hm.rows()));
            }
            let k = kernel_complex(m).unwrap();
            let c = cokernel_complex(m).unwrap();
            for n in 0..3 {
                assert_eq!(k.chain_rank(n), 0);
                assert_eq!(c.chain_rank(n), 0);
            }
        }
    }

    #[test]
    fn kernel_of_edge_collapse() {
        let f = PrimeField::TWO;
        let h = hollow_triangle().associated_complex();
        // collapse v1 onto v0
        let cod = Hypergraph::from_index_lists(3, &[&[0], &[2], &[0, 2]]).unwrap();
        let phi = HypergraphMorphism::new(h, cod, vec![0, 0, 2]).unwrap();
        let maps = morphism_chain_maps(f, &phi).unwrap();
        let k = kernel_complex(&maps.upper).unwrap();
        k.validate().unwrap();
        assert_eq!(k.chain_rank(0), 1);
        assert_eq!(k.chain_rank(1), 2);
        let c = cokernel_complex(&maps.upper).unwrap();
        c.validate().unwrap();
        assert_eq!(c.chain_rank(1), 0);
    }

    #[test]
    fn inclusion_into_associated_complex_keeps_the_cycle() {
        let h = hollow_triangle();
        let phi = HypergraphMorphism::identity(&h);
        let maps = morphism_chain_maps(PrimeField::TWO, &phi).unwrap();
        let m = induced_homology_map(&maps.source_ladder.sup_to_upper, 1).unwrap();
        assert_eq!(m.rank(), 1);
        let iota = induced_homology_map(&maps.source_ladder.inf_to_sup, 1).unwrap();
        assert_eq!(iota.rank(), 1);
    }

    #[test]
    fn zero_map_kernel_and_cokernel() {
        let f = PrimeField::TWO;
        let k = hollow_triangle().associated_complex();
        let amb = Arc::new(SimplicialChains::new(f, &k).unwrap());
        let full = ChainComplex::full(amb.clone());
        let zero = AmbientMap::linear((0..amb.levels()).map(|n| Matrix::zeros(f, amb.rank(n), amb.rank(n))).collect());
        let m = ChainMap::new(full.clone(), full, zero).unwrap();
        let ker = kernel_complex(&m).unwrap();
        let coker = cokernel_complex(&m).unwrap();
        for n in 0..2 {
            assert_eq!(ker.chain_rank(n), amb.rank(n));
            assert_eq!(coker.chain_rank(n), amb.rank(n));
        }
    }
}
