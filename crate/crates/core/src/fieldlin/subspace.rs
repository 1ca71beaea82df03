use super::{echelon, LinAlgError, Matrix, PrimeField};

/// A linear subspace of `F_p^n`, held as a reduced row-echelon basis.
///
/// Two subspaces are equal exactly when their echelon bases are equal, but
/// [`Subspace::same_as`] goes through mutual containment so it also works on
/// subspaces built by different routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Self::coordinate(field, ambient, 0..ambient)
    }

    /// Span of the standard basis vectors at `indices`.
    pub fn coordinate(
        field: PrimeField,
        ambient: usize,
        indices: impl IntoIterator<Item = usize>,
    ) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let basis = idx
            .iter()
            .map(|&i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Subspace {
            field,
            ambient,
            basis,
            pivots: idx,
        }
    }

    pub fn from_vectors(field: PrimeField, ambient: usize, mut vectors: Vec<Vec<u32>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        let pivots = echelon(field, &mut vectors, None);
        vectors.truncate(pivots.len());
        Subspace {
            field,
            ambient,
            basis: vectors,
            pivots,
        }
    }

    /// Column space of `m`.
    pub fn from_matrix_columns(m: &Matrix) -> Self {
        m.image_basis()
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Echelon basis vectors.
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `ambient × dim` matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.basis)
    }

    /// Residual of `x` after eliminating every pivot coordinate; zero iff `x` lies in the subspace.
    pub fn reduce(&self, x: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.ambient, "vector length mismatch");
        let f = self.field;
        let mut r = x.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p];
            if c != 0 {
                for (v, &bv) in r.iter_mut().zip(b).skip(p) {
                    if bv != 0 {
                        *v = f.sub_mul(*v, c, bv);
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.reduce(x).iter().all(|&v| v == 0)
    }

    /// Coordinates of `x` in the echelon basis, or `None` when `x` is outside.
    pub fn coordinates(&self, x: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(x) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| x[p]).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient && other.basis.iter().all(|v| self.contains(v))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    /// Adds one vector, keeping the basis reduced. Returns whether the dimension grew.
    pub fn insert(&mut self, x: &[u32]) -> bool {
        let f = self.field;
        let mut r = self.reduce(x);
        let Some(p) = r.iter().position(|&v| v != 0) else {
            return false;
        };
        let inv = f.inv(r[p]);
        r.iter_mut().for_each(|v| *v = f.mul(*v, inv));
        for b in &mut self.basis {
            let c = b[p];
            if c != 0 {
                for (v, &rv) in b.iter_mut().zip(&r).skip(p) {
                    if rv != 0 {
                        *v = f.sub_mul(*v, c, rv);
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// `A + B`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_compatible(other)?;
        let (mut big, small) = if self.dim() >= other.dim() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for v in &small.basis {
            big.insert(v);
        }
        Ok(big)
    }

    /// `A ∩ B`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_compatible(other)?;
        // x = Σ c_i a_i lies in B iff the B-complement projection kills it
        let q = other.complement_projection();
        let projected = q.mul(&self.basis_matrix());
        let kernel = projected.kernel_basis();
        let f = self.field;
        let vectors = kernel
            .basis()
            .iter()
            .map(|c| combine(f, self.ambient, &self.basis, c))
            .collect();
        Ok(Subspace::from_vectors(f, self.ambient, vectors))
    }

    /// `M(A)` for `M: F^ambient → F^rows`.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace, LinAlgError> {
        if m.cols() != self.ambient {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.ambient,
                found: m.cols(),
            });
        }
        let vectors = self.basis.iter().map(|b| m.apply(b)).collect();
        Ok(Subspace::from_vectors(self.field, m.rows(), vectors))
    }

    /// Linear projection `F^n → F^(n - dim)` whose kernel is exactly this subspace.
    ///
    /// Quotient coordinates are the non-pivot coordinates of the reduced vector.
    pub fn complement_projection(&self) -> Matrix {
        let f = self.field;
        let free = self.free_coordinates();
        let mut slot = vec![usize::MAX; self.ambient];
        for (k, &j) in free.iter().enumerate() {
            slot[j] = k;
        }
        let mut q = Matrix::zeros(f, free.len(), self.ambient);
        for (k, &j) in free.iter().enumerate() {
            q.set(k, j, 1);
        }
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            for (j, &bv) in b.iter().enumerate() {
                if bv != 0 && slot[j] != usize::MAX {
                    q.set(slot[j], p, f.neg(bv));
                }
            }
        }
        q
    }

    /// Ambient coordinates that are not pivots of the echelon basis.
    pub fn free_coordinates(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }
}

fn combine(field: PrimeField, ambient: usize, vectors: &[Vec<u32>], coeffs: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; ambient];
    for (v, &c) in vectors.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(v) {
            if x != 0 {
                *o = field.add(*o, field.mul(c, x));
            }
        }
    }
    out
}

/// `{x : Mx ∈ W}`, computed as the kernel of `(projection onto F^rows / W) ∘ M`.
pub fn preimage_subspace(m: &Matrix, w: &Subspace) -> Result<Subspace, LinAlgError> {
    if w.ambient_dim() != m.rows() {
        return Err(LinAlgError::DimensionMismatch {
            expected: m.rows(),
            found: w.ambient_dim(),
        });
    }
    if w.field() != m.field() {
        return Err(LinAlgError::FieldMismatch);
    }
    Ok(w.complement_projection().mul(m).kernel_basis())
}

/// An ordered list of independent vectors with a coordinate solver.
#[derive(Clone, Debug)]
pub struct Frame {
    field: PrimeField,
    ambient: usize,
    echelon: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    // transform · vectors = echelon
    transform: Vec<Vec<u32>>,
}

impl Frame {
    /// Fails when the vectors are linearly dependent.
    pub fn new(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Result<Self, LinAlgError> {
        let k = vectors.len();
        let mut rows = vectors.to_vec();
        for v in &rows {
            if v.len() != ambient {
                return Err(LinAlgError::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
        }
        let mut transform: Vec<Vec<u32>> = (0..k)
            .map(|i| {
                let mut e = vec![0; k];
                e[i] = 1;
                e
            })
            .collect();
        let pivots = echelon(field, &mut rows, Some(&mut transform));
        if pivots.len() != k {
            return Err(LinAlgError::DimensionMismatch {
                expected: k,
                found: pivots.len(),
            });
        }
        Ok(Frame {
            field,
            ambient,
            echelon: rows,
            pivots,
            transform,
        })
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Coefficients `c` with `x = Σ c_j v_j`, or `None` if `x` is outside the span.
    pub fn coefficients(&self, x: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(x.len(), self.ambient, "vector length mismatch");
        let f = self.field;
        let y: Vec<u32> = self.pivots.iter().map(|&p| x[p]).collect();
        // residual check: x == Σ y_i echelon_i
        let mut r = x.to_vec();
        for (row, &c) in self.echelon.iter().zip(&y) {
            if c == 0 {
                continue;
            }
            for (v, &e) in r.iter_mut().zip(row) {
                if e != 0 {
                    *v = f.sub_mul(*v, c, e);
                }
            }
        }
        if r.iter().any(|&v| v != 0) {
            return None;
        }
        let k = self.len();
        let mut c = vec![0u32; k];
        for (i, &yi) in y.iter().enumerate() {
            if yi == 0 {
                continue;
            }
            for (j, slot) in c.iter_mut().enumerate() {
                let t = self.transform[i][j];
                if t != 0 {
                    *slot = f.add(*slot, f.mul(yi, t));
                }
            }
        }
        Some(c)
    }
}

/// `V / W` for `W ⊆ V ⊆ F^n`, with chosen lifts of a quotient basis.
#[derive(Clone, Debug)]
pub struct Quotient {
    numerator: Subspace,
    denominator: Subspace,
    representatives: Vec<Vec<u32>>,
    frame: Frame,
}

impl Quotient {
    /// Representatives are the echelon vectors of `V` that extend a basis of `W`,
    /// taken greedily in echelon order.
    pub fn new(v: &Subspace, w: &Subspace) -> Result<Self, LinAlgError> {
        v.check_compatible(w)?;
        if !v.contains_subspace(w) {
            return Err(LinAlgError::NotContained);
        }
        let mut span = w.clone();
        let mut reps = Vec::with_capacity(v.dim() - w.dim());
        for b in v.basis() {
            if span.insert(b) {
                reps.push(b.clone());
            }
        }
        Self::with_representatives(v, w, reps)
    }

    /// Uses caller-chosen lifts; they must lie in `V` and complement `W`.
    pub fn with_representatives(
        v: &Subspace,
        w: &Subspace,
        representatives: Vec<Vec<u32>>,
    ) -> Result<Self, LinAlgError> {
        v.check_compatible(w)?;
        if !v.contains_subspace(w) || !representatives.iter().all(|r| v.contains(r)) {
            return Err(LinAlgError::NotContained);
        }
        if w.dim() + representatives.len() != v.dim() {
            return Err(LinAlgError::DimensionMismatch {
                expected: v.dim() - w.dim(),
                found: representatives.len(),
            });
        }
        let mut all = w.basis().to_vec();
        all.extend(representatives.iter().cloned());
        let frame = Frame::new(v.field(), v.ambient_dim(), &all)?;
        Ok(Quotient {
            numerator: v.clone(),
            denominator: w.clone(),
            representatives,
            frame,
        })
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn numerator(&self) -> &Subspace {
        &self.numerator
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denominator
    }

    pub fn representatives(&self) -> &[Vec<u32>] {
        &self.representatives
    }

    /// Quotient coordinates of `x ∈ V`; `None` when `x ∉ V`.
    pub fn coordinates(&self, x: &[u32]) -> Option<Vec<u32>> {
        let c = self.frame.coefficients(x)?;
        Some(c[self.denominator.dim()..].to_vec())
    }
}

/// `(dim V/W, projection)` where the projection maps coordinates in `V`'s
/// echelon basis to quotient coordinates; its kernel is exactly `W`.
pub fn quotient_map(v: &Subspace, w: &Subspace) -> Result<(usize, Matrix), LinAlgError> {
    let q = Quotient::new(v, w)?;
    let columns: Vec<Vec<u32>> = v
        .basis()
        .iter()
        .map(|b| q.coordinates(b).expect("basis vector lies in V"))
        .collect();
    Ok((q.dim(), Matrix::from_columns(v.field(), q.dim(), &columns)))
}
