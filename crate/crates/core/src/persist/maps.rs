use crate::fieldlin::{Matrix, PrimeField, Quotient, Subspace};

use super::{module_diagram, PersistError, PersistenceDiagram, PersistenceModule};

/// A commuting ladder `Φ_i : V_i → U_i` between modules sampled at the same scales.
#[derive(Clone, Debug, PartialEq)]
pub struct PersistentMap {
    source: PersistenceModule,
    target: PersistenceModule,
    maps: Vec<Matrix>,
}

impl PersistentMap {
    /// Checks shapes and `Φ_{i+1} M_i = M'_i Φ_i`.
    pub fn new(
        source: PersistenceModule,
        target: PersistenceModule,
        maps: Vec<Matrix>,
    ) -> Result<Self, PersistError> {
        if source.critical() != target.critical() {
            return Err(PersistError::CriticalMismatch);
        }
        if maps.len() != source.len() {
            return Err(PersistError::Shape { index: maps.len() });
        }
        for (i, m) in maps.iter().enumerate() {
            if m.cols() != source.dims()[i] || m.rows() != target.dims()[i] {
                return Err(PersistError::Shape { index: i });
            }
        }
        for i in 0..source.len().saturating_sub(1) {
            let left = maps[i + 1].mul(&source.transitions()[i]);
            let right = target.transitions()[i].mul(&maps[i]);
            if left != right {
                return Err(PersistError::NotCommuting { index: i });
            }
        }
        Ok(PersistentMap {
            source,
            target,
            maps,
        })
    }

    pub fn identity(module: PersistenceModule) -> Self {
        let maps = module
            .dims()
            .iter()
            .map(|&d| Matrix::identity(module.field(), d))
            .collect();
        PersistentMap {
            source: module.clone(),
            target: module,
            maps,
        }
    }

    pub fn zero(source: PersistenceModule, target: PersistenceModule) -> Result<Self, PersistError> {
        let f = source.field();
        let maps = source
            .dims()
            .iter()
            .zip(target.dims())
            .map(|(&a, &b)| Matrix::zeros(f, b, a))
            .collect();
        Self::new(source, target, maps)
    }

    pub fn source(&self) -> &PersistenceModule {
        &self.source
    }

    pub fn target(&self) -> &PersistenceModule {
        &self.target
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn field(&self) -> PrimeField {
        self.source.field()
    }

    /// `Φ_t` at a real scale (zero below the first critical value).
    pub fn map_at_index(&self, i: Option<usize>) -> Matrix {
        match i {
            Some(i) => self.maps[i].clone(),
            None => Matrix::zeros(self.field(), 0, 0),
        }
    }
}

/// Kernel, image and cokernel modules of a persistent map, with the subspaces
/// they are built from.
#[derive(Clone, Debug)]
pub struct Submodules {
    pub ker: PersistenceModule,
    pub im: PersistenceModule,
    pub coker: PersistenceModule,
    /// `Ker Φ_i ⊆ V_i`, coordinates are the echelon basis.
    pub kernels: Vec<Subspace>,
    /// `Im Φ_i ⊆ U_i`, coordinates are the echelon basis.
    pub images: Vec<Subspace>,
    /// `U_i / Im Φ_i`.
    pub cokernels: Vec<Quotient>,
}

/// Matrix of `a` restricted to `from → into`, in echelon coordinates of both.
pub fn restrict(a: &Matrix, from: &Subspace, into: &Subspace) -> Option<Matrix> {
    let cols = from
        .basis()
        .iter()
        .map(|x| into.coordinates(&a.apply(x)))
        .collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_columns(a.field(), into.dim(), &cols))
}

/// Matrix induced by `a` between quotients (defined when `a` maps denominator into denominator).
pub fn induce(a: &Matrix, from: &Quotient, into: &Quotient) -> Option<Matrix> {
    if !from
        .denominator()
        .basis()
        .iter()
        .all(|x| into.denominator().contains(&a.apply(x)))
    {
        return None;
    }
    let cols = from
        .representatives()
        .iter()
        .map(|x| into.coordinates(&a.apply(x)))
        .collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_columns(a.field(), into.dim(), &cols))
}

pub fn submodules(phi: &PersistentMap) -> Result<Submodules, PersistError> {
    let f = phi.field();
    let (src, tgt) = (phi.source(), phi.target());
    let m = src.len();
    let kernels: Vec<Subspace> = phi.maps.iter().map(Matrix::kernel_basis).collect();
    let images: Vec<Subspace> = phi.maps.iter().map(Matrix::image_basis).collect();
    let cokernels = (0..m)
        .map(|i| Quotient::new(&Subspace::full(f, tgt.dims()[i]), &images[i]))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| PersistError::Shape { index: 0 })?;
    let mut kt = Vec::with_capacity(m.saturating_sub(1));
    let mut it = Vec::with_capacity(m.saturating_sub(1));
    let mut ct = Vec::with_capacity(m.saturating_sub(1));
    for i in 0..m.saturating_sub(1) {
        let bad = PersistError::NotCommuting { index: i };
        kt.push(restrict(&src.transitions()[i], &kernels[i], &kernels[i + 1]).ok_or(bad.clone())?);
        it.push(restrict(&tgt.transitions()[i], &images[i], &images[i + 1]).ok_or(bad.clone())?);
        ct.push(induce(&tgt.transitions()[i], &cokernels[i], &cokernels[i + 1]).ok_or(bad)?);
    }
    let crit = src.critical().to_vec();
    Ok(Submodules {
        ker: PersistenceModule::new(f, crit.clone(), kernels.iter().map(Subspace::dim).collect(), kt)?,
        im: PersistenceModule::new(f, crit.clone(), images.iter().map(Subspace::dim).collect(), it)?,
        coker: PersistenceModule::new(f, crit, cokernels.iter().map(Quotient::dim).collect(), ct)?,
        kernels,
        images,
        cokernels,
    })
}

/// `D(Φ) = (D(Ker Φ), D(Im Φ), D(Coker Φ))`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct DiagramTriple {
    pub ker: PersistenceDiagram,
    pub im: PersistenceDiagram,
    pub coker: PersistenceDiagram,
}

impl DiagramTriple {
    /// `(part name, diagram)` in the order ker, im, coker.
    pub fn parts(&self) -> [(&'static str, &PersistenceDiagram); 3] {
        [("ker", &self.ker), ("im", &self.im), ("coker", &self.coker)]
    }
}

pub fn map_diagram_triple(phi: &PersistentMap) -> Result<DiagramTriple, PersistError> {
    let s = submodules(phi)?;
    Ok(DiagramTriple {
        ker: module_diagram(&s.ker)?,
        im: module_diagram(&s.im)?,
        coker: module_diagram(&s.coker)?,
    })
}
