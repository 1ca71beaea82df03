use crate::fieldlin::{Matrix, PrimeField};

use super::{index_at, PersistError};

/// A persistence module sampled at critical values `t_1 < … < t_m`.
///
/// `transitions[i]` maps the space at `t_{i+1}` to the space at `t_{i+2}`
/// (zero-based: index `i` to `i + 1`).
#[derive(Clone, Debug, PartialEq)]
pub struct PersistenceModule {
    field: PrimeField,
    critical: Vec<f64>,
    dims: Vec<usize>,
    transitions: Vec<Matrix>,
}

impl PersistenceModule {
    pub fn new(
        field: PrimeField,
        critical: Vec<f64>,
        dims: Vec<usize>,
        transitions: Vec<Matrix>,
    ) -> Result<Self, PersistError> {
        if critical.iter().any(|t| !t.is_finite()) || critical.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PersistError::BadCriticalValues);
        }
        if dims.len() != critical.len() || transitions.len() != critical.len().saturating_sub(1) {
            return Err(PersistError::Shape { index: 0 });
        }
        for (i, m) in transitions.iter().enumerate() {
            if m.cols() != dims[i] || m.rows() != dims[i + 1] || m.field() != field {
                return Err(PersistError::Shape { index: i });
            }
        }
        Ok(PersistenceModule {
            field,
            critical,
            dims,
            transitions,
        })
    }

    /// The zero module at the given scales.
    pub fn zero(field: PrimeField, critical: Vec<f64>) -> Result<Self, PersistError> {
        let m = critical.len();
        let transitions = (0..m.saturating_sub(1))
            .map(|_| Matrix::zeros(field, 0, 0))
            .collect();
        Self::new(field, critical, vec![0; m], transitions)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn critical(&self) -> &[f64] {
        &self.critical
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn transitions(&self) -> &[Matrix] {
        &self.transitions
    }

    pub fn len(&self) -> usize {
        self.critical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.critical.is_empty()
    }

    pub fn index_at(&self, t: f64) -> Option<usize> {
        index_at(&self.critical, t)
    }

    pub fn dim_at_index(&self, i: Option<usize>) -> usize {
        i.map_or(0, |i| self.dims[i])
    }

    pub fn dim_at(&self, t: f64) -> usize {
        self.dim_at_index(self.index_at(t))
    }

    /// Composite transition from index `i` to index `j ≥ i`.
    pub fn composite(&self, i: usize, j: usize) -> Matrix {
        assert!(i <= j && j < self.len(), "composite({i}, {j}) out of range");
        let mut m = Matrix::identity(self.field, self.dims[i]);
        for k in i..j {
            m = self.transitions[k].mul(&m);
        }
        m
    }

    /// Composite between optional indices; `None` is the zero space.
    pub fn composite_between(&self, i: Option<usize>, j: Option<usize>) -> Matrix {
        match (i, j) {
            (Some(i), Some(j)) => self.composite(i, j),
            _ => Matrix::zeros(self.field, self.dim_at_index(j), self.dim_at_index(i)),
        }
    }

    /// Structure map `ν_t^s` for real scales `t ≤ s`.
    pub fn structure_map(&self, t: f64, s: f64) -> Matrix {
        assert!(t <= s, "structure map needs t <= s");
        self.composite_between(self.index_at(t), self.index_at(s))
    }

    /// `r(i, j)`: rank of the composite between zero-based indices.
    pub fn rank(&self, i: usize, j: usize) -> usize {
        self.composite(i, j).rank()
    }

    /// All `r(i, j)` for `i ≤ j`; row `i` holds `r(i, i), …, r(i, m-1)`.
    pub fn rank_table(&self) -> Vec<Vec<usize>> {
        crate::par::map_range(self.len(), |i| {
            let mut out = Vec::with_capacity(self.len() - i);
            let mut m = Matrix::identity(self.field, self.dims[i]);
            out.push(self.dims[i]);
            for k in i..self.len() - 1 {
                m = self.transitions[k].mul(&m);
                out.push(m.rank());
            }
            out
        })
    }
}
