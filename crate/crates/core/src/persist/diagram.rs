use std::fmt;

use super::{PersistError, PersistenceModule};

/// A finite multiset of `(birth, death)` points with `birth < death`;
/// `death` may be `+∞`. Points are kept sorted.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PersistenceDiagram {
    points: Vec<(f64, f64)>,
}

impl PersistenceDiagram {
    pub fn new(mut points: Vec<(f64, f64)>) -> Result<Self, PersistError> {
        for &(birth, death) in &points {
            if !birth.is_finite() || death.is_nan() || death <= birth || death == f64::NEG_INFINITY {
                return Err(PersistError::BadPoint { birth, death });
            }
        }
        points.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        Ok(PersistenceDiagram { points })
    }

    pub fn empty() -> Self {
        PersistenceDiagram::default()
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points with finite death.
    pub fn finite(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.points.iter().copied().filter(|p| p.1.is_finite())
    }

    /// Births of the essential points (death `+∞`), ascending.
    pub fn essential_births(&self) -> Vec<f64> {
        self.points
            .iter()
            .filter(|p| p.1 == f64::INFINITY)
            .map(|p| p.0)
            .collect()
    }

    pub fn multiplicity(&self, birth: f64, death: f64) -> usize {
        self.points
            .iter()
            .filter(|&&(b, d)| b == birth && d == death)
            .count()
    }

    /// Number of intervals `[b, d)` containing `t`.
    pub fn rank_at(&self, t: f64) -> usize {
        self.points.iter().filter(|&&(b, d)| b <= t && t < d).count()
    }
}

impl fmt::Display for PersistenceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (b, d)) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({b}, {d})")?;
        }
        write!(f, "]")
    }
}

/// Diagram of a sampled module by rank inclusion–exclusion.
///
/// With `r(i, j)` the rank of the composite from `t_i` to `t_j` (one-based,
/// `r(0, ·) = 0`), the multiplicity of `(t_i, t_j)` is
/// `r(i, j-1) - r(i, j) - r(i-1, j-1) + r(i-1, j)` and that of `(t_i, ∞)` is
/// `r(i, m) - r(i-1, m)`.
pub fn module_diagram(module: &PersistenceModule) -> Result<PersistenceDiagram, PersistError> {
    let m = module.len();
    let table = module.rank_table();
    // one-based r(i, j) with r(0, ·) = 0
    let r = |i: usize, j: usize| -> i64 {
        if i == 0 {
            0
        } else {
            table[i - 1][j - i] as i64
        }
    };
    let t = module.critical();
    let mut points = Vec::new();
    let mut push = |birth: f64, death: f64, mu: i64| -> Result<(), PersistError> {
        if mu < 0 {
            return Err(PersistError::NegativeMultiplicity {
                birth,
                death,
                multiplicity: mu,
            });
        }
        points.extend(std::iter::repeat_n((birth, death), mu as usize));
        Ok(())
    };
    for i in 1..=m {
        for j in i + 1..=m {
            let mu = r(i, j - 1) - r(i, j) - r(i - 1, j - 1) + r(i - 1, j);
            push(t[i - 1], t[j - 1], mu)?;
        }
        let mu = r(i, m) - r(i - 1, m);
        push(t[i - 1], f64::INFINITY, mu)?;
    }
    PersistenceDiagram::new(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldlin::{Matrix, PrimeField};

    #[test]
    fn birth_at_second_value() {
        let f = PrimeField::TWO;
        let k = 3;
        let m = PersistenceModule::new(
            f,
            vec![0.0, 1.0],
            vec![0, k],
            vec![Matrix::zeros(f, k, 0)],
        )
        .unwrap();
        let d = module_diagram(&m).unwrap();
        assert_eq!(d.points(), &[(1.0, f64::INFINITY); 3]);
    }

    #[test]
    fn single_value_single_class() {
        let m = PersistenceModule::new(PrimeField::TWO, vec![5.0], vec![1], vec![]).unwrap();
        assert_eq!(module_diagram(&m).unwrap().points(), &[(5.0, f64::INFINITY)]);
    }

    #[test]
    fn finite_bar() {
        let f = PrimeField::THREE;
        let m = PersistenceModule::new(
            f,
            vec![0.0, 1.0, 2.0],
            vec![1, 1, 0],
            vec![Matrix::identity(f, 1), Matrix::zeros(f, 0, 1)],
        )
        .unwrap();
        let d = module_diagram(&m).unwrap();
        assert_eq!(d.points(), &[(0.0, 2.0)]);
        assert_eq!(d.rank_at(1.5), 1);
        assert_eq!(d.rank_at(2.0), 0);
    }

    #[test]
    fn rejects_bad_points() {
        assert!(PersistenceDiagram::new(vec![(1.0, 1.0)]).is_err());
        assert!(PersistenceDiagram::new(vec![(f64::INFINITY, f64::INFINITY)]).is_err());
        let d = PersistenceDiagram::new(vec![(2.0, f64::INFINITY), (0.0, 1.0)]).unwrap();
        assert_eq!(d.points()[0], (0.0, 1.0));
        assert_eq!(d.essential_births(), vec![2.0]);
    }
}
