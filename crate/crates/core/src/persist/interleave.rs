use std::fmt;

use thiserror::Error;

use crate::fieldlin::{Matrix, PrimeField, Quotient, Subspace};

use super::maps::{induce, restrict};
use super::{index_at, merge_critical, FilteredHomology, PersistError, PersistenceModule, PersistentMap, Submodules};

/// A family `φ_t : V_t → W_{t+ε}`, constant between breakpoints.
///
/// `at(t)` is the map stored for the last breakpoint `≤ t`, or `below` when
/// `t` precedes every breakpoint.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftMaps {
    epsilon: f64,
    breakpoints: Vec<f64>,
    maps: Vec<Matrix>,
    below: Matrix,
}

impl ShiftMaps {
    pub fn new(epsilon: f64, breakpoints: Vec<f64>, maps: Vec<Matrix>, below: Matrix) -> Self {
        assert_eq!(breakpoints.len(), maps.len());
        assert!(breakpoints.windows(2).all(|w| w[0] < w[1]), "breakpoints must increase");
        ShiftMaps {
            epsilon,
            breakpoints,
            maps,
            below,
        }
    }

    /// Evaluates `f` once per breakpoint and once below them.
    pub fn from_fn<E>(
        epsilon: f64,
        breakpoints: Vec<f64>,
        mut f: impl FnMut(f64) -> Result<Matrix, E>,
    ) -> Result<Self, E> {
        let low = breakpoints.first().map_or(0.0, |b| b - 1.0);
        let below = f(low)?;
        let maps = breakpoints.iter().map(|&b| f(b)).collect::<Result<Vec<_>, E>>()?;
        Ok(Self::new(epsilon, breakpoints, maps, below))
    }

    /// Identity shifts of a module onto itself with `ε = 0`.
    pub fn identity(module: &PersistenceModule) -> Self {
        let f = module.field();
        let maps = module.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        Self::new(0.0, module.critical().to_vec(), maps, Matrix::zeros(f, 0, 0))
    }

    /// Zero shifts `P_t → Q_{t+ε}`.
    pub fn zero(p: &PersistenceModule, q: &PersistenceModule, epsilon: f64) -> Self {
        let f = p.field();
        let bps = shifted_breakpoints(p.critical(), q.critical(), epsilon);
        Self::from_fn(epsilon, bps, |t| {
            Ok::<_, ()>(Matrix::zeros(f, q.dim_at(t + epsilon), p.dim_at(t)))
        })
        .expect("infallible")
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn at(&self, t: f64) -> &Matrix {
        match index_at(&self.breakpoints, t) {
            Some(i) => &self.maps[i],
            None => &self.below,
        }
    }

    /// Replaces the map at every breakpoint with `f(t, old)`.
    pub fn map_each<E>(&self, mut f: impl FnMut(f64, &Matrix) -> Result<Matrix, E>) -> Result<ShiftMaps, E> {
        let low = self.breakpoints.first().map_or(0.0, |b| b - 1.0);
        let below = f(low, &self.below)?;
        let maps = self
            .breakpoints
            .iter()
            .zip(&self.maps)
            .map(|(&t, m)| f(t, m))
            .collect::<Result<Vec<_>, E>>()?;
        Ok(ShiftMaps::new(self.epsilon, self.breakpoints.clone(), maps, below))
    }
}

/// Scales where `t ↦ (index of t in a, index of t + ε in b)` changes.
fn shifted_breakpoints(a: &[f64], b: &[f64], epsilon: f64) -> Vec<f64> {
    let shifted: Vec<f64> = b.iter().map(|c| c - epsilon).collect();
    merge_critical(a, &shifted)
}

/// Maps `H(X^f_t) → H(X^g_{t+ε})` induced by the inclusions of sublevel sets.
///
/// Requires `X^f_t ⊆ X^g_{t+ε}` for all `t`, which holds when `‖f - g‖∞ ≤ ε`.
pub fn inclusion_shift(
    from: &FilteredHomology,
    to: &FilteredHomology,
    epsilon: f64,
    field: PrimeField,
) -> Result<ShiftMaps, PersistError> {
    let bps = shifted_breakpoints(from.critical(), to.critical(), epsilon);
    ShiftMaps::from_fn(epsilon, bps, |t| {
        let i = from.index_at(t);
        let j = to.index_at(t + epsilon);
        if j.is_none() && from.dim_at_index(i) > 0 {
            return Err(PersistError::ShiftIntoZero { t });
        }
        Ok(from.inclusion_map(i, to, j, field)?)
    })
}

/// One of the four strong interleaving equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// `ψ_s ∘ ν'_t^s ∘ φ_{t-ε} = ν_{t-ε}^{s+ε}`
    A,
    /// `ν_{t+ε}^{s+ε} ∘ ψ_t = ψ_s ∘ ν'_t^s`
    B,
    /// `φ_s ∘ ν_t^s ∘ ψ_{t-ε} = ν'_{t-ε}^{s+ε}`
    C,
    /// `ν'_{t+ε}^{s+ε} ∘ φ_t = φ_s ∘ ν_t^s`
    D,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Condition::A => "a",
            Condition::B => "b",
            Condition::C => "c",
            Condition::D => "d",
        };
        write!(f, "({c})")
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum InterleavingError {
    #[error("condition {condition} fails at t = {t}, s = {s}")]
    Violated { condition: Condition, t: f64, s: f64 },
    #[error("shift map at {t} has the wrong shape")]
    Shape { t: f64 },
    #[error("the two shift families use different ε")]
    EpsilonMismatch,
}

/// All scales at which any side of the four equations can change, plus one
/// scale below everything.
pub fn scale_grid(p: &PersistenceModule, q: &PersistenceModule, phi: &ShiftMaps, psi: &ShiftMaps) -> Vec<f64> {
    let eps = phi.epsilon;
    let mut pts = Vec::new();
    for &c in p.critical().iter().chain(q.critical()) {
        pts.extend([c - eps, c, c + eps]);
    }
    for &b in phi.breakpoints.iter().chain(&psi.breakpoints) {
        pts.extend([b, b + eps]);
    }
    let low = pts.iter().copied().fold(f64::INFINITY, f64::min);
    if low.is_finite() {
        pts.push(low - 2.0 * eps - 1.0);
    } else {
        pts.push(0.0);
    }
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

/// Precomputed composites `ν_i^j` between optional indices.
struct Composites<'a> {
    module: &'a PersistenceModule,
    table: Vec<Vec<Matrix>>,
}

impl<'a> Composites<'a> {
    fn new(module: &'a PersistenceModule) -> Self {
        let m = module.len();
        let table = (0..m)
            .map(|i| {
                let mut row = Vec::with_capacity(m - i);
                let mut cur = Matrix::identity(module.field(), module.dims()[i]);
                row.push(cur.clone());
                for k in i..m - 1 {
                    cur = module.transitions()[k].mul(&cur);
                    row.push(cur.clone());
                }
                row
            })
            .collect();
        Composites { module, table }
    }

    /// `ν_t^s` for real `t ≤ s`.
    fn between(&self, t: f64, s: f64) -> Matrix {
        match (self.module.index_at(t), self.module.index_at(s)) {
            (Some(i), Some(j)) => self.table[i][j - i].clone(),
            (i, j) => Matrix::zeros(
                self.module.field(),
                self.module.dim_at_index(j),
                self.module.dim_at_index(i),
            ),
        }
    }
}

/// Checks conditions (a)–(d) at every pair `t ≤ s` of the scale grid, which
/// covers every distinct configuration of the step functions involved.
pub fn verify_strong_interleaving(
    p: &PersistenceModule,
    q: &PersistenceModule,
    phi: &ShiftMaps,
    psi: &ShiftMaps,
) -> Result<(), InterleavingError> {
    if phi.epsilon != psi.epsilon {
        return Err(InterleavingError::EpsilonMismatch);
    }
    let eps = phi.epsilon;
    let grid = scale_grid(p, q, phi, psi);
    for &t in &grid {
        for u in [t, t - eps] {
            let (a, b) = (phi.at(u), psi.at(u));
            if a.cols() != p.dim_at(u) || a.rows() != q.dim_at(u + eps) {
                return Err(InterleavingError::Shape { t: u });
            }
            if b.cols() != q.dim_at(u) || b.rows() != p.dim_at(u + eps) {
                return Err(InterleavingError::Shape { t: u });
            }
        }
    }
    let nu = Composites::new(p);
    let nu2 = Composites::new(q);
    for (a, &t) in grid.iter().enumerate() {
        for &s in &grid[a..] {
            let fail = |condition| InterleavingError::Violated { condition, t, s };
            let lhs = psi.at(s).mul(&nu2.between(t, s)).mul(phi.at(t - eps));
            if lhs != nu.between(t - eps, s + eps) {
                return Err(fail(Condition::A));
            }
            if nu.between(t + eps, s + eps).mul(psi.at(t)) != psi.at(s).mul(&nu2.between(t, s)) {
                return Err(fail(Condition::B));
            }
            let lhs = phi.at(s).mul(&nu.between(t, s)).mul(psi.at(t - eps));
            if lhs != nu2.between(t - eps, s + eps) {
                return Err(fail(Condition::C));
            }
            if nu2.between(t + eps, s + eps).mul(phi.at(t)) != phi.at(s).mul(&nu.between(t, s)) {
                return Err(fail(Condition::D));
            }
        }
    }
    Ok(())
}

/// Builds a shift between derived modules from a shift between the originals.
///
/// `f(i, j, a)` receives the source index of `t`, the target index of `t + ε`
/// and the original map at `t`.
pub fn derive_shift(
    shift: &ShiftMaps,
    from_critical: &[f64],
    to_critical: &[f64],
    mut f: impl FnMut(Option<usize>, Option<usize>, &Matrix) -> Result<Matrix, PersistError>,
) -> Result<ShiftMaps, PersistError> {
    let eps = shift.epsilon;
    shift.map_each(|t, a| f(index_at(from_critical, t), index_at(to_critical, t + eps), a))
}

/// Shifts between the kernel, image and cokernel modules of two persistent maps.
#[derive(Clone, Debug)]
pub struct SubmoduleShifts {
    pub ker: ShiftMaps,
    pub im: ShiftMaps,
    pub coker: ShiftMaps,
}

fn sub_at<T>(v: &[T], i: Option<usize>) -> Option<&T> {
    i.map(|i| &v[i])
}

fn restricted(a: &Matrix, from: Option<&Subspace>, into: Option<&Subspace>, field: PrimeField) -> Option<Matrix> {
    match (from, into) {
        (Some(x), Some(y)) => restrict(a, x, y),
        (None, y) => Some(Matrix::zeros(field, y.map_or(0, Subspace::dim), 0)),
        (Some(x), None) => Some(Matrix::zeros(field, 0, x.dim())),
    }
}

fn induced(a: &Matrix, from: Option<&Quotient>, into: Option<&Quotient>, field: PrimeField) -> Option<Matrix> {
    match (from, into) {
        (Some(x), Some(y)) => induce(a, x, y),
        (None, y) => Some(Matrix::zeros(field, y.map_or(0, Quotient::dim), 0)),
        (Some(x), None) => Some(Matrix::zeros(field, 0, x.dim())),
    }
}

/// Restricts `α : V → V'` to kernels, `β : U → U'` to images, and pushes `β`
/// down to cokernels.
pub fn submodule_shifts(
    from: (&PersistentMap, &Submodules),
    to: (&PersistentMap, &Submodules),
    alpha: &ShiftMaps,
    beta: &ShiftMaps,
) -> Result<SubmoduleShifts, PersistError> {
    let field = from.0.field();
    let (fc, tc) = (from.0.source().critical(), to.0.source().critical());
    let (fs, ts) = (from.1, to.1);
    let not_defined = |t: Option<usize>| PersistError::NotCommuting { index: t.unwrap_or(0) };
    let ker = derive_shift(alpha, fc, tc, |i, j, a| {
        restricted(a, sub_at(&fs.kernels, i), sub_at(&ts.kernels, j), field).ok_or(not_defined(i))
    })?;
    let (fc, tc) = (from.0.target().critical(), to.0.target().critical());
    let im = derive_shift(beta, fc, tc, |i, j, b| {
        restricted(b, sub_at(&fs.images, i), sub_at(&ts.images, j), field).ok_or(not_defined(i))
    })?;
    let coker = derive_shift(beta, fc, tc, |i, j, b| {
        induced(b, sub_at(&fs.cokernels, i), sub_at(&ts.cokernels, j), field).ok_or(not_defined(i))
    })?;
    Ok(SubmoduleShifts { ker, im, coker })
}
