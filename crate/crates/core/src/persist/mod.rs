//! Persistence modules of sublevel filtrations and of morphisms between them.
//!
//! A module is sampled at the distinct critical values `t_1 < … < t_m` of a
//! filtration; every scale below `t_1` carries the zero space. Diagrams are
//! read off the ranks of composite transition maps.

mod diagram;
mod interleave;
mod ladder;
mod maps;
mod module;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::chains::{
    embedded_homology_in, homology_map, AmbientMap, ChainComplex, ChainError, HomologySpace,
    SimplicialChains,
};
use crate::fieldlin::{Matrix, PrimeField};
use crate::hypercore::{FilteredHypergraph, Hypergraph, HypergraphError, HypergraphMorphism};
use crate::par;

pub use diagram::{module_diagram, PersistenceDiagram};
pub use interleave::{
    derive_shift, inclusion_shift, scale_grid, submodule_shifts, verify_strong_interleaving,
    Condition, InterleavingError, ShiftMaps, SubmoduleShifts,
};
pub use ladder::{
    build_persistent_map, commutative_diagram_triples, Arrow, MorphismLadder, Node,
    DIAGRAM_ARROWS, EXTRA_ARROWS, SURFACED_ARROWS,
};
pub use maps::{map_diagram_triple, submodules, DiagramTriple, PersistentMap, Submodules};
pub use module::PersistenceModule;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PersistError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("critical values must be finite and strictly increasing")]
    BadCriticalValues,
    #[error("matrix shape mismatch at index {index}")]
    Shape { index: usize },
    #[error("ladder does not commute at index {index}")]
    NotCommuting { index: usize },
    #[error("negative multiplicity {multiplicity} at ({birth}, {death})")]
    NegativeMultiplicity {
        birth: f64,
        death: f64,
        multiplicity: i64,
    },
    #[error("invalid diagram point ({birth}, {death})")]
    BadPoint { birth: f64, death: f64 },
    #[error("modules are sampled at different critical values")]
    CriticalMismatch,
    #[error("the morphism does not map the sublevel set at {t} into the target sublevel set")]
    SublevelNotPreserved { t: f64 },
    #[error("a nonzero space at {t} shifts into the zero space")]
    ShiftIntoZero { t: f64 },
    #[error("unknown variant `{0}` (expected embedded, delta or lower)")]
    UnknownVariant(String),
    #[error("unknown direction `{0}` (expected pushforward or pullback)")]
    UnknownDirection(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
}

/// Which homology of a hypergraph to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Embedded homology `H_*(ℋ)`.
    Embedded,
    /// Homology of the associated complex `Δℋ`.
    Delta,
    /// Homology of the lower-associated complex `δℋ`.
    Lower,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Embedded, Variant::Delta, Variant::Lower];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Embedded => "embedded",
            Variant::Delta => "delta",
            Variant::Lower => "lower",
        }
    }

    /// Homology of `h` in degree `n`, with chains taken inside `ambient`.
    pub fn homology(
        self,
        ambient: &Arc<SimplicialChains>,
        h: &Hypergraph,
        n: usize,
    ) -> Result<HomologySpace, ChainError> {
        match self {
            Variant::Embedded => embedded_homology_in(ambient, h, n),
            Variant::Delta => {
                ChainComplex::simplicial(ambient.clone(), &h.associated_complex())?.homology(n)
            }
            Variant::Lower => {
                ChainComplex::simplicial(ambient.clone(), &h.lower_associated_complex())?
                    .homology(n)
            }
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = PersistError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "embedded" => Ok(Variant::Embedded),
            "delta" | "delta_upper" | "upper" => Ok(Variant::Delta),
            "lower" | "delta_lower" => Ok(Variant::Lower),
            _ => Err(PersistError::UnknownVariant(s.to_string())),
        }
    }
}

/// How a morphism turns one filtration into a pair of filtrations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Filtration given on the domain, image filtration on `φ(ℋ)`.
    Pushforward,
    /// Filtration given on the codomain, preimage filtration on the domain.
    Pullback,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Pushforward => "pushforward",
            Direction::Pullback => "pullback",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Direction {
    type Err = PersistError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "pushforward" | "push" => Ok(Direction::Pushforward),
            "pullback" | "pull" => Ok(Direction::Pullback),
            _ => Err(PersistError::UnknownDirection(s.to_string())),
        }
    }
}

/// Index of the last critical value `≤ t`, or `None` below the first one.
pub fn index_at(critical: &[f64], t: f64) -> Option<usize> {
    critical.partition_point(|&c| c <= t).checked_sub(1)
}

/// Homology spaces of a filtration at each critical value, all inside one ambient.
#[derive(Clone, Debug)]
pub struct FilteredHomology {
    critical: Vec<f64>,
    spaces: Vec<HomologySpace>,
}

impl FilteredHomology {
    pub fn new(critical: Vec<f64>, spaces: Vec<HomologySpace>) -> Self {
        assert_eq!(critical.len(), spaces.len());
        FilteredHomology { critical, spaces }
    }

    /// Variant homology of every sublevel set of `f` at the given scales.
    pub fn of_filtration(
        ambient: &Arc<SimplicialChains>,
        f: &FilteredHypergraph,
        variant: Variant,
        n: usize,
        critical: &[f64],
    ) -> Result<Self, PersistError> {
        let spaces = par::try_map_range(critical.len(), |i| {
            variant.homology(ambient, &f.sublevel(critical[i]), n)
        })?;
        Ok(FilteredHomology::new(critical.to_vec(), spaces))
    }

    pub fn critical(&self) -> &[f64] {
        &self.critical
    }

    pub fn spaces(&self) -> &[HomologySpace] {
        &self.spaces
    }

    pub fn index_at(&self, t: f64) -> Option<usize> {
        index_at(&self.critical, t)
    }

    pub fn dim_at_index(&self, i: Option<usize>) -> usize {
        i.map_or(0, |i| self.spaces[i].dim())
    }

    /// Map from the space at index `i` of `self` to index `j` of `other`,
    /// induced by the identity on ambient chains.
    pub fn inclusion_map(
        &self,
        i: Option<usize>,
        other: &FilteredHomology,
        j: Option<usize>,
        field: PrimeField,
    ) -> Result<Matrix, ChainError> {
        match (i, j) {
            (None, _) => Ok(Matrix::zeros(field, other.dim_at_index(j), 0)),
            (Some(i), None) => Ok(Matrix::zeros(field, 0, self.spaces[i].dim())),
            (Some(i), Some(j)) => homology_map(&self.spaces[i], &other.spaces[j], &AmbientMap::Identity),
        }
    }

    /// The persistence module with inclusion-induced transitions.
    pub fn module(&self, field: PrimeField) -> Result<PersistenceModule, PersistError> {
        let m = self.critical.len();
        let transitions = par::try_map_range(m.saturating_sub(1), |i| {
            homology_map(&self.spaces[i], &self.spaces[i + 1], &AmbientMap::Identity)
        })?;
        let dims = self.spaces.iter().map(HomologySpace::dim).collect();
        PersistenceModule::new(field, self.critical.clone(), dims, transitions)
    }
}

/// `{H_n(X(ℋ_t))}_t` for the chosen variant `X`, over the critical values of `f`.
pub fn build_persistence_module(
    f: &FilteredHypergraph,
    variant: Variant,
    n: usize,
    field: PrimeField,
) -> Result<PersistenceModule, PersistError> {
    filtered_homology(f, variant, n, field)?.module(field)
}

/// Homology spaces of every sublevel set of `f`, in the chains of `Δ(base)`.
pub fn filtered_homology(
    f: &FilteredHypergraph,
    variant: Variant,
    n: usize,
    field: PrimeField,
) -> Result<FilteredHomology, PersistError> {
    let ambient = Arc::new(SimplicialChains::of_associated(field, f.base()));
    FilteredHomology::of_filtration(&ambient, f, variant, n, &f.critical_values())
}

/// Source and target filtrations of a morphism under the given construction.
pub fn morphism_filtrations(
    phi: &HypergraphMorphism,
    f: &FilteredHypergraph,
    direction: Direction,
) -> Result<(FilteredHypergraph, FilteredHypergraph), PersistError> {
    Ok(match direction {
        Direction::Pushforward => (f.clone(), phi.pushforward_filtration(f)?),
        Direction::Pullback => (phi.pullback_filtration(f)?, f.clone()),
    })
}

/// Sorted union of two critical value lists.
pub fn merge_critical(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut v: Vec<f64> = a.iter().chain(b).copied().collect();
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_variants_and_directions() {
        assert_eq!("embedded".parse::<Variant>().unwrap(), Variant::Embedded);
        assert_eq!("delta_upper".parse::<Variant>().unwrap(), Variant::Delta);
        assert_eq!("lower".parse::<Variant>().unwrap(), Variant::Lower);
        assert!("other".parse::<Variant>().is_err());
        assert_eq!("pull-back".parse::<Direction>().unwrap(), Direction::Pullback);
        assert_eq!("pushforward".parse::<Direction>().unwrap(), Direction::Pushforward);
    }

    #[test]
    fn index_lookup() {
        let c = [1.0, 2.0, 4.0];
        assert_eq!(index_at(&c, 0.5), None);
        assert_eq!(index_at(&c, 1.0), Some(0));
        assert_eq!(index_at(&c, 3.0), Some(1));
        assert_eq!(index_at(&c, 9.0), Some(2));
    }

    #[test]
    fn constant_simplicial_filtration() {
        let k = Hypergraph::from_index_lists(3, &[&[0, 1], &[1, 2], &[0, 2]])
            .unwrap()
            .associated_complex();
        let f = FilteredHypergraph::constant(k, 2.0).unwrap();
        for v in Variant::ALL {
            let m = build_persistence_module(&f, v, 1, PrimeField::TWO).unwrap();
            assert_eq!(m.critical(), &[2.0]);
            assert_eq!(m.dims(), &[1]);
        }
    }
}
