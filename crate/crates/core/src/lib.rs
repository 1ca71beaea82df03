//! Persistent homology of hypergraphs.
//!
//! * [`hypercore`]: hypergraphs, sublevel filtrations, morphisms, pull-back and
//!   push-forward filtrations.
//! * [`fieldlin`]: exact linear algebra over `F_p`.
//! * [`chains`]: simplicial, infimum, supremum, kernel and cokernel complexes
//!   and their homology.
//! * [`persist`]: persistence modules, diagrams, persistent maps and their
//!   kernel/image/cokernel diagrams, interleaving checks.
//! * [`metric`]: exact bottleneck distances.
//! * [`io`]: text formats.

pub mod chains;
pub mod fieldlin;
pub mod gen;
pub mod hypercore;
pub mod io;
pub mod matching;
pub mod metric;
pub mod par;
pub mod persist;

mod error;

pub use error::Error;
pub use fieldlin::{Matrix, PrimeField, Subspace};
pub use hypercore::{FilteredHypergraph, Hyperedge, Hypergraph, HypergraphMorphism};
pub use metric::{bottleneck_infinity, bottleneck_p, hypergraph_distance, map_distance};
pub use persist::{
    build_persistence_module, module_diagram, DiagramTriple, Direction, PersistenceDiagram,
    PersistenceModule, PersistentMap, Variant,
};
