use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::chains::{
    cokernel_complex, homology_map, kernel_complex, simplicial_map_matrices, AmbientMap,
    ChainComplex, ChainMap, SimplicialChains,
};
use crate::fieldlin::{Matrix, PrimeField};
use crate::hypercore::{FilteredHypergraph, HypergraphMorphism};
use crate::par;

use super::{
    map_diagram_triple, merge_critical, morphism_filtrations, DiagramTriple, Direction,
    FilteredHomology, PersistError, PersistenceModule, PersistentMap, Variant,
};

/// The sixteen persistent homology modules in the commutative diagram of a morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    UpperSrc,
    UpperTgt,
    LowerSrc,
    LowerTgt,
    InfSrc,
    InfTgt,
    SupSrc,
    SupTgt,
    KerUpper,
    KerSup,
    KerInf,
    KerLower,
    CokerUpper,
    CokerSup,
    CokerInf,
    CokerLower,
}

impl Node {
    pub const ALL: [Node; 16] = [
        Node::UpperSrc,
        Node::UpperTgt,
        Node::LowerSrc,
        Node::LowerTgt,
        Node::InfSrc,
        Node::InfTgt,
        Node::SupSrc,
        Node::SupTgt,
        Node::KerUpper,
        Node::KerSup,
        Node::KerInf,
        Node::KerLower,
        Node::CokerUpper,
        Node::CokerSup,
        Node::CokerInf,
        Node::CokerLower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Node::UpperSrc => "upper_src",
            Node::UpperTgt => "upper_tgt",
            Node::LowerSrc => "lower_src",
            Node::LowerTgt => "lower_tgt",
            Node::InfSrc => "inf_src",
            Node::InfTgt => "inf_tgt",
            Node::SupSrc => "sup_src",
            Node::SupTgt => "sup_tgt",
            Node::KerUpper => "ker_upper",
            Node::KerSup => "ker_sup",
            Node::KerInf => "ker_inf",
            Node::KerLower => "ker_lower",
            Node::CokerUpper => "coker_upper",
            Node::CokerSup => "coker_sup",
            Node::CokerInf => "coker_inf",
            Node::CokerLower => "coker_lower",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }

    /// Source-side nodes live over the domain chains, the rest over the target chains.
    fn on_source_side(self) -> bool {
        matches!(
            self,
            Node::UpperSrc
                | Node::LowerSrc
                | Node::InfSrc
                | Node::SupSrc
                | Node::KerUpper
                | Node::KerSup
                | Node::KerInf
                | Node::KerLower
        )
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A persistent linear map between two nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub from: Node,
    pub to: Node,
}

const fn arrow(from: Node, to: Node) -> Arrow {
    Arrow { from, to }
}

impl Arrow {
    /// `"from->to"`.
    pub fn name(self) -> String {
        format!("{}->{}", self.from.name(), self.to.name())
    }

    /// Whether the arrow is induced by the morphism (as opposed to an inclusion).
    pub fn is_horizontal(self) -> bool {
        self.from.on_source_side() && !self.to.on_source_side()
    }

    pub fn parse(name: &str) -> Result<Arrow, PersistError> {
        let unknown = || PersistError::UnknownArrow(name.to_string());
        let (a, b) = name.split_once("->").ok_or_else(unknown)?;
        let find = |s: &str| Node::ALL.into_iter().find(|n| n.name() == s.trim());
        match (find(a), find(b)) {
            (Some(from), Some(to)) => {
                let arrow = Arrow { from, to };
                if DIAGRAM_ARROWS.contains(&arrow) || EXTRA_ARROWS.contains(&arrow) {
                    Ok(arrow)
                } else {
                    Err(unknown())
                }
            }
            _ => Err(unknown()),
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from.name(), self.to.name())
    }
}

/// The twenty-one arrows of the commutative diagram relating the four
/// homologies of source and target with the kernel and cokernel homologies.
pub const DIAGRAM_ARROWS: [Arrow; 21] = [
    arrow(Node::KerUpper, Node::UpperSrc),
    arrow(Node::UpperSrc, Node::UpperTgt),
    arrow(Node::UpperTgt, Node::CokerUpper),
    arrow(Node::KerSup, Node::KerUpper),
    arrow(Node::KerSup, Node::SupSrc),
    arrow(Node::SupSrc, Node::UpperSrc),
    arrow(Node::InfSrc, Node::InfTgt),
    arrow(Node::SupTgt, Node::UpperTgt),
    arrow(Node::SupTgt, Node::CokerSup),
    arrow(Node::InfTgt, Node::CokerInf),
    arrow(Node::CokerSup, Node::CokerUpper),
    arrow(Node::KerInf, Node::InfSrc),
    arrow(Node::KerInf, Node::KerSup),
    arrow(Node::CokerInf, Node::CokerSup),
    arrow(Node::KerLower, Node::LowerSrc),
    arrow(Node::KerLower, Node::KerInf),
    arrow(Node::LowerSrc, Node::InfSrc),
    arrow(Node::LowerSrc, Node::LowerTgt),
    arrow(Node::LowerTgt, Node::InfTgt),
    arrow(Node::LowerTgt, Node::CokerLower),
    arrow(Node::CokerLower, Node::CokerInf),
];

/// The supremum-level horizontal map and the two `ι` isomorphisms.
pub const EXTRA_ARROWS: [Arrow; 3] = [
    arrow(Node::SupSrc, Node::SupTgt),
    arrow(Node::InfSrc, Node::SupSrc),
    arrow(Node::InfTgt, Node::SupTgt),
];

/// Arrows reported by default: the four horizontal maps and the two `ι` maps.
pub const SURFACED_ARROWS: [Arrow; 6] = [
    arrow(Node::UpperSrc, Node::UpperTgt),
    arrow(Node::SupSrc, Node::SupTgt),
    arrow(Node::InfSrc, Node::InfTgt),
    arrow(Node::LowerSrc, Node::LowerTgt),
    arrow(Node::InfSrc, Node::SupSrc),
    arrow(Node::InfTgt, Node::SupTgt),
];

/// Squares `a ∘ b = c ∘ d` of the diagram, written as `[(first, then), (first, then)]`.
const SQUARES: [[(Node, Node, Node); 2]; 9] = [
    [(Node::SupSrc, Node::UpperSrc, Node::UpperTgt), (Node::SupSrc, Node::SupTgt, Node::UpperTgt)],
    [(Node::InfSrc, Node::SupSrc, Node::SupTgt), (Node::InfSrc, Node::InfTgt, Node::SupTgt)],
    [(Node::LowerSrc, Node::InfSrc, Node::InfTgt), (Node::LowerSrc, Node::LowerTgt, Node::InfTgt)],
    [(Node::KerSup, Node::KerUpper, Node::UpperSrc), (Node::KerSup, Node::SupSrc, Node::UpperSrc)],
    [(Node::KerInf, Node::KerSup, Node::SupSrc), (Node::KerInf, Node::InfSrc, Node::SupSrc)],
    [(Node::KerLower, Node::KerInf, Node::InfSrc), (Node::KerLower, Node::LowerSrc, Node::InfSrc)],
    [(Node::SupTgt, Node::UpperTgt, Node::CokerUpper), (Node::SupTgt, Node::CokerSup, Node::CokerUpper)],
    [(Node::InfTgt, Node::SupTgt, Node::CokerSup), (Node::InfTgt, Node::CokerInf, Node::CokerSup)],
    [(Node::LowerTgt, Node::InfTgt, Node::CokerInf), (Node::LowerTgt, Node::CokerLower, Node::CokerInf)],
];

/// Homology of all sixteen nodes of a morphism's diagram at every critical value,
/// from one consistent set of bases.
#[derive(Clone, Debug)]
pub struct MorphismLadder {
    field: PrimeField,
    degree: usize,
    critical: Vec<f64>,
    phi_map: AmbientMap,
    nodes: Vec<FilteredHomology>,
}

impl MorphismLadder {
    /// `source` lives on the domain, `target` on a subhypergraph of the codomain,
    /// and `φ` must carry each sublevel set of `source` into that of `target`.
    pub fn new(
        phi: &HypergraphMorphism,
        source: &FilteredHypergraph,
        target: &FilteredHypergraph,
        degree: usize,
        field: PrimeField,
    ) -> Result<Self, PersistError> {
        let sa = Arc::new(SimplicialChains::of_associated(field, source.base()));
        let ta = Arc::new(SimplicialChains::of_associated(field, target.base()));
        let phi_map = AmbientMap::linear(simplicial_map_matrices(&sa, &ta, phi.vertex_map())?);
        let critical = merge_critical(&source.critical_values(), &target.critical_values());

        let per_scale = par::try_map_range(critical.len(), |i| {
            let t = critical[i];
            let (h, h2) = (source.sublevel(t), target.sublevel(t));
            if h.edges().any(|e| !h2.contains(&phi.image_of(e))) {
                return Err(PersistError::SublevelNotPreserved { t });
            }
            let src = [
                ChainComplex::simplicial(sa.clone(), &h.associated_complex())?,
                ChainComplex::supremum(sa.clone(), &h)?,
                ChainComplex::infimum(sa.clone(), &h)?,
                ChainComplex::simplicial(sa.clone(), &h.lower_associated_complex())?,
            ];
            let tgt = [
                ChainComplex::simplicial(ta.clone(), &h2.associated_complex())?,
                ChainComplex::supremum(ta.clone(), &h2)?,
                ChainComplex::infimum(ta.clone(), &h2)?,
                ChainComplex::simplicial(ta.clone(), &h2.lower_associated_complex())?,
            ];
            let mut kers = Vec::with_capacity(4);
            let mut cokers = Vec::with_capacity(4);
            for (s, t) in src.iter().zip(&tgt) {
                let m = ChainMap::new(s.clone(), t.clone(), phi_map.clone())?;
                kers.push(kernel_complex(&m)?);
                cokers.push(cokernel_complex(&m)?);
            }
            let [su, ss, si, sl] = src;
            let [tu, ts, ti, tl] = tgt;
            let [ku, ks, ki, kl]: [ChainComplex; 4] = kers.try_into().expect("four kernels");
            let [cu, cs, ci, cl]: [ChainComplex; 4] = cokers.try_into().expect("four cokernels");
            // same order as Node::ALL
            let complexes = [su, tu, sl, tl, si, ti, ss, ts, ku, ks, ki, kl, cu, cs, ci, cl];
            complexes
                .iter()
                .map(|c| c.homology(degree).map_err(PersistError::from))
                .collect::<Result<Vec<_>, _>>()
        })?;

        let mut columns: Vec<Vec<_>> = (0..Node::ALL.len()).map(|_| Vec::with_capacity(critical.len())).collect();
        for spaces in per_scale {
            for (slot, h) in spaces.into_iter().enumerate() {
                columns[slot].push(h);
            }
        }
        let nodes = columns
            .into_iter()
            .map(|spaces| FilteredHomology::new(critical.clone(), spaces))
            .collect();
        Ok(MorphismLadder {
            field,
            degree,
            critical,
            phi_map,
            nodes,
        })
    }

    /// Builds the source/target filtrations from `f` by the given construction.
    pub fn build(
        phi: &HypergraphMorphism,
        f: &FilteredHypergraph,
        direction: Direction,
        degree: usize,
        field: PrimeField,
    ) -> Result<Self, PersistError> {
        let (source, target) = morphism_filtrations(phi, f, direction)?;
        Self::new(phi, &source, &target, degree, field)
    }

    pub fn critical(&self) -> &[f64] {
        &self.critical
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn node(&self, node: Node) -> &FilteredHomology {
        &self.nodes[node.slot()]
    }

    pub fn module(&self, node: Node) -> Result<PersistenceModule, PersistError> {
        self.node(node).module(self.field)
    }

    fn ambient_map(&self, arrow: Arrow) -> &AmbientMap {
        static IDENTITY: AmbientMap = AmbientMap::Identity;
        if arrow.is_horizontal() {
            &self.phi_map
        } else {
            &IDENTITY
        }
    }

    /// Matrices of an arrow at every critical value.
    pub fn arrow_matrices(&self, arrow: Arrow) -> Result<Vec<Matrix>, PersistError> {
        let (a, b) = (self.node(arrow.from), self.node(arrow.to));
        let map = self.ambient_map(arrow);
        par::try_map_range(self.critical.len(), |i| {
            homology_map(&a.spaces()[i], &b.spaces()[i], map).map_err(PersistError::from)
        })
    }

    pub fn persistent_map(&self, arrow: Arrow) -> Result<PersistentMap, PersistError> {
        PersistentMap::new(
            self.module(arrow.from)?,
            self.module(arrow.to)?,
            self.arrow_matrices(arrow)?,
        )
    }

    pub fn triple(&self, arrow: Arrow) -> Result<DiagramTriple, PersistError> {
        map_diagram_triple(&self.persistent_map(arrow)?)
    }

    /// Triples for the given arrows, keyed by arrow name.
    pub fn triples(&self, arrows: &[Arrow]) -> Result<BTreeMap<String, DiagramTriple>, PersistError> {
        arrows
            .iter()
            .map(|&a| Ok((a.name(), self.triple(a)?)))
            .collect()
    }

    /// Every square of the diagram commutes, and kernel → source → target and
    /// source → target → cokernel compose to zero, at every critical value.
    pub fn check_commutativity(&self) -> Result<(), PersistError> {
        let mat = |a: Node, b: Node| self.arrow_matrices(arrow(a, b));
        for [(a, b, c), (d, e, g)] in SQUARES {
            let left: Vec<Matrix> = mat(a, b)?.iter().zip(mat(b, c)?).map(|(x, y)| y.mul(x)).collect();
            let right: Vec<Matrix> = mat(d, e)?.iter().zip(mat(e, g)?).map(|(x, y)| y.mul(x)).collect();
            if let Some(index) = (0..left.len()).find(|&i| left[i] != right[i]) {
                return Err(PersistError::NotCommuting { index });
            }
        }
        let levels = [
            (Node::KerUpper, Node::UpperSrc, Node::UpperTgt, Node::CokerUpper),
            (Node::KerSup, Node::SupSrc, Node::SupTgt, Node::CokerSup),
            (Node::KerInf, Node::InfSrc, Node::InfTgt, Node::CokerInf),
            (Node::KerLower, Node::LowerSrc, Node::LowerTgt, Node::CokerLower),
        ];
        for (k, s, t, c) in levels {
            let (a, b, d) = (mat(k, s)?, mat(s, t)?, mat(t, c)?);
            for i in 0..self.critical.len() {
                if !b[i].mul(&a[i]).is_zero() || !d[i].mul(&b[i]).is_zero() {
                    return Err(PersistError::NotCommuting { index: i });
                }
            }
        }
        Ok(())
    }
}

/// The persistent map of one horizontal arrow: the embedded variant uses the
/// infimum level, `delta` the associated complexes, `lower` the lower-associated ones.
pub fn build_persistent_map(
    phi: &HypergraphMorphism,
    f: &FilteredHypergraph,
    direction: Direction,
    variant: Variant,
    degree: usize,
    field: PrimeField,
) -> Result<PersistentMap, PersistError> {
    let ladder = MorphismLadder::build(phi, f, direction, degree, field)?;
    let arrow = match variant {
        Variant::Embedded => arrow(Node::InfSrc, Node::InfTgt),
        Variant::Delta => arrow(Node::UpperSrc, Node::UpperTgt),
        Variant::Lower => arrow(Node::LowerSrc, Node::LowerTgt),
    };
    ladder.persistent_map(arrow)
}

/// Diagram triples of all twenty-four arrows, keyed by arrow name.
pub fn commutative_diagram_triples(
    phi: &HypergraphMorphism,
    f: &FilteredHypergraph,
    direction: Direction,
    degree: usize,
    field: PrimeField,
) -> Result<BTreeMap<String, DiagramTriple>, PersistError> {
    let ladder = MorphismLadder::build(phi, f, direction, degree, field)?;
    ladder.check_commutativity()?;
    let all: Vec<Arrow> = DIAGRAM_ARROWS.iter().chain(&EXTRA_ARROWS).copied().collect();
    ladder.triples(&all)
}
