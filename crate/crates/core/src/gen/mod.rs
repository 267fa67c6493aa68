//! Generators: layered solid tori, Dehn fillings, 2-bridge knot exteriors,
//! the daisy-chain embedding and the finite subdivision.

mod daisy;
mod layered;
mod subdivide;
mod twobridge;

pub use daisy::{daisy_chain, daisy_embedding};
pub use layered::{dehn_fill, dehn_fill_marked, layer_on_edge, layered_solid_torus, BoundaryMarking, Slope};
pub use subdivide::{subdivide_finite, td_blowup, td_blowup_checked, SUBDIVISION_FACTOR};
pub use twobridge::{
    crossing_count, two_bridge, two_bridge_fraction, two_bridge_td, two_bridge_with, Fold, LayerMove,
    TwoBridgeMoves,
};

use crate::tri::TriError;
use crate::width::TdViolation;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error(transparent)]
    Triangulation(#[from] TriError),
    #[error("slope {p}/{q} is not primitive")]
    NotCoprime { p: i64, q: i64 },
    #[error("slope {p}/{q} cannot be reached by layering")]
    UnreachableSlope { p: i64, q: i64 },
    #[error("boundary component {index} out of range ({count} components)")]
    BoundaryComponent { index: usize, count: usize },
    #[error("boundary component {index} is not a two-triangle torus")]
    NotOneVertexTorus { index: usize },
    #[error("boundary edge is bordered twice by the same face")]
    SelfAdjacentEdge,
    #[error("continued fraction coefficients must be positive, with the first and last at least 2")]
    BadCoefficients,
    #[error("{crossings} crossings given; at least {needed} are needed")]
    TooFewCrossings { crossings: u64, needed: u64 },
    #[error("continued fraction {p}/{q} has even numerator: the diagram is a two-component link")]
    NotAKnot { p: u64, q: u64 },
    #[error("daisy chains need at least 3 nodes, got {0}")]
    DaisyTooSmall(usize),
    #[error("the subdivision needs an ideal triangulation")]
    NotIdeal,
    #[error("the link of vertex class {class} is not a torus")]
    LinkNotTorus { class: usize },
    #[error("node {node} has no entry in the node map")]
    NodeMapIncomplete { node: usize },
    #[error("blown-up decomposition is invalid: {0}")]
    BlowupInvalid(TdViolation),
}
