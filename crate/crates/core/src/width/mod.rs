//! Carving-width and treewidth.
//!
//! Congestion counts each adjacent pair of distinct nodes once, however many
//! parallel arcs join them, and ignores loops; [`ArcCounting::Multiplicity`]
//! is available for comparison. Treewidth likewise only sees the underlying
//! simple graph.

mod carving;
mod embedding;
mod immersion;
mod treedec;

pub use carving::{carving_width_exact, carving_width_upper, DEFAULT_CARVING_LIMIT, MAX_CARVING_LIMIT};
pub use embedding::{
    caterpillar, congestion, congestion_with, join_embeddings, join_graphs, restrict_embedding, ArcCounting,
    TreeEmbedding,
};
pub use immersion::{apply_certificate, bienstock_check, lift, lift_once, replay, BienstockReport};
pub use treedec::{
    decomposition_from_order, join_decompositions, td_check, td_validate, treewidth_exact, treewidth_lower,
    treewidth_upper, TdViolation, TreeDecomposition, DEFAULT_TREEWIDTH_LIMIT, MAX_TREEWIDTH_LIMIT,
};

use crate::normal::Edit;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WidthError {
    #[error("graph has {nodes} nodes, above the exact-solver limit of {limit}")]
    SizeLimit { nodes: usize, limit: usize },
    #[error("embedding has {leaves} leaves but the graph has {nodes} nodes")]
    LeafMismatch { leaves: usize, nodes: usize },
    #[error("invalid embedding: {0}")]
    BadEmbedding(&'static str),
    #[error("no arc between {u} and {v}")]
    MissingArc { u: usize, v: usize },
    #[error("node index out of range")]
    NodeOutOfRange,
    #[error("restriction to an empty node set")]
    EmptySubset,
    #[error("no connecting arcs given")]
    NoConnectingArcs,
    #[error("arc from node {found} does not start at hub node {hub}")]
    NotIncidentToHub { hub: usize, found: usize },
    #[error("certificate step {step} ({edit:?}) cannot be applied")]
    InapplicableStep { step: usize, edit: Edit },
}
