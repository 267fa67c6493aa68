use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use tetwidth_core::width::TreeEmbedding;

use super::FormatError;

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct EmbeddingFile {
    tree_arcs: Vec<(usize, usize)>,
    leaf_of: BTreeMap<String, usize>,
}

/// The tree has nodes `0..k`, where `k - 1` is the largest index mentioned.
pub fn read_embedding(text: &str) -> Result<TreeEmbedding, FormatError> {
    let file: EmbeddingFile = serde_json::from_str(text)?;
    let n = file.leaf_of.len();
    let mut leaf_of = vec![usize::MAX; n];
    for (key, leaf) in &file.leaf_of {
        let v: usize = key
            .parse()
            .map_err(|_| FormatError::Invalid(format!("leafOf key {key:?} is not a node index")))?;
        let slot = leaf_of
            .get_mut(v)
            .ok_or_else(|| FormatError::Invalid(format!("leafOf names node {v}, but only {n} nodes are placed")))?;
        *slot = *leaf;
    }
    let tree_nodes = file
        .tree_arcs
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .chain(leaf_of.iter().copied())
        .max()
        .map_or(0, |m| m + 1);
    let emb = TreeEmbedding {
        tree_nodes,
        tree_arcs: file.tree_arcs,
        leaf_of,
    };
    emb.validate(n).map_err(|e| FormatError::Invalid(e.to_string()))?;
    Ok(emb)
}

pub fn write_embedding(emb: &TreeEmbedding) -> String {
    let file = EmbeddingFile {
        tree_arcs: emb.tree_arcs.clone(),
        leaf_of: emb.leaf_of.iter().enumerate().map(|(v, &l)| (v.to_string(), l)).collect(),
    };
    serde_json::to_string(&file).expect("plain integers serialise") + "\n"
}
