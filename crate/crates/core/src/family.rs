//! Families of connected dominating sets and of completely independent
//! spanning trees, as plain data; validation lives in the `verify` module.

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, Graph};

/// k disjoint vertex sets claimed to be connected dominating sets whose
/// pairwise bipartite graphs have a cycle in every component.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CdsFamily {
    pub sets: Vec<Vec<usize>>,
}

impl CdsFamily {
    pub fn new(mut sets: Vec<Vec<usize>>) -> Self {
        for s in sets.iter_mut() {
            s.sort_unstable();
            s.dedup();
        }
        CdsFamily { sets }
    }

    pub fn k(&self) -> usize {
        self.sets.len()
    }
}

/// k spanning trees claimed completely independent, with per-tree internal
/// vertex sets.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CistFamily {
    pub trees: Vec<Vec<EdgeId>>,
    #[serde(rename = "internalSets")]
    pub internal_sets: Vec<Vec<usize>>,
}

impl CistFamily {
    /// Build from edge sets over a graph of order `n`, deriving each
    /// internal set as the vertices of degree ≥ 2 in that tree.
    pub fn from_trees(n: usize, mut trees: Vec<Vec<EdgeId>>) -> Self {
        for t in trees.iter_mut() {
            t.sort_unstable();
            t.dedup();
        }
        let internal_sets = trees.iter().map(|t| internal_vertices(n, t)).collect();
        CistFamily {
            trees,
            internal_sets,
        }
    }

    pub fn k(&self) -> usize {
        self.trees.len()
    }

    /// Re-map tree edges and internal sets through a vertex map
    /// (new label = map[old label] position lookup is the caller's concern;
    /// here `map[v]` is the image of vertex v).
    pub fn relabel(&self, map: &[usize]) -> CistFamily {
        let trees = self
            .trees
            .iter()
            .map(|t| {
                let mut t: Vec<EdgeId> = t.iter().map(|e| e.map(map)).collect();
                t.sort_unstable();
                t
            })
            .collect();
        let internal_sets = self
            .internal_sets
            .iter()
            .map(|s| {
                let mut s: Vec<usize> = s.iter().map(|&v| map[v]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        CistFamily {
            trees,
            internal_sets,
        }
    }
}

/// Vertices of degree ≥ 2 in the edge set, ascending.
pub fn internal_vertices(n: usize, tree: &[EdgeId]) -> Vec<usize> {
    let mut deg = vec![0usize; n];
    for e in tree {
        deg[e.u()] += 1;
        deg[e.v()] += 1;
    }
    (0..n).filter(|&v| deg[v] >= 2).collect()
}

/// A graph restricted to part of its vertex set, keeping the map back to the
/// original labels. Used when verifying families on vertex-deleted graphs.
#[derive(Clone, Debug)]
pub struct MappedGraph {
    pub graph: Graph,
    /// `map[i]` is the original label of vertex `i`.
    pub map: Vec<usize>,
}
