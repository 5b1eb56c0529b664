//! Line-graph construction with an explicit vertex/edge bijection.

use crate::graph::{EdgeId, Graph};

/// A line graph together with the bijection between its vertices and the
/// base graph's edges. `labels[i]` is the base edge identified with line
/// vertex `i`; labels are in lexicographic order.
#[derive(Clone, Debug)]
pub struct EdgeLabeledLineGraph {
    pub line: Graph,
    pub labels: Vec<EdgeId>,
}

impl EdgeLabeledLineGraph {
    /// Line-graph vertex carrying the given base edge, if present.
    pub fn vertex_of(&self, e: EdgeId) -> Option<usize> {
        self.labels.binary_search(&e).ok()
    }

    pub fn n(&self) -> usize {
        self.line.n()
    }
}

/// The line graph L(G): one vertex per edge of G, two vertices adjacent
/// exactly when their edges share an endpoint.
pub fn line_graph(g: &Graph) -> EdgeLabeledLineGraph {
    let labels = g.edge_vec();
    let index_of = |e: &EdgeId| labels.binary_search(e).unwrap();
    let mut edges = Vec::new();
    // Edges of L(G) arise from pairs of base edges meeting at a vertex.
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        for (i, &a) in nbrs.iter().enumerate() {
            let ea = index_of(&EdgeId::new(v, a));
            for &b in &nbrs[i + 1..] {
                let eb = index_of(&EdgeId::new(v, b));
                edges.push((ea, eb));
            }
        }
    }
    EdgeLabeledLineGraph {
        line: Graph::from_edges(labels.len(), edges),
        labels,
    }
}
