//! Connectivity parameters: κ, λ, δ, the 2-2-restricted edge-connectivity
//! λ₂,₂, super-edge-connectedness, and essential edge-connectivity.
//!
//! Everything is computed exactly with max-flow: λ by n−1 flows from a fixed
//! root, κ on the vertex-split network over non-adjacent pairs, and λ₂,₂ by
//! contracting every pair of vertex-disjoint edges and separating the two
//! contracted terminals.

use serde::{Deserialize, Serialize};

use crate::flow::{FlowNetwork, INF};
use crate::graph::Graph;

/// The five connectivity parameters of a graph. `lambda22` is `None` when no
/// 2-2-edge-cut exists (stars and graphs of order < 4); this "undefined" is
/// distinct from infinity and serializes as JSON `null`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub kappa: usize,
    pub lambda: usize,
    pub delta: usize,
    pub lambda22: Option<usize>,
    #[serde(rename = "superEdgeConnected")]
    pub super_edge_connected: bool,
}

/// λ(G): size of a minimum edge-cut; 0 exactly when G is disconnected.
/// Panics on graphs with fewer than two vertices.
pub fn edge_connectivity(g: &Graph) -> usize {
    assert!(g.n() >= 2, "edge-connectivity needs at least two vertices");
    if !g.is_connected() {
        return 0;
    }
    // min over v != root of maxflow(root, v) in the unit edge network;
    // flows reaching the current best are cut short.
    let root = 0;
    let mut best = g.min_degree();
    for v in 1..g.n() {
        best = best.min(edge_flow(g, root, v, best));
        if best == 0 {
            break;
        }
    }
    best
}

fn edge_flow(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let mut net = FlowNetwork::new(g.n());
    for e in g.edges() {
        net.add_undirected(e.u(), e.v(), 1);
    }
    net.max_flow_capped(s, t, cap)
}

/// κ(G): minimum vertex-cut size, with κ(K_n) = n−1. Panics when |V| < 2.
pub fn vertex_connectivity(g: &Graph) -> usize {
    assert!(g.n() >= 2, "vertex-connectivity needs at least two vertices");
    if !g.is_connected() {
        return 0;
    }
    let mut best = usize::MAX;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                let cap = best.min(g.min_degree() + 1);
                best = best.min(vertex_flow(g, u, v, cap));
            }
        }
    }
    if best >= g.n() - 1 {
        // Complete graph convention; also reached when every non-adjacent
        // pair has full local connectivity.
        g.n() - 1
    } else {
        best
    }
}

/// Max-flow between non-adjacent s,t on the standard vertex-split network.
fn vertex_flow(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.n();
    // v_in = v, v_out = v + n.
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { INF } else { 1 };
        net.add_arc(v, v + n, cap);
    }
    for e in g.edges() {
        net.add_arc(e.u() + n, e.v(), INF);
        net.add_arc(e.v() + n, e.u(), INF);
    }
    net.max_flow_capped(s + n, t, cap)
}

/// λ₂,₂(G): minimum size of an edge-cut leaving two distinct components with
/// at least two vertices each; `None` when no such cut exists.
pub fn restricted_edge_connectivity_22(g: &Graph) -> Option<usize> {
    let edges = g.edge_vec();
    let mut best: Option<usize> = None;
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if edges[i].shares_endpoint(&edges[j]) {
                continue;
            }
            let cap = best.unwrap_or(crate::flow::INF);
            let cut = contracted_cut(g, edges[i], edges[j], cap);
            best = Some(best.map_or(cut, |b: usize| b.min(cut)));
            if best == Some(0) {
                return best;
            }
        }
    }
    best
}

/// Min edge-cut separating edge `e1` from edge `e2` after contracting each
/// into a single terminal. Contraction merges parallel edges into capacity.
fn contracted_cut(
    g: &Graph,
    e1: crate::graph::EdgeId,
    e2: crate::graph::EdgeId,
    cap: usize,
) -> usize {
    let n = g.n();
    // Map each endpoint of e1 to terminal s = 0, of e2 to t = 1, everything
    // else to fresh ids.
    let mut id = vec![usize::MAX; n];
    id[e1.u()] = 0;
    id[e1.v()] = 0;
    id[e2.u()] = 1;
    id[e2.v()] = 1;
    let mut next = 2;
    for slot in id.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut net = FlowNetwork::new(next);
    for e in g.edges() {
        let (a, b) = (id[e.u()], id[e.v()]);
        if a != b {
            net.add_undirected(a, b, 1);
        }
    }
    net.max_flow_capped(0, 1, cap)
}

/// Whether some 2-2-edge-cut has at most `bound` edges. Flows are capped at
/// `bound + 1`, which makes this much cheaper than the full λ₂,₂ when the
/// bound is small.
pub(crate) fn exists_22_cut_at_most(g: &Graph, bound: usize) -> bool {
    let edges = g.edge_vec();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if edges[i].shares_endpoint(&edges[j]) {
                continue;
            }
            if contracted_cut(g, edges[i], edges[j], bound + 1) <= bound {
                return true;
            }
        }
    }
    false
}

/// Whether every minimum edge-cut isolates a vertex. Uses the equivalent
/// test λ(G) = δ(G) and (λ₂,₂ undefined or λ₂,₂ > λ). Panics on
/// disconnected input.
pub fn is_super_edge_connected(g: &Graph) -> bool {
    assert!(g.is_connected(), "super-edge-connectedness needs a connected graph");
    if g.n() < 2 {
        return true;
    }
    let lambda = edge_connectivity(g);
    if lambda != g.min_degree() {
        return false;
    }
    !exists_22_cut_at_most(g, lambda)
}

/// Essentially h-edge-connected: no 2-2-edge-cut with fewer than `h` edges.
/// Vacuously true when λ₂,₂ is undefined. Panics on disconnected input.
pub fn essential_edge_connectivity_at_least(g: &Graph, h: usize) -> bool {
    assert!(g.is_connected(), "essential edge-connectivity needs a connected graph");
    match restricted_edge_connectivity_22(g) {
        None => true,
        Some(l22) => l22 >= h,
    }
}

/// All five parameters at once. For disconnected graphs κ = λ = 0 and the
/// graph is reported as not super edge-connected.
pub fn connectivity_report(g: &Graph) -> ConnectivityReport {
    assert!(g.n() >= 2, "connectivity report needs at least two vertices");
    let connected = g.is_connected();
    let lambda = edge_connectivity(g);
    let delta = g.min_degree();
    let lambda22 = restricted_edge_connectivity_22(g);
    ConnectivityReport {
        kappa: vertex_connectivity(g),
        lambda,
        delta,
        lambda22,
        super_edge_connected: connected
            && lambda == delta
            && lambda22.is_none_or(|l22| l22 > lambda),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_graph, cycle_graph, path_graph, petersen, star_graph};
    use crate::line::line_graph;
    use crate::oracle;

    #[test]
    fn lambda_small_cases() {
        assert_eq!(edge_connectivity(&complete_graph(4)), 3);
        assert_eq!(edge_connectivity(&path_graph(3)), 1);
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(edge_connectivity(&two_triangles), 0);
    }

    #[test]
    fn kappa_small_cases() {
        assert_eq!(vertex_connectivity(&cycle_graph(6)), 2);
        assert_eq!(vertex_connectivity(&complete_graph(5)), 4);
        assert_eq!(vertex_connectivity(&petersen()), 3);
        // κ(L(K_5)) = 2·5 − 4 = 6.
        let l = line_graph(&complete_graph(5));
        assert_eq!(vertex_connectivity(&l.line), 6);
    }

    #[test]
    fn lambda22_small_cases() {
        assert_eq!(restricted_edge_connectivity_22(&complete_graph(4)), Some(4));
        assert_eq!(restricted_edge_connectivity_22(&star_graph(5)), None);
        // λ₂,₂(K_5) = κ(L(K_5)) = 6.
        assert_eq!(restricted_edge_connectivity_22(&complete_graph(5)), Some(6));
        assert_eq!(restricted_edge_connectivity_22(&path_graph(3)), None);
        assert_eq!(restricted_edge_connectivity_22(&path_graph(4)), Some(1));
    }

    #[test]
    fn lambda22_matches_bipartition_oracle() {
        let graphs = vec![
            complete_graph(5),
            cycle_graph(6),
            path_graph(6),
            petersen(),
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]),
        ];
        for g in &graphs {
            assert_eq!(
                restricted_edge_connectivity_22(g),
                oracle::brute_force_lambda22(g)
            );
        }
    }

    #[test]
    fn super_edge_connected_cases() {
        assert!(is_super_edge_connected(&complete_graph(3)));
        assert!(is_super_edge_connected(&complete_graph(6)));
        // C_4's minimum cuts of size 2 split 2+2.
        assert!(!is_super_edge_connected(&cycle_graph(4)));
        // Both minimum cuts of P_3 isolate a leaf.
        assert!(is_super_edge_connected(&path_graph(3)));
    }

    #[test]
    fn super_matches_enumeration_oracle() {
        for g in [
            cycle_graph(4),
            cycle_graph(5),
            path_graph(3),
            path_graph(5),
            complete_graph(4),
            star_graph(4),
        ] {
            assert_eq!(
                is_super_edge_connected(&g),
                oracle::brute_force_super_edge_connected(&g),
                "mismatch on {:?}",
                g
            );
        }
    }

    #[test]
    fn essential_connectivity_cases() {
        assert!(essential_edge_connectivity_at_least(&complete_graph(5), 6));
        assert!(!essential_edge_connectivity_at_least(&complete_graph(4), 5));
        assert!(essential_edge_connectivity_at_least(&star_graph(7), 1000));
    }

    #[test]
    fn chain_kappa_lambda_delta() {
        for g in [complete_graph(6), petersen(), cycle_graph(7), path_graph(5)] {
            let r = connectivity_report(&g);
            assert!(r.kappa <= r.lambda && r.lambda <= r.delta);
            if let Some(l22) = r.lambda22 {
                assert!(r.lambda <= l22);
            }
        }
    }

    #[test]
    fn report_serializes_undefined_as_null() {
        let r = connectivity_report(&star_graph(3));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"lambda22\":null"));
        assert!(json.contains("superEdgeConnected"));
    }
}
