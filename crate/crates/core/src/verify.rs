//! Independent verification of claimed structures: CIST families, CDS
//! families, exact connected domination number, upper bounds, and the
//! brute-force CIST-partition oracle.

use serde::Serialize;
use thiserror::Error;

use crate::combinat::next_combination;
use crate::family::{internal_vertices, CdsFamily, CistFamily};
use crate::graph::Graph;

/// One violated clause, with the indices of the offending trees/sets.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub clause: String,
    pub indices: Vec<usize>,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    fn from_failures(failures: Vec<Failure>) -> Self {
        VerificationReport {
            ok: failures.is_empty(),
            failures,
        }
    }

    pub fn summary(&self) -> String {
        if self.ok {
            "ok".to_string()
        } else {
            self.failures
                .iter()
                .map(|f| format!("[{}] {}", f.clause, f.message))
                .collect::<Vec<_>>()
                .join("; ")
        }
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.summary())
    }
}

fn fail(failures: &mut Vec<Failure>, clause: &str, indices: &[usize], message: String) {
    failures.push(Failure {
        clause: clause.to_string(),
        indices: indices.to_vec(),
        message,
    });
}

/// Check that the family consists of pairwise edge-disjoint spanning trees
/// with pairwise disjoint and degree-consistent internal vertex sets.
pub fn is_cist_family(g: &Graph, fam: &CistFamily) -> VerificationReport {
    let mut failures = Vec::new();
    if fam.trees.len() != fam.internal_sets.len() {
        fail(
            &mut failures,
            "shape",
            &[],
            format!(
                "{} trees but {} internal sets",
                fam.trees.len(),
                fam.internal_sets.len()
            ),
        );
        return VerificationReport::from_failures(failures);
    }
    for (i, tree) in fam.trees.iter().enumerate() {
        for e in tree {
            if !g.contains_edge(e) {
                fail(
                    &mut failures,
                    "tree-edges",
                    &[i],
                    format!("tree {i} uses {e}, not an edge of the graph"),
                );
            }
        }
        if g.n() >= 1 && tree.len() != g.n().saturating_sub(1) {
            fail(
                &mut failures,
                "tree-size",
                &[i],
                format!("tree {i} has {} edges, expected {}", tree.len(), g.n() - 1),
            );
            continue;
        }
        let t = Graph::from_edge_ids(g.n(), tree);
        if !t.is_connected() {
            fail(
                &mut failures,
                "tree-spanning",
                &[i],
                format!("tree {i} does not span the graph"),
            );
        }
        let derived = internal_vertices(g.n(), tree);
        if derived != fam.internal_sets[i] {
            fail(
                &mut failures,
                "internal-consistency",
                &[i],
                format!(
                    "internal set of tree {i} is {:?}, degrees give {:?}",
                    fam.internal_sets[i], derived
                ),
            );
        }
    }
    for i in 0..fam.trees.len() {
        for j in i + 1..fam.trees.len() {
            let shared: Vec<String> = fam.trees[i]
                .iter()
                .filter(|e| fam.trees[j].binary_search(e).is_ok())
                .map(|e| e.to_string())
                .collect();
            if !shared.is_empty() {
                fail(
                    &mut failures,
                    "edge-disjoint",
                    &[i, j],
                    format!("trees {i} and {j} share edges {}", shared.join(", ")),
                );
            }
            let overlap: Vec<usize> = fam.internal_sets[i]
                .iter()
                .filter(|v| fam.internal_sets[j].binary_search(v).is_ok())
                .copied()
                .collect();
            if !overlap.is_empty() {
                fail(
                    &mut failures,
                    "internal-disjoint",
                    &[i, j],
                    format!(
                        "trees {i} and {j} share internal vertices {:?}",
                        overlap
                    ),
                );
            }
        }
    }
    VerificationReport::from_failures(failures)
}

/// Check disjointness, connectivity, domination, and the pairwise
/// bipartite-cycle condition (every component of ⟨V_i,V_j⟩ has |E| ≥ |V|).
pub fn is_valid_cds_family(g: &Graph, fam: &CdsFamily) -> VerificationReport {
    let mut failures = Vec::new();
    for (i, s) in fam.sets.iter().enumerate() {
        if s.is_empty() {
            fail(&mut failures, "nonempty", &[i], format!("set {i} is empty"));
            continue;
        }
        if s.iter().any(|&v| v >= g.n()) {
            fail(
                &mut failures,
                "range",
                &[i],
                format!("set {i} mentions a vertex outside the graph"),
            );
            continue;
        }
        let (sub, _) = g.induced_subgraph(s);
        if !sub.is_connected() {
            fail(
                &mut failures,
                "connected",
                &[i],
                format!("⟨V_{i}⟩ is disconnected"),
            );
        }
        for v in g.vertices() {
            if s.binary_search(&v).is_ok() {
                continue;
            }
            if !g.neighbors(v).iter().any(|w| s.binary_search(w).is_ok()) {
                fail(
                    &mut failures,
                    "dominating",
                    &[i],
                    format!("vertex {v} has no neighbor in V_{i}"),
                );
                break;
            }
        }
    }
    for i in 0..fam.sets.len() {
        for j in i + 1..fam.sets.len() {
            let shared: Vec<usize> = fam.sets[i]
                .iter()
                .filter(|v| fam.sets[j].binary_search(v).is_ok())
                .copied()
                .collect();
            if !shared.is_empty() {
                fail(
                    &mut failures,
                    "disjoint",
                    &[i, j],
                    format!("sets {i} and {j} share vertices {:?}", shared),
                );
                continue;
            }
            if fam.sets[i].is_empty() || fam.sets[j].is_empty() {
                continue;
            }
            let (b, map) = g.bipartite_induced(&fam.sets[i], &fam.sets[j]);
            for comp in b.components() {
                if b.edge_count_within(&comp) < comp.len() {
                    fail(
                        &mut failures,
                        "bipartite-cycle",
                        &[i, j],
                        format!(
                            "component of ⟨V_{i},V_{j}⟩ containing vertex {} is a tree",
                            map[comp[0]]
                        ),
                    );
                }
            }
        }
    }
    VerificationReport::from_failures(failures)
}

/// Exact γ_c(G) by ascending-size subset search. Panics on disconnected
/// input; supports up to 128 vertices (desk scale).
pub fn connected_domination_number(g: &Graph) -> usize {
    assert!(g.is_connected(), "γ_c needs a connected graph");
    assert!(g.n() >= 1, "γ_c of the empty graph is undefined");
    assert!(g.n() <= 128, "subset search supports at most 128 vertices");
    let n = g.n();
    if n == 1 {
        return 1;
    }
    let closed: Vec<u128> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u128 << v, |m, &w| m | 1 << w)
        })
        .collect();
    let nbr: Vec<u128> = (0..n)
        .map(|v| closed[v] & !(1u128 << v))
        .collect();
    let full = if n == 128 { !0u128 } else { (1u128 << n) - 1 };
    for size in 1..=n {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let mut chosen = 0u128;
            let mut dominated = 0u128;
            for &v in &subset {
                chosen |= 1 << v;
                dominated |= closed[v];
            }
            if dominated == full && mask_connected(chosen, &nbr) {
                return size;
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    n
}

fn mask_connected(mask: u128, nbr: &[u128]) -> bool {
    debug_assert!(mask != 0);
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u128 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u128;
        let mut bits = frontier;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= nbr[v] & mask & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen == mask
}

/// The three upper bounds on the number of completely independent spanning
/// trees: δ(G), ⌊|E|/(|V|−1)⌋, and ⌊|V|/γ_c(G)⌋.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct CistUpperBounds {
    #[serde(rename = "degreeBound")]
    pub degree_bound: usize,
    #[serde(rename = "densityBound")]
    pub density_bound: usize,
    #[serde(rename = "dominationBound")]
    pub domination_bound: usize,
}

impl CistUpperBounds {
    pub fn min(&self) -> usize {
        self.degree_bound
            .min(self.density_bound)
            .min(self.domination_bound)
    }
}

/// Compute the bounds above. Panics on disconnected graphs or graphs with
/// fewer than two vertices.
pub fn cist_upper_bounds(g: &Graph) -> CistUpperBounds {
    assert!(g.n() >= 2 && g.is_connected(), "bounds need a connected graph");
    CistUpperBounds {
        degree_bound: g.min_degree(),
        density_bound: g.m() / (g.n() - 1),
        domination_bound: g.n() / connected_domination_number(g),
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("graph order {n} exceeds the search cap {cap} for k = {k}")]
pub struct CapExceeded {
    pub n: usize,
    pub cap: usize,
    pub k: usize,
}

/// Exhaustive CIST-partition search: does V(G) split into k parts, each
/// inducing a connected subgraph, such that no ⟨V_i,V_j⟩ has a tree
/// component? Returns the first witness in canonical order (vertex 0 pinned
/// to part 0, parts ordered by minimum element). The default cap is 16
/// vertices for k = 2 and 12 otherwise; larger inputs are refused.
pub fn cist_exists_bruteforce(
    g: &Graph,
    k: usize,
    cap: Option<usize>,
) -> Result<Option<Vec<Vec<usize>>>, CapExceeded> {
    assert!(k >= 1, "k must be positive");
    let cap = cap.unwrap_or(if k == 2 { 16 } else { 12 });
    if g.n() > cap {
        return Err(CapExceeded { n: g.n(), cap, k });
    }
    if g.n() < k {
        return Ok(None);
    }
    let mut assign = vec![usize::MAX; g.n()];
    Ok(search_partition(g, k, 0, &mut assign))
}

fn search_partition(
    g: &Graph,
    k: usize,
    v: usize,
    assign: &mut Vec<usize>,
) -> Option<Vec<Vec<usize>>> {
    if v == g.n() {
        let parts: Vec<Vec<usize>> = (0..k)
            .map(|p| (0..g.n()).filter(|&x| assign[x] == p).collect::<Vec<_>>())
            .collect();
        if parts.iter().any(|p| p.is_empty()) {
            return None;
        }
        if partition_is_cist(g, &parts) {
            return Some(parts);
        }
        return None;
    }
    // Parts appear in order of their minimum element; vertex 0 lands in part 0.
    let used = assign[..v]
        .iter()
        .map(|&p| p + 1)
        .max()
        .unwrap_or(0);
    for p in 0..=used.min(k - 1) {
        assign[v] = p;
        if let Some(found) = search_partition(g, k, v + 1, assign) {
            return Some(found);
        }
    }
    assign[v] = usize::MAX;
    None
}

fn partition_is_cist(g: &Graph, parts: &[Vec<usize>]) -> bool {
    for part in parts {
        let (sub, _) = g.induced_subgraph(part);
        if !sub.is_connected() {
            return false;
        }
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let (b, _) = g.bipartite_induced(&parts[i], &parts[j]);
            for comp in b.components() {
                // A tree component (singletons included) disqualifies.
                if b.edge_count_within(&comp) < comp.len() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_graph, cycle_graph, petersen, star_graph};
    use crate::graph::EdgeId;
    use crate::line::line_graph;
    use crate::oracle;

    #[test]
    fn gamma_c_line_of_complete_graphs() {
        let l4 = line_graph(&complete_graph(4));
        assert_eq!(connected_domination_number(&l4.line), 2);
        let l6 = line_graph(&complete_graph(6));
        assert_eq!(connected_domination_number(&l6.line), 4);
        assert_eq!(connected_domination_number(&star_graph(5)), 1);
    }

    #[test]
    fn gamma_c_matches_naive_oracle() {
        for g in [
            complete_graph(5),
            cycle_graph(7),
            petersen(),
            line_graph(&complete_graph(4)).line,
            line_graph(&complete_graph(6)).line,
            star_graph(6),
        ] {
            assert_eq!(connected_domination_number(&g), oracle::naive_gamma_c(&g));
        }
        let mut rng = crate::generators::seeded_rng(0x6C);
        for _ in 0..20 {
            let g = crate::generators::random_connected(12, 0.35, &mut rng);
            assert_eq!(connected_domination_number(&g), oracle::naive_gamma_c(&g));
        }
    }

    #[test]
    fn upper_bounds_examples() {
        let l7 = line_graph(&complete_graph(7)).line;
        let b = cist_upper_bounds(&l7);
        assert_eq!(b.domination_bound, 4); // ⌊21/5⌋
        let l4 = line_graph(&complete_graph(4)).line;
        let b4 = cist_upper_bounds(&l4);
        assert_eq!(b4.degree_bound, 4);
        assert_eq!(b4.min(), 2);
        let tree = crate::generators::path_graph(6);
        assert_eq!(cist_upper_bounds(&tree).density_bound, 1);
    }

    #[test]
    fn partition_oracle_on_line_of_k4() {
        let l = line_graph(&complete_graph(4)).line;
        assert!(cist_exists_bruteforce(&l, 2, None).unwrap().is_some());
        assert!(cist_exists_bruteforce(&l, 3, None).unwrap().is_none());
    }

    #[test]
    fn partition_oracle_rejects_c4() {
        let c4 = cycle_graph(4);
        assert!(cist_exists_bruteforce(&c4, 2, None).unwrap().is_none());
    }

    #[test]
    fn cap_is_enforced() {
        let g = complete_graph(5);
        let err = cist_exists_bruteforce(&g, 2, Some(4)).unwrap_err();
        assert_eq!(err, CapExceeded { n: 5, cap: 4, k: 2 });
    }

    #[test]
    fn cist_family_failures_are_reported() {
        let g = complete_graph(4);
        // Two identical spanning trees share edges and internal vertices.
        let tree = vec![EdgeId::new(0, 1), EdgeId::new(0, 2), EdgeId::new(0, 3)];
        let fam = CistFamily::from_trees(4, vec![tree.clone(), tree]);
        let report = is_cist_family(&g, &fam);
        assert!(!report.ok);
        assert!(report.failures.iter().any(|f| f.clause == "edge-disjoint"));
    }

    #[test]
    fn internal_overlap_detected() {
        // In K5: paths 0-1-2-3-4 and 1-3-0-4-2 are edge-disjoint spanning
        // trees whose internal sets {1,2,3} and {0,3,4} share vertex 3.
        let g = complete_graph(5);
        let t1 = vec![
            EdgeId::new(0, 1),
            EdgeId::new(1, 2),
            EdgeId::new(2, 3),
            EdgeId::new(3, 4),
        ];
        let t2 = vec![
            EdgeId::new(1, 3),
            EdgeId::new(0, 3),
            EdgeId::new(0, 4),
            EdgeId::new(2, 4),
        ];
        let fam = CistFamily::from_trees(5, vec![t1, t2]);
        let report = is_cist_family(&g, &fam);
        assert!(!report.ok);
        assert!(report
            .failures
            .iter()
            .any(|f| f.clause == "internal-disjoint"));
        assert!(report.failures.iter().all(|f| f.clause != "edge-disjoint"));
    }

    #[test]
    fn internal_consistency_detected() {
        let g = complete_graph(4);
        let t1 = vec![EdgeId::new(0, 1), EdgeId::new(1, 2), EdgeId::new(2, 3)];
        let t2 = vec![EdgeId::new(0, 2), EdgeId::new(0, 3), EdgeId::new(1, 3)];
        let mut fam = CistFamily::from_trees(4, vec![t1, t2]);
        assert!(is_cist_family(&g, &fam).ok);
        fam.internal_sets[1] = vec![1, 2];
        let report = is_cist_family(&g, &fam);
        assert!(report
            .failures
            .iter()
            .any(|f| f.clause == "internal-consistency"));
    }

    #[test]
    fn cds_family_failures_are_reported() {
        let k2 = complete_graph(2);
        let fam = CdsFamily::new(vec![vec![0], vec![1]]);
        let report = is_valid_cds_family(&k2, &fam);
        assert!(report
            .failures
            .iter()
            .any(|f| f.clause == "bipartite-cycle"));

        let g = crate::generators::path_graph(4);
        let fam = CdsFamily::new(vec![vec![0]]);
        let report = is_valid_cds_family(&g, &fam);
        assert!(report.failures.iter().any(|f| f.clause == "dominating"));
    }

    #[test]
    fn k5_pairs_make_a_valid_family() {
        let g = complete_graph(5);
        let fam = CdsFamily::new(vec![vec![0, 1], vec![2, 3]]);
        assert!(is_valid_cds_family(&g, &fam).ok);
    }
}
