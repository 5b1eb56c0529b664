//! Edge-disjoint spanning tree packing.
//!
//! The packer maintains k edge-disjoint forests and inserts edges one at a
//! time. When an edge closes a cycle in every forest, a breadth-first
//! exchange search over graphic-matroid circuits looks for a chain of swaps
//! that frees a slot; if none exists the edge is spanned by the current
//! union and stays out for good. Processing every edge this way yields a
//! maximum-size union, so exactly k spanning trees exist iff every forest
//! finishes with n−1 edges.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, Graph};

/// A witness of k pairwise edge-disjoint spanning trees.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpanningForestFamily {
    pub trees: Vec<Vec<EdgeId>>,
}

impl SpanningForestFamily {
    /// Independent re-verification: trees pairwise disjoint, each one a
    /// spanning tree of `g`.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        let mut all: Vec<EdgeId> = Vec::new();
        for (i, tree) in self.trees.iter().enumerate() {
            if g.n() >= 2 && tree.len() != g.n() - 1 {
                return Err(format!("tree {i} has {} edges, expected {}", tree.len(), g.n() - 1));
            }
            for e in tree {
                if !g.contains_edge(e) {
                    return Err(format!("tree {i} uses {e}, which is not an edge of the graph"));
                }
            }
            let t = Graph::from_edge_ids(g.n(), tree);
            if !t.is_connected() {
                return Err(format!("tree {i} is not spanning"));
            }
            all.extend(tree.iter().copied());
        }
        let before = all.len();
        all.sort_unstable();
        all.dedup();
        if all.len() != before {
            return Err("trees share an edge".to_string());
        }
        Ok(())
    }
}

/// k pairwise edge-disjoint spanning trees of `g`, or `None` when no such
/// family exists. Exact: `None` is returned only for genuinely infeasible
/// instances.
pub fn tree_packing(g: &Graph, k: usize) -> Option<SpanningForestFamily> {
    if k == 0 {
        return Some(SpanningForestFamily { trees: Vec::new() });
    }
    if g.n() < 2 || !g.is_connected() || g.m() < k * (g.n() - 1) {
        return None;
    }
    let mut packer = Packer::new(g, k);
    for e in 0..packer.edges.len() {
        packer.augment(e);
    }
    packer.family()
}

/// τ(G): the spanning tree packing number; 0 for disconnected or trivial
/// graphs.
pub fn tau(g: &Graph) -> usize {
    if g.n() < 2 || !g.is_connected() {
        return 0;
    }
    let ub = g.m() / (g.n() - 1);
    let mut best = 0;
    for k in 1..=ub {
        if tree_packing(g, k).is_some() {
            best = k;
        } else {
            break;
        }
    }
    best
}

struct Packer<'a> {
    g: &'a Graph,
    k: usize,
    edges: Vec<EdgeId>,
    /// Forest currently holding each edge, if any.
    forest_of: Vec<Option<usize>>,
    /// adj[f][v] = (neighbor, edge index) pairs of forest f.
    adj: Vec<Vec<Vec<(usize, usize)>>>,
}

impl<'a> Packer<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let edges = g.edge_vec();
        Packer {
            g,
            k,
            forest_of: vec![None; edges.len()],
            adj: vec![vec![Vec::new(); g.n()]; k],
            edges,
        }
    }

    fn insert(&mut self, f: usize, e: usize) {
        let (u, v) = self.edges[e].endpoints();
        self.adj[f][u].push((v, e));
        self.adj[f][v].push((u, e));
        self.forest_of[e] = Some(f);
    }

    fn remove(&mut self, f: usize, e: usize) {
        let (u, v) = self.edges[e].endpoints();
        self.adj[f][u].retain(|&(_, ei)| ei != e);
        self.adj[f][v].retain(|&(_, ei)| ei != e);
        self.forest_of[e] = None;
    }

    /// Edge indices of the unique s-t path in forest f, or `None` when s and
    /// t lie in different trees of the forest.
    fn path_in_forest(&self, f: usize, s: usize, t: usize) -> Option<Vec<usize>> {
        let n = self.g.n();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[s] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &(w, e) in &self.adj[f][u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((u, e));
                    queue.push_back(w);
                }
            }
        }
        if !seen[t] {
            return None;
        }
        let mut path = Vec::new();
        let mut cur = t;
        while cur != s {
            let (prev, e) = parent[cur].unwrap();
            path.push(e);
            cur = prev;
        }
        Some(path)
    }

    /// Try to bring edge `e0` into the union via an exchange chain. Labels
    /// are computed against the unmodified state; the swap sequence from a
    /// shortest (BFS) chain keeps every forest acyclic.
    fn augment(&mut self, e0: usize) -> bool {
        let m = self.edges.len();
        let mut label: Vec<Option<(usize, usize)>> = vec![None; m];
        let mut queued = vec![false; m];
        let mut queue = VecDeque::new();
        queued[e0] = true;
        queue.push_back(e0);
        while let Some(cur) = queue.pop_front() {
            let (u, v) = self.edges[cur].endpoints();
            for f in 0..self.k {
                if self.forest_of[cur] == Some(f) {
                    continue;
                }
                match self.path_in_forest(f, u, v) {
                    None => {
                        self.apply_swaps(cur, f, &label);
                        return true;
                    }
                    Some(cycle) => {
                        for e in cycle {
                            if !queued[e] {
                                queued[e] = true;
                                label[e] = Some((cur, f));
                                queue.push_back(e);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn apply_swaps(&mut self, mut cur: usize, mut target: usize, label: &[Option<(usize, usize)>]) {
        loop {
            let old = self.forest_of[cur];
            if let Some(f) = old {
                self.remove(f, cur);
            }
            self.insert(target, cur);
            match label[cur] {
                None => break, // reached the root edge
                Some((parent, f)) => {
                    debug_assert_eq!(old, Some(f), "label inconsistent with forest state");
                    target = old.unwrap();
                    cur = parent;
                }
            }
        }
    }

    fn family(&self) -> Option<SpanningForestFamily> {
        let want = self.g.n() - 1;
        let mut trees = vec![Vec::new(); self.k];
        for (e, f) in self.forest_of.iter().enumerate() {
            if let Some(f) = f {
                trees[*f].push(self.edges[e]);
            }
        }
        if trees.iter().any(|t| t.len() != want) {
            return None;
        }
        for t in trees.iter_mut() {
            t.sort_unstable();
        }
        Some(SpanningForestFamily { trees })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_graph, cycle_graph, gnp, path_graph, seeded_rng};
    use crate::oracle;

    #[test]
    fn k4_packs_two_trees() {
        let g = complete_graph(4);
        let fam = tree_packing(&g, 2).unwrap();
        fam.verify(&g).unwrap();
        assert_eq!(fam.trees.len(), 2);
    }

    #[test]
    fn k5_cannot_pack_three() {
        assert!(tree_packing(&complete_graph(5), 3).is_none());
    }

    #[test]
    fn cycle_packs_one_tree() {
        let g = cycle_graph(6);
        let fam = tree_packing(&g, 1).unwrap();
        fam.verify(&g).unwrap();
        assert_eq!(fam.trees[0].len(), 5);
    }

    #[test]
    fn tau_of_complete_graphs() {
        assert_eq!(tau(&complete_graph(6)), 3);
        assert_eq!(tau(&complete_graph(7)), 3);
        assert_eq!(tau(&path_graph(5)), 1);
        let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert_eq!(tau(&disconnected), 0);
    }

    #[test]
    fn tau_matches_brute_force_on_small_graphs() {
        for n in 2..=6 {
            let g = complete_graph(n);
            assert_eq!(tau(&g), oracle::brute_force_tau(&g), "K_{n}");
        }
        let mut rng = seeded_rng(42);
        for trial in 0..30 {
            let n = 4 + trial % 4;
            let g = gnp(n, 0.6, &mut rng);
            assert_eq!(tau(&g), oracle::brute_force_tau(&g), "trial {trial}: {g:?}");
        }
    }

    #[test]
    fn packing_is_deterministic() {
        let g = complete_graph(6);
        let a = tree_packing(&g, 3).unwrap();
        let b = tree_packing(&g, 3).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn every_family_passes_verification() {
        let mut rng = seeded_rng(7);
        for _ in 0..20 {
            let g = gnp(7, 0.7, &mut rng);
            let t = tau(&g);
            if t > 0 {
                let fam = tree_packing(&g, t).unwrap();
                fam.verify(&g).unwrap();
            }
        }
    }

    #[test]
    fn tau_upper_bounds_hold() {
        let mut rng = seeded_rng(11);
        for _ in 0..20 {
            let g = gnp(7, 0.6, &mut rng);
            let t = tau(&g);
            if g.n() >= 2 && g.is_connected() {
                let lambda = crate::connectivity::edge_connectivity(&g);
                assert!(t <= lambda.min(g.m() / (g.n() - 1)));
                assert!(t >= lambda / 2, "half-edge-connectivity packing bound violated");
            }
        }
    }
}
