//! Simple undirected graphs over dense vertex labels `0..n`.
//!
//! All operations treat graphs as immutable values: subgraph operations
//! return fresh graphs together with a vertex map back to the original.

use std::collections::VecDeque;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An unordered pair of distinct vertices, stored with `u < v`.
///
/// Doubles as the label of a line-graph vertex, which is identified with an
/// edge of the base graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId {
    u: usize,
    v: usize,
}

impl EdgeId {
    /// Canonical edge between two distinct vertices. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "self-loop ({a},{a}) is not a valid edge");
        EdgeId {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint different from `x`. Panics if `x` is not an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else if x == self.v {
            self.u
        } else {
            panic!("{x} is not an endpoint of {self}");
        }
    }

    pub fn shares_endpoint(&self, other: &EdgeId) -> bool {
        other.contains(self.u) || other.contains(self.v)
    }

    /// Image of the edge under a vertex permutation.
    pub fn map(&self, perm: &[usize]) -> EdgeId {
        EdgeId::new(perm[self.u], perm[self.v])
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for EdgeId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.u, self.v).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EdgeId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (a, b) = <(usize, usize)>::deserialize(deserializer)?;
        if a == b {
            return Err(D::Error::custom(format!("self-loop ({a},{a})")));
        }
        Ok(EdgeId::new(a, b))
    }
}

/// A simple undirected graph: no self-loops, no parallel edges.
///
/// Neighbor lists are kept sorted so that every traversal in the crate is
/// deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    nbrs: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            nbrs: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Build from an edge list. Duplicate edges collapse; self-loops and
    /// out-of-range endpoints panic.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut nbrs = vec![Vec::new(); n];
        for (a, b) in edges {
            assert!(a != b, "self-loop at vertex {a}");
            assert!(a < n && b < n, "edge ({a},{b}) out of range for n={n}");
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
        let mut m = 0;
        for list in nbrs.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Graph { n, nbrs, m: m / 2 }
    }

    pub fn from_edge_ids<'a, I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = &'a EdgeId>,
    {
        Self::from_edges(n, edges.into_iter().map(|e| e.endpoints()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.nbrs[u].binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: &EdgeId) -> bool {
        self.has_edge(e.u(), e.v())
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    /// Minimum degree δ(G); 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.n).flat_map(move |u| {
            self.nbrs[u]
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| EdgeId::new(u, v))
        })
    }

    pub fn edge_vec(&self) -> Vec<EdgeId> {
        self.edges().collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_reach(0).len() == self.n
    }

    fn bfs_reach(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.nbrs[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = self.bfs_reach_masked(s, &mut seen);
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    fn bfs_reach_masked(&self, start: usize, seen: &mut [bool]) -> Vec<usize> {
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.nbrs[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Number of edges with both endpoints in `s` (`s` must be sorted).
    pub fn edge_count_within(&self, s: &[usize]) -> usize {
        let mut count = 0;
        for &u in s {
            for &w in &self.nbrs[u] {
                if w > u && s.binary_search(&w).is_ok() {
                    count += 1;
                }
            }
        }
        count
    }

    /// Whether a component (given as its sorted vertex list) contains a cycle.
    /// Panics if `comp` is not a component of the graph.
    pub fn has_cycle_component(&self, comp: &[usize]) -> bool {
        assert!(!comp.is_empty(), "component must be nonempty");
        let mut seen = vec![false; self.n];
        let mut actual = self.bfs_reach_masked(comp[0], &mut seen);
        actual.sort_unstable();
        assert_eq!(actual, comp, "given set is not a component of the graph");
        // A component is connected, so it has a cycle iff |E| >= |V|.
        self.edge_count_within(comp) >= comp.len()
    }

    fn subgraph_on(&self, keep: Vec<usize>) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        let mut m = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.nbrs[v] {
                if index[w] != usize::MAX {
                    g.nbrs[i].push(index[w]);
                }
            }
            m += g.nbrs[i].len();
        }
        g.m = m / 2;
        (g, keep)
    }

    /// Induced subgraph ⟨S⟩ together with the map from new to old labels.
    pub fn induced_subgraph(&self, s: &[usize]) -> (Graph, Vec<usize>) {
        let keep = sorted_unique(s, self.n);
        self.subgraph_on(keep)
    }

    /// Subgraph induced by an edge set: its vertices are the endpoints of the
    /// given edges. Panics when `es` is empty or not a subset of E(G).
    pub fn edge_induced(&self, es: &[EdgeId]) -> (Graph, Vec<usize>) {
        assert!(!es.is_empty(), "edge-induced subgraph of an empty edge set");
        let mut verts = Vec::with_capacity(es.len() * 2);
        for e in es {
            assert!(self.contains_edge(e), "edge {e} not in the graph");
            verts.push(e.u());
            verts.push(e.v());
        }
        verts.sort_unstable();
        verts.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let g = Graph::from_edges(
            verts.len(),
            es.iter().map(|e| (index[e.u()], index[e.v()])),
        );
        (g, verts)
    }

    /// The bipartite subgraph ⟨S1,S2⟩: vertex set S1 ∪ S2, keeping exactly the
    /// edges with one endpoint in each part. Panics when the parts overlap.
    pub fn bipartite_induced(&self, s1: &[usize], s2: &[usize]) -> (Graph, Vec<usize>) {
        let a = sorted_unique(s1, self.n);
        let b = sorted_unique(s2, self.n);
        for v in &a {
            assert!(
                b.binary_search(v).is_err(),
                "vertex {v} appears in both parts"
            );
        }
        let mut keep: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
        keep.sort_unstable();
        let mut side = vec![0u8; self.n];
        for &v in &a {
            side[v] = 1;
        }
        for &v in &b {
            side[v] = 2;
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        let mut m = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.nbrs[v] {
                if side[w] != 0 && side[w] != side[v] {
                    g.nbrs[i].push(index[w]);
                }
            }
            m += g.nbrs[i].len();
        }
        g.m = m / 2;
        (g, keep)
    }

    /// G − S for a proper vertex subset S, with the map from new to old labels.
    pub fn delete_vertices(&self, s: &[usize]) -> (Graph, Vec<usize>) {
        let del = sorted_unique(s, self.n);
        assert!(del.len() < self.n, "cannot delete every vertex");
        let keep: Vec<usize> = (0..self.n)
            .filter(|v| del.binary_search(v).is_err())
            .collect();
        self.subgraph_on(keep)
    }

    /// G − F for an edge set F; the vertex set is unchanged.
    pub fn delete_edges(&self, es: &[EdgeId]) -> Graph {
        let mut g = self.clone();
        for e in es {
            let (u, v) = e.endpoints();
            if let Ok(i) = g.nbrs[u].binary_search(&v) {
                g.nbrs[u].remove(i);
                let j = g.nbrs[v].binary_search(&u).unwrap();
                g.nbrs[v].remove(j);
                g.m -= 1;
            }
        }
        g
    }

    /// Whether ⟨S⟩ is a simple path. A single vertex counts as a path;
    /// the empty set does not.
    pub fn is_induced_path(&self, s: &[usize]) -> bool {
        let s = sorted_unique(s, self.n);
        if s.is_empty() {
            return false;
        }
        let (sub, _) = self.induced_subgraph(&s);
        sub.is_connected() && sub.m() == sub.n() - 1 && sub.max_degree() <= 2
    }

    /// Vertex sets of all induced paths of order `1..=max_order`, each sorted,
    /// in deterministic order.
    pub fn induced_paths_up_to(&self, max_order: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if max_order == 0 {
            return out;
        }
        let mut seq = Vec::new();
        for v in 0..self.n {
            seq.push(v);
            self.extend_induced_path(&mut seq, max_order, &mut out);
            seq.pop();
        }
        out
    }

    fn extend_induced_path(
        &self,
        seq: &mut Vec<usize>,
        max_order: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        // Reversal symmetry broken by requiring first < last for order >= 2.
        if seq.len() == 1 || seq[0] < *seq.last().unwrap() {
            let mut set = seq.clone();
            set.sort_unstable();
            out.push(set);
        }
        if seq.len() == max_order {
            return;
        }
        let last = *seq.last().unwrap();
        for &w in self.neighbors(last) {
            if seq.contains(&w) {
                continue;
            }
            // Induced: w may touch only the current endpoint.
            if seq[..seq.len() - 1].iter().any(|&x| self.has_edge(w, x)) {
                continue;
            }
            seq.push(w);
            self.extend_induced_path(seq, max_order, out);
            seq.pop();
        }
    }

    /// Edges of a breadth-first spanning tree rooted at `root`, visiting
    /// neighbors in ascending order. `None` when the graph is disconnected.
    pub fn bfs_spanning_tree(&self, root: usize) -> Option<Vec<EdgeId>> {
        let mut seen = vec![false; self.n];
        let mut tree = Vec::new();
        let mut queue = VecDeque::new();
        seen[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in &self.nbrs[u] {
                if !seen[w] {
                    seen[w] = true;
                    tree.push(EdgeId::new(u, w));
                    queue.push_back(w);
                }
            }
        }
        if tree.len() + 1 == self.n {
            tree.sort_unstable();
            Some(tree)
        } else {
            None
        }
    }
}

fn sorted_unique(s: &[usize], n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = s.to_vec();
    v.sort_unstable();
    v.dedup();
    if let Some(&max) = v.last() {
        assert!(max < n, "vertex {max} out of range for n={n}");
    }
    v
}
