//! Brute-force reference implementations.
//!
//! These are deliberately naive and independent of the production code paths
//! they cross-check: exhaustive packings, bipartition sweeps, and subset
//! enumerations over tiny graphs. They exist to anchor tests, not to be fast.

use crate::graph::Graph;

/// Maximum number of edge-disjoint spanning trees by exhaustive search over
/// disjoint spanning edge subsets, with symmetry breaking on the smallest
/// edge index per tree. Intended for graphs with at most ~8 vertices.
pub fn brute_force_tau(g: &Graph) -> usize {
    if g.n() <= 1 || !g.is_connected() {
        return 0;
    }
    let ub = g.m() / (g.n() - 1);
    let mut tau = 0;
    for k in 1..=ub {
        if brute_force_packing_exists(g, k) {
            tau = k;
        } else {
            break;
        }
    }
    tau
}

/// Whether k pairwise edge-disjoint spanning trees exist, by exhaustive
/// enumeration with pruning.
pub fn brute_force_packing_exists(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if g.n() <= 1 || !g.is_connected() || g.m() < k * (g.n() - 1) {
        return false;
    }
    let edges = g.edge_vec();
    let mut avail = vec![true; edges.len()];
    pack_trees(g, &edges, &mut avail, k, 0)
}

fn pack_trees(g: &Graph, edges: &[crate::graph::EdgeId], avail: &mut [bool], left: usize, min_first: usize) -> bool {
    if left == 0 {
        return true;
    }
    let remaining = avail.iter().filter(|a| **a).count();
    if remaining < left * (g.n() - 1) {
        return false;
    }
    // The remaining edges must still connect the graph.
    let rem_graph = Graph::from_edges(
        g.n(),
        edges
            .iter()
            .zip(avail.iter())
            .filter(|(_, a)| **a)
            .map(|(e, _)| e.endpoints()),
    );
    if !rem_graph.is_connected() {
        return false;
    }
    let mut comp: Vec<usize> = (0..g.n()).collect();
    let mut taken = Vec::new();
    grow_tree(g, edges, avail, left, &mut comp, &mut taken, min_first)
}

fn find(comp: &mut [usize], x: usize) -> usize {
    if comp[x] != x {
        comp[x] = find(comp, comp[x]);
    }
    comp[x]
}

fn grow_tree(
    g: &Graph,
    edges: &[crate::graph::EdgeId],
    avail: &mut [bool],
    left: usize,
    comp: &mut Vec<usize>,
    taken: &mut Vec<usize>,
    start: usize,
) -> bool {
    if taken.len() == g.n() - 1 {
        let first = taken[0];
        for &i in taken.iter() {
            avail[i] = false;
        }
        let done = pack_trees(g, edges, avail, left - 1, first + 1);
        for &i in taken.iter() {
            avail[i] = true;
        }
        return done;
    }
    let needed = g.n() - 1 - taken.len();
    for i in start..edges.len() {
        if edges.len() - i < needed || !avail[i] {
            if edges.len() - i < needed {
                break;
            }
            continue;
        }
        let (u, v) = edges[i].endpoints();
        let (ru, rv) = (find(comp, u), find(comp, v));
        if ru == rv {
            continue;
        }
        let saved = comp.clone();
        comp[ru] = rv;
        taken.push(i);
        if grow_tree(g, edges, avail, left, comp, taken, i + 1) {
            taken.pop();
            *comp = saved;
            return true;
        }
        taken.pop();
        *comp = saved;
    }
    false
}

/// λ₂,₂ by sweeping all vertex bipartitions (A, B): the boundary of A is a
/// 2-2-edge-cut when each side keeps a component with at least two vertices.
/// Intended for graphs with at most ~16 vertices.
pub fn brute_force_lambda22(g: &Graph) -> Option<usize> {
    let n = g.n();
    assert!(n <= 20, "bipartition sweep is for tiny graphs");
    if n < 4 {
        return None;
    }
    let mut best: Option<usize> = None;
    for mask in 1u32..(1 << (n - 1)) {
        let a: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let b: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        if a.len() < 2 || b.len() < 2 {
            continue;
        }
        if !side_has_big_component(g, &a) || !side_has_big_component(g, &b) {
            continue;
        }
        let cut = a
            .iter()
            .map(|&u| g.neighbors(u).iter().filter(|&&w| mask >> w & 1 == 0).count())
            .sum();
        best = Some(best.map_or(cut, |x: usize| x.min(cut)));
    }
    best
}

fn side_has_big_component(g: &Graph, side: &[usize]) -> bool {
    let (sub, _) = g.induced_subgraph(side);
    sub.components().iter().any(|c| c.len() >= 2)
}

/// Super-edge-connectedness by enumerating every edge subset of minimum-cut
/// size. λ itself is recomputed here by subset enumeration so the oracle does
/// not depend on the flow-based code. Tiny graphs only.
pub fn brute_force_super_edge_connected(g: &Graph) -> bool {
    assert!(g.is_connected() && g.n() >= 2);
    let edges = g.edge_vec();
    assert!(edges.len() <= 16, "edge-subset sweep is for tiny graphs");
    let mut lambda = None;
    'size: for size in 1..=edges.len() {
        for mask in 0u32..(1 << edges.len()) {
            if mask.count_ones() as usize != size {
                continue;
            }
            if disconnects(g, &edges, mask) {
                lambda = Some(size);
                break 'size;
            }
        }
    }
    let lambda = match lambda {
        Some(l) => l,
        None => return true,
    };
    for mask in 0u32..(1 << edges.len()) {
        if mask.count_ones() as usize != lambda {
            continue;
        }
        let rest = Graph::from_edges(
            g.n(),
            edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 0)
                .map(|(_, e)| e.endpoints()),
        );
        let comps = rest.components();
        if comps.len() > 1 && !comps.iter().any(|c| c.len() == 1) {
            return false;
        }
    }
    true
}

fn disconnects(g: &Graph, edges: &[crate::graph::EdgeId], mask: u32) -> bool {
    let rest = Graph::from_edges(
        g.n(),
        edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 0)
            .map(|(_, e)| e.endpoints()),
    );
    !rest.is_connected()
}

/// γ_c by scanning every vertex subset. Tiny graphs only.
pub fn naive_gamma_c(g: &Graph) -> usize {
    assert!(g.is_connected() && g.n() >= 1);
    assert!(g.n() <= 20, "all-subsets scan is for tiny graphs");
    let n = g.n();
    let nbr_masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let full = (1u32 << n) - 1;
    let mut best = n;
    for mask in 1u32..=full {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut dominated = mask;
        for (v, nbrs) in nbr_masks.iter().enumerate() {
            if mask >> v & 1 == 1 {
                dominated |= nbrs;
            }
        }
        if dominated == full && mask_connected(mask, &nbr_masks) {
            best = size;
        }
    }
    best
}

fn mask_connected(mask: u32, nbr_masks: &[u32]) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    loop {
        let mut next = seen;
        let mut bits = seen;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= nbr_masks[v] & mask;
        }
        if next == seen {
            break;
        }
        seen = next;
    }
    seen == mask
}

/// Exhaustive search for k disjoint connected dominating sets whose pairwise
/// bipartite graphs have a cycle in every component. The validity test here
/// is written out directly so the oracle stays independent of the verifier.
/// Returns the first family found in canonical order.
pub fn brute_force_cds_family(g: &Graph, k: usize) -> Option<Vec<Vec<usize>>> {
    assert!(g.n() <= 12, "family enumeration is for tiny graphs");
    let mut assign = vec![0usize; g.n()]; // 0 = unused, 1..=k = part
    search_family(g, k, 0, &mut assign)
}

fn search_family(g: &Graph, k: usize, v: usize, assign: &mut Vec<usize>) -> Option<Vec<Vec<usize>>> {
    if v == g.n() {
        let sets: Vec<Vec<usize>> = (1..=k)
            .map(|p| (0..g.n()).filter(|&x| assign[x] == p).collect::<Vec<_>>())
            .collect();
        if sets.iter().all(|s| !s.is_empty()) && family_valid(g, &sets) {
            return Some(sets);
        }
        return None;
    }
    // Symmetry breaking: part p may first appear only after part p-1 exists.
    let used = *assign[..v].iter().max().unwrap_or(&0);
    for p in 0..=(used + 1).min(k) {
        assign[v] = p;
        if let Some(f) = search_family(g, k, v + 1, assign) {
            return Some(f);
        }
    }
    assign[v] = 0;
    None
}

fn family_valid(g: &Graph, sets: &[Vec<usize>]) -> bool {
    for s in sets {
        let (sub, _) = g.induced_subgraph(s);
        if !sub.is_connected() {
            return false;
        }
        // Domination.
        for v in g.vertices() {
            if s.binary_search(&v).is_ok() {
                continue;
            }
            if !g.neighbors(v).iter().any(|w| s.binary_search(w).is_ok()) {
                return false;
            }
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let (b, _) = g.bipartite_induced(&sets[i], &sets[j]);
            for comp in b.components() {
                if b.edge_count_within(&comp) < comp.len() {
                    return false;
                }
            }
        }
    }
    true
}
