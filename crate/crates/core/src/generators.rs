//! Deterministic graph generators used by the CLI and the test corpora.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// The complete graph K_n. `n` must be at least 1; K_1 has no edges.
pub fn complete_graph(n: usize) -> Graph {
    assert!(n >= 1, "complete graph needs at least one vertex");
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges)
}

/// The path P_n on vertices 0..n in order.
pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// The cycle C_n (n >= 3).
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// The star K_{1,leaves} with the center at vertex 0.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// The Petersen graph via the Kneser construction: vertices are the 2-subsets
/// of {0..4} in lexicographic order, adjacent when disjoint.
pub fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            pairs.push((a, b));
        }
    }
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, edges)
}

/// The graph H_ell: K_{4k} on vertices 0..4k, plus u = 4k and v = 4k+1 with
/// the edge uv, u joined to the first `ell` vertices and v to the first
/// 2k − ell vertices. Requires k >= 1 and 0 <= ell < k.
pub fn h_ell(k: usize, ell: usize) -> Graph {
    assert!(k >= 1, "k must be positive");
    assert!(ell < k, "ell must satisfy 0 <= ell < k");
    let base = 4 * k;
    let u = base;
    let v = base + 1;
    let mut edges = Vec::new();
    for a in 0..base {
        for b in a + 1..base {
            edges.push((a, b));
        }
    }
    edges.push((u, v));
    for a in 0..ell {
        edges.push((u, a));
    }
    for a in 0..(2 * k - ell) {
        edges.push((v, a));
    }
    Graph::from_edges(base + 2, edges)
}

/// A fresh deterministic RNG for seeded corpora.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi G(n, p) with independent edge coin flips.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// G(n, p) conditioned on being connected, by rejection.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    loop {
        let g = gnp(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Connected non-star graphs with at least two edges, as required by the
/// line-graph connectivity theorems.
pub fn random_connected_non_star<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    loop {
        let g = random_connected(n, p, rng);
        if g.m() >= 2 && !is_star(&g) {
            return g;
        }
    }
}

fn is_star(g: &Graph) -> bool {
    g.n() >= 2 && g.m() == g.n() - 1 && g.max_degree() == g.n() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(complete_graph(4).m(), 6);
        assert_eq!(complete_graph(7).m(), 21);
        assert_eq!(complete_graph(1).m(), 0);
    }

    #[test]
    fn petersen_is_cubic_on_ten() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert_eq!(g.m(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn h_ell_shape() {
        // k=2, ell=1: K_8 plus u,v; deg(u) = 2, deg(v) = 4.
        let g = h_ell(2, 1);
        assert_eq!(g.n(), 10);
        assert_eq!(g.m(), 28 + 1 + 1 + 3);
        assert_eq!(g.degree(8), 2);
        assert_eq!(g.degree(9), 4);
        assert_eq!(g.min_degree(), 2);
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = gnp(8, 0.5, &mut seeded_rng(7));
        let b = gnp(8, 0.5, &mut seeded_rng(7));
        assert_eq!(a, b);
    }

    #[test]
    fn star_detection() {
        assert!(is_star(&star_graph(5)));
        assert!(!is_star(&path_graph(4)));
        assert!(!is_star(&complete_graph(3)));
    }
}
