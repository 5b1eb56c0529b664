//! Property tests for the structural invariants: line-graph identities,
//! connectivity chains, packing exactness, and the CDS-to-CIST direction.

use proptest::prelude::*;

use linecist::generators::{gnp, seeded_rng};
use linecist::graph::{EdgeId, Graph};
use linecist::line::line_graph;
use linecist::oracle;
use linecist::{
    cds_to_cists, cist_upper_bounds, connected_domination_number, edge_connectivity,
    is_cist_family, tau, tau_prime, tree_packing, CdsFamily,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, edges)
        })
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("connected", |g| g.n() >= 2 && g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn line_graph_degrees_and_handshake(g in arb_graph(8)) {
        let l = line_graph(&g);
        let mut degree_sum = 0;
        for (i, e) in l.labels.iter().enumerate() {
            prop_assert_eq!(l.line.degree(i), g.degree(e.u()) + g.degree(e.v()) - 2);
            degree_sum += l.line.degree(i);
        }
        prop_assert_eq!(degree_sum, 2 * l.line.m());
    }

    #[test]
    fn line_graph_commutes_with_vertex_deletion(g in arb_graph(7), raw in any::<u8>()) {
        prop_assume!(g.n() >= 2);
        let v = raw as usize % g.n();
        // L(G - v) must equal L(G) minus the vertices labeled by edges at v,
        // under the edge-id labeling.
        let (gd, map) = g.delete_vertices(&[v]);
        let direct = line_graph(&gd);
        let lg = line_graph(&g);
        let incident: Vec<usize> = lg
            .labels
            .iter()
            .enumerate()
            .filter(|(_, e)| e.contains(v))
            .map(|(i, _)| i)
            .collect();
        if incident.len() == lg.n() {
            prop_assert_eq!(direct.n(), 0);
            return Ok(());
        }
        let (deleted, dmap) = lg.line.delete_vertices(&incident);
        let deleted_labels: Vec<EdgeId> = dmap.iter().map(|&i| lg.labels[i]).collect();
        let direct_labels: Vec<EdgeId> = direct
            .labels
            .iter()
            .map(|e| EdgeId::new(map[e.u()], map[e.v()]))
            .collect();
        prop_assert_eq!(&direct_labels, &deleted_labels);
        prop_assert_eq!(direct.line, deleted);
    }

    #[test]
    fn bipartite_induced_is_filtered_union(g in arb_graph(8), mask in any::<u16>()) {
        prop_assume!(g.n() >= 2);
        let s1: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let s2: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 0).collect();
        prop_assume!(!s1.is_empty() && !s2.is_empty());
        let (b, bmap) = g.bipartite_induced(&s1, &s2);
        // Same vertex set as ⟨S1 ∪ S2⟩, edges cross-filtered by brute force.
        let mut expect: Vec<(usize, usize)> = Vec::new();
        for &u in &s1 {
            for &v in &s2 {
                if g.has_edge(u, v) {
                    expect.push((u.min(v), u.max(v)));
                }
            }
        }
        expect.sort_unstable();
        let mut got: Vec<(usize, usize)> = b
            .edges()
            .map(|e| {
                let (a, c) = (bmap[e.u()], bmap[e.v()]);
                (a.min(c), a.max(c))
            })
            .collect();
        got.sort_unstable();
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn connectivity_chain(g in arb_connected(7)) {
        let rep = linecist::connectivity_report(&g);
        prop_assert!(rep.kappa <= rep.lambda);
        prop_assert!(rep.lambda <= rep.delta);
        if let Some(l22) = rep.lambda22 {
            prop_assert!(rep.lambda <= l22);
        }
    }

    #[test]
    fn lambda22_matches_bipartition_oracle(g in arb_graph(7)) {
        prop_assert_eq!(
            linecist::restricted_edge_connectivity_22(&g),
            oracle::brute_force_lambda22(&g)
        );
    }

    #[test]
    fn packing_matches_oracle_and_verifies(g in arb_graph(7)) {
        let t = tau(&g);
        prop_assert_eq!(t, oracle::brute_force_tau(&g), "graph {:?}", g);
        if t > 0 {
            let fam = tree_packing(&g, t).unwrap();
            prop_assert!(fam.verify(&g).is_ok());
            prop_assert!(tree_packing(&g, t + 1).is_none());
        }
    }

    #[test]
    fn tau_prime_dominates_tau(g in arb_graph(7)) {
        let t = tau(&g);
        let r = tau_prime(&g, None);
        prop_assert!(r.value >= t);
        prop_assert_eq!(tau_prime(&g, Some(0)).value, t);
        prop_assert_eq!(r.witness.value, r.value);
        prop_assert_eq!(r.witness.zeta.min_with(r.witness.tau_remainder), r.value);
    }

    #[test]
    fn gamma_c_matches_naive(g in arb_connected(8)) {
        prop_assert_eq!(
            connected_domination_number(&g),
            oracle::naive_gamma_c(&g)
        );
    }

    #[test]
    fn cds_families_convert_and_verify(g in arb_connected(7)) {
        // Constructive direction: any valid family yields verified CISTs
        // whose count respects the upper bounds.
        if let Some(sets) = oracle::brute_force_cds_family(&g, 2) {
            let fam = cds_to_cists(&g, &CdsFamily::new(sets)).expect("valid family converts");
            prop_assert!(is_cist_family(&g, &fam).ok);
            prop_assert!(fam.k() <= cist_upper_bounds(&g).min());
        }
    }
}

// λ(G) ≥ c implies ⌊c/2⌋ edge-disjoint spanning trees survive deleting any
// ⌈c/2⌉ edges. Sampled deterministically rather than through proptest
// because the interesting graphs are dense.
#[test]
fn packing_survives_bounded_edge_deletion() {
    let mut rng = seeded_rng(0xCA71);
    let mut exercised = 0;
    for _ in 0..40 {
        let g = gnp(7, 0.8, &mut rng);
        if g.n() < 2 || !g.is_connected() {
            continue;
        }
        let lambda = edge_connectivity(&g);
        if lambda < 2 {
            continue;
        }
        let edges = g.edge_vec();
        let take = lambda.div_ceil(2);
        for offset in 0..edges.len().min(8) {
            let x: Vec<EdgeId> = (0..take)
                .map(|i| edges[(offset + i * 3) % edges.len()])
                .collect();
            let rest = g.delete_edges(&x);
            let fam = tree_packing(&rest, lambda / 2);
            assert!(
                fam.is_some(),
                "λ = {lambda}, deleting {x:?} from {g:?} broke the packing"
            );
            exercised += 1;
        }
    }
    assert!(exercised > 50, "corpus too thin: {exercised}");
}

// The partition and CDS-family characterizations must agree beyond the
// 7-vertex corpus too; family enumeration gets slow past 9 vertices, so
// this stays a fixed seeded sample.
#[test]
fn biconditional_on_larger_graphs() {
    let mut rng = seeded_rng(0x9B1C);
    for trial in 0..20 {
        let n = 8 + trial % 2;
        let g = linecist::generators::random_connected(n, 0.4, &mut rng);
        let partition = linecist::cist_exists_bruteforce(&g, 2, None)
            .unwrap()
            .is_some();
        let family = oracle::brute_force_cds_family(&g, 2);
        assert_eq!(partition, family.is_some(), "trial {trial}: {g:?}");
        if let Some(sets) = family {
            let fam = cds_to_cists(&g, &CdsFamily::new(sets)).unwrap();
            assert!(is_cist_family(&g, &fam).ok);
        }
    }
}
