//! Acceptance suite: one test per shipping criterion, each printing a
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).
//! Every tolerance here is exact.

use linecist::generators::{
    complete_graph, h_ell, petersen, random_connected, random_connected_non_star, seeded_rng,
};
use linecist::graph::Graph;
use linecist::line::line_graph;
use linecist::oracle;
use linecist::{
    cds_to_cists, check_theorems, cist_exists_bruteforce, connected_domination_number,
    is_cist_family, lkn_cists, lkn_fault_survivors, line_cists, restricted_edge_connectivity_22,
    tau, tau_prime, vertex_connectivity, CdsFamily,
};

fn conclude(id: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("PASS {id}"),
        Err(msg) => {
            println!("FAIL {id}: {msg}");
            panic!("{id} failed: {msg}");
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

#[test]
fn criterion_1_lkn_family_counts_and_validity() {
    conclude("criterion 1: L(K_n) families for n = 4..14", (|| {
        for n in 4..=14usize {
            let out = lkn_cists(n).map_err(|e| format!("n={n}: {e}"))?;
            ensure!(
                out.k() == n.div_ceil(2),
                "n={n}: got {} trees, expected {}",
                out.k(),
                n.div_ceil(2)
            );
            let rep = is_cist_family(&out.line.line, &out.family);
            ensure!(rep.ok, "n={n}: verification failed: {rep}");
        }
        Ok(())
    })());
}

#[test]
fn criterion_2_count_optimality() {
    conclude("criterion 2: tree count is optimal", (|| {
        // γ_c(L(K_n)) = n − 2 exactly, for every n checked here.
        for n in [4usize, 5, 7, 9] {
            let lg = line_graph(&complete_graph(n));
            let gc = connected_domination_number(&lg.line);
            ensure!(gc == n - 2, "γ_c(L(K_{n})) = {gc}, expected {}", n - 2);
        }
        // Odd n: ⌊(n+1)/2⌋ matches the domination upper bound
        // ⌊|E(K_n)|/γ_c(L(K_n))⌋.
        for n in [5usize, 7, 9] {
            let gc = n - 2;
            let bound = (n * (n - 1) / 2) / gc;
            ensure!(
                n.div_ceil(2) == bound,
                "n={n}: family size {} vs domination bound {bound}",
                n.div_ceil(2)
            );
        }
        // n = 4: the domination bound (3) is not tight; the density bound
        // ⌊|E(L(K_4))|/5⌋ = 2 is, and matches the family size.
        {
            let lg = line_graph(&complete_graph(4));
            let bounds = linecist::cist_upper_bounds(&lg.line);
            ensure!(
                bounds.min() == 2 && lkn_cists(4).map_err(|e| e.to_string())?.k() == 2,
                "n=4: tightest bound {} vs family size 2",
                bounds.min()
            );
        }
        // Even n: the construction's n/2 equals the packing number of K_n.
        for n in [4usize, 6, 8, 10] {
            let count = lkn_cists(n).map_err(|e| e.to_string())?.k();
            let t = tau(&complete_graph(n));
            ensure!(count == n / 2 && t == n / 2, "n={n}: count {count}, tau {t}");
        }
        Ok(())
    })());
}

#[test]
fn criterion_3_fault_tolerance() {
    conclude("criterion 3: fault tolerance of the L(K_n) families", (|| {
        // Odd n: any single deleted line vertex keeps all ⌊(n+1)/2⌋ trees.
        for n in [7usize, 9] {
            let lg = line_graph(&complete_graph(n));
            for &e in &lg.labels {
                let surv = lkn_fault_survivors(n, &[e])
                    .map_err(|err| format!("n={n}, delete {e}: {err}"))?;
                ensure!(
                    surv.family.k() == n.div_ceil(2),
                    "n={n}, delete {e}: {} trees",
                    surv.family.k()
                );
                let rep = is_cist_family(&surv.line.line, &surv.family);
                ensure!(rep.ok, "n={n}, delete {e}: {rep}");
            }
        }
        // Even n: every induced path of order at most n/2 can be deleted.
        for n in [6usize, 8] {
            let lg = line_graph(&complete_graph(n));
            let paths = lg.line.induced_paths_up_to(n / 2);
            for path in &paths {
                let d: Vec<_> = path.iter().map(|&i| lg.labels[i]).collect();
                let surv = lkn_fault_survivors(n, &d)
                    .map_err(|err| format!("n={n}, delete {d:?}: {err}"))?;
                ensure!(
                    surv.family.k() == n.div_ceil(2),
                    "n={n}, delete {d:?}: {} trees",
                    surv.family.k()
                );
                let rep = is_cist_family(&surv.line.line, &surv.family);
                ensure!(rep.ok, "n={n}, delete {d:?}: {rep}");
            }
            println!("  n={n}: {} induced paths checked", paths.len());
        }
        Ok(())
    })());
}

#[test]
fn criterion_4_tau_exactness() {
    conclude("criterion 4: packing number of complete graphs", (|| {
        for n in 2..=12usize {
            let t = tau(&complete_graph(n));
            ensure!(t == n / 2, "tau(K_{n}) = {t}, expected {}", n / 2);
        }
        for n in 2..=7usize {
            let g = complete_graph(n);
            let brute = oracle::brute_force_tau(&g);
            ensure!(tau(&g) == brute, "K_{n}: packing {} vs oracle {brute}", tau(&g));
        }
        Ok(())
    })());
}

#[test]
fn criterion_5_tau_prime_separation() {
    conclude("criterion 5: star-subset separation on the H family", (|| {
        for (k, ell) in [(2usize, 0usize), (2, 1), (3, 1)] {
            let h = h_ell(k, ell);
            let capped = tau_prime(&h, Some(2));
            ensure!(
                capped.value >= 2 * k,
                "H_({k},{ell}): capped tau' = {} < {}",
                capped.value,
                2 * k
            );
            ensure!(
                !capped.cap_binding,
                "H_({k},{ell}): size cap 2 reported binding"
            );
            let t = tau(&h);
            ensure!(t <= ell + 1, "H_({k},{ell}): tau = {t} > {}", ell + 1);
            let built = line_cists(&h).map_err(|e| format!("H_({k},{ell}): {e}"))?;
            ensure!(
                built.family.k() == 2 * k,
                "H_({k},{ell}): built {} trees",
                built.family.k()
            );
            let rep = is_cist_family(&built.line.line, &built.family);
            ensure!(rep.ok, "H_({k},{ell}): {rep}");
        }
        Ok(())
    })());
}

#[test]
fn criterion_6_negative_and_positive_instances() {
    conclude("criterion 6: brute-force existence oracle", (|| {
        let lp = line_graph(&petersen()).line;
        ensure!(lp.n() == 15, "L(Petersen) should have 15 vertices");
        let found = cist_exists_bruteforce(&lp, 2, None).map_err(|e| e.to_string())?;
        ensure!(found.is_none(), "two CISTs claimed in the Petersen line graph");

        let lk4 = line_graph(&complete_graph(4)).line;
        let two = cist_exists_bruteforce(&lk4, 2, None).map_err(|e| e.to_string())?;
        ensure!(two.is_some(), "L(K_4) must admit two CISTs");
        let three = cist_exists_bruteforce(&lk4, 3, None).map_err(|e| e.to_string())?;
        ensure!(three.is_none(), "L(K_4) must not admit three CISTs");
        Ok(())
    })());
}

#[test]
fn criterion_7_line_connectivity_crosscheck() {
    conclude("criterion 7: κ(L(G)) = λ₂,₂(G)", (|| {
        for n in 4..=8usize {
            let g = complete_graph(n);
            let kappa_l = vertex_connectivity(&line_graph(&g).line);
            let l22 = restricted_edge_connectivity_22(&g);
            ensure!(
                kappa_l == 2 * n - 4 && l22 == Some(2 * n - 4),
                "K_{n}: κ(L) = {kappa_l}, λ₂,₂ = {l22:?}, expected {}",
                2 * n - 4
            );
        }
        let mut rng = seeded_rng(0xC157);
        for trial in 0..200 {
            let n = 5 + trial % 6;
            let p = 0.3 + 0.1 * ((trial % 5) as f64);
            let g = random_connected_non_star(n, p, &mut rng);
            let kappa_l = vertex_connectivity(&line_graph(&g).line);
            let l22 = restricted_edge_connectivity_22(&g);
            ensure!(
                Some(kappa_l) == l22,
                "trial {trial}: κ(L) = {kappa_l}, λ₂,₂ = {l22:?} on {g:?}"
            );
        }
        Ok(())
    })());
}

#[test]
fn criterion_8_theorem_soundness_sweep() {
    conclude("criterion 8: zero soundness alarms", (|| {
        let mut corpus: Vec<(String, Graph)> = Vec::new();
        for n in 4..=10usize {
            corpus.push((format!("K_{n}"), complete_graph(n)));
        }
        for (k, ell) in [(2usize, 0usize), (2, 1), (3, 1)] {
            corpus.push((format!("H_({k},{ell})"), h_ell(k, ell)));
        }
        let mut rng = seeded_rng(0x50DA);
        for trial in 0..100 {
            let n = 5 + trial % 6;
            let p = 0.3 + 0.12 * ((trial % 5) as f64);
            corpus.push((format!("random {trial}"), random_connected(n, p, &mut rng)));
        }
        let mut satisfied = 0usize;
        for (name, g) in &corpus {
            for k in [2usize, 3] {
                let rep = check_theorems(g, k);
                ensure!(
                    rep.alarms == 0,
                    "soundness alarm on {name} with k = {k}: {}",
                    serde_json::to_string(&rep.checks).unwrap()
                );
                satisfied += rep
                    .checks
                    .iter()
                    .filter(|c| !c.cases.is_empty())
                    .count();
            }
        }
        println!("  {} hypothesis instances exercised", satisfied);
        Ok(())
    })());
}

#[test]
fn criterion_9_characterization_biconditional() {
    conclude("criterion 9: partition and CDS-family characterizations agree", (|| {
        let mut rng = seeded_rng(0xB1C0);
        let mut positives = 0usize;
        for trial in 0..500 {
            let n = 2 + trial % 6; // 2..=7 vertices
            let p = 0.35 + 0.11 * ((trial % 6) as f64);
            let g = random_connected(n, p, &mut rng);
            let partition = cist_exists_bruteforce(&g, 2, None)
                .map_err(|e| e.to_string())?
                .is_some();
            let family = oracle::brute_force_cds_family(&g, 2);
            ensure!(
                partition == family.is_some(),
                "trial {trial}: partition says {partition}, family says {} on {g:?}",
                family.is_some()
            );
            if let Some(sets) = family {
                let fam = cds_to_cists(&g, &CdsFamily::new(sets))
                    .map_err(|e| format!("trial {trial}: {e}"))?;
                let rep = is_cist_family(&g, &fam);
                ensure!(rep.ok, "trial {trial}: constructed family invalid: {rep}");
                positives += 1;
            }
        }
        println!("  {positives}/500 graphs admit two CISTs");
        Ok(())
    })());
}
