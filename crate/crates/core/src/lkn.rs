//! Explicit CIST families for line graphs of complete graphs.
//!
//! For n ≤ 6 the disjoint connected dominating sets of L(K_n) are hardcoded
//! tables; for n ≥ 7 they are zig-zag Hamiltonian paths of K_n minus one
//! vertex, obtained from each other by cyclic shifts, plus one extra tree
//! with internal degrees 3 when n is odd. The edges of K_n not used by any
//! set form the spare set: deleting any line vertices inside the spare
//! preserves the whole family, which is what the fault-tolerance entry point
//! exploits after normalizing the deletion into the spare by a vertex
//! permutation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::{cds_to_cists, ConstructError, LineCistFamily};
use crate::family::CdsFamily;
use crate::generators::complete_graph;
use crate::graph::EdgeId;
use crate::line::{line_graph, EdgeLabeledLineGraph};

/// The ⌊(n+1)/2⌋ disjoint connected dominating sets of L(K_n), as edge sets
/// of K_n, plus the unused spare edges.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LknFamily {
    pub n: usize,
    #[serde(rename = "cdsSets")]
    pub cds_sets: Vec<Vec<EdgeId>>,
    pub spare: Vec<EdgeId>,
}

/// The zig-zag Hamiltonian path T_i of K_n − v_{i+⌊(n+1)/2⌋}: starting at
/// v_i, the path alternates increasing and decreasing offsets around the
/// regular n-gon. Requires n ≥ 7 and 0 ≤ i < ⌊n/2⌋.
pub fn zigzag_tree(n: usize, i: usize) -> Vec<EdgeId> {
    assert!(n >= 7, "zig-zag construction starts at n = 7");
    assert!(i < n / 2, "tree index out of range");
    let mut seq = vec![i % n];
    let mut j = 1;
    while seq.len() < n - 1 {
        seq.push((i + j) % n);
        if seq.len() < n - 1 {
            seq.push((i + n - j) % n);
        }
        j += 1;
    }
    let mut edges: Vec<EdgeId> = seq.windows(2).map(|w| EdgeId::new(w[0], w[1])).collect();
    edges.sort_unstable();
    edges
}

/// For odd n ≥ 7, the final tree: every edge of K_n unused by the zig-zag
/// trees except v_{n−1}v_0. It spans K_n − v_0 and all of its internal
/// vertices have degree 3.
pub fn odd_extra_tree(n: usize) -> Vec<EdgeId> {
    assert!(n % 2 == 1 && n >= 7, "extra tree exists only for odd n >= 7");
    let mut used: Vec<EdgeId> = (0..n / 2).flat_map(|i| zigzag_tree(n, i)).collect();
    used.sort_unstable();
    let skip = EdgeId::new(0, n - 1);
    complete_graph(n)
        .edges()
        .filter(|e| *e != skip && used.binary_search(e).is_err())
        .collect()
}

/// The full family for any n ≥ 4: hardcoded tables for n ≤ 6, zig-zag
/// construction beyond.
pub fn lkn_family(n: usize) -> LknFamily {
    assert!(n >= 4, "the construction needs n >= 4");
    let table = |rows: &[&[(usize, usize)]]| -> Vec<Vec<EdgeId>> {
        rows.iter()
            .map(|row| {
                let mut set: Vec<EdgeId> =
                    row.iter().map(|&(a, b)| EdgeId::new(a, b)).collect();
                set.sort_unstable();
                set
            })
            .collect()
    };
    let cds_sets: Vec<Vec<EdgeId>> = match n {
        4 => table(&[&[(0, 1), (1, 3), (2, 3)], &[(0, 2), (1, 2)]]),
        5 => table(&[
            &[(0, 1), (1, 4), (2, 4)],
            &[(1, 2), (0, 2), (0, 3)],
            &[(2, 3), (3, 4), (0, 4)],
        ]),
        6 => table(&[
            &[(0, 1), (1, 5), (2, 5), (2, 4)],
            &[(1, 2), (0, 2), (0, 3), (3, 5)],
            &[(2, 3), (1, 3), (1, 4), (0, 4)],
        ]),
        _ => {
            let mut sets: Vec<Vec<EdgeId>> = (0..n / 2).map(|i| zigzag_tree(n, i)).collect();
            if n % 2 == 1 {
                sets.push(odd_extra_tree(n));
            }
            sets
        }
    };
    let mut used: Vec<EdgeId> = cds_sets.iter().flatten().copied().collect();
    used.sort_unstable();
    let spare = complete_graph(n)
        .edges()
        .filter(|e| used.binary_search(e).is_err())
        .collect();
    LknFamily {
        n,
        cds_sets,
        spare,
    }
}

/// ⌊(n+1)/2⌋ completely independent spanning trees of L(K_n).
pub fn lkn_cists(n: usize) -> Result<LineCistFamily, ConstructError> {
    let family = lkn_family(n);
    let lg = line_graph(&complete_graph(n));
    let sets: Vec<Vec<usize>> = family
        .cds_sets
        .iter()
        .map(|set| {
            set.iter()
                .map(|e| lg.vertex_of(*e).expect("every pair is an edge of K_n"))
                .collect()
        })
        .collect();
    let fam = cds_to_cists(&lg.line, &CdsFamily::new(sets))?;
    Ok(LineCistFamily {
        line: lg,
        family: fam,
    })
}

#[derive(Debug, Error)]
pub enum FaultError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no vertex permutation maps the deletion into the spare set: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Construction(#[from] ConstructError),
}

/// The surviving family after deleting line vertices.
#[derive(Clone, Debug)]
pub struct FaultSurvivors {
    /// L(K_n) − D, with the surviving base edges as labels.
    pub line: EdgeLabeledLineGraph,
    pub family: crate::family::CistFamily,
    /// The permutation of V(K_n) that maps the deleted edges into the
    /// reference family's spare set.
    pub sigma: Vec<usize>,
}

/// Delete the line vertices `d` from L(K_n) and return ⌊(n+1)/2⌋ surviving
/// completely independent spanning trees. For n = 4 or odd n at most one
/// vertex may be deleted; for even n ≥ 6 the deletion must induce a path of
/// order at most n/2 in L(K_n). The permutation is searched for, never
/// assumed, and the final family is re-verified on the deleted graph.
pub fn lkn_fault_survivors(n: usize, d: &[EdgeId]) -> Result<FaultSurvivors, FaultError> {
    if n < 4 {
        return Err(FaultError::Precondition("n must be at least 4".into()));
    }
    let mut d: Vec<EdgeId> = d.to_vec();
    d.sort_unstable();
    d.dedup();
    for e in &d {
        if e.v() >= n {
            return Err(FaultError::Precondition(format!(
                "{e} is not an edge of K_{n}"
            )));
        }
    }
    if d.len() >= n * (n - 1) / 2 {
        return Err(FaultError::Precondition(
            "cannot delete every vertex of the line graph".into(),
        ));
    }
    let lg = line_graph(&complete_graph(n));
    let d_idx: Vec<usize> = d.iter().map(|e| lg.vertex_of(*e).unwrap()).collect();
    if n == 4 || n % 2 == 1 {
        if d.len() > 1 {
            return Err(FaultError::Precondition(format!(
                "at most one deleted vertex is supported for n = {n}"
            )));
        }
    } else {
        if d.len() > n / 2 {
            return Err(FaultError::Precondition(format!(
                "at most n/2 = {} deleted vertices for even n",
                n / 2
            )));
        }
        if !d.is_empty() && !lg.line.is_induced_path(&d_idx) {
            return Err(FaultError::Precondition(
                "deleted vertices must induce a path in the line graph".into(),
            ));
        }
    }

    let family = lkn_family(n);
    let sigma = embed_into_spare(n, &d, &family.spare).ok_or_else(|| {
        FaultError::Infeasible(format!(
            "deletion {:?} does not embed into the spare {:?}",
            d.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            family.spare.iter().map(|e| e.to_string()).collect::<Vec<_>>()
        ))
    })?;
    let mut inverse = vec![0usize; n];
    for (v, &img) in sigma.iter().enumerate() {
        inverse[img] = v;
    }

    // Shift the family so its spare covers D, then drop D and rebuild.
    let (lp, lpmap) = lg.line.delete_vertices(&d_idx);
    let labels: Vec<EdgeId> = lpmap.iter().map(|&i| lg.labels[i]).collect();
    let surviving = EdgeLabeledLineGraph { line: lp, labels };
    let sets: Vec<Vec<usize>> = family
        .cds_sets
        .iter()
        .map(|set| {
            set.iter()
                .map(|e| {
                    let moved = e.map(&inverse);
                    surviving
                        .vertex_of(moved)
                        .expect("family edges avoid the deleted spare")
                })
                .collect()
        })
        .collect();
    let fam = cds_to_cists(&surviving.line, &CdsFamily::new(sets))?;
    Ok(FaultSurvivors {
        line: surviving,
        family: fam,
        sigma,
    })
}

/// Search for a vertex permutation σ of K_n with σ(D) ⊆ spare, trying
/// injective endpoint assignments in ascending order. Returns the
/// lexicographically first extension found.
fn embed_into_spare(n: usize, d: &[EdgeId], spare: &[EdgeId]) -> Option<Vec<usize>> {
    if d.is_empty() {
        return Some((0..n).collect());
    }
    if d.len() > spare.len() {
        return None;
    }
    let mut support: Vec<usize> = d.iter().flat_map(|e| [e.u(), e.v()]).collect();
    support.sort_unstable();
    support.dedup();
    let mut targets: Vec<usize> = spare.iter().flat_map(|e| [e.u(), e.v()]).collect();
    targets.sort_unstable();
    targets.dedup();
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !assign_support(d, spare, &support, &targets, 0, &mut assign, &mut used) {
        return None;
    }
    // Extend to a full permutation: unassigned vertices take the remaining
    // images in ascending order.
    let mut free: Vec<usize> = (0..n).filter(|&v| !used[v]).collect();
    free.reverse();
    let sigma: Vec<usize> = (0..n)
        .map(|v| {
            if assign[v] != usize::MAX {
                assign[v]
            } else {
                free.pop().unwrap()
            }
        })
        .collect();
    Some(sigma)
}

fn assign_support(
    d: &[EdgeId],
    spare: &[EdgeId],
    support: &[usize],
    targets: &[usize],
    pos: usize,
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if pos == support.len() {
        return true;
    }
    let v = support[pos];
    for &t in targets {
        if used[t] {
            continue;
        }
        assign[v] = t;
        used[t] = true;
        let consistent = d.iter().all(|e| {
            let (a, b) = e.endpoints();
            if assign[a] == usize::MAX || assign[b] == usize::MAX {
                return true;
            }
            spare.binary_search(&EdgeId::new(assign[a], assign[b])).is_ok()
        });
        if consistent && assign_support(d, spare, support, targets, pos + 1, assign, used) {
            return true;
        }
        used[t] = false;
        assign[v] = usize::MAX;
    }
    false
}
