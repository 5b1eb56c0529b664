//! Star subsets and the parameter τ′(G).
//!
//! For a proper vertex subset S, f_S(v) counts the edges of v leaving ⟨S⟩,
//! and ζ(S) is the minimum of f_S(u)+f_S(v) over the edges of ⟨S⟩ (infinite
//! when ⟨S⟩ has no edges). τ′(G) maximizes min{τ(G−S), ζ(S)} over all star
//! subsets; it is at least τ(G) because S = ∅ is always admissible.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::next_combination;
use crate::graph::Graph;
use crate::packing::tau;

/// ζ(S): a positive integer or ∞. Serializes as a number or the string
/// `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Zeta {
    Finite(usize),
    Infinite,
}

impl Zeta {
    /// min(self, t) collapsed to an integer.
    pub fn min_with(&self, t: usize) -> usize {
        match self {
            Zeta::Finite(z) => (*z).min(t),
            Zeta::Infinite => t,
        }
    }
}

impl Serialize for Zeta {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Zeta::Finite(z) => serializer.serialize_u64(*z as u64),
            Zeta::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Zeta {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(z) => Ok(Zeta::Finite(z as usize)),
            Raw::Str(s) if s == "inf" => Ok(Zeta::Infinite),
            Raw::Str(s) => Err(D::Error::custom(format!("expected number or \"inf\", got {s:?}"))),
        }
    }
}

/// f_S(v) = deg_G(v) − deg_{⟨S⟩}(v). Panics when v ∉ S or S = V(G).
pub fn f_s(g: &Graph, s: &[usize], v: usize) -> usize {
    assert!(s.contains(&v), "f_S({v}) requires v ∈ S");
    assert!(s.len() < g.n(), "S must be a proper subset");
    g.neighbors(v).iter().filter(|w| !s.contains(w)).count()
}

/// ζ(S) as defined above. S = ∅ or an edgeless ⟨S⟩ gives ∞.
pub fn zeta(g: &Graph, s: &[usize]) -> Zeta {
    let mut best: Option<usize> = None;
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if g.has_edge(u, v) {
                let sum = f_s(g, s, u) + f_s(g, s, v);
                best = Some(best.map_or(sum, |b: usize| b.min(sum)));
            }
        }
    }
    match best {
        Some(z) => Zeta::Finite(z),
        None => Zeta::Infinite,
    }
}

/// Whether every component of ⟨S⟩ is a star (a tree with at most one vertex
/// of degree ≥ 2). The empty set qualifies.
pub fn is_star_subset(g: &Graph, s: &[usize]) -> bool {
    if s.is_empty() {
        return true;
    }
    let (sub, _) = g.induced_subgraph(s);
    for comp in sub.components() {
        let edges = sub.edge_count_within(&comp);
        if edges != comp.len() - 1 {
            return false; // not a tree
        }
        let centers = comp
            .iter()
            .filter(|&&v| {
                sub.neighbors(v)
                    .iter()
                    .filter(|w| comp.binary_search(w).is_ok())
                    .count()
                    >= 2
            })
            .count();
        if centers > 1 {
            return false;
        }
    }
    true
}

/// The witness of a τ′ evaluation: the star subset, its ζ, τ(G−S), and the
/// achieved min.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StarSubsetWitness {
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub zeta: Zeta,
    #[serde(rename = "tauRemainder")]
    pub tau_remainder: usize,
    pub value: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TauPrimeResult {
    pub value: usize,
    pub witness: StarSubsetWitness,
    /// True when the size cap truncated the search and the reported value
    /// could not be certified optimal by the δ(L(G)) bound.
    #[serde(rename = "capBinding")]
    pub cap_binding: bool,
}

/// τ′(G), exact by default: enumerate star subsets by increasing size and
/// lexicographically within a size, pruning with min(ζ(S), δ- and density
/// bounds on τ(G−S)). A size cap turns the result into a lower bound; the
/// search also stops early once the certified upper bound δ(L(G)) is met.
/// The witness is the first optimum in enumeration order, i.e. the
/// (size, lexicographic)-smallest one.
pub fn tau_prime(g: &Graph, size_cap: Option<usize>) -> TauPrimeResult {
    let n = g.n();
    let full_cap = n.saturating_sub(1);
    let cap = size_cap.map_or(full_cap, |c| c.min(full_cap));

    // τ′(G) ≤ δ(L(G)) for connected G with at least two edges: the cheapest
    // line vertex caps min{τ(G−S), ζ(S)} for every S.
    let certified_upper = if g.is_connected() && g.m() >= 2 {
        g.edges()
            .map(|e| g.degree(e.u()) + g.degree(e.v()) - 2)
            .min()
    } else {
        None
    };

    let tau_full = tau(g);
    let mut best = StarSubsetWitness {
        s: Vec::new(),
        zeta: Zeta::Infinite,
        tau_remainder: tau_full,
        value: tau_full,
    };
    let mut certified = certified_upper == Some(best.value);

    'sizes: for size in 1..=cap {
        if certified {
            break;
        }
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if evaluate_subset(g, &subset, &mut best) && certified_upper == Some(best.value) {
                certified = true;
                break 'sizes;
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }

    let truncated = cap < full_cap;
    TauPrimeResult {
        value: best.value,
        witness: best,
        cap_binding: truncated && !certified,
    }
}

/// Evaluate one candidate subset; returns true when it improved the best.
fn evaluate_subset(g: &Graph, s: &[usize], best: &mut StarSubsetWitness) -> bool {
    if !is_star_subset(g, s) {
        return false;
    }
    let z = zeta(g, s);
    let (rest, _) = g.delete_vertices(s);
    let tau_ub = if rest.n() < 2 || !rest.is_connected() {
        0
    } else {
        rest.min_degree().min(rest.m() / (rest.n() - 1))
    };
    let potential = z.min_with(tau_ub);
    if potential <= best.value {
        return false;
    }
    let t = tau(&rest);
    let value = z.min_with(t);
    if value > best.value {
        *best = StarSubsetWitness {
            s: s.to_vec(),
            zeta: z,
            tau_remainder: t,
            value,
        };
        true
    } else {
        false
    }
}
