//! Batch command-line surface for the CIST library.
//!
//! Exit codes: 0 on success (including a negative oracle answer), 1 when a
//! verification fails, a soundness alarm fires, or a fault-tolerant family
//! turns out infeasible, 2 on usage errors (bad flags, malformed files,
//! refused caps).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use linecist::graph::{EdgeId, Graph};
use linecist::io::{parse_edge_list, to_dot, write_edge_list};
use linecist::line::{line_graph, EdgeLabeledLineGraph};
use linecist::{
    check_theorems, cist_exists_bruteforce, cist_upper_bounds, connected_domination_number,
    connectivity_report, is_cist_family, is_valid_cds_family, lkn_cists, lkn_family,
    lkn_fault_survivors, line_cists_with_cap, tau, tau_prime, tree_packing, CdsFamily,
    CistFamily, FaultError,
};

#[derive(Parser)]
#[command(name = "linecist", version, about = "Completely independent spanning trees in line graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph and print it as an edge list.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Construct the line graph of an input graph.
    Linegraph(InputArg),
    /// Connectivity report: kappa, lambda, delta, lambda_{2,2}, super.
    Report(InputArg),
    /// Spanning tree packing number, with witness trees.
    Tau {
        #[command(flatten)]
        input: InputArg,
        /// Check feasibility of exactly k trees instead of maximizing.
        #[arg(long)]
        k: Option<usize>,
    },
    /// The star-subset parameter with its witness.
    TauPrime {
        #[command(flatten)]
        input: InputArg,
        /// Cap on the star-subset size (default: exact search).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Construct completely independent spanning trees.
    Cists {
        #[command(subcommand)]
        target: CistsTarget,
    },
    /// Verify a family against a graph.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Exact connected domination number.
    GammaC(InputArg),
    /// Upper bounds on the number of CISTs.
    Bounds(InputArg),
    /// Fault-tolerant families for line graphs of complete graphs.
    Fault {
        #[command(subcommand)]
        target: FaultTarget,
    },
    /// Brute-force existence oracles.
    Oracle {
        #[command(subcommand)]
        target: OracleTarget,
    },
    /// Evaluate the connectivity-based sufficient conditions and re-verify
    /// their promised constructions.
    CheckTheorems {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Complete graph K_n.
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// K_{4k} plus adjacent vertices u, v with degrees ell+1 and 2k-ell+1.
    HEll {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
    },
    /// The Petersen graph.
    Petersen,
    /// Erdős–Rényi G(n, p), optionally conditioned on connectivity.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        connected: bool,
    },
}

#[derive(Subcommand)]
enum CistsTarget {
    /// tau'(G) trees in the line graph of the input graph.
    Line {
        #[command(flatten)]
        input: InputArg,
        /// Cap on the star-subset search.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// The explicit optimal family for L(K_n).
    Lkn {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// Verify a CIST family (JSON) against a graph.
    Cist(VerifyArgs),
    /// Verify a CDS family (JSON) against a graph.
    Cds(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Edge-list file with the base graph.
    #[arg(long)]
    graph: PathBuf,
    /// Interpret the family over the line graph of the base graph.
    #[arg(long)]
    line: bool,
    /// JSON file with the family.
    #[arg(long)]
    family: PathBuf,
}

#[derive(Subcommand)]
enum FaultTarget {
    /// Delete line vertices of L(K_n) and return the surviving family.
    Lkn {
        #[arg(long)]
        n: usize,
        /// Deleted line vertices as base edges, e.g. "0-1,2-3".
        #[arg(long, default_value = "")]
        delete: String,
    },
}

#[derive(Subcommand)]
enum OracleTarget {
    /// Exhaustive CIST-partition search.
    CistPartition {
        #[command(flatten)]
        input: InputArg,
        /// Run on the line graph of the input instead of the input itself.
        #[arg(long)]
        line: bool,
        #[arg(long)]
        k: usize,
        /// Vertex-count cap for the exhaustive search.
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Args)]
struct InputArg {
    /// Edge-list file ('-' reads stdin).
    #[arg(short, long)]
    input: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = if path.as_os_str() == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    let parsed = parse_edge_list(&text).map_err(|e| e.to_string())?;
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    Ok(parsed.graph)
}

fn emit(cli_output: &Option<PathBuf>, content: String) -> Result<(), String> {
    let content = if content.ends_with('\n') {
        content
    } else {
        content + "\n"
    };
    match cli_output {
        Some(path) => fs::write(path, content).map_err(|e| e.to_string()),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serialization cannot fail")
}

const PALETTE: [&str; 10] = [
    "red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta", "gold", "gray",
];

fn family_dot(line: &EdgeLabeledLineGraph, fam: &CistFamily) -> String {
    let mut edge_colors = std::collections::BTreeMap::new();
    for (i, tree) in fam.trees.iter().enumerate() {
        for e in tree {
            edge_colors.insert(*e, PALETTE[i % PALETTE.len()].to_string());
        }
    }
    let labels: Vec<String> = line.labels.iter().map(|e| e.to_string()).collect();
    to_dot(&line.line, None, Some(&edge_colors), Some(&labels))
}

fn family_json(line: &EdgeLabeledLineGraph, fam: &CistFamily, extra: serde_json::Value) -> serde_json::Value {
    let trees: Vec<Vec<(EdgeId, EdgeId)>> = fam
        .trees
        .iter()
        .map(|t| {
            t.iter()
                .map(|e| (line.labels[e.u()], line.labels[e.v()]))
                .collect()
        })
        .collect();
    let internal: Vec<Vec<EdgeId>> = fam
        .internal_sets
        .iter()
        .map(|s| s.iter().map(|&v| line.labels[v]).collect())
        .collect();
    let mut out = json!({
        "lineN": line.n(),
        "k": fam.k(),
        "labels": line.labels,
        "trees": trees,
        "internalSets": internal,
    });
    if let serde_json::Value::Object(map) = &mut out {
        if let serde_json::Value::Object(extra) = extra {
            for (k, v) in extra {
                map.insert(k, v);
            }
        }
    }
    out
}

fn family_text(line: &EdgeLabeledLineGraph, fam: &CistFamily) -> String {
    let mut out = format!("{} trees on {} line vertices\n", fam.k(), line.n());
    for (i, tree) in fam.trees.iter().enumerate() {
        let edges: Vec<String> = tree
            .iter()
            .map(|e| format!("[{}|{}]", line.labels[e.u()], line.labels[e.v()]))
            .collect();
        out.push_str(&format!("tree {i}: {}\n", edges.join(" ")));
    }
    out
}

fn parse_edge_token(tok: &str) -> Result<EdgeId, String> {
    let parts: Vec<&str> = tok.split('-').collect();
    if parts.len() != 2 {
        return Err(format!("bad edge {tok:?}, expected like 0-1"));
    }
    let a: usize = parts[0].trim().parse().map_err(|_| format!("bad edge {tok:?}"))?;
    let b: usize = parts[1].trim().parse().map_err(|_| format!("bad edge {tok:?}"))?;
    if a == b {
        return Err(format!("self-loop {tok:?}"));
    }
    Ok(EdgeId::new(a, b))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let out = &cli.output;
    match cli.cmd {
        Cmd::Gen { kind } => {
            let g = match kind {
                GenKind::Complete { n } => {
                    if n == 0 {
                        return Err("n must be positive".into());
                    }
                    linecist::generators::complete_graph(n)
                }
                GenKind::HEll { k, ell } => {
                    if k == 0 || ell >= k {
                        return Err("need k >= 1 and 0 <= ell < k".into());
                    }
                    linecist::generators::h_ell(k, ell)
                }
                GenKind::Petersen => linecist::generators::petersen(),
                GenKind::Random {
                    n,
                    p,
                    seed,
                    connected,
                } => {
                    if !(0.0..=1.0).contains(&p) {
                        return Err("p must lie in [0,1]".into());
                    }
                    let mut rng = linecist::generators::seeded_rng(seed);
                    if connected {
                        linecist::generators::random_connected(n, p, &mut rng)
                    } else {
                        linecist::generators::gnp(n, p, &mut rng)
                    }
                }
            };
            let content = match cli.format {
                Format::Dot => to_dot(&g, None, None, None),
                _ => write_edge_list(&g),
            };
            emit(out, content)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Linegraph(input) => {
            let g = read_graph(&input.input)?;
            let lg = line_graph(&g);
            let content = match cli.format {
                Format::Dot => {
                    let labels: Vec<String> =
                        lg.labels.iter().map(|e| e.to_string()).collect();
                    to_dot(&lg.line, None, None, Some(&labels))
                }
                Format::Json => pretty(&json!({
                    "baseN": g.n(),
                    "lineN": lg.n(),
                    "labels": lg.labels,
                    "edges": lg.line.edge_vec(),
                })),
                Format::Text => {
                    let mut s = write_edge_list(&lg.line);
                    for (i, e) in lg.labels.iter().enumerate() {
                        s.push_str(&format!("# vertex {i} = edge {e}\n"));
                    }
                    s
                }
            };
            emit(out, content)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Report(input) => {
            let g = read_graph(&input.input)?;
            if g.n() < 2 {
                return Err("connectivity report needs at least two vertices".into());
            }
            let rep = connectivity_report(&g);
            let content = match cli.format {
                Format::Text => format!(
                    "kappa {}\nlambda {}\ndelta {}\nlambda22 {}\nsuperEdgeConnected {}\n",
                    rep.kappa,
                    rep.lambda,
                    rep.delta,
                    rep.lambda22
                        .map_or("undefined".to_string(), |v| v.to_string()),
                    rep.super_edge_connected
                ),
                _ => pretty(&rep),
            };
            emit(out, content)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Tau { input, k } => {
            let g = read_graph(&input.input)?;
            let content = match k {
                Some(k) => match tree_packing(&g, k) {
                    Some(fam) => pretty(&json!({"k": k, "feasible": true, "trees": fam.trees})),
                    None => pretty(&json!({"k": k, "feasible": false})),
                },
                None => {
                    let t = tau(&g);
                    let witness = tree_packing(&g, t).map(|f| f.trees);
                    pretty(&json!({"tau": t, "trees": witness}))
                }
            };
            emit(out, content)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::TauPrime { input, cap } => {
            let g = read_graph(&input.input)?;
            let r = tau_prime(&g, cap);
            let content = match cli.format {
                Format::Text => format!(
                    "tauPrime {} (witness S = {:?}, capBinding {})\n",
                    r.value, r.witness.s, r.cap_binding
                ),
                _ => pretty(&r),
            };
            emit(out, content)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Cists { target } => {
            let (line, family, extra) = match target {
                CistsTarget::Line { input, cap } => {
                    let g = read_graph(&input.input)?;
                    if !g.is_connected() || g.m() < 2 {
                        return Err("need a connected graph with at least two edges".into());
                    }
                    let built = line_cists_with_cap(&g, cap).map_err(|e| e.to_string())?;
                    let extra = json!({
                        "tauPrime": built.tau_prime,
                    });
                    (built.line, built.family, extra)
                }
                CistsTarget::Lkn { n } => {
                    if n < 4 {
                        return Err("the construction needs n >= 4".into());
                    }
                    let sets = lkn_family(n);
                    let built = lkn_cists(n).map_err(|e| e.to_string())?;
                    let extra = json!({
                        "n": n,
                        "cdsSets": sets.cds_sets,
                        "spare": sets.spare,
                    });
                    (built.line, built.family, extra)
                }
            };
            let content = match cli.format {
                Format::Dot => family_dot(&line, &family),
                Format::Json => pretty(&family_json(&line, &family, extra)),
                Format::Text => family_text(&line, &family),
            };
            emit(out, content)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { what } => {
            let (args, is_cist) = match what {
                VerifyWhat::Cist(a) => (a, true),
                VerifyWhat::Cds(a) => (a, false),
            };
            let g = read_graph(&args.graph)?;
            let text = fs::read_to_string(&args.family)
                .map_err(|e| format!("{}: {e}", args.family.display()))?;
            let report = if is_cist {
                let (target, fam) = load_cist_family(&g, args.line, &text)?;
                is_cist_family(&target, &fam)
            } else {
                let (target, fam) = load_cds_family(&g, args.line, &text)?;
                is_valid_cds_family(&target, &fam)
            };
            let content = match cli.format {
                Format::Text => report.summary(),
                _ => pretty(&report),
            };
            emit(out, content)?;
            Ok(if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Cmd::GammaC(input) => {
            let g = read_graph(&input.input)?;
            if !g.is_connected() || g.n() == 0 {
                return Err("gamma_c needs a nonempty connected graph".into());
            }
            let gc = connected_domination_number(&g);
            let content = match cli.format {
                Format::Text => format!("{gc}"),
                _ => pretty(&json!({"gammaC": gc})),
            };
            emit(out, content)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bounds(input) => {
            let g = read_graph(&input.input)?;
            if g.n() < 2 || !g.is_connected() {
                return Err("bounds need a connected graph".into());
            }
            let b = cist_upper_bounds(&g);
            emit(out, pretty(&b))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Fault { target } => {
            let FaultTarget::Lkn { n, delete } = target;
            let mut edges = Vec::new();
            for tok in delete.split(',').filter(|t| !t.trim().is_empty()) {
                edges.push(parse_edge_token(tok.trim())?);
            }
            match lkn_fault_survivors(n, &edges) {
                Ok(surv) => {
                    let extra = json!({
                        "n": n,
                        "deleted": edges,
                        "sigma": surv.sigma,
                    });
                    let content = match cli.format {
                        Format::Dot => family_dot(&surv.line, &surv.family),
                        Format::Json => pretty(&family_json(&surv.line, &surv.family, extra)),
                        Format::Text => family_text(&surv.line, &surv.family),
                    };
                    emit(out, content)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(FaultError::Precondition(msg)) => Err(msg),
                Err(e) => {
                    eprintln!("{e}");
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Cmd::Oracle { target } => {
            let OracleTarget::CistPartition { input, line, k, cap } = target;
            let g = read_graph(&input.input)?;
            let target_graph = if line { line_graph(&g).line } else { g };
            match cist_exists_bruteforce(&target_graph, k, cap) {
                Ok(witness) => {
                    let exists = witness.is_some();
                    let content = match cli.format {
                        Format::Text => format!("{exists}"),
                        _ => pretty(&json!({"k": k, "exists": exists, "witness": witness})),
                    };
                    emit(out, content)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Cmd::CheckTheorems { input, k } => {
            let g = read_graph(&input.input)?;
            if k < 2 {
                return Err("k must be at least 2".into());
            }
            if g.n() < 2 || !g.is_connected() {
                return Err("check-theorems needs a connected graph".into());
            }
            let rep = check_theorems(&g, k);
            let content = match cli.format {
                Format::Text => {
                    let mut s = String::new();
                    for c in &rep.checks {
                        let status = match &c.hypothesis {
                            linecist::theorems::HypothesisStatus::Satisfied(d) => {
                                format!("satisfied ({d})")
                            }
                            linecist::theorems::HypothesisStatus::NotSatisfied(d) => {
                                format!("not satisfied ({d})")
                            }
                            linecist::theorems::HypothesisStatus::Truncated(d) => {
                                format!("truncated ({d})")
                            }
                        };
                        s.push_str(&format!(
                            "{}: {} — {} case(s){}\n",
                            c.name,
                            status,
                            c.cases.len(),
                            if c.alarm { " ALARM" } else { "" }
                        ));
                    }
                    s.push_str(&format!("alarms: {}\n", rep.alarms));
                    s
                }
                _ => pretty(&rep),
            };
            emit(out, content)?;
            Ok(if rep.alarms == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

#[derive(Deserialize)]
struct PlainCistJson {
    trees: Vec<Vec<EdgeId>>,
    #[serde(rename = "internalSets")]
    internal_sets: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct LabeledCistJson {
    trees: Vec<Vec<(EdgeId, EdgeId)>>,
    #[serde(rename = "internalSets")]
    internal_sets: Vec<Vec<EdgeId>>,
    deleted: Option<Vec<EdgeId>>,
}

/// Resolve a CIST family file against the target graph. With `--line` the
/// family's trees are pairs of base-edge labels; otherwise plain vertex
/// pairs.
fn load_cist_family(
    g: &Graph,
    over_line: bool,
    text: &str,
) -> Result<(Graph, CistFamily), String> {
    if !over_line {
        let parsed: PlainCistJson =
            serde_json::from_str(text).map_err(|e| format!("family: {e}"))?;
        let fam = CistFamily {
            trees: parsed
                .trees
                .into_iter()
                .map(|mut t| {
                    t.sort_unstable();
                    t
                })
                .collect(),
            internal_sets: parsed.internal_sets,
        };
        return Ok((g.clone(), fam));
    }
    let parsed: LabeledCistJson =
        serde_json::from_str(text).map_err(|e| format!("family: {e}"))?;
    let lg = line_graph(g);
    let (target, labels) = match &parsed.deleted {
        Some(del) => {
            let idx: Vec<usize> = del
                .iter()
                .map(|e| {
                    lg.vertex_of(*e)
                        .ok_or_else(|| format!("deleted label {e} is not an edge of the graph"))
                })
                .collect::<Result<_, _>>()?;
            let (rest, map) = lg.line.delete_vertices(&idx);
            let labels: Vec<EdgeId> = map.iter().map(|&i| lg.labels[i]).collect();
            (rest, labels)
        }
        None => (lg.line.clone(), lg.labels.clone()),
    };
    let resolve = |e: &EdgeId| -> Result<usize, String> {
        labels
            .binary_search(e)
            .map_err(|_| format!("label {e} is not a surviving line vertex"))
    };
    let mut trees = Vec::new();
    for t in &parsed.trees {
        let mut tree = Vec::new();
        for (a, b) in t {
            tree.push(EdgeId::new(resolve(a)?, resolve(b)?));
        }
        tree.sort_unstable();
        trees.push(tree);
    }
    let mut internal_sets = Vec::new();
    for s in &parsed.internal_sets {
        let mut set = s.iter().map(&resolve).collect::<Result<Vec<_>, _>>()?;
        set.sort_unstable();
        internal_sets.push(set);
    }
    Ok((
        target,
        CistFamily {
            trees,
            internal_sets,
        },
    ))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CdsJson {
    Plain { sets: Vec<Vec<usize>> },
    Labeled { sets: Vec<Vec<EdgeId>> },
}

fn load_cds_family(
    g: &Graph,
    over_line: bool,
    text: &str,
) -> Result<(Graph, CdsFamily), String> {
    let parsed: CdsJson = serde_json::from_str(text).map_err(|e| format!("family: {e}"))?;
    match (over_line, parsed) {
        (false, CdsJson::Plain { sets }) => Ok((g.clone(), CdsFamily::new(sets))),
        (true, CdsJson::Labeled { sets }) => {
            let lg = line_graph(g);
            let mut resolved = Vec::new();
            for s in &sets {
                let set = s
                    .iter()
                    .map(|e| {
                        lg.vertex_of(*e)
                            .ok_or_else(|| format!("label {e} is not an edge of the graph"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                resolved.push(set);
            }
            Ok((lg.line, CdsFamily::new(resolved)))
        }
        (true, CdsJson::Plain { .. }) => {
            Err("expected base-edge labels (pairs) in the family with --line".into())
        }
        (false, CdsJson::Labeled { .. }) => {
            Err("family uses edge labels; pass --line".into())
        }
    }
}
