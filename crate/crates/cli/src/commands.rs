use std::fs;
use std::path::{Path, PathBuf};

use edge_expand::connectivity::{edge_connectivity, enumerate_cuts};
use edge_expand::expansion::{
    certify, contracted_metric, expansion_profile, make_partition, Conclusions, Partition,
    TheoremChecker, TheoremReport, Verdict,
};
use edge_expand::format::{
    parse_edge_list, parse_vertex_list, write_edge_list, write_vertex_list, LabeledGraph,
};
use edge_expand::generators::{
    build_gadget, instance_search, measure, GadgetSpec, InstanceStats, SearchOutcome, TargetStats,
    FIGURE_IDS,
};
use edge_expand::{Cut, Graph, VertexSet};
use serde_json::{json, Value};

use crate::error::{with_context, CliError};
use crate::report::{dist, Report};

/// A finished command: its report and the exit code to leave with.
pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome {
            report,
            exit_code: 0,
        }
    }
}

pub const EXIT_NOT_CERTIFIED: i32 = 1;
pub const EXIT_VIOLATION: i32 = 4;
pub const EXIT_NOT_FOUND: i32 = 5;

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn text(bytes: &[u8], path: &Path) -> Result<String, CliError> {
    String::from_utf8(bytes.to_vec())
        .map_err(|_| CliError::Input(format!("{}: not valid UTF-8", path.display())))
}

fn load_graph(path: &Path, report: &mut Report) -> Result<LabeledGraph, CliError> {
    let bytes = read(path)?;
    report.input("graph", &bytes);
    parse_edge_list(&text(&bytes, path)?).map_err(with_context(&path.display().to_string()))
}

fn load_set(
    path: &Path,
    name: &str,
    lg: &LabeledGraph,
    report: &mut Report,
) -> Result<VertexSet, CliError> {
    let bytes = read(path)?;
    report.input(name, &bytes);
    parse_vertex_list(&text(&bytes, path)?, lg).map_err(with_context(&path.display().to_string()))
}

fn load_partition(
    graph: &Path,
    partition: &Path,
    report: &mut Report,
) -> Result<(LabeledGraph, Partition), CliError> {
    let lg = load_graph(graph, report)?;
    let v2 = load_set(partition, "partition", &lg, report)?;
    let p =
        make_partition(&lg.graph, v2).map_err(with_context(&partition.display().to_string()))?;
    Ok((lg, p))
}

fn labels(lg: &LabeledGraph, set: &VertexSet) -> Value {
    json!(lg.labels_of(set))
}

fn cut_json(lg: &LabeledGraph, cut: &Cut) -> Value {
    let edges: Vec<[u64; 2]> = cut
        .crossing_edges()
        .iter()
        .map(|e| {
            let (a, b) = (lg.label(e.u()), lg.label(e.v()));
            [a.min(b), a.max(b)]
        })
        .collect();
    json!({
        "s": labels(lg, cut.s_side()),
        "size": cut.size(),
        "crossing_edges": edges,
    })
}

pub fn connectivity(graph: &Path) -> Result<Outcome, CliError> {
    let mut report = Report::new("connectivity");
    let lg = load_graph(graph, &mut report)?;
    let r = edge_connectivity(&lg.graph)?;
    report.result = json!({
        "n": lg.graph.n(),
        "m": lg.graph.edge_count(),
        "kprime": r.kprime,
        "witness": cut_json(&lg, &r.witness),
    });
    Ok(Outcome::ok(report))
}

pub fn certify_cmd(graph: &Path, partition: &Path, k: usize) -> Result<Outcome, CliError> {
    let mut report = Report::new("certify");
    let (lg, p) = load_partition(graph, partition, &mut report)?;
    let c = certify(&lg.graph, &p, k)?;
    let certified = c.verdict == Verdict::Certified;
    report.result = json!({
        "k": c.k,
        "verdict": if certified { "certified" } else { "not_certified" },
        "hypotheses": {
            "min_degree_at_least_k": c.hypotheses.min_degree,
            "g2_k_edge_connected": c.hypotheses.g2_connected,
            "contracted_diameter_at_most_2": c.hypotheses.contracted_diameter,
        },
        "alternatives": {
            "phi_at_least_k": c.alternatives.phi_at_least_k,
            "boundary1_at_least_k": c.alternatives.boundary_at_least_k,
            "v1_equals_boundary1": c.alternatives.all_boundary,
        },
        "reasons": c.reasons,
        "measured": {
            "min_degree": c.min_degree,
            "g2_kprime": c.g2_kprime,
            "contracted_diameter": dist(c.contracted_diameter),
            "phi": c.phi,
            "boundary1_size": c.boundary1_size,
            "v1_size": c.v1_size,
        },
    });
    Ok(Outcome {
        report,
        exit_code: if certified { 0 } else { EXIT_NOT_CERTIFIED },
    })
}

fn conclusions_json(lg: &LabeledGraph, c: &Conclusions) -> Value {
    json!({
        "conclusion1": c.conclusion1,
        "far_vertex": c.far_vertex.map(|v| lg.label(v)),
        "conclusion2": c.conclusion2,
        "near_violator": c.near_violator.map(|v| lg.label(v)),
        "conclusion3": c.conclusion3,
        "chain": {
            "s_cap_v1": c.chain.s_cap_v1,
            "cut": c.chain.cut,
            "k": c.chain.k,
            "sbar": c.chain.sbar,
        },
        "conclusion4": c.conclusion4,
        "s_within_boundary2": c.s_within_boundary2,
        "sbar_covers_interior2": c.sbar_covers_interior2,
        "conclusion5": c.conclusion5,
        "phi": c.phi,
        "chain_with_global_k": c.chain_with_global_k,
        "violated": c.violated(),
    })
}

fn theorem_json(lg: &LabeledGraph, s: &VertexSet, r: &TheoremReport) -> Value {
    json!({
        "s": labels(lg, s),
        "applicable": r.applicable,
        "cut_size": r.cut_size,
        "k": r.k,
        "k_global": r.k_global,
        "contracted_diameter": dist(r.contracted_diameter),
        "conclusions": r.conclusions.as_ref().map(|c| conclusions_json(lg, c)),
    })
}

pub enum CutSource {
    AllCuts,
    SFile(PathBuf),
}

pub fn verify_theorem_cmd(
    graph: &Path,
    partition: &Path,
    source: CutSource,
    include_inapplicable: bool,
    max_enum_n: usize,
) -> Result<Outcome, CliError> {
    let mut report = Report::new("verify-theorem");
    let (lg, p) = load_partition(graph, partition, &mut report)?;
    let g = &lg.graph;
    let checker = TheoremChecker::new(g, &p)?;
    let mut rows = Vec::new();
    let (mut checked, mut applicable, mut violations, mut global_chain) =
        (0usize, 0usize, 0usize, 0usize);
    let mut record = |s: &VertexSet, r: TheoremReport| {
        checked += 1;
        if r.applicable {
            applicable += 1;
        }
        if r.is_violation() {
            violations += 1;
        }
        if r.conclusions
            .as_ref()
            .is_some_and(|c| c.chain_with_global_k)
        {
            global_chain += 1;
        }
        if r.applicable || include_inapplicable {
            rows.push(theorem_json(&lg, s, &r));
        }
    };
    let mode = match source {
        CutSource::AllCuts => {
            for cut in enumerate_cuts(g, Some(p.v2()), max_enum_n)? {
                let r = checker.check_cut(&cut)?;
                record(cut.s_side(), r);
            }
            "all-cuts"
        }
        CutSource::SFile(path) => {
            let s = load_set(&path, "s", &lg, &mut report)?;
            let r = checker
                .check(&s)
                .map_err(with_context(&path.display().to_string()))?;
            record(&s, r);
            "s-file"
        }
    };
    report.result = json!({
        "mode": mode,
        "reports": rows,
        "summary": {
            "cuts_checked": checked,
            "applicable": applicable,
            "violations": violations,
            "chain_with_global_k": global_chain,
        },
    });
    Ok(Outcome {
        exit_code: if violations > 0 { EXIT_VIOLATION } else { 0 },
        report,
    })
}

fn profile_json(lg: &LabeledGraph, p: &Partition) -> Result<Value, CliError> {
    let g = &lg.graph;
    let prof = expansion_profile(g, p)?;
    let metric = contracted_metric(g, p)?;
    Ok(json!({
        "v1": labels(lg, p.v1()),
        "v2": labels(lg, p.v2()),
        "boundary1": labels(lg, &prof.boundary1),
        "boundary2": labels(lg, &prof.boundary2),
        "interior2": labels(lg, &prof.interior2),
        "phi": prof.phi,
        "k_min_v1": prof.k_min_v1,
        "k_min_all": prof.k_min_all,
        "contracted_diameter": dist(metric.diameter()),
    }))
}

pub fn profile_cmd(graph: &Path, partition: &Path) -> Result<Outcome, CliError> {
    let mut report = Report::new("profile");
    let (lg, p) = load_partition(graph, partition, &mut report)?;
    report.result = profile_json(&lg, &p)?;
    Ok(Outcome::ok(report))
}

pub enum GenSource {
    Spec(PathBuf),
    Target(String),
}

pub const GRAPH_FILE: &str = "graph.edges";
pub const PARTITION_FILE: &str = "partition.v2";
pub const S_FILE: &str = "cut.s";

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), CliError> {
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn stats_json(stats: &InstanceStats) -> Value {
    json!({
        "cut_size": stats.cut_size,
        "k": stats.k,
        "s_cap_v1_size": stats.s_cap_v1_size,
        "sbar_size": stats.sbar_size,
        "phi": stats.phi,
        "boundary1_size": stats.boundary1_size,
        "s_cap_v1_is_boundary2": stats.s_cap_v1_is_boundary2,
        "v1_is_boundary1": stats.v1_is_boundary1,
        "contracted_diameter": dist(stats.contracted_diameter),
        "valid": stats.valid,
    })
}

fn emit(
    dir: &Path,
    g: &Graph,
    p: &Partition,
    s: Option<&VertexSet>,
) -> Result<Vec<&'static str>, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    write_file(dir, GRAPH_FILE, &write_edge_list(g))?;
    write_file(dir, PARTITION_FILE, &write_vertex_list(p.v2()))?;
    let mut files = vec![GRAPH_FILE, PARTITION_FILE];
    if let Some(s) = s {
        write_file(dir, S_FILE, &write_vertex_list(s))?;
        files.push(S_FILE);
    }
    Ok(files)
}

pub fn gen_cmd(
    source: GenSource,
    seed: u64,
    budget: usize,
    out: &Path,
) -> Result<Outcome, CliError> {
    let mut report = Report::new("gen");
    match source {
        GenSource::Spec(path) => {
            let bytes = read(&path)?;
            report.input("spec", &bytes);
            let ctx = path.display().to_string();
            let spec: GadgetSpec = text(&bytes, &path)?.parse().map_err(with_context(&ctx))?;
            let (g, p) = build_gadget(&spec).map_err(with_context(&ctx))?;
            let files = emit(out, &g, &p, None)?;
            let lg = LabeledGraph::identity(g);
            report.result = json!({
                "source": "spec",
                "seed": seed,
                "files": files,
                "n": lg.graph.n(),
                "m": lg.graph.edge_count(),
                "profile": profile_json(&lg, &p)?,
            });
            Ok(Outcome::ok(report))
        }
        GenSource::Target(id) => {
            let target = TargetStats::figure(&id).ok_or_else(|| {
                CliError::Input(format!(
                    "unknown target {id:?}; expected one of {FIGURE_IDS:?}"
                ))
            })?;
            match instance_search(&target, budget, seed) {
                SearchOutcome::Found(found) => {
                    let files = emit(out, &found.graph, &found.partition, Some(&found.s))?;
                    let (stats, _) = measure(
                        &found.graph,
                        &found.partition,
                        &found.s,
                        target.kind,
                        target.k,
                    )?;
                    report.result = json!({
                        "source": "target",
                        "target": id,
                        "seed": seed,
                        "budget": budget,
                        "evaluations": found.evaluations,
                        "files": files,
                        "n": found.graph.n(),
                        "m": found.graph.edge_count(),
                        "stats": stats_json(&stats),
                        "matches_target": target.matches(&stats),
                    });
                    Ok(Outcome::ok(report))
                }
                SearchOutcome::NotFound { evaluations } => {
                    report.result = json!({
                        "source": "target",
                        "target": id,
                        "seed": seed,
                        "budget": budget,
                        "evaluations": evaluations,
                        "found": false,
                    });
                    Ok(Outcome {
                        report,
                        exit_code: EXIT_NOT_FOUND,
                    })
                }
            }
        }
    }
}
