//! `twdl`: generate instances, extract t-sets, evaluate bounds and run the
//! verification suites.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or input
//! error, 3 a search budget ran out.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use twdl_core::bounds::{
    bound_dtset_lower, bound_dtset_upper, bound_kset_lower, bound_kset_upper, bound_outerplanar, bound_tree,
    bound_tset, BoundValue, Side,
};
use twdl_core::extraction::{extract_degree_d_tset, extract_tset};
use twdl_core::generators::{generate, Family, GenParams, Generated};
use twdl_core::graph::{parse_edge_list, vd_set, write_edge_list};
use twdl_core::interval::{interval_bounded_degree_mis, parse_interval_model, write_interval_model};
use twdl_core::oracles::Budget;
use twdl_core::verify::{oracle_report, run_suite, Status, Suite, VerifyConfig};
use twdl_core::{Error, Graph};

#[derive(Parser)]
#[command(name = "twdl", version, about = "Bounded-degree, bounded-treewidth induced subgraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance as an edge list or interval model.
    Gen(GenArgs),
    /// Extract a t-set (or a degree-2k independent set with --interval).
    Extract(ExtractArgs),
    /// Evaluate the closed-form bounds for the given parameters.
    Bounds(BoundsArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Run the exhaustive oracles on a graph file.
    Oracle(OracleArgs),
}

/// A degree bound; `inf` means unbounded.
#[derive(Debug, Clone, Copy)]
struct Degree(Option<usize>);

fn parse_degree(s: &str) -> Result<Degree, String> {
    match s {
        "inf" | "∞" => Ok(Degree(None)),
        _ => s
            .parse()
            .map(|d| Degree(Some(d)))
            .map_err(|_| format!("expected a non-negative integer or `inf`, got `{s}`")),
    }
}

#[derive(Args)]
struct GenArgs {
    /// path-power, kset, block, outerplanar, random-ktree, subdivided-tree
    /// or random-interval.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Base order for block and outerplanar; internal vertices for
    /// subdivided-tree.
    #[arg(long)]
    n0: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit the interval model of a path power instead of its graph.
    #[arg(long)]
    interval: bool,
    /// Write the instance here; otherwise it goes to stdout and the summary
    /// to stderr.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExtractArgs {
    /// Edge-list or interval-model file; `-` reads stdin.
    input: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    t: usize,
    /// Degree bound, or `inf`.
    #[arg(long, value_parser = parse_degree)]
    d: Option<Degree>,
    /// Treat the input as an interval model.
    #[arg(long)]
    interval: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Search nodes allowed per oracle call; 0 skips every check.
    #[arg(long)]
    budget: Option<u64>,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OracleArgs {
    /// Edge-list file; `-` reads stdin.
    input: PathBuf,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

fn read_input(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialisable") + "\n"
}

/// A failure with its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::BudgetExceeded(_)) { 3 } else { 2 };
        Failure(code, e.to_string())
    }
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure(2, s)
    }
}

fn cmd_gen(a: GenArgs) -> Result<u8, Failure> {
    let family: Family = a.family.parse()?;
    let params = GenParams {
        n: a.n,
        k: a.k,
        d: a.d,
        s: a.s,
        n0: a.n0,
        seed: a.seed,
    };
    let mut header = a.family.clone();
    for (name, v) in [("n", a.n), ("k", a.k), ("d", a.d), ("s", a.s), ("n0", a.n0)] {
        if let Some(v) = v {
            header += &format!(" {name}={v}");
        }
    }
    header += &format!(" seed={}", a.seed);
    let (text, summary) = match generate(family, &params, a.interval)? {
        Generated::Graph { graph, r } => {
            let vd = a.d.map(|d| vd_set(&graph, d).len());
            let summary = json!({
                "family": a.family,
                "n": graph.n(),
                "edges": graph.edge_count(),
                "r": r,
                "vd": vd,
            });
            (write_edge_list(&graph, &[header]), summary)
        }
        Generated::Intervals(m) => {
            let summary = json!({
                "family": a.family,
                "n": m.n(),
                "edges": m.intersection_graph().edge_count(),
                "clique_number": m.clique_number(),
            });
            (write_interval_model(&m, &[header]), summary)
        }
    };
    let summary_text = if a.json {
        to_json(&summary)
    } else {
        let fields = summary.as_object().expect("object");
        fields
            .iter()
            .filter(|(_, v)| !v.is_null())
            .map(|(k, v)| format!("{k}: {}\n", v.as_str().map(str::to_owned).unwrap_or_else(|| v.to_string())))
            .collect()
    };
    match a.out {
        Some(path) => {
            write_output(Some(&path), &text)?;
            print!("{summary_text}");
        }
        None => {
            print!("{text}");
            eprint!("{summary_text}");
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct BoundCheck {
    name: &'static str,
    #[serde(flatten)]
    bound: BoundValue,
    met: bool,
}

fn bound_check(name: &'static str, bound: BoundValue, size: usize) -> BoundCheck {
    let met = size as i64 >= bound.ceil();
    BoundCheck { name, bound, met }
}

fn cmd_extract(a: ExtractArgs) -> Result<u8, Failure> {
    let text = read_input(&a.input)?;
    let report = if a.interval {
        let m = parse_interval_model(&text)?;
        let g = m.intersection_graph();
        let s = interval_bounded_degree_mis(&m, a.k)?;
        let max_degree = s.vertices.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
        json!({
            "mode": "interval",
            "n": m.n(),
            "k": a.k,
            "size": s.vertices.len(),
            "max_degree": max_degree,
            "vertices": s.vertices,
            "swaps": s.swaps,
        })
    } else {
        let g: Graph = parse_edge_list(&text)?;
        let n = g.n();
        let d = a.d.and_then(|d| d.0);
        let (s, bounds) = match d {
            None => {
                let s = extract_tset(&g, a.k, a.t)?;
                let b = vec![bound_check("tset", bound_tset(n, a.k, a.t)?, s.vertices.len())];
                (s, b)
            }
            Some(d) => {
                let s = extract_degree_d_tset(&g, a.k, a.t, d)?;
                let vd = vd_set(&g, d).len();
                let guarantee = BoundValue {
                    value: bound_tset(vd, a.k, a.t)?.value,
                    applicable: true,
                    reason: Some(format!("(t+1)/(k+1) of the {vd} vertices of degree at most {d}")),
                };
                let mut b = vec![bound_check("coloring", guarantee, s.vertices.len())];
                if d >= 2 * a.k {
                    b.push(bound_check("dtset-lower", bound_dtset_lower(n, a.k, a.t, d)?, s.vertices.len()));
                }
                (s, b)
            }
        };
        json!({
            "mode": "graph",
            "n": n,
            "k": a.k,
            "t": a.t,
            "d": d,
            "size": s.vertices.len(),
            "vertices": s.vertices,
            "witness_order": s.witness_order,
            "witness_width": s.witness_width,
            "guaranteed": s.guaranteed,
            "bounds": bounds,
        })
    };
    let out = if a.json {
        to_json(&report)
    } else {
        let mut lines = format!("size: {}\nvertices: {}\n", report["size"], report["vertices"]);
        if let Some(md) = report.get("max_degree") {
            lines += &format!("max degree: {md}\nswaps: {}\n", report["swaps"]);
        }
        if let Some(bs) = report.get("bounds").and_then(|b| b.as_array()) {
            lines += &format!("witness width: {}\n", report["witness_width"]);
            for b in bs {
                lines += &format!(
                    "{} bound: {} ({})\n",
                    b["name"].as_str().unwrap_or(""),
                    b["value"].as_str().unwrap_or(""),
                    if b["met"].as_bool() == Some(true) { "met" } else { "not met" }
                );
            }
        }
        lines
    };
    write_output(a.out.as_deref(), &out)?;
    Ok(0)
}

fn cmd_bounds(a: BoundsArgs) -> Result<u8, Failure> {
    let n = a.n;
    let mut rows: Vec<(String, Result<BoundValue, Error>)> = Vec::new();
    if let Some(k) = a.k {
        if let Some(t) = a.t {
            rows.push(("tset".into(), bound_tset(n, k, t)));
        }
        if let Some(d) = a.d {
            rows.push(("kset-lower".into(), bound_kset_lower(n, k, d)));
            rows.push(("kset-upper".into(), bound_kset_upper(n, k, d)));
            if let Some(t) = a.t {
                rows.push(("dtset-lower".into(), bound_dtset_lower(n, k, t, d)));
                rows.push(("dtset-upper".into(), bound_dtset_upper(n, k, t, d)));
            }
        }
    }
    if let Some(d) = a.d {
        rows.push(("tree".into(), bound_tree(n, d)));
        rows.push(("outerplanar-lower".into(), bound_outerplanar(n, d, Side::Lower)));
        rows.push(("outerplanar-upper".into(), bound_outerplanar(n, d, Side::Upper)));
    }
    if rows.is_empty() {
        return Err(Failure(2, "nothing to evaluate: pass --k with --t and/or --d, or --d alone".into()));
    }
    let out = if a.json {
        let items: Vec<_> = rows
            .iter()
            .map(|(name, r)| match r {
                Ok(b) => json!({ "name": name, "value": b.value.to_string(), "applicable": b.applicable, "reason": b.reason }),
                Err(e) => json!({ "name": name, "error": e.to_string() }),
            })
            .collect();
        to_json(&json!({ "n": n, "k": a.k, "t": a.t, "d": a.d, "bounds": items }))
    } else {
        rows.iter()
            .map(|(name, r)| match r {
                Ok(b) if b.applicable => format!("{name}: {}\n", b.value),
                Ok(b) => format!("{name}: {} (n/a: {})\n", b.value, b.reason.as_deref().unwrap_or("")),
                Err(e) => format!("{name}: error: {e}\n"),
            })
            .collect()
    };
    write_output(None, &out)?;
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> Result<u8, Failure> {
    let suite: Suite = a.suite.parse()?;
    let cfg = VerifyConfig {
        seed: a.seed,
        budget: a.budget,
        ..VerifyConfig::default()
    };
    let report = run_suite(suite, &cfg)?;
    let json_text = to_json(&report);
    if let Some(path) = &a.out {
        write_output(Some(path), &json_text)?;
    }
    if a.json {
        print!("{json_text}");
    } else {
        let s = &report.summary;
        println!(
            "suite {}: {} passed, {} failed, {} skipped ({} ms)",
            report.suite, s.passed, s.failed, s.skipped, report.runtime_ms
        );
        for r in report.records.iter().filter(|r| r.status == Status::Fail) {
            println!(
                "FAIL {} {}: observed {} expected {} {}",
                r.check,
                r.instance,
                r.observed,
                r.expected,
                r.detail.as_deref().unwrap_or("")
            );
        }
    }
    Ok(report.exit_code() as u8)
}

fn cmd_oracle(a: OracleArgs) -> Result<u8, Failure> {
    let g = parse_edge_list(&read_input(&a.input)?)?;
    let report = oracle_report(&g, a.t, a.d, Budget(a.budget))?;
    let out = if a.json {
        to_json(&report)
    } else {
        let mut s = format!("alpha: {}\n", report.alpha.as_ref().map_or(0, |r| r.value));
        if let Some(r) = &report.alpha_t {
            s += &format!("alpha^t: {}\n", r.value);
        }
        if let Some(r) = &report.alpha_d_t {
            s += &format!("alpha^t_d: {}\n", r.value);
        }
        s
    };
    write_output(None, &out)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Extract(a) => cmd_extract(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Oracle(a) => cmd_oracle(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
