//! Theorem-checking suites with machine-readable reports.
//!
//! Every record names its check, a descriptor from which the instance can be
//! regenerated, the expected value, the observed value and a status. Records
//! are sorted before emission so a report depends only on the seed and the
//! configuration, apart from `runtime_ms`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    self, bound_dtset_lower, bound_kset_lower, bound_kset_upper, bound_outerplanar, bound_tree,
    bound_tset, bound_vd_lower, is_alpha_d_extremal_structure, ktree_average_degree, Side,
};
use crate::error::{invalid, Error, Result};
use crate::extraction::{extract_degree_d_tset, extract_tset};
use crate::generators::{
    self, enumerate_trees, interval_model, kset_extremal, outerplanar_extremal, path_power, random_ktree,
    IntervalKind,
};
use crate::graph::{check_clique_degree_theorem, treewidth_at_most, treewidth_exact, vd_set, Graph};
use crate::interval::{interval_bounded_degree_mis, swap_to_bounded_degree};
use crate::oracles::{
    oracle_alpha, oracle_alpha_budgeted, oracle_alpha_d_t_budgeted, oracle_alpha_t_budgeted, Budget,
};

/// Report format version.
pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable capping the worker pool.
pub const WORKERS_ENV: &str = "TWDL_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "==")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
}

impl Relation {
    fn holds(self, observed: Rational64, expected: Rational64) -> bool {
        match self {
            Relation::Eq => observed == expected,
            Relation::Ge => observed >= expected,
            Relation::Le => observed <= expected,
        }
    }
}

/// One checked instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check: &'static str,
    /// Enough to regenerate the instance, including its seed when random.
    pub instance: String,
    pub expected: String,
    pub relation: Relation,
    pub observed: String,
    pub status: Status,
    pub detail: Option<String>,
}

impl Record {
    fn compare(check: &'static str, instance: String, observed: Rational64, relation: Relation, expected: Rational64) -> Self {
        Record {
            check,
            instance,
            expected: expected.to_string(),
            relation,
            observed: observed.to_string(),
            status: if relation.holds(observed, expected) { Status::Pass } else { Status::Fail },
            detail: None,
        }
    }

    fn count(check: &'static str, instance: String, observed: usize, relation: Relation, expected: Rational64) -> Self {
        Self::compare(check, instance, int(observed), relation, expected)
    }

    fn truth(check: &'static str, instance: String, ok: bool, detail: Option<String>) -> Self {
        Record {
            check,
            instance,
            expected: "true".into(),
            relation: Relation::Eq,
            observed: ok.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }

    fn from_error(check: &'static str, instance: String, err: Error) -> Self {
        let status = match err {
            Error::BudgetExceeded(_) => Status::Skipped,
            _ => Status::Fail,
        };
        Record {
            check,
            instance,
            expected: "-".into(),
            relation: Relation::Eq,
            observed: "-".into(),
            status,
            detail: Some(err.to_string()),
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

fn int(v: usize) -> Rational64 {
    Rational64::from_integer(v as i64)
}

/// Runs `f`, turning an error into a single failed or skipped record.
fn guarded(check: &'static str, instance: String, f: impl FnOnce(&str) -> Result<Vec<Record>>) -> Vec<Record> {
    f(&instance).unwrap_or_else(|e| vec![Record::from_error(check, instance.clone(), e)])
}

/// Individual checks. Each suite is a list of these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `α^t(P_n^k) = (t+1)n/(k+1)` and the extraction meets it.
    TsetEquality,
    /// Degree counts of the k-set construction meet the upper bound exactly.
    KsetCount,
    /// `|V_d|` of random k-trees against the degree-counting bound.
    SizeVd,
    /// Clique degree sequences of random k-trees.
    CliqueDegrees,
    /// `tw(G[V_ℓ]) ≤ ℓ − k` on random k-trees, plus the two counterexamples.
    BoundedTreewidth,
    /// Extraction and oracle against the degree-bounded t-set lower bound.
    DtsetLower,
    /// Oracle on the block construction against its counting bound.
    DtsetUpper,
    /// Exhaustive tree sweep for the extremal characterisation.
    Trees,
    /// The outerplanar construction against both outerplanar bounds.
    Outerplanar,
    /// Degree-`2k` maximum independent sets in interval graphs.
    Interval,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::TsetEquality,
        Check::KsetCount,
        Check::SizeVd,
        Check::CliqueDegrees,
        Check::BoundedTreewidth,
        Check::DtsetLower,
        Check::DtsetUpper,
        Check::Trees,
        Check::Outerplanar,
        Check::Interval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::TsetEquality => "tset-equality",
            Check::KsetCount => "kset-count",
            Check::SizeVd => "size-vd",
            Check::CliqueDegrees => "clique-degrees",
            Check::BoundedTreewidth => "bounded-treewidth",
            Check::DtsetLower => "dtset-lower",
            Check::DtsetUpper => "dtset-upper",
            Check::Trees => "trees",
            Check::Outerplanar => "outerplanar",
            Check::Interval => "interval",
        }
    }

    /// Runs the check on the current rayon pool.
    pub fn run(self, cfg: &VerifyConfig) -> Vec<Record> {
        if cfg.budget == Some(0) {
            return vec![Record {
                check: self.name(),
                instance: "all".into(),
                expected: "-".into(),
                relation: Relation::Eq,
                observed: "-".into(),
                status: Status::Skipped,
                detail: Some("budget is zero".into()),
            }];
        }
        match self {
            Check::TsetEquality => tset_equality(cfg),
            Check::KsetCount => kset_count(),
            Check::SizeVd => size_vd(cfg),
            Check::CliqueDegrees => clique_degrees(cfg),
            Check::BoundedTreewidth => bounded_treewidth(cfg),
            Check::DtsetLower => dtset_lower(cfg),
            Check::DtsetUpper => dtset_upper(cfg),
            Check::Trees => trees(cfg),
            Check::Outerplanar => outerplanar(cfg),
            Check::Interval => interval(cfg),
        }
    }
}

/// Named groups of checks selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Tset,
    Kset,
    CliqueDegrees,
    BoundedTreewidth,
    Dtset,
    Trees,
    Outerplanar,
    Interval,
    All,
}

impl Suite {
    pub fn checks(self) -> Vec<Check> {
        match self {
            Suite::Tset => vec![Check::TsetEquality],
            Suite::Kset => vec![Check::KsetCount, Check::SizeVd],
            Suite::CliqueDegrees => vec![Check::CliqueDegrees],
            Suite::BoundedTreewidth => vec![Check::BoundedTreewidth],
            Suite::Dtset => vec![Check::DtsetLower, Check::DtsetUpper],
            Suite::Trees => vec![Check::Trees],
            Suite::Outerplanar => vec![Check::Outerplanar],
            Suite::Interval => vec![Check::Interval],
            Suite::All => Check::ALL.to_vec(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tset => "tset",
            Suite::Kset => "kset",
            Suite::CliqueDegrees => "clique-degrees",
            Suite::BoundedTreewidth => "bounded-treewidth",
            Suite::Dtset => "dtset",
            Suite::Trees => "trees",
            Suite::Outerplanar => "outerplanar",
            Suite::Interval => "interval",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Suite::Tset,
            Suite::Kset,
            Suite::CliqueDegrees,
            Suite::BoundedTreewidth,
            Suite::Dtset,
            Suite::Trees,
            Suite::Outerplanar,
            Suite::Interval,
            Suite::All,
        ]
        .into_iter()
        .find(|x| x.name() == s)
        .ok_or_else(|| invalid(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Suite parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Search-node cap per oracle call; zero skips every check.
    pub budget: Option<u64>,
    /// Worker threads; `None` reads [`WORKERS_ENV`] and falls back to rayon's
    /// default.
    pub workers: Option<usize>,
    /// Scales the number of random instances (1 = full size).
    pub sample_divisor: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 1,
            budget: None,
            workers: None,
            sample_divisor: 1,
        }
    }
}

impl VerifyConfig {
    fn samples(&self, full: usize) -> usize {
        (full / self.sample_divisor.max(1)).max(1)
    }

    fn oracle_budget(&self) -> Budget {
        Budget(self.budget)
    }

    /// Seed of the `index`-th random instance of `check`.
    fn instance_seed(&self, check: Check, index: usize) -> u64 {
        let mut z = self
            .seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add((check as u64) << 40)
            .wrapping_add(index as u64);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn worker_count(&self) -> Option<usize> {
        self.workers.or_else(|| {
            std::env::var(WORKERS_ENV)
                .ok()
                .and_then(|v| v.parse().ok())
                .filter(|&w| w > 0)
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Output of [`run_suite`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub suite: String,
    pub seed: u64,
    pub budget: Option<u64>,
    pub summary: Summary,
    pub records: Vec<Record>,
    pub runtime_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.skipped == 0
    }

    /// 0 when every record passed, 1 on any failure, 3 when records were
    /// skipped for lack of budget.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            1
        } else if self.summary.skipped > 0 {
            3
        } else {
            0
        }
    }
}

/// Runs `checks` on a worker pool sized by `cfg`.
pub fn run_checks(name: &str, checks: &[Check], cfg: &VerifyConfig) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cfg.worker_count() {
        builder = builder.num_threads(w);
    }
    let pool = builder
        .build()
        .map_err(|e| invalid(format!("cannot start worker pool: {e}")))?;
    let mut records: Vec<Record> = pool.install(|| checks.iter().flat_map(|c| c.run(cfg)).collect());
    records.sort_by(|a, b| (a.check, &a.instance, &a.expected).cmp(&(b.check, &b.instance, &b.expected)));
    let mut summary = Summary::default();
    for r in &records {
        match r.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Ok(VerifyReport {
        schema: SCHEMA_VERSION,
        suite: name.to_string(),
        seed: cfg.seed,
        budget: cfg.budget,
        summary,
        records,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<VerifyReport> {
    run_checks(suite.name(), &suite.checks(), cfg)
}

/// Random k-tree instances `(k, n, seed)` with `n` drawn uniformly from
/// `lo..=hi` by the instance seed.
fn ktree_instances(cfg: &VerifyConfig, check: Check, ks: &[usize], per_k: usize, range: impl Fn(usize) -> (usize, usize)) -> Vec<(usize, usize, u64)> {
    let per_k = cfg.samples(per_k);
    ks.iter()
        .flat_map(|&k| {
            let (lo, hi) = range(k);
            (0..per_k).map(move |i| (k, lo, hi, i))
        })
        .map(|(k, lo, hi, i)| {
            let seed = cfg.instance_seed(check, k * 1_000_000 + i);
            (k, lo + (seed % (hi - lo + 1) as u64) as usize, seed)
        })
        .collect()
}

fn ktree_descriptor(k: usize, n: usize, seed: u64) -> String {
    format!("random-ktree k={k} n={n} seed={seed}")
}

fn tset_equality(cfg: &VerifyConfig) -> Vec<Record> {
    let cases: Vec<(usize, usize, usize)> = (1..=3)
        .flat_map(|k| (k + 1..=15).filter(move |n| n % (k + 1) == 0).map(move |n| (k, n)))
        .flat_map(|(k, n)| (0..=k).map(move |t| (k, n, t)))
        .collect();
    cases
        .into_par_iter()
        .flat_map_iter(|(k, n, t)| {
            let id = format!("path-power n={n} k={k} t={t}");
            guarded("tset-equality", id, |id| {
                let g = path_power(n, k)?;
                let bound = bound_tset(n, k, t)?.value;
                let oracle = oracle_alpha_t_budgeted(&g, t, cfg.oracle_budget())?;
                let extracted = extract_tset(&g, k, t)?;
                Ok(vec![
                    Record::count("tset-equality", format!("{id} oracle"), oracle.value, Relation::Eq, bound),
                    Record::count("tset-equality", format!("{id} extract"), extracted.vertices.len(), Relation::Ge, bound)
                        .with_detail(format!("witness width {}", extracted.witness_width)),
                ])
            })
        })
        .collect()
}

fn kset_count() -> Vec<Record> {
    let mut out = Vec::new();
    for k in 1..=3usize {
        for d in 2 * k - 1..=2 * k + 3 {
            for s in 0..=4usize {
                let id = format!("kset k={k} d={d} s={s}");
                out.extend(guarded("kset-count", id, |id| {
                    let g = kset_extremal(k, d, s)?;
                    let n = g.n();
                    let r = generators::kset_r(k, d)?;
                    let vd = vd_set(&g, d).len();
                    let upper = bound_kset_upper(n, k, d)?;
                    let lower = bound_kset_lower(n, k, d)?;
                    let gap = upper.value - lower.value;
                    let expected_gap = int(k * (k - 1)) / int(d + 1 - k);
                    Ok(vec![
                        Record::count("kset-count", format!("{id} |V_d| vs rs+2k"), vd, Relation::Eq, int(r * s + 2 * k)),
                        Record::count("kset-count", format!("{id} |V_d| vs upper"), vd, Relation::Eq, upper.value)
                            .with_detail(format!("n = {n}, applicable = {}", upper.applicable)),
                        Record::compare("kset-count", format!("{id} gap"), gap, Relation::Eq, expected_gap),
                        Record::compare("kset-count", format!("{id} gap <= k-1"), gap, Relation::Le, int(k - 1)),
                        Record::truth("kset-count", format!("{id} is k-tree"), crate::graph::is_ktree(&g, k), None),
                    ])
                }));
            }
        }
    }
    out
}

fn size_vd(cfg: &VerifyConfig) -> Vec<Record> {
    // 500 instances spread over k = 1..=4.
    let per_k = 125;
    ktree_instances(cfg, Check::SizeVd, &[1, 2, 3, 4], per_k, |k| (k + 1, 16))
        .into_par_iter()
        .flat_map_iter(|(k, n, seed)| {
            let id = ktree_descriptor(k, n, seed);
            guarded("size-vd", id, |id| {
                let g = random_ktree(k, n, seed)?;
                let avg = ktree_average_degree(n, k);
                Ok((k..=2 * k + 2)
                    .map(|d| {
                        let b = bound_vd_lower(n, k, avg, d);
                        Record::count("size-vd", format!("{id} d={d}"), vd_set(&g, d).len(), Relation::Ge, b.value)
                    })
                    .collect())
            })
        })
        .collect()
}

fn clique_degrees(cfg: &VerifyConfig) -> Vec<Record> {
    ktree_instances(cfg, Check::CliqueDegrees, &[1, 2, 3, 4], 1000, |k| (k + 1, 16))
        .into_par_iter()
        .flat_map_iter(|(k, n, seed)| {
            let id = ktree_descriptor(k, n, seed);
            guarded("clique-degrees", id, |id| {
                let g = random_ktree(k, n, seed)?;
                let report = check_clique_degree_theorem(&g, k)?;
                let detail = match &report.violation {
                    Some(v) => format!("violation: {v:?}"),
                    None => format!(
                        "{} cliques, {} in the small-n branch",
                        report.cliques_checked, report.split_form_checks
                    ),
                };
                Ok(vec![Record::truth("clique-degrees", id.to_string(), report.holds(), Some(detail))])
            })
        })
        .collect()
}

fn treewidth_of(g: &Graph) -> Result<usize> {
    Ok(treewidth_exact(g)?.0)
}

/// `K_{k+1}` with a `p`-vertex path hanging off vertex 0.
fn clique_plus_path(k: usize, p: usize) -> Result<Graph> {
    let clique = (0..=k).flat_map(|i| (i + 1..=k).map(move |j| (i, j)));
    let path = (0..p).map(|i| if i == 0 { (0, k + 1) } else { (k + i, k + 1 + i) });
    Graph::new(k + 1 + p, clique.chain(path))
}

/// A `k`-clique with `ℓ + 1 − k` vertices added onto it.
fn small_ktree(k: usize, l: usize) -> Result<Graph> {
    let clique = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)));
    let spokes = (k..=l).flat_map(|v| (0..k).map(move |c| (c, v)));
    Graph::new(l + 1, clique.chain(spokes))
}

fn bounded_treewidth(cfg: &VerifyConfig) -> Vec<Record> {
    let mut out: Vec<Record> = ktree_instances(cfg, Check::BoundedTreewidth, &[1, 2, 3, 4], 500, |k| (2 * k + 2, 16))
        .into_par_iter()
        .flat_map_iter(|(k, n, seed)| {
            let id = ktree_descriptor(k, n, seed);
            guarded("bounded-treewidth", id, |id| {
                let g = random_ktree(k, n, seed)?;
                (k..=2 * k)
                    .map(|l| {
                        let tw = treewidth_of(&g.induced(&vd_set(&g, l)))?;
                        Ok(Record::count("bounded-treewidth", format!("{id} l={l}"), tw, Relation::Le, int(l - k)))
                    })
                    .collect()
            })
        })
        .collect();
    // Both hypotheses are needed: each construction must exceed ℓ − k.
    for k in 2..=4usize {
        let id = format!("clique-plus-path k={k} p={}", k + 1);
        out.extend(guarded("bounded-treewidth", id, |id| {
            let g = clique_plus_path(k, k + 1)?;
            (k..2 * k)
                .map(|l| {
                    let tw = treewidth_of(&g.induced(&vd_set(&g, l)))?;
                    Ok(Record::count("bounded-treewidth", format!("{id} l={l} violates"), tw, Relation::Ge, int(l - k + 1))
                        .with_detail("not a k-tree; the bound must fail"))
                })
                .collect()
        }));
    }
    for k in 1..=4usize {
        for l in k..2 * k {
            let id = format!("small-ktree k={k} n={}", l + 1);
            out.extend(guarded("bounded-treewidth", id, |id| {
                let g = small_ktree(k, l)?;
                let tw = treewidth_of(&g.induced(&vd_set(&g, l)))?;
                Ok(vec![Record::count("bounded-treewidth", format!("{id} l={l} violates"), tw, Relation::Ge, int(l - k + 1))
                    .with_detail(format!("is k-tree: {}, max degree {}", crate::graph::is_ktree(&g, k), g.max_degree()))])
            }));
        }
    }
    out
}

fn dtset_lower(cfg: &VerifyConfig) -> Vec<Record> {
    ktree_instances(cfg, Check::DtsetLower, &[1, 2, 3], 500, |k| (2 * k + 1, 16))
        .into_par_iter()
        .flat_map_iter(|(k, n, seed)| {
            let id = ktree_descriptor(k, n, seed);
            guarded("dtset-lower", id, |id| {
                let g = random_ktree(k, n, seed)?;
                let mut recs = Vec::new();
                for t in 0..=k {
                    for d in 2 * k..=2 * k + 2 {
                        let bound = bound_dtset_lower(n, k, t, d)?;
                        let ceil = int(bound.ceil().max(0) as usize);
                        let tag = format!("{id} t={t} d={d}");
                        let s = extract_degree_d_tset(&g, k, t, d)?;
                        recs.push(
                            Record::count("dtset-lower", format!("{tag} extract"), s.vertices.len(), Relation::Ge, ceil)
                                .with_detail(format!("bound {}", bound.value)),
                        );
                        match oracle_alpha_d_t_budgeted(&g, d, t, cfg.oracle_budget()) {
                            Ok(o) => recs.push(
                                Record::count("dtset-lower", format!("{tag} oracle"), o.value, Relation::Ge, bound.value)
                                    .with_detail(format!("extracted {}", s.vertices.len())),
                            ),
                            Err(e) => recs.push(Record::from_error("dtset-lower", format!("{tag} oracle"), e)),
                        }
                    }
                }
                Ok(recs)
            })
        })
        .collect()
}

fn dtset_upper(cfg: &VerifyConfig) -> Vec<Record> {
    let mut out = Vec::new();
    // (2, 4) fails the divisibility condition, so it has no construction;
    // (2, 6) is the smallest admissible degree for k = 2.
    out.push(Record::truth(
        "dtset-upper",
        "block k=2 d=4 rejected".into(),
        generators::block_r(2, 4).is_err(),
        Some("2(d-2k+1) = 2 is not divisible by k(k+1) = 6".into()),
    ));
    let cases: Vec<(usize, usize, usize, usize)> = [(1usize, 2usize), (2, 6), (3, 11)]
        .into_iter()
        .flat_map(|(k, d)| (2 * k + 3..=2 * k + 6).flat_map(move |n0| (0..k).map(move |t| (k, d, n0, t))))
        .collect();
    out.par_extend(cases.into_par_iter().flat_map_iter(|(k, d, n0, t)| {
        let id = format!("block k={k} d={d} n0={n0} t={t}");
        guarded("dtset-upper", id, |id| {
            let g = generators::block_ktree(k, d, n0)?;
            let r = generators::block_r(k, d)?;
            let count = bounds::block_count(k, t, r, n0);
            let formula = bounds::bound_dtset_upper(g.n(), k, t, d)?;
            let oracle = oracle_alpha_d_t_budgeted(&g, d, t, cfg.oracle_budget())?;
            Ok(vec![
                Record::count("dtset-upper", format!("{id} oracle"), oracle.value, Relation::Le, int(count))
                    .with_detail(format!("n = {}", g.n())),
                Record::compare("dtset-upper", format!("{id} formula"), formula.value, Relation::Eq, int(count)),
            ])
        })
    }));
    out
}

fn trees(cfg: &VerifyConfig) -> Vec<Record> {
    let cases: Vec<(usize, usize)> = (5..=10).flat_map(|n| [2usize, 3].map(|d| (n, d))).collect();
    let mut out: Vec<Record> = cases
        .into_par_iter()
        .flat_map_iter(|(n, d)| {
            let id = format!("trees n={n} d={d}");
            guarded("trees", id, |id| {
                let bound = bound_tree(n, d)?;
                let mut recs = Vec::new();
                let mut minimum = usize::MAX;
                let mut mismatches = Vec::new();
                let all = enumerate_trees(n)?;
                for (i, t) in all.iter().enumerate() {
                    let vd = vd_set(t, d);
                    let a = oracle_alpha_budgeted(&t.induced(&vd), cfg.oracle_budget())?.value;
                    minimum = minimum.min(a);
                    if int(a) < bound.value {
                        recs.push(Record::count("trees", format!("{id} tree#{i} lower"), a, Relation::Ge, bound.value));
                    }
                    let extremal = int(a) == bound.value;
                    if extremal != is_alpha_d_extremal_structure(t, d)? {
                        mismatches.push(i);
                    }
                }
                recs.push(
                    Record::truth(
                        "trees",
                        format!("{id} characterisation over {} trees", all.len()),
                        mismatches.is_empty(),
                        (!mismatches.is_empty()).then(|| format!("mismatched trees {mismatches:?}")),
                    ),
                );
                recs.push(
                    Record::count("trees", format!("{id} minimum"), minimum, Relation::Ge, bound.value)
                        .with_detail(bound.reason.clone().unwrap_or_else(|| "extremal trees exist".into())),
                );
                if bound.reason.is_none() {
                    recs.push(Record::count("trees", format!("{id} minimum attained"), minimum, Relation::Eq, bound.value));
                }
                Ok(recs)
            })
        })
        .collect();
    // The degree-(2k-1) note at k = 1: paths have exactly two degree-1 vertices.
    for n in 5..=10 {
        let id = format!("path n={n} d=1");
        out.extend(guarded("trees", id, |id| {
            let p = path_power(n, 1)?;
            let a = oracle_alpha(&p.induced(&vd_set(&p, 1)))?.value;
            Ok(vec![Record::count("trees", id.to_string(), a, Relation::Eq, int(2))])
        }));
    }
    out
}

fn outerplanar(cfg: &VerifyConfig) -> Vec<Record> {
    let cases = [(8usize, 6usize), (6, 6), (6, 7), (6, 8), (8, 7), (8, 8), (10, 6)];
    cases
        .into_par_iter()
        .flat_map_iter(|(d, n0)| {
            let id = format!("outerplanar d={d} n0={n0}");
            guarded("outerplanar", id, |id| {
                let g = outerplanar_extremal(d, n0)?;
                let r = generators::outerplanar_r(d)?;
                let n = g.n();
                let alpha = crate::oracles::oracle_alpha_d_t_budgeted(&g, d, 0, cfg.oracle_budget())?.value;
                let count = r * (n0 - 4) + 3;
                let lower = bound_outerplanar(n, d, Side::Lower)?;
                let upper = bound_outerplanar(n, d, Side::Upper)?;
                let mut recs = vec![
                    Record::count("outerplanar", format!("{id} oracle vs count"), alpha, Relation::Le, int(count))
                        .with_detail(format!("n = {n}")),
                    Record::count("outerplanar", format!("{id} oracle vs lower"), alpha, Relation::Ge, lower.value),
                    Record::compare("outerplanar", format!("{id} upper formula"), upper.value, Relation::Eq, int(count)),
                    Record::truth("outerplanar", format!("{id} treewidth <= 2"), treewidth_at_most(&g, 2)?, None),
                ];
                if (d, n0) == (8, 6) {
                    recs.push(Record::count("outerplanar", format!("{id} oracle equals count"), alpha, Relation::Eq, int(count)));
                }
                Ok(recs)
            })
        })
        .collect()
}

fn interval_instances(cfg: &VerifyConfig) -> Vec<(usize, usize, u64)> {
    let per_k = cfg.samples(1000);
    (1..=3usize)
        .flat_map(|k| (0..per_k).map(move |i| (k, i)))
        .map(|(k, i)| {
            let seed = cfg.instance_seed(Check::Interval, k * 1_000_000 + i);
            let lo = k + 1;
            (k, lo + (seed % (20 - lo + 1) as u64) as usize, seed)
        })
        .collect()
}

fn check_mis(id: &str, g: &Graph, k: usize, alpha: usize, label: &str, set: &[usize], swaps: usize) -> Vec<Record> {
    let max_deg = set.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
    vec![
        Record::count("interval", format!("{id} {label} size"), set.len(), Relation::Eq, int(alpha))
            .with_detail(format!("{swaps} swaps")),
        Record::count("interval", format!("{id} {label} max degree"), max_deg, Relation::Le, int(2 * k)),
        Record::truth("interval", format!("{id} {label} independent"), g.is_independent(set), None),
    ]
}

fn interval(cfg: &VerifyConfig) -> Vec<Record> {
    let mut out: Vec<Record> = interval_instances(cfg)
        .into_par_iter()
        .flat_map_iter(|(k, n, seed)| {
            let id = format!("random-interval k={k} n={n} seed={seed}");
            guarded("interval", id, |id| {
                let m = interval_model(IntervalKind::Random, n, k, seed)?;
                let g = m.intersection_graph();
                let alpha = oracle_alpha_budgeted(&g, cfg.oracle_budget())?;
                let greedy = interval_bounded_degree_mis(&m, k)?;
                // The oracle's witness may contain dominating intervals, which
                // exercises the swap step.
                let swapped = swap_to_bounded_degree(&m, k, &alpha.witness)?;
                let mut recs = check_mis(id, &g, k, alpha.value, "greedy", &greedy.vertices, greedy.swaps.len());
                recs.extend(check_mis(id, &g, k, alpha.value, "oracle-start", &swapped.vertices, swapped.swaps.len()));
                let covers = (0..n).all(|y| m.left_cover(y).len() <= k && m.right_cover(y).len() <= k);
                recs.push(Record::truth("interval", format!("{id} covers <= k"), covers, None));
                Ok(recs)
            })
        })
        .collect();
    for k in 1..=3usize {
        for n in 3 * (k + 1)..=3 * (k + 1) + 4 {
            let id = format!("path-power-interval n={n} k={k}");
            out.extend(guarded("interval", id, |id| {
                let m = interval_model(IntervalKind::PathPower, n, k, 0)?;
                let g = m.intersection_graph();
                let low = vd_set(&g, 2 * k - 1).len();
                let alpha = oracle_alpha(&g)?.value;
                let alpha_low = oracle_alpha(&g.induced(&vd_set(&g, 2 * k - 1)))?.value;
                Ok(vec![
                    Record::truth("interval", format!("{id} realises P_n^k"), g == path_power(n, k)?, None),
                    Record::count("interval", format!("{id} low-degree count"), low, Relation::Eq, int(2 * k)),
                    Record::count("interval", format!("{id} alpha_(2k-1) < alpha"), alpha_low + 1, Relation::Le, int(alpha))
                        .with_detail(format!("alpha = {alpha}, alpha_(2k-1) = {alpha_low}")),
                ])
            }));
        }
    }
    out
}

/// Runs every oracle on one graph and reports the values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub edges: usize,
    pub alpha: Option<crate::oracles::OracleResult>,
    pub alpha_t: Option<crate::oracles::OracleResult>,
    pub alpha_d_t: Option<crate::oracles::OracleResult>,
}

/// Oracle values for a graph read from a file: `α`, and `α^t` / `α^t_d` when
/// `t` (and `d`) are given.
pub fn oracle_report(g: &Graph, t: Option<usize>, d: Option<usize>, budget: Budget) -> Result<OracleReport> {
    let alpha = Some(oracle_alpha_budgeted(g, budget)?);
    let alpha_t = t.map(|t| oracle_alpha_t_budgeted(g, t, budget)).transpose()?;
    let alpha_d_t = match (t, d) {
        (Some(t), Some(d)) => Some(oracle_alpha_d_t_budgeted(g, d, t, budget)?),
        (None, Some(d)) => Some(oracle_alpha_d_t_budgeted(g, d, 0, budget)?),
        _ => None,
    };
    Ok(OracleReport {
        n: g.n(),
        edges: g.edge_count(),
        alpha,
        alpha_t,
        alpha_d_t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyConfig {
        VerifyConfig {
            sample_divisor: 50,
            ..Default::default()
        }
    }

    #[test]
    fn suites_parse() {
        assert_eq!("clique-degrees".parse::<Suite>().unwrap(), Suite::CliqueDegrees);
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(Suite::All.checks().len(), 10);
    }

    #[test]
    fn zero_budget_skips_everything() {
        let cfg = VerifyConfig {
            budget: Some(0),
            ..quick()
        };
        let report = run_suite(Suite::All, &cfg).unwrap();
        assert_eq!(report.summary.passed, 0);
        assert_eq!(report.summary.skipped, 10);
        assert_eq!(report.exit_code(), 3);
    }

    #[test]
    fn quick_suites_pass() {
        for suite in [Suite::Tset, Suite::Kset, Suite::Interval, Suite::Outerplanar] {
            let report = run_suite(suite, &quick()).unwrap();
            let failed: Vec<_> = report.records.iter().filter(|r| r.status != Status::Pass).collect();
            assert!(failed.is_empty(), "{suite}: {failed:#?}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let mut a = run_suite(Suite::CliqueDegrees, &quick()).unwrap();
        let mut b = run_suite(Suite::CliqueDegrees, &quick()).unwrap();
        a.runtime_ms = 0;
        b.runtime_ms = 0;
        assert_eq!(a, b);
    }

    #[test]
    fn counterexample_graphs() {
        let g = clique_plus_path(2, 3);
        let g = g.unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.degree(0), 3);
        let s = small_ktree(2, 3).unwrap();
        assert!(crate::graph::is_ktree(&s, 2));
        assert_eq!(s.max_degree(), 3);
    }
}
