//! Verification harness: sweeps families and constructs, compares solver
//! output against closed-form expectations, asserts proven inequalities, and
//! logs (without asserting) the monotonicity claims that carry no proof.
//!
//! Every randomized choice derives from one 64-bit seed (default 20240), and
//! records sort canonically, so identical configurations produce identical
//! reports byte for byte.

use crate::bitset::VertexSet;
use crate::constructs;
use crate::families::{self, FamilySpec};
use crate::graph::Graph;
use crate::oracle::{self, ExpectedTdd, ExpectedTdi, OracleExpectation};
use crate::solver::{self, DominationReport, SweepResult};
pub use rand_chacha::rand_core::{RngCore, SeedableRng};
pub use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

pub const DEFAULT_SEED: u64 = 20240;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: solver::DEFAULT_MAX_N,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Tdd,
    GammaT,
    UpperGammaT,
    Tdi,
    Compliance,
    Bound,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Quantity::Tdd => "tdd",
            Quantity::GammaT => "gamma_t",
            Quantity::UpperGammaT => "upper_gamma_t",
            Quantity::Tdi => "tdi",
            Quantity::Compliance => "compliance",
            Quantity::Bound => "bound",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    BoundSatisfied,
    BoundViolated,
    NoOracle,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::BoundSatisfied => "bound-satisfied",
            Status::BoundViolated => "bound-violated",
            Status::NoOracle => "no-oracle",
            Status::Skipped => "skipped",
        };
        f.write_str(s)
    }
}

/// One oracle-vs-solver comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub subject: String,
    pub params: String,
    pub vertex: Option<usize>,
    pub quantity: Quantity,
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

impl VerificationRecord {
    fn sort_key(&self) -> (String, String, usize, Quantity, String) {
        (
            self.subject.clone(),
            self.params.clone(),
            self.vertex.map_or(0, |v| v + 1),
            self.quantity,
            self.expected.clone(),
        )
    }
}

/// A replayable violation of an unproven claim: both graphs are embedded as
/// canonical edge-list text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub subject: String,
    pub sample: usize,
    pub quantity: Quantity,
    pub vertex: Option<usize>,
    pub graph: String,
    pub subgraph: String,
    pub graph_value: usize,
    pub subgraph_value: usize,
    pub graph_witness: String,
    pub subgraph_witness: String,
}

/// Records plus the failure count that decides the exit code. Violations of
/// unproven claims are collected as counterexamples, never as failures.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub records: Vec<VerificationRecord>,
    pub counterexamples: Vec<Counterexample>,
    pub failures: usize,
}

impl SuiteOutcome {
    pub fn merge(mut self, other: SuiteOutcome) -> SuiteOutcome {
        self.records.extend(other.records);
        self.counterexamples.extend(other.counterexamples);
        self.failures += other.failures;
        sort_records(&mut self.records);
        self
    }
}

pub fn sort_records(records: &mut [VerificationRecord]) {
    records.sort_by_key(|r| r.sort_key());
}

/// Mismatches always fail; bound violations fail only for proven bounds.
pub fn count_failures(records: &[VerificationRecord], assert_bounds: bool) -> usize {
    records
        .iter()
        .filter(|r| {
            r.status == Status::Mismatch || (assert_bounds && r.status == Status::BoundViolated)
        })
        .count()
}

fn rec(
    subject: &str,
    params: &str,
    vertex: Option<usize>,
    quantity: Quantity,
    expected: impl Into<String>,
    observed: impl Into<String>,
    status: Status,
) -> VerificationRecord {
    VerificationRecord {
        subject: subject.to_string(),
        params: params.to_string(),
        vertex,
        quantity,
        expected: expected.into(),
        observed: observed.into(),
        status,
    }
}

fn skipped(subject: &str, params: &str, why: String) -> VerificationRecord {
    rec(subject, params, None, Quantity::Compliance, "-", why, Status::Skipped)
}

fn no_oracle(subject: &str, params: &str) -> VerificationRecord {
    rec(subject, params, None, Quantity::Compliance, "-", "no oracle", Status::NoOracle)
}

fn tdd_string(t: Option<usize>) -> String {
    t.map_or_else(|| "non_compliant".to_string(), |v| v.to_string())
}

fn exp_string(e: &ExpectedTdd) -> String {
    match e {
        ExpectedTdd::Value(v) => v.to_string(),
        ExpectedTdd::NonCompliant => "non_compliant".to_string(),
    }
}

/// Expands an [`OracleExpectation`] into per-vertex, bound, `γ_t`, and
/// compliance records against a sweep result.
fn compare_expectation(
    subject: &str,
    params: &str,
    exp: &OracleExpectation,
    result: &SweepResult,
) -> Vec<VerificationRecord> {
    let report = &result.report;
    let mut out = Vec::new();
    for (&v, e) in &exp.per_vertex {
        let observed = tdd_string(report.per_vertex_tdd[v]);
        let expected = exp_string(e);
        let status = if expected == observed {
            Status::Match
        } else {
            Status::Mismatch
        };
        out.push(rec(subject, params, Some(v), Quantity::Tdd, expected, observed, status));
    }
    for (&v, &bound) in &exp.bounds {
        let (observed, ok) = match report.per_vertex_tdd[v] {
            Some(t) => (t.to_string(), t <= bound),
            None => ("non_compliant".to_string(), false),
        };
        out.push(rec(
            subject,
            params,
            Some(v),
            Quantity::Bound,
            format!("<= {bound}"),
            observed,
            if ok { Status::BoundSatisfied } else { Status::BoundViolated },
        ));
    }
    if let Some(expected) = exp.gamma_t {
        let status = if expected == report.gamma_t {
            Status::Match
        } else {
            Status::Mismatch
        };
        out.push(rec(
            subject,
            params,
            None,
            Quantity::GammaT,
            expected.to_string(),
            report.gamma_t.to_string(),
            status,
        ));
    }
    if let Some(expected) = exp.compliant {
        let status = if expected == report.compliant {
            Status::Match
        } else {
            Status::Mismatch
        };
        out.push(rec(
            subject,
            params,
            None,
            Quantity::Compliance,
            expected.to_string(),
            report.compliant.to_string(),
            status,
        ));
    }
    out
}

fn tdi_record(subject: &str, params: &str, expected: ExpectedTdi, report: &DominationReport) -> VerificationRecord {
    let expected_s = match expected {
        ExpectedTdi::Value(v) => v.to_string(),
        ExpectedTdi::Undefined => "undefined".to_string(),
    };
    let observed_s = report.tdi.map_or_else(|| "undefined".to_string(), |v| v.to_string());
    let status = if expected_s == observed_s {
        Status::Match
    } else {
        Status::Mismatch
    };
    rec(subject, params, None, Quantity::Tdi, expected_s, observed_s, status)
}

/// Solves one family instance and compares it against its closed forms.
pub fn verify_family(spec: &FamilySpec, cfg: &VerifyConfig) -> Vec<VerificationRecord> {
    let subject = spec.name();
    let params = spec.params_string();
    let g = match families::generate(spec) {
        Ok(g) => g,
        Err(e) => return vec![skipped(subject, &params, e.to_string())],
    };
    let result = match solver::sweep_minimal_tds(&g, cfg.max_n) {
        Ok(r) => r,
        Err(e) => return vec![skipped(subject, &params, e.to_string())],
    };
    let mut out = match oracle::expected_tdd(spec) {
        Some(exp) => compare_expectation(subject, &params, &exp, &result),
        None => vec![no_oracle(subject, &params)],
    };
    if let Some(expected) = oracle::expected_tdi(spec) {
        out.push(tdi_record(subject, &params, expected, &result.report));
    }
    sort_records(&mut out);
    out
}

fn family_label(spec: &FamilySpec) -> String {
    let params = spec.params_string();
    if params.is_empty() {
        spec.name().to_string()
    } else {
        format!("{}({})", spec.name(), params)
    }
}

fn solve_or_skip(
    subject: &str,
    params: &str,
    g: &Graph,
    cfg: &VerifyConfig,
    out: &mut Vec<VerificationRecord>,
) -> Option<SweepResult> {
    match solver::sweep_minimal_tds(g, cfg.max_n) {
        Ok(r) => Some(r),
        Err(e) => {
            out.push(skipped(subject, params, e.to_string()));
            None
        }
    }
}

/// The construct fixtures: exact cases for union, join, composition with a
/// complete graph, corona, subdivision of complete graphs, and degree
/// splitting of paths; bound cases for compositions and coronas built from
/// non-compliant pieces.
pub fn verify_constructs(cfg: &VerifyConfig) -> SuiteOutcome {
    let gen = |spec: &FamilySpec| families::generate(spec).expect("fixture specs are valid");
    let mut records: Vec<VerificationRecord> = Vec::new();

    let solve = |g: &Graph| solver::sweep_minimal_tds(g, cfg.max_n);

    // union(P_5, P_5)
    {
        let p5 = gen(&FamilySpec::Path { n: 5 });
        let base = solve(&p5).expect("P_5 is solvable");
        let g = constructs::disjoint_union(&p5, &p5);
        if let Some(result) = solve_or_skip("union", "path(5) path(5)", &g, cfg, &mut records) {
            match oracle::expected_union(&[&base.report, &base.report]) {
                Some(exp) => records.extend(compare_expectation(
                    "union",
                    "path(5) path(5)",
                    &exp,
                    &result,
                )),
                None => records.push(no_oracle("union", "path(5) path(5)")),
            }
        }
    }

    // join(P_3, P_3)
    {
        let p3 = gen(&FamilySpec::Path { n: 3 });
        let g = constructs::join(&p3, &p3);
        if let Some(result) = solve_or_skip("join", "path(3) path(3)", &g, cfg, &mut records) {
            let exp = oracle::expected_join(3, 3).expect("both sides nonempty");
            records.extend(compare_expectation("join", "path(3) path(3)", &exp, &result));
        }
    }

    // exact compositions with K_2 over compliant bases
    for base_spec in [FamilySpec::Cycle { n: 4 }, FamilySpec::Path { n: 5 }] {
        let base_g = gen(&base_spec);
        let params = format!("{} complete(2)", family_label(&base_spec));
        let base = solve(&base_g).expect("base fixture is solvable");
        let g = constructs::composition(&base_g, &gen(&FamilySpec::Complete { n: 2 }));
        if let Some(result) = solve_or_skip("composition", &params, &g, cfg, &mut records) {
            match oracle::expected_composition_exact(&base.report, 2) {
                Some(exp) => {
                    records.extend(compare_expectation("composition", &params, &exp, &result))
                }
                None => records.push(no_oracle("composition", &params)),
            }
        }
    }

    // bound compositions with K_2 over non-compliant bases
    for base_spec in [
        FamilySpec::Path { n: 4 },
        FamilySpec::Path { n: 7 },
        FamilySpec::Kragujevac { branches: vec![2, 2] },
    ] {
        let base_g = gen(&base_spec);
        let params = format!("{} complete(2)", family_label(&base_spec));
        let g = constructs::composition(&base_g, &gen(&FamilySpec::Complete { n: 2 }));
        if let Some(result) = solve_or_skip("composition", &params, &g, cfg, &mut records) {
            let dd: Result<Vec<usize>, _> = (0..base_g.order())
                .map(|v| solver::domination_degree(&base_g, v, cfg.max_n).map(|c| c.value()))
                .collect();
            match dd.ok().and_then(|dd| oracle::expected_composition_bounds(&dd, 2)) {
                Some(exp) => {
                    records.extend(compare_expectation("composition", &params, &exp, &result))
                }
                None => records.push(no_oracle("composition", &params)),
            }
        }
    }

    // exact coronas with a compliant copy graph
    for base_spec in [FamilySpec::Cycle { n: 3 }, FamilySpec::Path { n: 3 }] {
        let base_g = gen(&base_spec);
        let k2 = gen(&FamilySpec::Complete { n: 2 });
        let params = format!("{} complete(2)", family_label(&base_spec));
        let copy_report = solve(&k2).expect("K_2 is solvable");
        let g = constructs::corona(&base_g, &k2);
        if let Some(result) = solve_or_skip("corona", &params, &g, cfg, &mut records) {
            match oracle::expected_corona_exact(base_g.order(), &copy_report.report) {
                Some(exp) => records.extend(compare_expectation("corona", &params, &exp, &result)),
                None => records.push(no_oracle("corona", &params)),
            }
        }
    }

    // bound coronas with non-compliant copy graphs
    for copy_spec in [
        FamilySpec::Path { n: 4 },
        FamilySpec::Path { n: 7 },
        FamilySpec::Kragujevac { branches: vec![2, 2] },
    ] {
        let p3 = gen(&FamilySpec::Path { n: 3 });
        let copy_g = gen(&copy_spec);
        let params = format!("path(3) {}", family_label(&copy_spec));
        let g = constructs::corona(&p3, &copy_g);
        if let Some(result) = solve_or_skip("corona", &params, &g, cfg, &mut records) {
            let copy_gamma = solver::gamma_t(&copy_g, cfg.max_n).expect("copy fixture solvable");
            match oracle::expected_corona_bounds(3, copy_g.order(), copy_gamma) {
                Some(exp) => records.extend(compare_expectation("corona", &params, &exp, &result)),
                None => records.push(no_oracle("corona", &params)),
            }
        }
    }

    // subdivisions of complete graphs
    for n in 3..=5 {
        let g = constructs::subdivision(&gen(&FamilySpec::Complete { n }));
        let params = format!("complete({n})");
        if let Some(result) = solve_or_skip("subdivision", &params, &g, cfg, &mut records) {
            let exp = oracle::expected_subdivision_complete(n).expect("n >= 2");
            records.extend(compare_expectation("subdivision", &params, &exp, &result));
        }
    }

    // degree splittings of paths
    for n in 4..=10 {
        let g = constructs::degree_splitting(&gen(&FamilySpec::Path { n }));
        let params = format!("path({n})");
        if let Some(result) = solve_or_skip("degree_splitting", &params, &g, cfg, &mut records) {
            let exp = oracle::expected_degree_splitting_path(n).expect("n >= 4");
            records.extend(compare_expectation("degree_splitting", &params, &exp, &result));
        }
    }

    sort_records(&mut records);
    let failures = count_failures(&records, true);
    SuiteOutcome {
        records,
        counterexamples: Vec::new(),
        failures,
    }
}

fn pick(rng: &mut ChaCha8Rng, m: usize) -> usize {
    (rng.next_u64() % m as u64) as usize
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, pick(rng, i + 1));
    }
    perm
}

/// Asserted properties on one solved graph: the sandwich
/// `γ_t ≤ tdd ≤ Γ_t`, the domination-degree lower bound, the classical
/// `γ_t` lower bounds on connected graphs, edge-deletion monotonicity of
/// `γ_t` on sampled edges, and TDI invariance under seeded relabelings.
pub fn check_propositions(
    subject: &str,
    params: &str,
    g: &Graph,
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> Vec<VerificationRecord> {
    let mut out = Vec::new();
    let Some(result) = solve_or_skip(subject, params, g, cfg, &mut out) else {
        return out;
    };
    let report = &result.report;
    let n = g.order();

    // gamma_t <= tdd <= Gamma_t for every compliant vertex
    let sandwich_violation = (0..n).find(|&v| {
        report.per_vertex_tdd[v]
            .is_some_and(|t| t < report.gamma_t || t > report.upper_gamma_t)
    });
    out.push(match sandwich_violation {
        None => rec(subject, params, None, Quantity::Bound,
            "gamma_t <= tdd <= Gamma_t", "holds", Status::BoundSatisfied),
        Some(v) => rec(subject, params, Some(v), Quantity::Bound,
            "gamma_t <= tdd <= Gamma_t",
            format!("violated at vertex {v} (tdd={})", tdd_string(report.per_vertex_tdd[v])),
            Status::BoundViolated),
    });

    // tdd >= domination degree for every compliant vertex
    let mut dd_violation = None;
    for v in 0..n {
        if let Some(t) = report.per_vertex_tdd[v] {
            match solver::domination_degree(g, v, cfg.max_n) {
                Ok(cert) if cert.value() > t => {
                    dd_violation = Some((v, t, cert.value()));
                    break;
                }
                _ => {}
            }
        }
    }
    out.push(match dd_violation {
        None => rec(subject, params, None, Quantity::Bound,
            "tdd >= domination_degree", "holds", Status::BoundSatisfied),
        Some((v, t, dd)) => rec(subject, params, Some(v), Quantity::Bound,
            "tdd >= domination_degree",
            format!("violated at vertex {v} (tdd={t}, domination_degree={dd})"),
            Status::BoundViolated),
    });

    // classical gamma_t lower bounds, connected graphs only
    if let Ok((rad, diam)) = g.radius_diameter() {
        let lb = (n.div_ceil(g.max_degree()))
            .max(rad)
            .max((diam + 1).div_ceil(2));
        let lb_violation = (0..n)
            .find(|&v| report.per_vertex_tdd[v].is_some_and(|t| t < lb));
        out.push(match lb_violation {
            None => rec(subject, params, None, Quantity::Bound,
                format!("tdd >= max(ceil(n/max_degree), radius, ceil((diameter+1)/2)) = {lb}"),
                "holds", Status::BoundSatisfied),
            Some(v) => rec(subject, params, Some(v), Quantity::Bound,
                format!("tdd >= {lb}"),
                format!("violated at vertex {v} (tdd={})", tdd_string(report.per_vertex_tdd[v])),
                Status::BoundViolated),
        });
    }

    // removing an edge cannot lower gamma_t
    let edges = g.edges();
    if !edges.is_empty() {
        let mut sampled: Vec<usize> = (0..4.min(edges.len())).map(|_| pick(rng, edges.len())).collect();
        sampled.sort_unstable();
        sampled.dedup();
        let mut checked = 0;
        let mut violation = None;
        for idx in sampled {
            let (u, v) = edges[idx];
            let h = g.without_edge(u, v);
            if h.has_isolated_vertex() {
                continue;
            }
            checked += 1;
            if let Ok(gt) = solver::gamma_t(&h, cfg.max_n) {
                if gt < report.gamma_t {
                    violation = Some((u, v, gt));
                    break;
                }
            }
        }
        out.push(match violation {
            None => rec(subject, params, None, Quantity::Bound,
                "gamma_t(g - e) >= gamma_t(g)",
                format!("holds ({checked} edges sampled)"), Status::BoundSatisfied),
            Some((u, v, gt)) => rec(subject, params, None, Quantity::Bound,
                "gamma_t(g - e) >= gamma_t(g)",
                format!("violated for edge ({u},{v}): {gt} < {}", report.gamma_t),
                Status::BoundViolated),
        });
    }

    // TDI is invariant under relabeling
    let mut invariance_failure = None;
    for _ in 0..3 {
        let perm = random_permutation(rng, n);
        let relabeled = g.relabel(&perm).expect("generated permutations are valid");
        match solver::sweep_minimal_tds(&relabeled, cfg.max_n) {
            Ok(r) if r.report.tdi == report.tdi => {}
            Ok(r) => {
                invariance_failure = Some(r.report.tdi);
                break;
            }
            Err(_) => {}
        }
    }
    let tdi_s = report.tdi.map_or_else(|| "undefined".to_string(), |v| v.to_string());
    out.push(match invariance_failure {
        None => rec(subject, params, None, Quantity::Tdi,
            format!("{tdi_s} under 3 relabelings"), tdi_s.clone(), Status::Match),
        Some(other) => rec(subject, params, None, Quantity::Tdi,
            tdi_s,
            other.map_or_else(|| "undefined".to_string(), |v| v.to_string()),
            Status::Mismatch),
    });

    out
}

/// Deletes `count` random non-bridge edges (connectivity preserved), or
/// fewer if the graph runs out of them.
fn random_spanning_subgraph(g: &Graph, count: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut h = g.clone();
    for _ in 0..count {
        let eligible: Vec<(usize, usize)> = h
            .edges()
            .into_iter()
            .filter(|&(u, v)| h.without_edge(u, v).is_connected())
            .collect();
        if eligible.is_empty() {
            break;
        }
        let (u, v) = eligible[pick(rng, eligible.len())];
        h = h.without_edge(u, v);
    }
    h
}

/// Compares one host graph against one spanning subgraph under the unproven
/// monotonicity claims: per-vertex TDD and the TDI may only grow when edges
/// are removed. Violations become counterexamples, not failures.
pub fn check_spanning_pair(
    subject: &str,
    sample: usize,
    host: &SweepResult,
    g: &Graph,
    h: &Graph,
    cfg: &VerifyConfig,
) -> (Vec<VerificationRecord>, Vec<Counterexample>) {
    let params = format!("sample {sample}");
    let mut records = Vec::new();
    let mut counterexamples = Vec::new();
    let Some(sub) = solve_or_skip(subject, &params, h, cfg, &mut records) else {
        return (records, counterexamples);
    };
    if !sub.report.compliant {
        records.push(rec(subject, &params, None, Quantity::Compliance,
            "compliant subgraph", "subgraph non-compliant", Status::NoOracle));
        return (records, counterexamples);
    }

    // per-vertex: tdd in the host graph should not exceed the subgraph's
    let mut tdd_violation = None;
    for v in 0..g.order() {
        let gv = host.report.per_vertex_tdd[v].expect("base compliant");
        let hv = sub.report.per_vertex_tdd[v].expect("subgraph compliant");
        if gv > hv {
            tdd_violation = Some((v, gv, hv));
            break;
        }
    }
    records.push(match tdd_violation {
        None => rec(subject, &params, None, Quantity::Bound,
            "tdd(host) <= tdd(spanning subgraph)", "holds", Status::BoundSatisfied),
        Some((v, gv, hv)) => {
            counterexamples.push(Counterexample {
                subject: subject.to_string(),
                sample,
                quantity: Quantity::Tdd,
                vertex: Some(v),
                graph: g.to_edge_list_text(),
                subgraph: h.to_edge_list_text(),
                graph_value: gv,
                subgraph_value: hv,
                graph_witness: witness_string(host, v),
                subgraph_witness: witness_string(&sub, v),
            });
            rec(subject, &params, Some(v), Quantity::Bound,
                "tdd(host) <= tdd(spanning subgraph)",
                format!("violated at vertex {v}: {gv} > {hv}"),
                Status::BoundViolated)
        }
    });

    let tdi_g = host.report.tdi.expect("base compliant");
    let tdi_h = sub.report.tdi.expect("subgraph compliant");
    records.push(if tdi_g <= tdi_h {
        rec(subject, &params, None, Quantity::Tdi,
            "tdi(host) <= tdi(spanning subgraph)", "holds", Status::BoundSatisfied)
    } else {
        counterexamples.push(Counterexample {
            subject: subject.to_string(),
            sample,
            quantity: Quantity::Tdi,
            vertex: None,
            graph: g.to_edge_list_text(),
            subgraph: h.to_edge_list_text(),
            graph_value: tdi_g,
            subgraph_value: tdi_h,
            graph_witness: String::new(),
            subgraph_witness: String::new(),
        });
        rec(subject, &params, None, Quantity::Tdi,
            "tdi(host) <= tdi(spanning subgraph)",
            format!("violated: {tdi_g} > {tdi_h}"),
            Status::BoundViolated)
    });
    (records, counterexamples)
}

/// Draws seeded spanning subgraphs of `g` and logs the monotonicity claims
/// for each.
pub fn check_conjectures(
    subject: &str,
    g: &Graph,
    samples: usize,
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> (Vec<VerificationRecord>, Vec<Counterexample>) {
    let mut records = Vec::new();
    let mut counterexamples = Vec::new();
    let Some(result) = solve_or_skip(subject, "base", g, cfg, &mut records) else {
        return (records, counterexamples);
    };
    if !result.report.compliant {
        records.push(rec(subject, "base", None, Quantity::Compliance,
            "compliant base", "base non-compliant", Status::NoOracle));
        return (records, counterexamples);
    }

    for sample in 0..samples {
        let deletions = 1 + pick(rng, 2);
        let h = random_spanning_subgraph(g, deletions, rng);
        if h.size() == g.size() {
            records.push(skipped(subject, &format!("sample {sample}"), "no removable edge".to_string()));
            continue;
        }
        let (r, c) = check_spanning_pair(subject, sample, &result, g, &h, cfg);
        records.extend(r);
        counterexamples.extend(c);
    }
    (records, counterexamples)
}

fn witness_string(result: &SweepResult, v: usize) -> String {
    result.certificates[v]
        .as_ref()
        .map(|c| c.witness.to_index_string())
        .unwrap_or_default()
}

/// The default family matrix, optionally filtered to specific family names.
pub fn family_matrix(
    paths: RangeInclusive<usize>,
    cycles: RangeInclusive<usize>,
    only: Option<&[String]>,
) -> Vec<FamilySpec> {
    let mut specs: Vec<FamilySpec> = Vec::new();
    specs.extend(paths.map(|n| FamilySpec::Path { n }));
    specs.extend(cycles.map(|n| FamilySpec::Cycle { n }));
    specs.extend((1..=4).map(|n| FamilySpec::Book { n }));
    specs.extend((2..=8).map(|n| FamilySpec::Complete { n }));
    for m in 1..=4 {
        for n in 1..=4 {
            specs.push(FamilySpec::CompleteBipartite { m, n });
        }
    }
    specs.extend((1..=8).map(|n| FamilySpec::Star { n }));
    specs.extend((3..=8).map(|n| FamilySpec::Wheel { n }));
    for p in 2..=4 {
        for q in 2..=3 {
            specs.push(FamilySpec::Windmill { p, q });
        }
    }
    specs.push(FamilySpec::Kragujevac { branches: vec![2, 2] });
    specs.push(FamilySpec::Petersen);
    specs.push(FamilySpec::Grotzsch);
    specs.push(FamilySpec::Herschel);
    if let Some(names) = only {
        specs.retain(|s| names.iter().any(|n| n == s.name()));
    }
    specs
}

pub fn suite_families(
    paths: RangeInclusive<usize>,
    cycles: RangeInclusive<usize>,
    only: Option<&[String]>,
    cfg: &VerifyConfig,
) -> SuiteOutcome {
    // instances are independent; the canonical sort makes the result
    // identical for every worker count
    let mut records: Vec<VerificationRecord> = family_matrix(paths, cycles, only)
        .par_iter()
        .flat_map_iter(|spec| verify_family(spec, cfg))
        .collect();
    sort_records(&mut records);
    let failures = count_failures(&records, true);
    SuiteOutcome {
        records,
        counterexamples: Vec::new(),
        failures,
    }
}

pub fn suite_constructs(cfg: &VerifyConfig) -> SuiteOutcome {
    verify_constructs(cfg)
}

/// Graphs the proposition checks run over by default.
fn proposition_matrix() -> Vec<FamilySpec> {
    let mut specs: Vec<FamilySpec> = Vec::new();
    specs.extend((3..=10).map(|n| FamilySpec::Path { n }));
    specs.extend((3..=10).map(|n| FamilySpec::Cycle { n }));
    specs.push(FamilySpec::Complete { n: 5 });
    specs.push(FamilySpec::CompleteBipartite { m: 1, n: 3 });
    specs.push(FamilySpec::CompleteBipartite { m: 2, n: 3 });
    specs.push(FamilySpec::Star { n: 4 });
    specs.push(FamilySpec::Wheel { n: 5 });
    specs.push(FamilySpec::Book { n: 2 });
    specs.push(FamilySpec::Windmill { p: 3, q: 2 });
    specs.push(FamilySpec::Petersen);
    specs
}

pub fn suite_propositions(cfg: &VerifyConfig) -> SuiteOutcome {
    // each instance draws from its own stream derived from the suite seed,
    // so the records do not depend on scheduling
    let mut records: Vec<VerificationRecord> = proposition_matrix()
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, spec)| {
            let g = families::generate(spec).expect("matrix specs are valid");
            let mut rng = ChaCha8Rng::seed_from_u64(
                cfg.seed.wrapping_add((i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
            );
            check_propositions(spec.name(), &spec.params_string(), &g, cfg, &mut rng)
        })
        .collect();
    sort_records(&mut records);
    let failures = count_failures(&records, true);
    SuiteOutcome {
        records,
        counterexamples: Vec::new(),
        failures,
    }
}

/// Cyclic bases for the spanning-subgraph comparisons (trees have no
/// removable edge).
fn conjecture_matrix() -> Vec<FamilySpec> {
    vec![
        FamilySpec::Cycle { n: 6 },
        FamilySpec::Cycle { n: 8 },
        FamilySpec::Complete { n: 4 },
        FamilySpec::CompleteBipartite { m: 3, n: 3 },
        FamilySpec::Wheel { n: 5 },
        FamilySpec::Book { n: 2 },
        FamilySpec::Windmill { p: 3, q: 2 },
        FamilySpec::Petersen,
    ]
}

pub fn suite_conjectures(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut records = Vec::new();
    let mut counterexamples = Vec::new();
    for spec in conjecture_matrix() {
        let g = families::generate(&spec).expect("matrix specs are valid");
        let (r, c) = check_conjectures(&family_label(&spec), &g, 2, cfg, &mut rng);
        records.extend(r);
        counterexamples.extend(c);
    }
    sort_records(&mut records);
    // unproven claims: violations are findings, not failures
    let failures = count_failures(&records, false);
    SuiteOutcome {
        records,
        counterexamples,
        failures,
    }
}

pub fn suite_all(
    paths: RangeInclusive<usize>,
    cycles: RangeInclusive<usize>,
    cfg: &VerifyConfig,
) -> SuiteOutcome {
    suite_families(paths, cycles, None, cfg)
        .merge(suite_constructs(cfg))
        .merge(suite_propositions(cfg))
        .merge(suite_conjectures(cfg))
}

/// CSV rendering: `subject,params,vertex,quantity,expected,observed,status`.
pub fn records_csv(records: &[VerificationRecord]) -> String {
    let mut out = String::from("subject,params,vertex,quantity,expected,observed,status\n");
    for r in records {
        let vertex = r.vertex.map_or_else(String::new, |v| v.to_string());
        for field in [&r.subject, &r.params, &r.expected, &r.observed] {
            debug_assert!(!field.contains(','), "CSV field with comma: {field}");
        }
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.subject, r.params, vertex, r.quantity, r.expected, r.observed, r.status
        ));
    }
    out
}

/// Full JSON report, stable field order, one trailing newline.
#[derive(Debug, Serialize)]
pub struct VerifyReport<'a> {
    pub suite: &'a str,
    pub seed: u64,
    pub max_n: usize,
    pub failures: usize,
    pub status_counts: BTreeMap<String, usize>,
    pub records: &'a [VerificationRecord],
    pub counterexamples: &'a [Counterexample],
}

impl<'a> VerifyReport<'a> {
    pub fn new(suite: &'a str, cfg: &VerifyConfig, outcome: &'a SuiteOutcome) -> Self {
        let mut status_counts: BTreeMap<String, usize> = BTreeMap::new();
        for r in &outcome.records {
            *status_counts.entry(r.status.to_string()).or_default() += 1;
        }
        VerifyReport {
            suite,
            seed: cfg.seed,
            max_n: cfg.max_n,
            failures: outcome.failures,
            status_counts,
            records: &outcome.records,
            counterexamples: &outcome.counterexamples,
        }
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Helper shared with tests: a `VertexSet` from explicit members.
pub fn vertex_set(n: usize, members: &[usize]) -> VertexSet {
    VertexSet::from_indices(n, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_5_verifies_clean() {
        let cfg = VerifyConfig::default();
        let records = verify_family(&FamilySpec::Path { n: 5 }, &cfg);
        assert!(records.iter().all(|r| r.status == Status::Match), "{records:?}");
        // one record per vertex plus gamma_t, compliance, tdi
        assert_eq!(records.len(), 5 + 3);
    }

    #[test]
    fn path_4_markers_agree() {
        let cfg = VerifyConfig::default();
        let records = verify_family(&FamilySpec::Path { n: 4 }, &cfg);
        assert!(records.iter().all(|r| r.status == Status::Match));
        let tdi = records.iter().find(|r| r.quantity == Quantity::Tdi).unwrap();
        assert_eq!(tdi.expected, "undefined");
        assert_eq!(tdi.observed, "undefined");
    }

    #[test]
    fn book_3_exposes_page_vertex_mismatches() {
        let cfg = VerifyConfig::default();
        let records = verify_family(&FamilySpec::Book { n: 3 }, &cfg);
        let mismatches: Vec<_> = records.iter().filter(|r| r.status == Status::Mismatch).collect();
        // six page vertices (claimed 2n = 6, actual 4) plus the TDI (claimed 40, actual 28)
        assert_eq!(mismatches.len(), 7, "{mismatches:?}");
        assert!(mismatches.iter().any(|r| r.quantity == Quantity::Tdi && r.expected == "40" && r.observed == "28"));
    }

    #[test]
    fn cap_produces_skipped_record() {
        let cfg = VerifyConfig { max_n: 8, seed: DEFAULT_SEED };
        let records = verify_family(&FamilySpec::Path { n: 12 }, &cfg);
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].status, Status::Skipped);
        assert!(records[0].observed.contains("cap"));
    }

    #[test]
    fn propositions_flag_star_domination_degree() {
        let cfg = VerifyConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let g = families::generate(&FamilySpec::Star { n: 3 }).unwrap();
        let records = check_propositions("star", "3", &g, &cfg, &mut rng);
        let dd = records
            .iter()
            .find(|r| r.expected.contains("domination_degree"))
            .unwrap();
        assert_eq!(dd.status, Status::BoundViolated);
        // the remaining asserted properties hold on the star
        assert_eq!(count_failures(&records, true), 1);
    }

    #[test]
    fn spanning_pair_examples() {
        let cfg = VerifyConfig::default();
        let solve = |g: &Graph| solver::sweep_minimal_tds(g, cfg.max_n).unwrap();

        // deleting one cycle edge turns C_6 into P_6; both are uniform at 4
        let c6 = families::generate(&FamilySpec::Cycle { n: 6 }).unwrap();
        let p6 = c6.without_edge(5, 0);
        let host = solve(&c6);
        let (records, cex) = check_spanning_pair("cycle(6)", 0, &host, &c6, &p6, &cfg);
        assert!(records.iter().all(|r| r.status == Status::BoundSatisfied), "{records:?}");
        assert!(cex.is_empty());

        // a spanning path of K_4 is non-compliant, so the hypothesis fails
        let k4 = families::generate(&FamilySpec::Complete { n: 4 }).unwrap();
        let spanning_p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let host = solve(&k4);
        let (records, cex) = check_spanning_pair("complete(4)", 0, &host, &k4, &spanning_p4, &cfg);
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].status, Status::NoOracle);
        assert!(cex.is_empty());

        // a wheel minus one rim edge stays compliant; record the comparison
        let w5 = families::generate(&FamilySpec::Wheel { n: 5 }).unwrap();
        let sub = w5.without_edge(1, 2);
        let host = solve(&w5);
        let (records, _) = check_spanning_pair("wheel(5)", 0, &host, &w5, &sub, &cfg);
        assert!(records
            .iter()
            .all(|r| matches!(r.status, Status::BoundSatisfied | Status::NoOracle)));
        assert!(records.iter().any(|r| r.quantity == Quantity::Tdi));
    }

    #[test]
    fn conjecture_suite_is_reproducible() {
        let cfg = VerifyConfig::default();
        let a = suite_conjectures(&cfg);
        let b = suite_conjectures(&cfg);
        assert_eq!(a, b);
        assert_eq!(a.failures, 0);
        let ra = VerifyReport::new("conjectures", &cfg, &a).render_json();
        let rb = VerifyReport::new("conjectures", &cfg, &b).render_json();
        assert_eq!(ra, rb);
    }

    #[test]
    fn csv_shape() {
        let cfg = VerifyConfig::default();
        let records = verify_family(&FamilySpec::Cycle { n: 5 }, &cfg);
        let csv = records_csv(&records);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "subject,params,vertex,quantity,expected,observed,status"
        );
        assert!(csv.contains("cycle,5,0,tdd,3,3,match"));
    }

    #[test]
    fn records_sort_canonically() {
        let mut records = vec![
            rec("b", "1", None, Quantity::Tdi, "1", "1", Status::Match),
            rec("a", "2", Some(3), Quantity::Tdd, "1", "1", Status::Match),
            rec("a", "2", Some(1), Quantity::Tdd, "1", "1", Status::Match),
            rec("a", "2", None, Quantity::GammaT, "1", "1", Status::Match),
        ];
        sort_records(&mut records);
        assert_eq!(records[0].quantity, Quantity::GammaT);
        assert_eq!(records[1].vertex, Some(1));
        assert_eq!(records[3].subject, "b");
    }
}
