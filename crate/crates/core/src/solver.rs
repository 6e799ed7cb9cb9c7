//! Exact engine for total domination: predicates, enumeration of minimal
//! (total) dominating sets, per-vertex total domination degrees, and the
//! total domination index.
//!
//! Enumeration iterates subset cardinality `k` upward from 2 (1 for plain
//! domination) and, within each `k`, visits `k`-subsets in ascending mask
//! order. Scanning the whole space costs `Θ(2^n · n)` word operations, so a
//! practical order cap (default 24, see [`DEFAULT_MAX_N`]) guards every
//! enumeration entry point. Minimality is decided by the private-neighbor
//! characterization: `S` is a minimal TDS iff it is a TDS and every `u ∈ S`
//! has a vertex `w` with `N(w) ∩ S = {u}`; removing `u` strands exactly such
//! a `w`, so this matches the no-proper-subset definition.
//!
//! The cardinality sweep may be partitioned across worker threads. Partial
//! results merge by pointwise minimum over `(cardinality, mask)` pairs, which
//! is associative and commutative, so reports and witnesses are identical
//! for every worker count.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use rayon::prelude::*;
use serde_json::json;
use std::fmt::Write as _;
use thiserror::Error;

/// Default order cap for enumeration entry points.
pub const DEFAULT_MAX_N: usize = 24;

/// Hard ceiling: subsets are enumerated as single 64-bit masks.
const ENUM_LIMIT: usize = 63;

/// Masks generated per streaming block.
const BLOCK: usize = 1 << 14;
/// Minimum block length worth handing to the thread pool.
const PAR_MIN: usize = 1 << 11;
/// Masks per parallel chunk.
const CHUNK: usize = 1 << 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("total domination is undefined: the graph has an isolated vertex")]
    IsolatedVertex,
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("order {n} exceeds the solver cap {cap}; raise it with --max-n")]
    CapExceeded { n: usize, cap: usize },
    #[error("order {0} exceeds the {ENUM_LIMIT}-vertex enumeration limit")]
    TooLarge(usize),
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
}

/// A minimal (total) dominating set witnessing a degree value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub vertex: usize,
    pub witness: VertexSet,
}

impl Certificate {
    /// The degree value this certificate witnesses.
    pub fn value(&self) -> usize {
        self.witness.len()
    }

    /// True iff the witness is a minimal TDS of `g` containing the vertex.
    pub fn check_total(&self, g: &Graph) -> bool {
        self.witness.contains(self.vertex)
            && is_minimal_tds(g, &self.witness).unwrap_or(false)
    }

    /// True iff the witness is a minimal dominating set of `g` containing
    /// the vertex.
    pub fn check_plain(&self, g: &Graph) -> bool {
        self.witness.contains(self.vertex) && is_minimal_ds(g, &self.witness)
    }
}

/// Aggregated results of a full minimal-TDS sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationReport {
    /// Per-vertex total domination degree; `None` marks a non-compliant
    /// vertex (one contained in no minimal TDS).
    pub per_vertex_tdd: Vec<Option<usize>>,
    /// Minimum cardinality of a TDS.
    pub gamma_t: usize,
    /// Maximum cardinality of a minimal TDS.
    pub upper_gamma_t: usize,
    /// Minimum TDD over compliant vertices (`δ_td`).
    pub min_tdd: usize,
    /// Maximum TDD over compliant vertices (`Δ_td`).
    pub max_tdd: usize,
    /// True iff every vertex is compliant.
    pub compliant: bool,
    /// Sum of all TDDs; defined exactly when the graph is compliant.
    pub tdi: Option<usize>,
    /// True iff the graph is compliant and all TDDs are equal.
    pub is_tdr: bool,
}

impl DominationReport {
    pub fn order(&self) -> usize {
        self.per_vertex_tdd.len()
    }

    /// Indices of non-compliant vertices.
    pub fn non_compliant_vertices(&self) -> Vec<usize> {
        self.per_vertex_tdd
            .iter()
            .enumerate()
            .filter_map(|(v, t)| t.is_none().then_some(v))
            .collect()
    }
}

/// A sweep's report plus one witness per compliant vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepResult {
    pub report: DominationReport,
    pub certificates: Vec<Option<Certificate>>,
}

fn validate(g: &Graph, max_n: usize) -> Result<(), SolverError> {
    let n = g.order();
    if n == 0 {
        return Err(SolverError::EmptyGraph);
    }
    if n > max_n {
        return Err(SolverError::CapExceeded { n, cap: max_n });
    }
    if n > ENUM_LIMIT {
        return Err(SolverError::TooLarge(n));
    }
    Ok(())
}

fn validate_total(g: &Graph, max_n: usize) -> Result<(), SolverError> {
    if g.has_isolated_vertex() {
        return Err(SolverError::IsolatedVertex);
    }
    validate(g, max_n)
}

fn open_rows(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbors(v).low_word()).collect()
}

fn closed_rows(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|v| g.neighbors(v).low_word() | (1u64 << v))
        .collect()
}

/// One pass over the rows: `Some(true)` minimal TDS, `Some(false)` TDS but
/// not minimal, `None` not a TDS. Works for plain domination when fed
/// closed rows.
#[inline]
fn classify(rows: &[u64], s: u64) -> Option<bool> {
    let mut private = 0u64;
    for &row in rows {
        let t = row & s;
        if t == 0 {
            return None;
        }
        if t & (t - 1) == 0 {
            private |= t;
        }
    }
    // private ⊆ s always; minimal iff every member owns a private neighbor
    Some(private == s)
}

/// Ascending enumeration of `k`-subsets of `0..bits` as masks (Gosper's
/// hack). `k == 0` yields the empty mask once.
struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

fn k_subsets(bits: usize, k: usize) -> KSubsets {
    assert!(bits <= ENUM_LIMIT);
    if k > bits {
        return KSubsets { next: None, limit: 0 };
    }
    KSubsets {
        next: Some(if k == 0 { 0 } else { (1u64 << k) - 1 }),
        limit: 1u64 << bits,
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let t = cur | (cur - 1);
            let succ = (t + 1) | (((!t & (t + 1)) - 1) >> (cur.trailing_zeros() + 1));
            (succ < self.limit).then_some(succ)
        };
        Some(cur)
    }
}

/// Inserts a bit at position `v`, shifting higher slot bits up. Maps a mask
/// over the `n-1` vertices other than `v` to a full mask containing `v`.
#[inline]
fn splice(slot_mask: u64, v: usize) -> u64 {
    let below = slot_mask & ((1u64 << v) - 1);
    let above = (slot_mask >> v) << (v + 1);
    below | above | (1u64 << v)
}

/// Scan outcome for one batch of equal-cardinality masks: whether any
/// minimal set was found, and per vertex the smallest witnessing mask.
struct Batch {
    found: bool,
    first: Vec<Option<u64>>,
}

impl Batch {
    fn empty(n: usize) -> Batch {
        Batch {
            found: false,
            first: vec![None; n],
        }
    }

    fn merge(mut self, other: Batch) -> Batch {
        self.found |= other.found;
        for (a, b) in self.first.iter_mut().zip(other.first) {
            *a = match (*a, b) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            };
        }
        self
    }
}

fn scan(rows: &[u64], masks: &[u64]) -> Batch {
    let mut batch = Batch::empty(rows.len());
    for &s in masks {
        if classify(rows, s) != Some(true) {
            continue;
        }
        batch.found = true;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if batch.first[v].is_none() {
                batch.first[v] = Some(s);
            }
        }
    }
    batch
}

/// Enumerates every minimal TDS of `g` by ascending cardinality and
/// aggregates `γ_t`, `Γ_t`, per-vertex TDDs with witnesses, compliance,
/// `δ_td`, `Δ_td`, the TDI, and total domination regularity.
pub fn sweep_minimal_tds(g: &Graph, max_n: usize) -> Result<SweepResult, SolverError> {
    validate_total(g, max_n)?;
    let n = g.order();
    let rows = open_rows(g);

    let mut gamma_t = None;
    let mut upper = None;
    let mut tdd: Vec<Option<usize>> = vec![None; n];
    let mut witness: Vec<Option<u64>> = vec![None; n];

    let mut block: Vec<u64> = Vec::with_capacity(BLOCK);
    for k in 2..=n {
        let mut subsets = k_subsets(n, k);
        loop {
            block.clear();
            block.extend(subsets.by_ref().take(BLOCK));
            if block.is_empty() {
                break;
            }
            let batch = if block.len() >= PAR_MIN {
                block
                    .par_chunks(CHUNK)
                    .map(|chunk| scan(&rows, chunk))
                    .reduce(|| Batch::empty(n), Batch::merge)
            } else {
                scan(&rows, &block)
            };
            if batch.found {
                gamma_t.get_or_insert(k);
                upper = Some(k);
            }
            for v in 0..n {
                if tdd[v].is_none() {
                    if let Some(mask) = batch.first[v] {
                        tdd[v] = Some(k);
                        witness[v] = Some(mask);
                    }
                }
            }
        }
    }

    let gamma_t = gamma_t.expect("a graph without isolated vertices has a total dominating set");
    let upper_gamma_t = upper.unwrap();
    let values: Vec<usize> = tdd.iter().flatten().copied().collect();
    let compliant = values.len() == n;
    let min_tdd = *values.iter().min().unwrap();
    let max_tdd = *values.iter().max().unwrap();
    let certificates = witness
        .iter()
        .enumerate()
        .map(|(v, w)| {
            w.map(|mask| Certificate {
                vertex: v,
                witness: VertexSet::from_mask(n, mask),
            })
        })
        .collect();

    Ok(SweepResult {
        report: DominationReport {
            per_vertex_tdd: tdd,
            gamma_t,
            upper_gamma_t,
            min_tdd,
            max_tdd,
            compliant,
            tdi: compliant.then(|| values.iter().sum()),
            is_tdr: compliant && min_tdd == max_tdd,
        },
        certificates,
    })
}

/// Total domination degree of one vertex: the smallest minimal TDS
/// containing it, or `None` when the vertex is non-compliant. Explores
/// cardinalities in ascending order and stops at the first witnessed size.
pub fn tdd(g: &Graph, v: usize, max_n: usize) -> Result<Option<Certificate>, SolverError> {
    validate_total(g, max_n)?;
    let n = g.order();
    if v >= n {
        return Err(SolverError::VertexOutOfRange { v, n });
    }
    let rows = open_rows(g);
    for k in 2..=n {
        for slots in k_subsets(n - 1, k - 1) {
            let s = splice(slots, v);
            if classify(&rows, s) == Some(true) {
                return Ok(Some(Certificate {
                    vertex: v,
                    witness: VertexSet::from_mask(n, s),
                }));
            }
        }
    }
    Ok(None)
}

/// Domination degree of one vertex: the smallest minimal dominating set
/// containing it. Always defined: `{v} ∪ (V ∖ N[v])` dominates, and `v` is
/// its own closed private neighbor throughout any reduction to minimality.
pub fn domination_degree(g: &Graph, v: usize, max_n: usize) -> Result<Certificate, SolverError> {
    validate(g, max_n)?;
    let n = g.order();
    if v >= n {
        return Err(SolverError::VertexOutOfRange { v, n });
    }
    let rows = closed_rows(g);
    for k in 1..=n {
        for slots in k_subsets(n - 1, k - 1) {
            let s = splice(slots, v);
            if classify(&rows, s) == Some(true) {
                return Ok(Certificate {
                    vertex: v,
                    witness: VertexSet::from_mask(n, s),
                });
            }
        }
    }
    unreachable!("every vertex of every graph lies in some minimal dominating set")
}

/// Minimum cardinality of a TDS, by ascending search (no minimality test
/// needed: a smallest TDS is automatically minimal).
pub fn gamma_t(g: &Graph, max_n: usize) -> Result<usize, SolverError> {
    validate_total(g, max_n)?;
    let n = g.order();
    let rows = open_rows(g);
    for k in 2..=n {
        for s in k_subsets(n, k) {
            if rows.iter().all(|&row| row & s != 0) {
                return Ok(k);
            }
        }
    }
    unreachable!("a graph without isolated vertices has a total dominating set")
}

/// Maximum cardinality of a minimal TDS (requires the full sweep).
pub fn upper_gamma_t(g: &Graph, max_n: usize) -> Result<usize, SolverError> {
    Ok(sweep_minimal_tds(g, max_n)?.report.upper_gamma_t)
}

/// True iff every vertex of `g` has a neighbor in `s`.
pub fn is_tds(g: &Graph, s: &VertexSet) -> Result<bool, SolverError> {
    if g.has_isolated_vertex() {
        return Err(SolverError::IsolatedVertex);
    }
    Ok((0..g.order()).all(|v| g.neighbors(v).intersects(s)))
}

/// True iff `s` is a TDS and no proper subset of it is, decided by the
/// open-private-neighbor test.
pub fn is_minimal_tds(g: &Graph, s: &VertexSet) -> Result<bool, SolverError> {
    if !is_tds(g, s)? {
        return Ok(false);
    }
    let n = g.order();
    let mut private = VertexSet::empty(n);
    for w in 0..n {
        let t = g.neighbors(w).intersection(s);
        if t.len() == 1 {
            private = private.union(&t);
        }
    }
    Ok(s.is_subset_of(&private))
}

/// True iff `N[s] = V`: every vertex is in `s` or adjacent to it.
pub fn is_ds(g: &Graph, s: &VertexSet) -> bool {
    (0..g.order()).all(|v| s.contains(v) || g.neighbors(v).intersects(s))
}

/// True iff `s` dominates and every member has a closed private neighbor.
pub fn is_minimal_ds(g: &Graph, s: &VertexSet) -> bool {
    if !is_ds(g, s) {
        return false;
    }
    let n = g.order();
    let mut private = VertexSet::empty(n);
    for w in 0..n {
        let mut closed = g.neighbors(w).clone();
        closed.insert(w);
        let t = closed.intersection(s);
        if t.len() == 1 {
            private = private.union(&t);
        }
    }
    s.is_subset_of(&private)
}

/// JSON rendering of a sweep with explicit `"non_compliant"` markers.
pub fn report_json(result: &SweepResult, include_witnesses: bool) -> serde_json::Value {
    let r = &result.report;
    let per_vertex: Vec<serde_json::Value> = r
        .per_vertex_tdd
        .iter()
        .map(|t| match t {
            Some(v) => json!(v),
            None => json!("non_compliant"),
        })
        .collect();
    let mut obj = json!({
        "order": r.order(),
        "gamma_t": r.gamma_t,
        "upper_gamma_t": r.upper_gamma_t,
        "delta_td": r.min_tdd,
        "Delta_td": r.max_tdd,
        "compliant": r.compliant,
        "tdi": r.tdi,
        "is_tdr": r.is_tdr,
        "per_vertex_tdd": per_vertex,
    });
    if include_witnesses {
        let witnesses: Vec<serde_json::Value> = result
            .certificates
            .iter()
            .map(|c| match c {
                Some(cert) => json!(cert.witness.iter().collect::<Vec<_>>()),
                None => serde_json::Value::Null,
            })
            .collect();
        obj["witnesses"] = json!(witnesses);
    }
    obj
}

/// CSV rendering: `vertex,tdd,compliant,witness`, one row per vertex.
pub fn report_csv(result: &SweepResult) -> String {
    let mut out = String::from("vertex,tdd,compliant,witness\n");
    for (v, t) in result.report.per_vertex_tdd.iter().enumerate() {
        match t {
            Some(val) => {
                let witness = result.certificates[v]
                    .as_ref()
                    .map(|c| c.witness.to_index_string())
                    .unwrap_or_default();
                writeln!(out, "{v},{val},true,{witness}").unwrap();
            }
            None => writeln!(out, "{v},non_compliant,false,").unwrap(),
        }
    }
    out
}
