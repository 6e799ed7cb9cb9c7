//! Shared test support: a definition-literal brute-force oracle that stays
//! independent of the solver's mask pipeline, plus seeded graph generation.

use totaldom::graph::Graph;
use totaldom::solver::DominationReport;
use totaldom::verify::{ChaCha8Rng, RngCore};

/// Filters all `2^n` subsets with adjacency-list scans and single-removal
/// minimality checks; aggregates the report exactly by definition.
pub fn naive_sweep(g: &Graph) -> DominationReport {
    let n = g.order();
    assert!((1..=20).contains(&n), "naive oracle is for desk-scale graphs");
    assert!(!g.has_isolated_vertex(), "total domination needs no isolated vertices");
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().collect()).collect();
    let is_tds = |mask: u64| (0..n).all(|v| adj[v].iter().any(|&w| mask >> w & 1 == 1));

    let mut tdd: Vec<Option<usize>> = vec![None; n];
    let mut gamma_t: Option<usize> = None;
    let mut upper = 0usize;
    for mask in 0u64..(1u64 << n) {
        if !is_tds(mask) {
            continue;
        }
        let k = mask.count_ones() as usize;
        if gamma_t.is_none_or(|g| k < g) {
            gamma_t = Some(k);
        }
        let minimal =
            (0..n).filter(|&v| mask >> v & 1 == 1).all(|v| !is_tds(mask & !(1 << v)));
        if !minimal {
            continue;
        }
        upper = upper.max(k);
        for (v, slot) in tdd.iter_mut().enumerate() {
            if mask >> v & 1 == 1 {
                *slot = Some(slot.map_or(k, |t| t.min(k)));
            }
        }
    }

    let values: Vec<usize> = tdd.iter().flatten().copied().collect();
    let compliant = values.len() == n;
    let min_tdd = *values.iter().min().expect("some minimal TDS exists");
    let max_tdd = *values.iter().max().unwrap();
    DominationReport {
        per_vertex_tdd: tdd,
        gamma_t: gamma_t.expect("some TDS exists"),
        upper_gamma_t: upper,
        min_tdd,
        max_tdd,
        compliant,
        tdi: compliant.then(|| values.iter().sum()),
        is_tdr: compliant && min_tdd == max_tdd,
    }
}

/// Smallest minimal dominating set containing `v`, by the same literal
/// filter over all subsets.
#[allow(dead_code)]
pub fn naive_domination_degree(g: &Graph, v: usize) -> usize {
    let n = g.order();
    assert!(n <= 20);
    let adj: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).iter().collect()).collect();
    let is_ds = |mask: u64| {
        (0..n).all(|u| mask >> u & 1 == 1 || adj[u].iter().any(|&w| mask >> w & 1 == 1))
    };
    let mut best = usize::MAX;
    for mask in 0u64..(1u64 << n) {
        if mask >> v & 1 == 0 || !is_ds(mask) {
            continue;
        }
        let minimal =
            (0..n).filter(|&u| mask >> u & 1 == 1).all(|u| !is_ds(mask & !(1 << u)));
        if minimal {
            best = best.min(mask.count_ones() as usize);
        }
    }
    assert_ne!(best, usize::MAX, "every vertex lies in some minimal DS");
    best
}

pub fn pick(rng: &mut ChaCha8Rng, m: usize) -> usize {
    (rng.next_u64() % m as u64) as usize
}

/// Connected graph on `min_n..=max_n` vertices: a random attachment tree
/// plus extra edges with probability 3/10.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    let n = min_n + pick(rng, max_n - min_n + 1);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (pick(rng, v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if pick(rng, 10) < 3 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("generated edges are valid")
}
