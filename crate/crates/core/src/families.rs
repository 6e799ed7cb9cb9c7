//! Deterministic generators for the named graph families.
//!
//! Every generator fixes an explicit 0-based vertex layout; the closed-form
//! expectations in [`crate::oracle`] address vertices through these layouts,
//! so they are part of the contract:
//!
//! * `path`/`cycle`: vertices `0..n` in traversal order, the cycle closing
//!   `n-1 -> 0`.
//! * `complete_bipartite(m, n)`: part A is `0..m`, part B is `m..m+n`.
//! * `star(n)`: hub `0`, leaves `1..=n`.
//! * `wheel(n)`: hub `0`, rim `1..=n` in cycle order.
//! * `book(n)`: centers `0` and `1` joined by the spine; page `i` in `1..=n`
//!   contributes `2i` (adjacent to `0`) and `2i+1` (adjacent to `1`), joined
//!   to each other.
//! * `windmill(p, q)`: center `0`; blade `i` in `1..=q` occupies
//!   `1+(i-1)(p-1) ..= i(p-1)` and forms a `K_p` with the center.
//! * `kragujevac(s_1..s_t)`: center `0`; each branch lays out its root first,
//!   then `s_i` pendant root-middle-leaf paths as alternating middle/leaf
//!   indices.
//! * `petersen`/`grotzsch`/`herschel`: fixed adjacency constants.

use crate::graph::Graph;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family}: {msg}")]
    InvalidParameter { family: &'static str, msg: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family}: expected {expected}, got {got} parameter(s)")]
    ParameterCount {
        family: &'static str,
        expected: &'static str,
        got: usize,
    },
}

/// Symbolic description of a generated family instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Star { n: usize },
    Wheel { n: usize },
    Book { n: usize },
    Windmill { p: usize, q: usize },
    Kragujevac { branches: Vec<usize> },
    Petersen,
    Grotzsch,
    Herschel,
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::Book { .. } => "book",
            FamilySpec::Windmill { .. } => "windmill",
            FamilySpec::Kragujevac { .. } => "kragujevac",
            FamilySpec::Petersen => "petersen",
            FamilySpec::Grotzsch => "grotzsch",
            FamilySpec::Herschel => "herschel",
        }
    }

    /// Space-separated parameter string, e.g. `"3 2"` or `"[2 2]"`.
    pub fn params_string(&self) -> String {
        match self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Star { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Book { n } => n.to_string(),
            FamilySpec::CompleteBipartite { m, n } => format!("{m} {n}"),
            FamilySpec::Windmill { p, q } => format!("{p} {q}"),
            FamilySpec::Kragujevac { branches } => {
                let inner: Vec<String> = branches.iter().map(|s| s.to_string()).collect();
                format!("[{}]", inner.join(" "))
            }
            _ => String::new(),
        }
    }

    /// Builds a spec from a CLI-style family name and integer parameters.
    pub fn from_cli(name: &str, params: &[usize]) -> Result<FamilySpec, FamilyError> {
        let want_one = |family: &'static str| -> Result<usize, FamilyError> {
            if params.len() == 1 {
                Ok(params[0])
            } else {
                Err(FamilyError::ParameterCount {
                    family,
                    expected: "1",
                    got: params.len(),
                })
            }
        };
        let want_two = |family: &'static str| -> Result<(usize, usize), FamilyError> {
            if params.len() == 2 {
                Ok((params[0], params[1]))
            } else {
                Err(FamilyError::ParameterCount {
                    family,
                    expected: "2",
                    got: params.len(),
                })
            }
        };
        let want_none = |family: &'static str| -> Result<(), FamilyError> {
            if params.is_empty() {
                Ok(())
            } else {
                Err(FamilyError::ParameterCount {
                    family,
                    expected: "0",
                    got: params.len(),
                })
            }
        };
        match name {
            "path" => Ok(FamilySpec::Path { n: want_one("path")? }),
            "cycle" => Ok(FamilySpec::Cycle { n: want_one("cycle")? }),
            "complete" => Ok(FamilySpec::Complete { n: want_one("complete")? }),
            "complete_bipartite" => {
                let (m, n) = want_two("complete_bipartite")?;
                Ok(FamilySpec::CompleteBipartite { m, n })
            }
            "star" => Ok(FamilySpec::Star { n: want_one("star")? }),
            "wheel" => Ok(FamilySpec::Wheel { n: want_one("wheel")? }),
            "book" => Ok(FamilySpec::Book { n: want_one("book")? }),
            "windmill" => {
                let (p, q) = want_two("windmill")?;
                Ok(FamilySpec::Windmill { p, q })
            }
            "kragujevac" => {
                if params.is_empty() {
                    return Err(FamilyError::ParameterCount {
                        family: "kragujevac",
                        expected: "at least 2",
                        got: 0,
                    });
                }
                Ok(FamilySpec::Kragujevac {
                    branches: params.to_vec(),
                })
            }
            "petersen" => {
                want_none("petersen")?;
                Ok(FamilySpec::Petersen)
            }
            "grotzsch" => {
                want_none("grotzsch")?;
                Ok(FamilySpec::Grotzsch)
            }
            "herschel" => {
                want_none("herschel")?;
                Ok(FamilySpec::Herschel)
            }
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params_string();
        if params.is_empty() {
            write!(f, "{}", self.name())
        } else {
            write!(f, "{}({})", self.name(), params.replace(' ', ","))
        }
    }
}

fn reject(family: &'static str, msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter {
        family,
        msg: msg.into(),
    }
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
const PETERSEN_EDGES: [(usize, usize); 15] = [
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
];

/// 11 vertices, 20 edges: 5-cycle `0..5`, one shadow per cycle vertex at
/// `5+i` adjacent to the cycle neighbors of `i`, apex `10` adjacent to all
/// shadows.
const GROTZSCH_EDGES: [(usize, usize); 20] = [
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (5, 1), (5, 4), (6, 2), (6, 0), (7, 3),
    (7, 1), (8, 4), (8, 2), (9, 0), (9, 3),
    (5, 10), (6, 10), (7, 10), (8, 10), (9, 10),
];

/// 11 vertices, 18 edges; bipartite, three vertices of degree 4 (2, 3, 10),
/// radius 3, diameter 4.
const HERSCHEL_EDGES: [(usize, usize); 18] = [
    (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5),
    (2, 6), (2, 7), (3, 8), (3, 9), (4, 6), (4, 8),
    (5, 7), (5, 9), (6, 10), (7, 10), (8, 10), (9, 10),
];

/// Generates the graph described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let edges: Vec<(usize, usize)>;
    let order: usize;
    match spec {
        FamilySpec::Path { n } => {
            if *n < 1 {
                return Err(reject("path", "requires n >= 1"));
            }
            order = *n;
            edges = (0..n - 1).map(|i| (i, i + 1)).collect();
        }
        FamilySpec::Cycle { n } => {
            if *n < 3 {
                return Err(reject("cycle", "requires n >= 3"));
            }
            order = *n;
            edges = (0..*n).map(|i| (i, (i + 1) % n)).collect();
        }
        FamilySpec::Complete { n } => {
            if *n < 1 {
                return Err(reject("complete", "requires n >= 1"));
            }
            order = *n;
            edges = all_pairs(0..*n);
        }
        FamilySpec::CompleteBipartite { m, n } => {
            if *m < 1 || *n < 1 {
                return Err(reject("complete_bipartite", "requires m, n >= 1"));
            }
            order = m + n;
            edges = (0..*m)
                .flat_map(|u| (0..*n).map(move |v| (u, m + v)))
                .collect();
        }
        FamilySpec::Star { n } => {
            if *n < 1 {
                return Err(reject("star", "requires n >= 1"));
            }
            order = n + 1;
            edges = (1..=*n).map(|v| (0, v)).collect();
        }
        FamilySpec::Wheel { n } => {
            if *n < 3 {
                return Err(reject("wheel", "requires n >= 3"));
            }
            order = n + 1;
            let mut e: Vec<(usize, usize)> = (1..=*n).map(|v| (0, v)).collect();
            e.extend((1..*n).map(|v| (v, v + 1)));
            e.push((*n, 1));
            edges = e;
        }
        FamilySpec::Book { n } => {
            if *n < 1 {
                return Err(reject("book", "requires n >= 1"));
            }
            order = 2 * n + 2;
            let mut e = vec![(0, 1)];
            for i in 1..=*n {
                e.push((0, 2 * i));
                e.push((1, 2 * i + 1));
                e.push((2 * i, 2 * i + 1));
            }
            edges = e;
        }
        FamilySpec::Windmill { p, q } => {
            if *p < 2 {
                return Err(reject("windmill", "requires p >= 2"));
            }
            if *q < 1 {
                return Err(reject("windmill", "requires q >= 1"));
            }
            order = q * (p - 1) + 1;
            let mut e = Vec::new();
            for i in 1..=*q {
                let lo = 1 + (i - 1) * (p - 1);
                let blade: Vec<usize> =
                    std::iter::once(0).chain(lo..lo + (p - 1)).collect();
                for (ai, &a) in blade.iter().enumerate() {
                    for &b in &blade[ai + 1..] {
                        e.push((a, b));
                    }
                }
            }
            edges = e;
        }
        FamilySpec::Kragujevac { branches } => {
            if branches.len() < 2 {
                return Err(reject("kragujevac", "requires at least 2 branches"));
            }
            if branches.iter().any(|&s| s < 1) {
                return Err(reject("kragujevac", "every branch needs s_i >= 1"));
            }
            let mut e = Vec::new();
            let mut next = 1;
            for &s in branches {
                let root = next;
                next += 1;
                e.push((0, root));
                for _ in 0..s {
                    let mid = next;
                    let leaf = next + 1;
                    next += 2;
                    e.push((root, mid));
                    e.push((mid, leaf));
                }
            }
            order = next;
            edges = e;
        }
        FamilySpec::Petersen => {
            order = 10;
            edges = PETERSEN_EDGES.to_vec();
        }
        FamilySpec::Grotzsch => {
            order = 11;
            edges = GROTZSCH_EDGES.to_vec();
        }
        FamilySpec::Herschel => {
            order = 11;
            edges = HERSCHEL_EDGES.to_vec();
        }
    }
    Ok(Graph::from_edge_list(order, &edges).expect("family layouts are valid"))
}

fn all_pairs(range: std::ops::Range<usize>) -> Vec<(usize, usize)> {
    let v: Vec<usize> = range.collect();
    let mut out = Vec::new();
    for (i, &a) in v.iter().enumerate() {
        for &b in &v[i + 1..] {
            out.push((a, b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructs;

    fn gen(name: &str, params: &[usize]) -> Graph {
        generate(&FamilySpec::from_cli(name, params).unwrap()).unwrap()
    }

    #[test]
    fn book_1_is_c4() {
        let b1 = gen("book", &[1]);
        assert_eq!(b1.order(), 4);
        assert_eq!(b1.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn windmill_3_2() {
        let g = gen("windmill", &[3, 2]);
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 6);
        assert_eq!(g.degree(0), 4);
    }

    #[test]
    fn windmill_with_p2_is_star() {
        assert_eq!(gen("windmill", &[2, 4]), gen("star", &[4]));
    }

    #[test]
    fn kragujevac_order_formula() {
        for branches in [vec![2, 2], vec![1, 1], vec![1, 2, 3]] {
            let g = generate(&FamilySpec::Kragujevac {
                branches: branches.clone(),
            })
            .unwrap();
            let expect = 1 + branches.iter().map(|s| 2 * s + 1).sum::<usize>();
            assert_eq!(g.order(), expect, "branches {branches:?}");
            assert_eq!(g.size(), g.order() - 1);
            assert_eq!(g.degree(0), branches.len());
        }
        // the two-branch, two-path instance from the worked example
        let g = gen("kragujevac", &[2, 2]);
        assert_eq!(g.order(), 11);
        assert_eq!(g.neighbors(0).iter().collect::<Vec<_>>(), vec![1, 6]);
        assert_eq!(g.neighbors(1).iter().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(g.neighbors(3).iter().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn petersen_constants() {
        let g = gen("petersen", &[]);
        assert_eq!(g.order(), 10);
        assert_eq!(g.size(), 15);
        assert!(g.degree_sequence().iter().all(|&d| d == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn grotzsch_constants() {
        let g = gen("grotzsch", &[]);
        assert_eq!((g.order(), g.size()), (11, 20));
        assert_eq!(g.degree_sequence(), vec![3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5]);
        assert!(!g.is_bipartite());
        assert!(g.is_connected());
    }

    #[test]
    fn herschel_constants() {
        let g = gen("herschel", &[]);
        assert_eq!((g.order(), g.size()), (11, 18));
        assert_eq!(g.degree_sequence(), vec![3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4]);
        assert!(g.is_bipartite());
        assert_eq!(g.radius_diameter().unwrap(), (3, 4));
        // 3-connected: removing any two vertices keeps the rest connected
        for a in 0..11 {
            for b in a + 1..11 {
                let keep: Vec<usize> = (0..11).filter(|&v| v != a && v != b).collect();
                let index = |v: usize| keep.iter().position(|&k| k == v).unwrap();
                let edges: Vec<(usize, usize)> = g
                    .edges()
                    .into_iter()
                    .filter(|&(u, v)| u != a && u != b && v != a && v != b)
                    .map(|(u, v)| (index(u), index(v)))
                    .collect();
                let sub = Graph::from_edge_list(9, &edges).unwrap();
                assert!(sub.is_connected(), "removing {{{a},{b}}} disconnects");
            }
        }
    }

    #[test]
    fn closed_form_orders_and_sizes() {
        for n in 1..=4 {
            let b = gen("book", &[n]);
            assert_eq!(b.order(), 2 * n + 2);
            assert_eq!(b.size(), 3 * n + 1);
        }
        for (p, q) in [(2, 3), (3, 2), (4, 3)] {
            let w = gen("windmill", &[p, q]);
            assert_eq!(w.order(), q * (p - 1) + 1);
            assert_eq!(w.size(), q * p * (p - 1) / 2);
        }
        for n in 3..=6 {
            assert_eq!(gen("wheel", &[n]).order(), n + 1);
            assert_eq!(gen("wheel", &[n]).size(), 2 * n);
        }
    }

    #[test]
    fn book_matches_cartesian_product_of_star_and_p2() {
        for n in 1..=4 {
            let book = gen("book", &[n]);
            let prod = constructs::cartesian_product(&gen("star", &[n]), &gen("path", &[2]));
            assert_eq!(book.order(), prod.order());
            assert_eq!(book.size(), prod.size());
            assert_eq!(book.degree_sequence(), prod.degree_sequence());
        }
    }

    #[test]
    fn wheel_matches_join_of_k1_and_cycle() {
        for n in 3..=6 {
            let wheel = gen("wheel", &[n]);
            let join = constructs::join(&gen("complete", &[1]), &gen("cycle", &[n]));
            assert_eq!(wheel, join);
        }
    }

    #[test]
    fn parameter_rejection() {
        assert!(generate(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(generate(&FamilySpec::Windmill { p: 1, q: 2 }).is_err());
        assert!(generate(&FamilySpec::Kragujevac { branches: vec![2] }).is_err());
        assert!(generate(&FamilySpec::Kragujevac { branches: vec![2, 0] }).is_err());
        assert!(FamilySpec::from_cli("mobius", &[3]).is_err());
        assert!(FamilySpec::from_cli("path", &[1, 2]).is_err());
    }

    #[test]
    fn display_and_params() {
        assert_eq!(FamilySpec::Windmill { p: 3, q: 2 }.to_string(), "windmill(3,2)");
        assert_eq!(
            FamilySpec::Kragujevac { branches: vec![2, 2] }.params_string(),
            "[2 2]"
        );
        assert_eq!(FamilySpec::Petersen.to_string(), "petersen");
    }
}
