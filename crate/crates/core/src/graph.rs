//! Immutable simple undirected graphs with bit-mask adjacency rows.
//!
//! Vertices are dense 0-based indices. Construction validates and
//! deduplicates edges; every exposed operation is pure, so graphs can be
//! shared freely between threads.

use crate::bitset::VertexSet;
use std::collections::VecDeque;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("map is not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph on `n` vertices from unordered edge pairs.
    ///
    /// Duplicate pairs (in either orientation) collapse to one edge.
    /// Self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Ok(Graph { n, m, adj })
    }

    /// Vertex count.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn size(&self) -> usize {
        self.m
    }

    /// Open neighborhood `N(v)`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.adj[v].len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.adj[v].len()).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges in canonical order: pairs `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff some vertex has an empty neighborhood.
    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(VertexSet::is_empty)
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.adj[v].len()).collect();
        d.sort_unstable();
        d
    }

    /// Applies a permutation of the vertex indices: edge `(u, v)` maps to
    /// `(perm[u], perm[v])`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidPermutation(self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(GraphError::InvalidPermutation(self.n));
            }
            seen[p] = true;
        }
        let edges: Vec<(usize, usize)> =
            self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.n, &edges)
    }

    /// Breadth-first hop counts from `v`; `None` marks unreachable vertices.
    pub fn distances(&self, v: usize) -> Vec<Option<usize>> {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances(0).iter().all(Option::is_some)
    }

    /// `(radius, diameter)` of a connected graph.
    pub fn radius_diameter(&self) -> Result<(usize, usize), GraphError> {
        if self.n == 0 || !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut rad = usize::MAX;
        let mut diam = 0;
        for v in 0..self.n {
            let ecc = self
                .distances(v)
                .into_iter()
                .map(|d| d.unwrap())
                .max()
                .unwrap();
            rad = rad.min(ecc);
            diam = diam.max(ecc);
        }
        Ok((rad, diam))
    }

    /// Two-colorability check by BFS layering over every component.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.adj[u].iter() {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Returns the graph with one edge removed, or an identical graph if the
    /// edge is absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| (a, b) != (u.min(v), u.max(v)))
            .collect();
        Graph::from_edge_list(self.n, &edges).expect("removing an edge keeps the graph valid")
    }

    /// Parses the canonical edge-list text format.
    ///
    /// Line 1 is `n m`; the next `m` non-comment lines are `u v` pairs with
    /// `u != v` and both below `n`. Blank lines and lines starting with `#`
    /// are ignored. Duplicate edges and count mismatches are rejected with
    /// the offending line number.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            last_line = line_no;
            let mut fields = line.split_whitespace();
            let a = fields.next();
            let b = fields.next();
            if fields.next().is_some() {
                return Err(GraphError::Parse {
                    line: line_no,
                    msg: format!("expected two integers, got `{line}`"),
                });
            }
            let parse_int = |s: Option<&str>| -> Result<usize, GraphError> {
                s.and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| GraphError::Parse {
                        line: line_no,
                        msg: format!("expected two integers, got `{line}`"),
                    })
            };
            let a = parse_int(a)?;
            let b = parse_int(b)?;
            match header {
                None => header = Some((a, b)),
                Some((n, m)) => {
                    if edges.len() == m {
                        return Err(GraphError::Parse {
                            line: line_no,
                            msg: format!("more than the declared {m} edges"),
                        });
                    }
                    if a == b {
                        return Err(GraphError::Parse {
                            line: line_no,
                            msg: format!("self-loop `{a} {b}`"),
                        });
                    }
                    if a >= n || b >= n {
                        return Err(GraphError::Parse {
                            line: line_no,
                            msg: format!("vertex out of range in `{a} {b}` (order {n})"),
                        });
                    }
                    let e = (a.min(b), a.max(b));
                    if edges.contains(&e) {
                        return Err(GraphError::Parse {
                            line: line_no,
                            msg: format!("duplicate edge `{a} {b}`"),
                        });
                    }
                    edges.push(e);
                }
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: 1,
            msg: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: last_line.max(1),
                msg: format!("declared {m} edges but found {}", edges.len()),
            });
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Canonical edge-list text: `n m` header, then edges sorted
    /// lexicographically with `u < v`, one per line.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.n, self.m).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn from_edge_list_p4() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 3);
        assert_eq!(g.degree_sequence(), vec![1, 1, 2, 2]);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn from_edge_list_empty_and_dedup() {
        let g = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(g.size(), 0);
        assert!(g.has_isolated_vertex());

        let g1 = Graph::from_edge_list(4, &[(0, 1), (1, 0), (1, 2), (2, 3)]).unwrap();
        let g2 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g1, g2);
        assert_eq!(g1.size(), 3);
    }

    #[test]
    fn from_edge_list_rejects() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { v: 2, n: 2 })
        );
    }

    #[test]
    fn neighbors_examples() {
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.neighbors(0).iter().collect::<Vec<_>>(), vec![1, 3]);

        let k5 = Graph::from_edge_list(
            5,
            &(0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(k5.neighbors(2).iter().collect::<Vec<_>>(), vec![0, 1, 3, 4]);

        let star = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.neighbors(0).iter().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn neighbors_out_of_range_panics() {
        path(4).neighbors(4);
    }

    #[test]
    fn isolated_vertex_detection() {
        assert!(!path(4).has_isolated_vertex());
        assert!(Graph::from_edge_list(3, &[]).unwrap().has_isolated_vertex());
        // P_2 plus one isolated vertex
        assert!(Graph::from_edge_list(3, &[(0, 1)]).unwrap().has_isolated_vertex());
    }

    #[test]
    fn relabel_identity_and_reversal() {
        let p3 = path(3);
        assert_eq!(p3.relabel(&[0, 1, 2]).unwrap(), p3);
        let rev = p3.relabel(&[2, 1, 0]).unwrap();
        assert_eq!(rev.degree_sequence(), p3.degree_sequence());
        assert!(rev.has_edge(2, 1) && rev.has_edge(1, 0));
        assert_eq!(
            p3.relabel(&[0, 0, 1]),
            Err(GraphError::InvalidPermutation(3))
        );
        assert_eq!(p3.relabel(&[0, 1]), Err(GraphError::InvalidPermutation(3)));
    }

    #[test]
    fn distances_examples() {
        let p5 = path(5);
        assert_eq!(
            p5.distances(0),
            vec![Some(0), Some(1), Some(2), Some(3), Some(4)]
        );
        let c6 = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(
            c6.distances(0),
            vec![Some(0), Some(1), Some(2), Some(3), Some(2), Some(1)]
        );
        let two_paths = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_paths.distances(0)[2], None);
    }

    #[test]
    fn radius_diameter_examples() {
        assert_eq!(path(5).radius_diameter().unwrap(), (2, 4));
        let c6 = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(c6.radius_diameter().unwrap(), (3, 3));
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.radius_diameter().unwrap(), (1, 1));
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.radius_diameter(), Err(GraphError::Disconnected));
    }

    #[test]
    fn parse_examples() {
        let g = Graph::parse("4 3\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(g, path(4));
        // comments and blank lines are ignored
        let g = Graph::parse("# a path\n\n4 3\n0 1\n# middle\n1 2\n2 3\n").unwrap();
        assert_eq!(g, path(4));
    }

    #[test]
    fn parse_rejects_with_line_numbers() {
        match Graph::parse("2 1\n0 0") {
            Err(GraphError::Parse { line, msg }) => {
                assert_eq!(line, 2);
                assert!(msg.contains("self-loop"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match Graph::parse("3 2\n0 1") {
            Err(GraphError::Parse { line: _, msg }) => assert!(msg.contains("declared 2")),
            other => panic!("expected count mismatch, got {other:?}"),
        }
        match Graph::parse("2 1\n0 1\n0 1") {
            Err(GraphError::Parse { line, msg }) => {
                assert_eq!(line, 3);
                assert!(msg.contains("more than the declared"), "{msg}");
            }
            other => panic!("expected extra-edge error, got {other:?}"),
        }
        assert!(Graph::parse("").is_err());
    }

    #[test]
    fn serialize_canonical_round_trip() {
        let g = Graph::from_edge_list(4, &[(2, 3), (1, 2), (0, 1)]).unwrap();
        let text = g.to_edge_list_text();
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(Graph::parse(&text).unwrap(), g);
    }

    #[test]
    fn bipartite_check() {
        assert!(path(5).is_bipartite());
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!c5.is_bipartite());
    }

    #[test]
    fn without_edge() {
        let g = path(4).without_edge(1, 2);
        assert_eq!(g.size(), 2);
        assert!(!g.has_edge(1, 2));
        assert_eq!(g.order(), 4);
    }
}
