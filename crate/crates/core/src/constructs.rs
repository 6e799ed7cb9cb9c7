//! Graph operations: disjoint union, join, composition (lexicographic
//! product), corona, Cartesian product, subdivision, and degree splitting.
//!
//! The index layout of every construct is a frozen contract so closed-form
//! expectations can address specific vertices:
//!
//! * binary operations keep the first operand at `0..n1` and shift the second
//!   operand (or its copies) above it;
//! * product vertices `(a, b)` take index `a * n2 + b`;
//! * `subdivision` appends one vertex per edge, in canonical edge order;
//! * `degree_splitting` appends one vertex per degree class of size at least
//!   two, classes ordered by ascending degree.

use crate::graph::Graph;

/// Disjoint union: `g2`'s vertices shift up by `g1.order()`; no cross edges.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let mut edges = g1.edges();
    edges.extend(g2.edges().iter().map(|&(u, v)| (u + n1, v + n1)));
    Graph::from_edge_list(n1 + g2.order(), &edges).expect("shifted edges stay valid")
}

/// Join: disjoint union plus every cross edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let n2 = g2.order();
    let mut edges = g1.edges();
    edges.extend(g2.edges().iter().map(|&(u, v)| (u + n1, v + n1)));
    edges.extend((0..n1).flat_map(|u| (0..n2).map(move |v| (u, n1 + v))));
    Graph::from_edge_list(n1 + n2, &edges).expect("join edges stay valid")
}

/// Composition (lexicographic product) `g1 ∘ g2`: `(a1,b1) ~ (a2,b2)` iff
/// `a1 ~ a2` in `g1`, or `a1 = a2` and `b1 ~ b2` in `g2`.
pub fn composition(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let n2 = g2.order();
    let mut edges = Vec::new();
    for (a1, a2) in g1.edges() {
        for b1 in 0..n2 {
            for b2 in 0..n2 {
                edges.push((a1 * n2 + b1, a2 * n2 + b2));
            }
        }
    }
    for a in 0..n1 {
        for (b1, b2) in g2.edges() {
            edges.push((a * n2 + b1, a * n2 + b2));
        }
    }
    Graph::from_edge_list(n1 * n2, &edges).expect("product edges stay valid")
}

/// Cartesian product: `(a1,b1) ~ (a2,b2)` iff `a1 = a2` and `b1 ~ b2`, or
/// `b1 = b2` and `a1 ~ a2`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let n2 = g2.order();
    let mut edges = Vec::new();
    for (a1, a2) in g1.edges() {
        for b in 0..n2 {
            edges.push((a1 * n2 + b, a2 * n2 + b));
        }
    }
    for a in 0..n1 {
        for (b1, b2) in g2.edges() {
            edges.push((a * n2 + b1, a * n2 + b2));
        }
    }
    Graph::from_edge_list(n1 * n2, &edges).expect("product edges stay valid")
}

/// Corona `g1 ⊙ g2`: one copy of `g2` per vertex of `g1`; copy `i` occupies
/// `n1 + i*n2 .. n1 + (i+1)*n2` and vertex `i` is joined to all of it.
pub fn corona(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let n2 = g2.order();
    let mut edges = g1.edges();
    for i in 0..n1 {
        let base = n1 + i * n2;
        edges.extend(g2.edges().iter().map(|&(u, v)| (base + u, base + v)));
        edges.extend((0..n2).map(|u| (i, base + u)));
    }
    Graph::from_edge_list(n1 * (1 + n2), &edges).expect("corona edges stay valid")
}

/// Subdivision: edge `k` (in canonical lexicographic order) becomes the new
/// vertex `n + k` adjacent to that edge's endpoints.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = Vec::with_capacity(2 * g.size());
    for (k, (u, v)) in g.edges().into_iter().enumerate() {
        edges.push((u, n + k));
        edges.push((v, n + k));
    }
    Graph::from_edge_list(n + g.size(), &edges).expect("subdivision edges stay valid")
}

/// Degree splitting: vertices are grouped by degree; each class with at
/// least two members, taken in ascending degree order, gains a new vertex
/// joined to the whole class. Singleton classes are left alone.
pub fn degree_splitting(g: &Graph) -> Graph {
    let n = g.order();
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        classes.entry(g.degree(v)).or_default().push(v);
    }
    let mut edges = g.edges();
    let mut next = n;
    for (_, members) in classes {
        if members.len() >= 2 {
            edges.extend(members.iter().map(|&v| (next, v)));
            next += 1;
        }
    }
    Graph::from_edge_list(next, &edges).expect("splitting edges stay valid")
}
