//! Shared fixtures for the unit tests.

use crate::graph::{BipartiteView, Graph};

/// The seven-vertex counterexample graph: labels 1..=4 on top, 5..=7 on
/// the bottom; bottom vertex 5 is adjacent to 1 and 2, 6 to 2 and 3,
/// 7 to 2 and 4. Label 2 is the square-marked vertex of degree 3.
pub(crate) const FIG1: &str = "c seven vertices, six edges\n\
     p edge 7 6\n\
     e 5 1\ne 5 2\ne 6 2\ne 6 3\ne 7 2\ne 7 4\n";

pub(crate) fn fig1() -> Graph {
    Graph::parse_dimacs(FIG1).unwrap()
}

pub(crate) fn complete(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Star with center 0 and `leaves` leaves.
pub(crate) fn star(leaves: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

/// A host graph with vertices `0..na` on side A and `na..na+nb` on side
/// B, plus the bipartite view of the given (A-local, B-local) edges.
pub(crate) fn bipartite(na: usize, nb: usize, edges: &[(usize, usize)]) -> (Graph, BipartiteView) {
    let host_edges: Vec<(usize, usize)> = edges.iter().map(|&(i, j)| (i, na + j)).collect();
    let g = Graph::from_edges(na + nb, &host_edges).unwrap();
    let a: Vec<usize> = (0..na).collect();
    let b: Vec<usize> = (na..na + nb).collect();
    let view = g.bipartite_view(&a, &b).unwrap();
    (g, view)
}

pub(crate) fn complete_bipartite(na: usize, nb: usize) -> (Graph, BipartiteView) {
    let edges: Vec<(usize, usize)> = (0..na).flat_map(|i| (0..nb).map(move |j| (i, j))).collect();
    bipartite(na, nb, &edges)
}
