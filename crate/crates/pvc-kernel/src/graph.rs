//! Simple undirected graphs with dense 0-based indices, stable external
//! labels, and bipartite sub-views. All neighbor lists are kept sorted
//! ascending so that every algorithm downstream is deterministic.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex index {v} out of range (graph has {n} vertices)")]
    UnknownVertex { v: usize, n: usize },
    #[error("self-loop at vertex {v} not allowed")]
    SelfLoop { v: usize },
    #[error("vertex {v} appears on both sides of a bipartite view")]
    OverlappingSides { v: usize },
    #[error("serialization requires labels 1..=n, found label {label} at index {v}")]
    NonCanonicalLabels { v: usize, label: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header (expected \"p edge <n> <m>\")")]
    MalformedHeader { line: usize },
    #[error("line {line}: second \"p\" header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: edge before the \"p edge\" header")]
    EdgeBeforeHeader { line: usize },
    #[error("line {line}: malformed edge line (expected \"e <u> <v>\")")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex id {id} out of range 1..={n}")]
    VertexOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop on vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: unrecognized line")]
    UnknownLine { line: usize },
    #[error("missing \"p edge <n> <m>\" header")]
    MissingHeader,
}

/// Simple undirected graph. Vertices are dense indices `0..n` carrying a
/// stable external label (1-based ids from the input file); deletion
/// produces a fresh graph whose survivors keep their labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<usize>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from 0-based endpoint pairs. Duplicate edges are
    /// collapsed silently; self-loops are rejected. Labels default to
    /// `1..=n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::UnknownVertex { v: u, n });
            }
            if v >= n {
                return Err(GraphError::UnknownVertex { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        debug_assert_eq!(m % 2, 0);
        Ok(Graph {
            labels: (1..=n).collect(),
            adj,
            m: m / 2,
        })
    }

    /// Parses the DIMACS-like text format: `c` comment lines, one
    /// `p edge <n> <m>` header, and `e <u> <v>` lines with 1-based ids.
    /// Duplicate edge lines are collapsed; self-loops are errors.
    pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
        let mut n: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') {
                continue;
            }
            if trimmed.starts_with('p') {
                if n.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                let mut it = trimmed.split_whitespace();
                let ok = it.next() == Some("p") && it.next() == Some("edge");
                let nv = it.next().and_then(|t| t.parse::<usize>().ok());
                let mv = it.next().and_then(|t| t.parse::<usize>().ok());
                match (ok, nv, mv, it.next()) {
                    (true, Some(nv), Some(_), None) => n = Some(nv),
                    _ => return Err(ParseError::MalformedHeader { line }),
                }
            } else if trimmed.starts_with('e') {
                let n = n.ok_or(ParseError::EdgeBeforeHeader { line })?;
                let mut it = trimmed.split_whitespace();
                let ok = it.next() == Some("e");
                let uv = it.next().and_then(|t| t.parse::<usize>().ok());
                let vv = it.next().and_then(|t| t.parse::<usize>().ok());
                let (u, v) = match (ok, uv, vv, it.next()) {
                    (true, Some(u), Some(v), None) => (u, v),
                    _ => return Err(ParseError::MalformedEdge { line }),
                };
                for id in [u, v] {
                    if id == 0 || id > n {
                        return Err(ParseError::VertexOutOfRange { line, id, n });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, v: u });
                }
                edges.push((u - 1, v - 1));
            } else {
                return Err(ParseError::UnknownLine { line });
            }
        }
        let n = n.ok_or(ParseError::MissingHeader)?;
        Ok(Graph::from_edges(n, &edges).expect("ids validated during parsing"))
    }

    /// Canonical serialization: header plus `e` lines sorted ascending.
    /// Only defined for graphs whose labels are exactly `1..=n` (any
    /// freshly parsed or generated graph).
    pub fn to_dimacs(&self) -> Result<String, GraphError> {
        for (v, &label) in self.labels.iter().enumerate() {
            if label != v + 1 {
                return Err(GraphError::NonCanonicalLabels { v, label });
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "p edge {} {}", self.n(), self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels_of(&self, vs: &[usize]) -> Vec<usize> {
        vs.iter().map(|&v| self.labels[v]).collect()
    }

    pub fn index_of_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.adj[v].is_empty()).collect()
    }

    fn deletion_mask(&self, s: &[usize]) -> Result<Vec<bool>, GraphError> {
        let mut mask = vec![false; self.n()];
        for &v in s {
            if v >= self.n() {
                return Err(GraphError::UnknownVertex { v, n: self.n() });
            }
            mask[v] = true;
        }
        Ok(mask)
    }

    /// Returns `G - S` as a fresh graph plus the old-to-new index map
    /// (`None` for deleted vertices). Surviving labels are unchanged.
    pub fn delete_vertices(&self, s: &[usize]) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        let mask = self.deletion_mask(s)?;
        let mut old_to_new = vec![None; self.n()];
        let mut labels = Vec::new();
        for v in self.vertices() {
            if !mask[v] {
                old_to_new[v] = Some(labels.len());
                labels.push(self.labels[v]);
            }
        }
        let mut adj = vec![Vec::new(); labels.len()];
        let mut m = 0;
        for v in self.vertices() {
            let Some(nv) = old_to_new[v] else { continue };
            for &u in &self.adj[v] {
                if let Some(nu) = old_to_new[u] {
                    adj[nv].push(nu);
                    m += 1;
                }
            }
        }
        // old-to-new is monotone, so the lists stay sorted
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Ok((Graph { labels, adj, m: m / 2 }, old_to_new))
    }

    /// Number of edges of `G - S`, computed without materializing the
    /// subgraph.
    pub fn edges_after_delete(&self, s: &[usize]) -> Result<usize, GraphError> {
        let mask = self.deletion_mask(s)?;
        let mut deg_sum = 0;
        let mut internal_halves = 0;
        for v in self.vertices() {
            if !mask[v] {
                continue;
            }
            deg_sum += self.adj[v].len();
            internal_halves += self.adj[v].iter().filter(|&&u| mask[u]).count();
        }
        debug_assert_eq!(internal_halves % 2, 0);
        let incident = deg_sum - internal_halves / 2;
        Ok(self.m - incident)
    }

    /// The bipartite subgraph with sides `a` and `b`, containing exactly
    /// the host edges with one endpoint per side.
    pub fn bipartite_view(&self, a: &[usize], b: &[usize]) -> Result<BipartiteView, GraphError> {
        let mut side = vec![0u8; self.n()];
        for &v in a {
            if v >= self.n() {
                return Err(GraphError::UnknownVertex { v, n: self.n() });
            }
            side[v] = 1;
        }
        for &v in b {
            if v >= self.n() {
                return Err(GraphError::UnknownVertex { v, n: self.n() });
            }
            if side[v] == 1 {
                return Err(GraphError::OverlappingSides { v });
            }
            side[v] = 2;
        }
        let a_hosts: Vec<usize> = self.vertices().filter(|&v| side[v] == 1).collect();
        let b_hosts: Vec<usize> = self.vertices().filter(|&v| side[v] == 2).collect();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in a_hosts.iter().enumerate() {
            pos[v] = i;
        }
        for (j, &v) in b_hosts.iter().enumerate() {
            pos[v] = j;
        }
        let mut adj_a = vec![Vec::new(); a_hosts.len()];
        let mut adj_b = vec![Vec::new(); b_hosts.len()];
        let mut m = 0;
        for (i, &v) in a_hosts.iter().enumerate() {
            for &u in &self.adj[v] {
                if side[u] == 2 {
                    adj_a[i].push(pos[u]);
                    adj_b[pos[u]].push(i);
                    m += 1;
                }
            }
        }
        Ok(BipartiteView {
            a: a_hosts,
            b: b_hosts,
            adj_a,
            adj_b,
            m,
        })
    }
}

/// A bipartite subgraph `H = G[A, B]` of some host graph. Vertices are
/// identified by their host indices; positions within each (sorted) side
/// are used internally.
#[derive(Debug, Clone)]
pub struct BipartiteView {
    a: Vec<usize>,
    b: Vec<usize>,
    adj_a: Vec<Vec<usize>>,
    adj_b: Vec<Vec<usize>>,
    m: usize,
}

impl BipartiteView {
    /// Host indices of side A, ascending.
    pub fn a(&self) -> &[usize] {
        &self.a
    }

    /// Host indices of side B, ascending.
    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn a_len(&self) -> usize {
        self.a.len()
    }

    pub fn b_len(&self) -> usize {
        self.b.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// B-positions adjacent to the A-vertex at position `i`.
    pub fn neighbors_of_a(&self, i: usize) -> &[usize] {
        &self.adj_a[i]
    }

    /// A-positions adjacent to the B-vertex at position `j`.
    pub fn neighbors_of_b(&self, j: usize) -> &[usize] {
        &self.adj_b[j]
    }

    pub fn pos_in_a(&self, host: usize) -> Option<usize> {
        self.a.binary_search(&host).ok()
    }

    pub fn pos_in_b(&self, host: usize) -> Option<usize> {
        self.b.binary_search(&host).ok()
    }

    pub fn has_edge(&self, a_pos: usize, b_pos: usize) -> bool {
        self.adj_a[a_pos].binary_search(&b_pos).is_ok()
    }

    /// First isolated B-vertex (host index), if any.
    pub fn isolated_in_b(&self) -> Option<usize> {
        (0..self.b.len()).find(|&j| self.adj_b[j].is_empty()).map(|j| self.b[j])
    }

    /// Restriction of the view to the positions where the keep-masks are
    /// true. Host indices of the survivors are unchanged.
    pub fn restrict(&self, keep_a: &[bool], keep_b: &[bool]) -> BipartiteView {
        assert_eq!(keep_a.len(), self.a.len());
        assert_eq!(keep_b.len(), self.b.len());
        let mut new_a_pos = vec![usize::MAX; self.a.len()];
        let mut new_b_pos = vec![usize::MAX; self.b.len()];
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (i, &host) in self.a.iter().enumerate() {
            if keep_a[i] {
                new_a_pos[i] = a.len();
                a.push(host);
            }
        }
        for (j, &host) in self.b.iter().enumerate() {
            if keep_b[j] {
                new_b_pos[j] = b.len();
                b.push(host);
            }
        }
        let mut adj_a = vec![Vec::new(); a.len()];
        let mut adj_b = vec![Vec::new(); b.len()];
        let mut m = 0;
        for i in 0..self.a.len() {
            if !keep_a[i] {
                continue;
            }
            for &j in &self.adj_a[i] {
                if keep_b[j] {
                    adj_a[new_a_pos[i]].push(new_b_pos[j]);
                    adj_b[new_b_pos[j]].push(new_a_pos[i]);
                    m += 1;
                }
            }
        }
        BipartiteView { a, b, adj_a, adj_b, m }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::fig1;

    #[test]
    fn parse_single_edge() {
        let g = Graph::parse_dimacs("p edge 2 1\ne 1 2").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn parse_fig1() {
        let g = fig1();
        assert_eq!(g.n(), 7);
        assert_eq!(g.m(), 6);
        assert_eq!(g.degree(1), 3); // label 2, the square-marked vertex
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = Graph::parse_dimacs("p edge 2 1\ne 1 1").unwrap_err();
        assert_eq!(err, ParseError::SelfLoop { line: 2, v: 1 });
    }

    #[test]
    fn parse_rejects_out_of_range() {
        let err = Graph::parse_dimacs("p edge 2 1\ne 1 3").unwrap_err();
        assert_eq!(err, ParseError::VertexOutOfRange { line: 2, id: 3, n: 2 });
        let err = Graph::parse_dimacs("p edge 2 1\ne 0 1").unwrap_err();
        assert_eq!(err, ParseError::VertexOutOfRange { line: 2, id: 0, n: 2 });
    }

    #[test]
    fn parse_rejects_malformed_header() {
        assert_eq!(
            Graph::parse_dimacs("p edge x 1").unwrap_err(),
            ParseError::MalformedHeader { line: 1 }
        );
        assert_eq!(Graph::parse_dimacs("e 1 2").unwrap_err(), ParseError::EdgeBeforeHeader { line: 1 });
        assert_eq!(Graph::parse_dimacs("").unwrap_err(), ParseError::MissingHeader);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::parse_dimacs("p edge 3 3\ne 1 2\ne 2 1\ne 1 2").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn delete_single_edge_endpoint() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let (h, map) = g.delete_vertices(&[0]).unwrap();
        assert_eq!(h.n(), 1);
        assert_eq!(h.m(), 0);
        assert_eq!(h.label(0), 2);
        assert_eq!(map, vec![None, Some(0)]);
    }

    #[test]
    fn delete_square_marked_vertex() {
        let g = fig1();
        let h2 = g.index_of_label(2).unwrap();
        let (h, _) = g.delete_vertices(&[h2]).unwrap();
        assert_eq!(h.m(), 3);
        assert_eq!(h.n(), 6);
    }

    #[test]
    fn delete_nothing_is_identity() {
        let g = fig1();
        let (h, _) = g.delete_vertices(&[]).unwrap();
        assert_eq!(h, g);
    }

    #[test]
    fn delete_unknown_vertex_errors() {
        let g = fig1();
        assert_eq!(
            g.delete_vertices(&[7]).unwrap_err(),
            GraphError::UnknownVertex { v: 7, n: 7 }
        );
    }

    #[test]
    fn edges_after_delete_matches_fig1() {
        let g = fig1();
        let h2 = g.index_of_label(2).unwrap();
        let i2 = g.index_of_label(6).unwrap();
        assert_eq!(g.edges_after_delete(&[h2]).unwrap(), 3);
        assert_eq!(g.edges_after_delete(&[i2]).unwrap(), 4);
        let all: Vec<usize> = g.vertices().collect();
        assert_eq!(g.edges_after_delete(&all).unwrap(), 0);
    }

    #[test]
    fn bipartite_view_fig1_crosses_all_edges() {
        let g = fig1();
        let top: Vec<usize> = (1..=4).map(|l| g.index_of_label(l).unwrap()).collect();
        let bottom: Vec<usize> = (5..=7).map(|l| g.index_of_label(l).unwrap()).collect();
        let view = g.bipartite_view(&bottom, &top).unwrap();
        assert_eq!(view.edge_count(), 6);
        assert_eq!(view.a_len(), 3);
        assert_eq!(view.b_len(), 4);
    }

    #[test]
    fn bipartite_view_triangle_single_edge() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let view = g.bipartite_view(&[0], &[1]).unwrap();
        assert_eq!(view.edge_count(), 1);
    }

    #[test]
    fn bipartite_view_empty_side() {
        let g = fig1();
        let all: Vec<usize> = g.vertices().collect();
        let view = g.bipartite_view(&[], &all).unwrap();
        assert_eq!(view.edge_count(), 0);
        assert_eq!(view.a_len(), 0);
    }

    #[test]
    fn bipartite_view_rejects_overlap() {
        let g = fig1();
        assert_eq!(
            g.bipartite_view(&[0, 1], &[1, 2]).unwrap_err(),
            GraphError::OverlappingSides { v: 1 }
        );
    }

    #[test]
    fn roundtrip_canonical() {
        let text = "p edge 7 6\ne 1 5\ne 2 5\ne 2 6\ne 2 7\ne 3 6\ne 4 7\n";
        let g = Graph::parse_dimacs(text).unwrap();
        assert_eq!(g.to_dimacs().unwrap(), text);
    }

    #[test]
    fn serialization_rejects_relabeled_graph() {
        let g = fig1();
        let (h, _) = g.delete_vertices(&[0]).unwrap();
        assert!(matches!(h.to_dimacs(), Err(GraphError::NonCanonicalLabels { .. })));
    }

    #[test]
    fn restrict_keeps_host_ids() {
        let g = fig1();
        let top: Vec<usize> = (1..=4).map(|l| g.index_of_label(l).unwrap()).collect();
        let bottom: Vec<usize> = (5..=7).map(|l| g.index_of_label(l).unwrap()).collect();
        let view = g.bipartite_view(&bottom, &top).unwrap();
        let sub = view.restrict(&[true, false, true], &[true, true, true, true]);
        assert_eq!(sub.a(), &[g.index_of_label(5).unwrap(), g.index_of_label(7).unwrap()]);
        assert_eq!(sub.edge_count(), 4);
    }
}
