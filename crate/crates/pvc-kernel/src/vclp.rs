//! Optimal half-integral solutions of the vertex-cover LP relaxation.
//!
//! The solver builds the doubled bipartite graph with left and right
//! copies of every vertex (each edge `uv` becomes `u_L b_R` and
//! `v_L u_R`), computes a maximum matching, reads off a minimum vertex
//! cover of the doubled graph via Koenig reachability from the unmatched
//! left vertices, and sets `x_v = |{v_L, v_R} ∩ C| / 2`. The minimum
//! cover of the doubled graph has size twice the LP optimum, so the
//! resulting solution is optimal.

use std::collections::VecDeque;
use std::fmt;

use crate::graph::Graph;
use crate::matching::max_bipartite_matching;

/// Per-vertex LP values in `{0, 1/2, 1}`, stored doubled as `{0, 1, 2}`,
/// plus the induced partition. No floating point anywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfIntegralSolution {
    values: Vec<u8>,
    v0: Vec<usize>,
    v1: Vec<usize>,
    vhalf: Vec<usize>,
    doubled_value: usize,
}

impl HalfIntegralSolution {
    /// Wraps raw doubled values, recomputing the partition and value.
    pub fn from_doubled_values(values: Vec<u8>) -> HalfIntegralSolution {
        let mut v0 = Vec::new();
        let mut v1 = Vec::new();
        let mut vhalf = Vec::new();
        for (v, &x) in values.iter().enumerate() {
            match x {
                0 => v0.push(v),
                1 => vhalf.push(v),
                _ => v1.push(v),
            }
        }
        let doubled_value = values.iter().map(|&x| x as usize).sum();
        HalfIntegralSolution { values, v0, v1, vhalf, doubled_value }
    }

    /// Doubled value of vertex `v`: 0, 1, or 2.
    pub fn value_doubled(&self, v: usize) -> u8 {
        self.values[v]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn v0(&self) -> &[usize] {
        &self.v0
    }

    pub fn v1(&self) -> &[usize] {
        &self.v1
    }

    pub fn vhalf(&self) -> &[usize] {
        &self.vhalf
    }

    /// `2 * sum(x_v)`, an exact integer.
    pub fn doubled_value(&self) -> usize {
        self.doubled_value
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpViolation {
    /// `x_u + x_v < 1` for edge `uv`.
    EdgeUncovered { u: usize, v: usize },
    /// A stored value outside `{0, 1, 2}`.
    BadValue { v: usize, value: u8 },
    /// Solution length differs from the vertex count.
    LengthMismatch { expected: usize, actual: usize },
    /// The index sets disagree with the stored values.
    PartitionInconsistent { v: usize },
    /// `doubled_value` differs from `2|V1| + |V1/2|`.
    ValueMismatch { expected: usize, actual: usize },
}

impl fmt::Display for LpViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpViolation::EdgeUncovered { u, v } => {
                write!(f, "edge ({u}, {v}) has x_u + x_v < 1")
            }
            LpViolation::BadValue { v, value } => {
                write!(f, "vertex {v} has doubled value {value} outside {{0, 1, 2}}")
            }
            LpViolation::LengthMismatch { expected, actual } => {
                write!(f, "solution covers {actual} vertices, graph has {expected}")
            }
            LpViolation::PartitionInconsistent { v } => {
                write!(f, "vertex {v} is not in the set matching its value")
            }
            LpViolation::ValueMismatch { expected, actual } => {
                write!(f, "doubled_value is {actual}, expected {expected}")
            }
        }
    }
}

/// Checks every invariant of a half-integral solution against `g`;
/// empty result means valid. `N(V0) ⊆ V1` is implied by edge
/// feasibility, so uncovered edges are the violation reported for it.
pub fn verify_half_integral(g: &Graph, sol: &HalfIntegralSolution) -> Vec<LpViolation> {
    let mut out = Vec::new();
    if sol.values.len() != g.n() {
        out.push(LpViolation::LengthMismatch { expected: g.n(), actual: sol.values.len() });
        return out;
    }
    for (v, &x) in sol.values.iter().enumerate() {
        if x > 2 {
            out.push(LpViolation::BadValue { v, value: x });
        }
    }
    for (u, v) in g.edges() {
        if sol.values[u] + sol.values[v] < 2 {
            out.push(LpViolation::EdgeUncovered { u, v });
        }
    }
    let mut seen = vec![0u8; g.n().max(sol.values.len())];
    for (set_value, set) in [(0u8, &sol.v0), (2u8, &sol.v1), (1u8, &sol.vhalf)] {
        for &v in set {
            if v >= sol.values.len() || sol.values[v] != set_value || seen[v] != 0 {
                out.push(LpViolation::PartitionInconsistent { v });
            } else {
                seen[v] = 1;
            }
        }
    }
    for (v, &flag) in seen.iter().enumerate().take(sol.values.len()) {
        if flag == 0
            && !out
                .iter()
                .any(|w| matches!(w, LpViolation::PartitionInconsistent { v: pv } if *pv == v))
        {
            out.push(LpViolation::PartitionInconsistent { v });
        }
    }
    let expected = 2 * sol.v1.len() + sol.vhalf.len();
    if sol.doubled_value != expected {
        out.push(LpViolation::ValueMismatch { expected, actual: sol.doubled_value });
    }
    out
}

/// Size of a maximum matching of the doubled bipartite graph; equals the
/// doubled LP optimum. Exposed for consistency checks.
pub fn doubled_matching_size(g: &Graph) -> usize {
    let adj: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    max_bipartite_matching(g.n(), g.n(), &adj).size
}

/// Computes an optimal half-integral solution of the vertex-cover LP.
/// Deterministic: matching augmentation and Koenig reachability both
/// proceed in ascending vertex order, so the same graph always yields
/// the same partition.
pub fn solve_vclp(g: &Graph) -> HalfIntegralSolution {
    let n = g.n();
    // Left and right copies both use graph adjacency: edge uv
    // contributes u_L v_R and v_L u_R.
    let adj: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    let matching = max_bipartite_matching(n, n, &adj);

    // Koenig: alternating reachability from unmatched left vertices
    // (non-matching edges left-to-right, matching edges right-to-left).
    let mut left_reached = vec![false; n];
    let mut right_reached = vec![false; n];
    let mut queue = VecDeque::new();
    for (l, matched) in matching.match_left.iter().enumerate() {
        if matched.is_none() {
            left_reached[l] = true;
            queue.push_back(l);
        }
    }
    while let Some(l) = queue.pop_front() {
        for &r in &adj[l] {
            if matching.match_left[l] == Some(r) || right_reached[r] {
                continue;
            }
            right_reached[r] = true;
            if let Some(l2) = matching.match_right[r] {
                if !left_reached[l2] {
                    left_reached[l2] = true;
                    queue.push_back(l2);
                }
            }
        }
    }

    // Cover C = (L not reached) ∪ (R reached); x_v = |{v_L, v_R} ∩ C| / 2.
    let values: Vec<u8> = (0..n)
        .map(|v| u8::from(!left_reached[v]) + u8::from(right_reached[v]))
        .collect();
    let sol = HalfIntegralSolution::from_doubled_values(values);
    debug_assert_eq!(sol.doubled_value, matching.size, "Koenig cover must match the matching size");
    debug_assert!(verify_half_integral(g, &sol).is_empty());
    sol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_lp_opt;
    use crate::testutil::{complete, fig1, star};

    #[test]
    fn triangle_is_all_half() {
        let sol = solve_vclp(&complete(3));
        assert_eq!(sol.doubled_value(), 3);
        assert_eq!(sol.vhalf(), &[0, 1, 2]);
        assert!(sol.v0().is_empty() && sol.v1().is_empty());
    }

    #[test]
    fn star_center_is_one() {
        let sol = solve_vclp(&star(4));
        assert_eq!(sol.doubled_value(), 2);
        assert_eq!(sol.v1(), &[0]);
        assert_eq!(sol.v0(), &[1, 2, 3, 4]);
    }

    #[test]
    fn fig1_value_three_and_optimal() {
        let g = fig1();
        let sol = solve_vclp(&g);
        assert_eq!(sol.doubled_value(), 6);
        assert!(verify_half_integral(&g, &sol).is_empty());
        assert_eq!(sol.doubled_value(), brute_lp_opt(&g).unwrap());
    }

    #[test]
    fn verify_accepts_half_half() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let sol = HalfIntegralSolution::from_doubled_values(vec![1, 1]);
        assert!(verify_half_integral(&g, &sol).is_empty());
    }

    #[test]
    fn verify_rejects_uncovered_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let sol = HalfIntegralSolution::from_doubled_values(vec![0, 1]);
        assert_eq!(
            verify_half_integral(&g, &sol),
            vec![LpViolation::EdgeUncovered { u: 0, v: 1 }]
        );
    }

    #[test]
    fn verify_solver_output_on_fig1() {
        let g = fig1();
        assert!(verify_half_integral(&g, &solve_vclp(&g)).is_empty());
    }

    #[test]
    fn matches_doubled_matching_size() {
        for g in [fig1(), complete(5), star(6)] {
            assert_eq!(solve_vclp(&g).doubled_value(), doubled_matching_size(&g));
        }
    }

    #[test]
    fn deterministic_partition() {
        let g = fig1();
        assert_eq!(solve_vclp(&g), solve_vclp(&g));
    }

    #[test]
    fn isolated_vertices_get_zero() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let sol = solve_vclp(&g);
        assert_eq!(sol.value_doubled(2), 0);
    }
}
