//! Brute-force ground truth: exact Partial Vertex Cover decisions by
//! subset enumeration, exhaustive half-integral LP optima, and exhaustive
//! surplus minimization. No pruning beyond skipping isolated vertices;
//! these must stay obviously correct.

use thiserror::Error;

use crate::graph::{BipartiteView, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance too large for exhaustive search ({detail})")]
    TooLarge { detail: String },
    #[error("vertex {v} is not on side A of the view")]
    NotInSideA { v: usize },
}

/// Exact answer for one instance, with a witness when the answer is yes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub answer: bool,
    /// Lexicographically smallest minimum-size solution, as external
    /// labels. Present iff `answer`.
    pub witness: Option<Vec<usize>>,
}

/// Cap on the number of subsets `solve_pvc_exact` will enumerate.
const SUBSET_BUDGET: u128 = 1 << 22;
/// Cap on `n` for the 3^n half-integral enumeration.
const LP_MAX_N: usize = 12;
/// Cap on `|A|` for the 2^|A| surplus enumeration.
const SURPLUS_MAX_A: usize = 12;

/// Decides whether at most `k` vertices can be deleted from `g` so that
/// at most `l` edges remain, by enumerating vertex subsets in increasing
/// size and lexicographic order. Only vertices of positive degree are
/// candidates: deleting an isolated vertex never removes an edge.
pub fn solve_pvc_exact(g: &Graph, k: usize, l: usize) -> Result<OracleVerdict, OracleError> {
    let candidates: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let cap = k.min(candidates.len());

    let mut total: u128 = 0;
    for size in 0..=cap {
        total += binomial(candidates.len(), size);
        if total > SUBSET_BUDGET {
            return Err(OracleError::TooLarge {
                detail: format!(
                    "would enumerate more than {SUBSET_BUDGET} subsets of {} candidates up to size {cap}",
                    candidates.len()
                ),
            });
        }
    }

    let mut subset = Vec::with_capacity(cap);
    for size in 0..=cap {
        if let Some(found) = first_witness(g, l, &candidates, size, 0, &mut subset) {
            let witness = g.labels_of(&found);
            debug_assert!(witness.len() <= k);
            debug_assert!(g.edges_after_delete(&found).unwrap() <= l);
            return Ok(OracleVerdict { answer: true, witness: Some(witness) });
        }
    }
    Ok(OracleVerdict { answer: false, witness: None })
}

fn first_witness(
    g: &Graph,
    l: usize,
    candidates: &[usize],
    size: usize,
    start: usize,
    subset: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if subset.len() == size {
        if g.edges_after_delete(subset).expect("candidates are valid vertices") <= l {
            return Some(subset.clone());
        }
        return None;
    }
    let remaining = size - subset.len();
    for i in start..=candidates.len().saturating_sub(remaining) {
        subset.push(candidates[i]);
        if let Some(found) = first_witness(g, l, candidates, size, i + 1, subset) {
            return Some(found);
        }
        subset.pop();
    }
    None
}

/// Binomial coefficient saturating just above the enumeration budget;
/// callers only compare against the budget.
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > SUBSET_BUDGET {
            return SUBSET_BUDGET + 1;
        }
    }
    acc
}

/// Minimum of `2 * sum(x_v)` over all feasible assignments
/// `x in {0, 1/2, 1}^V`, found by enumerating all 3^n of them.
pub fn brute_lp_opt(g: &Graph) -> Result<usize, OracleError> {
    if g.n() > LP_MAX_N {
        return Err(OracleError::TooLarge {
            detail: format!("3^n enumeration needs n <= {LP_MAX_N}, got {}", g.n()),
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.n();
    // doubled values: 0, 1, or 2 per vertex
    let mut values = vec![0u8; n];
    let mut best: Option<usize> = None;
    loop {
        if edges.iter().all(|&(u, v)| values[u] + values[v] >= 2) {
            let total = values.iter().map(|&x| x as usize).sum();
            best = Some(best.map_or(total, |b: usize| b.min(total)));
        }
        // odometer increment in base 3
        let mut i = 0;
        while i < n && values[i] == 2 {
            values[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        values[i] += 1;
    }
    Ok(best.expect("the all-ones assignment is always feasible"))
}

/// Minimum of `|N(X)| - |X|` over all `X` with `a in X ⊆ A`, by
/// enumerating every subset of A containing `a`. `a` is a host index.
pub fn brute_min_surplus(h: &BipartiteView, a: usize) -> Result<i64, OracleError> {
    let a_pos = h.pos_in_a(a).ok_or(OracleError::NotInSideA { v: a })?;
    if h.a_len() > SURPLUS_MAX_A {
        return Err(OracleError::TooLarge {
            detail: format!("2^|A| enumeration needs |A| <= {SURPLUS_MAX_A}, got {}", h.a_len()),
        });
    }
    let words = h.b_len().div_ceil(64);
    let masks: Vec<Vec<u64>> = (0..h.a_len())
        .map(|i| {
            let mut mask = vec![0u64; words];
            for &j in h.neighbors_of_a(i) {
                mask[j / 64] |= 1 << (j % 64);
            }
            mask
        })
        .collect();

    let others: Vec<usize> = (0..h.a_len()).filter(|&i| i != a_pos).collect();
    let mut best = i64::MAX;
    for bits in 0u64..(1 << others.len()) {
        let mut union = masks[a_pos].clone();
        let mut x_size = 1i64;
        for (t, &i) in others.iter().enumerate() {
            if bits >> t & 1 == 1 {
                for (w, m) in union.iter_mut().zip(&masks[i]) {
                    *w |= m;
                }
                x_size += 1;
            }
        }
        let nbhd: i64 = union.iter().map(|w| w.count_ones() as i64).sum();
        best = best.min(nbhd - x_size);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{complete, fig1};

    #[test]
    fn fig1_unique_witness() {
        let g = fig1();
        let verdict = solve_pvc_exact(&g, 1, 3).unwrap();
        assert!(verdict.answer);
        assert_eq!(verdict.witness, Some(vec![2]));
        // uniqueness: label 2 is the only size-1 deletion leaving <= 3 edges
        let hits: Vec<usize> = g
            .vertices()
            .filter(|&v| g.edges_after_delete(&[v]).unwrap() <= 3)
            .map(|v| g.label(v))
            .collect();
        assert_eq!(hits, vec![2]);
    }

    #[test]
    fn fig1_no_for_smaller_allowance() {
        let g = fig1();
        assert!(!solve_pvc_exact(&g, 1, 2).unwrap().answer);
    }

    #[test]
    fn trivial_yes_with_empty_witness() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let verdict = solve_pvc_exact(&g, 0, 2).unwrap();
        assert!(verdict.answer);
        assert_eq!(verdict.witness, Some(vec![]));
    }

    #[test]
    fn too_large_is_an_error() {
        let g = complete(40);
        assert!(matches!(
            solve_pvc_exact(&g, 12, 0),
            Err(OracleError::TooLarge { .. })
        ));
    }

    #[test]
    fn huge_graphs_error_without_overflow() {
        let edges: Vec<(usize, usize)> = (0..10_000).map(|v| (v, v + 1)).collect();
        let path = Graph::from_edges(10_001, &edges).unwrap();
        assert!(matches!(
            solve_pvc_exact(&path, 20, 5),
            Err(OracleError::TooLarge { .. })
        ));
    }

    #[test]
    fn lp_opt_examples() {
        assert_eq!(brute_lp_opt(&complete(3)).unwrap(), 3);
        assert_eq!(brute_lp_opt(&fig1()).unwrap(), 6);
        assert_eq!(brute_lp_opt(&Graph::from_edges(2, &[(0, 1)]).unwrap()).unwrap(), 2);
        assert_eq!(brute_lp_opt(&Graph::from_edges(0, &[]).unwrap()).unwrap(), 0);
    }

    #[test]
    fn lp_opt_rejects_large_n() {
        assert!(matches!(
            brute_lp_opt(&complete(13)),
            Err(OracleError::TooLarge { .. })
        ));
    }

    #[test]
    fn min_surplus_examples() {
        // singleton A with two neighbors
        let g = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let h = g.bipartite_view(&[0], &[1, 2]).unwrap();
        assert_eq!(brute_min_surplus(&h, 0).unwrap(), 1);

        // two A-vertices sharing one neighbor
        let g = Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        let h = g.bipartite_view(&[0, 1], &[2]).unwrap();
        assert_eq!(brute_min_surplus(&h, 0).unwrap(), -1);

        // K_{3,5}: minimum is at X = A with surplus 2
        let edges: Vec<(usize, usize)> =
            (0..3).flat_map(|u| (3..8).map(move |v| (u, v))).collect();
        let g = Graph::from_edges(8, &edges).unwrap();
        let h = g.bipartite_view(&[0, 1, 2], &[3, 4, 5, 6, 7]).unwrap();
        for a in 0..3 {
            assert_eq!(brute_min_surplus(&h, a).unwrap(), 2);
        }
    }

    #[test]
    fn min_surplus_requires_membership() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let h = g.bipartite_view(&[0], &[1, 2]).unwrap();
        assert_eq!(brute_min_surplus(&h, 1), Err(OracleError::NotInSideA { v: 1 }));
    }

    #[test]
    fn lp_equals_doubled_matching_on_bipartite_graphs() {
        // Koenig: on bipartite graphs the LP optimum equals the maximum
        // matching size
        for (na, nb, seed) in [(3, 4, 1u64), (4, 4, 2), (5, 6, 3), (2, 7, 4)] {
            let mut rng = crate::rng::SplitMix64::new(seed);
            let mut edges = Vec::new();
            let mut adj = vec![Vec::new(); na];
            for (i, nbrs) in adj.iter_mut().enumerate() {
                for j in 0..nb {
                    if rng.next_f64() < 0.45 {
                        edges.push((i, na + j));
                        nbrs.push(j);
                    }
                }
            }
            let g = Graph::from_edges(na + nb, &edges).unwrap();
            let matching = crate::matching::max_bipartite_matching(na, nb, &adj);
            assert_eq!(brute_lp_opt(&g).unwrap(), 2 * matching.size);
        }
    }

    #[test]
    fn monotone_in_k_and_l() {
        let g = fig1();
        for k in 0..3 {
            for l in 0..7 {
                if solve_pvc_exact(&g, k, l).unwrap().answer {
                    assert!(solve_pvc_exact(&g, k + 1, l).unwrap().answer);
                    assert!(solve_pvc_exact(&g, k, l + 1).unwrap().answer);
                }
            }
        }
    }
}
