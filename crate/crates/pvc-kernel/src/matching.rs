//! Deterministic Hopcroft–Karp bipartite maximum matching. Free left
//! vertices seed the BFS in ascending order and adjacency lists are
//! scanned as given, so the returned matching is reproducible.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone)]
pub(crate) struct Matching {
    /// For each left vertex, the matched right vertex (or `None`).
    pub match_left: Vec<Option<usize>>,
    /// For each right vertex, the matched left vertex (or `None`).
    pub match_right: Vec<Option<usize>>,
    pub size: usize,
}

/// Maximum matching of the bipartite graph with `n_left` left vertices,
/// `n_right` right vertices, and `adj[l]` the right-neighbors of `l`.
pub(crate) fn max_bipartite_matching(n_left: usize, n_right: usize, adj: &[Vec<usize>]) -> Matching {
    assert_eq!(adj.len(), n_left);
    let mut match_l = vec![NONE; n_left];
    let mut match_r = vec![NONE; n_right];
    let mut dist = vec![0usize; n_left];
    let mut size = 0;

    loop {
        // BFS phase: layer left vertices by shortest alternating path
        // from the free ones.
        let mut queue = VecDeque::new();
        for l in 0..n_left {
            if match_l[l] == NONE {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = NONE;
            }
        }
        let mut found_free_right = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                let l2 = match_r[r];
                if l2 == NONE {
                    found_free_right = true;
                } else if dist[l2] == NONE {
                    dist[l2] = dist[l] + 1;
                    queue.push_back(l2);
                }
            }
        }
        if !found_free_right {
            break;
        }
        // DFS phase: augment along layered paths.
        for l in 0..n_left {
            if match_l[l] == NONE && augment(l, adj, &mut match_l, &mut match_r, &mut dist) {
                size += 1;
            }
        }
    }

    Matching {
        match_left: match_l.iter().map(|&r| (r != NONE).then_some(r)).collect(),
        match_right: match_r.iter().map(|&l| (l != NONE).then_some(l)).collect(),
        size,
    }
}

fn augment(
    l: usize,
    adj: &[Vec<usize>],
    match_l: &mut [usize],
    match_r: &mut [usize],
    dist: &mut [usize],
) -> bool {
    let d = std::mem::replace(&mut dist[l], NONE);
    for &r in &adj[l] {
        let l2 = match_r[r];
        if l2 == NONE || (dist[l2] == d + 1 && augment(l2, adj, match_l, match_r, dist)) {
            match_l[l] = r;
            match_r[r] = l;
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_matching() {
        let adj = vec![vec![0, 1], vec![0], vec![1, 2]];
        let m = max_bipartite_matching(3, 3, &adj);
        assert_eq!(m.size, 3);
    }

    #[test]
    fn shared_neighbor_limits_matching() {
        let adj = vec![vec![0], vec![0]];
        let m = max_bipartite_matching(2, 1, &adj);
        assert_eq!(m.size, 1);
        assert_eq!(m.match_left[0], Some(0));
        assert_eq!(m.match_left[1], None);
    }

    #[test]
    fn empty_graph() {
        let m = max_bipartite_matching(0, 0, &[]);
        assert_eq!(m.size, 0);
    }
}
