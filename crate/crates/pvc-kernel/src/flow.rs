//! Deterministic Dinic max-flow. Edges are scanned in insertion order and
//! BFS levels are built with a plain queue, so residual reachability (and
//! hence every min-cut side extracted from it) is reproducible.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Edge {
    to: usize,
    cap: i64,
    // negative on reverse edges; residual capacity is cap - flow
    flow: i64,
    rev: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    adj: Vec<Vec<Edge>>,
}

/// Identifies a forward edge for flow extraction.
#[derive(Debug, Clone, Copy)]
pub(crate) struct EdgeRef {
    from: usize,
    idx: usize,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn add_edge(&mut self, from: usize, to: usize, cap: u64) -> EdgeRef {
        let rev_from = self.adj[to].len();
        let rev_to = self.adj[from].len();
        self.adj[from].push(Edge { to, cap: cap as i64, flow: 0, rev: rev_from });
        self.adj[to].push(Edge { to: from, cap: 0, flow: 0, rev: rev_to });
        EdgeRef { from, idx: rev_to }
    }

    pub fn flow_on(&self, e: EdgeRef) -> u64 {
        self.adj[e.from][e.idx].flow.max(0) as u64
    }

    fn residual(&self, e: &Edge) -> i64 {
        e.cap - e.flow
    }

    fn bfs_levels(&self, s: usize, t: usize) -> Option<Vec<i32>> {
        let mut level = vec![-1; self.adj.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for e in &self.adj[u] {
                if self.residual(e) > 0 && level[e.to] == -1 {
                    level[e.to] = level[u] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        (level[t] != -1).then_some(level)
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i64, level: &[i32], iter: &mut [usize]) -> i64 {
        if u == t {
            return pushed;
        }
        while iter[u] < self.adj[u].len() {
            let i = iter[u];
            let (to, residual) = {
                let e = &self.adj[u][i];
                (e.to, self.residual(e))
            };
            if residual > 0 && level[to] == level[u] + 1 {
                let got = self.dfs(to, t, pushed.min(residual), level, iter);
                if got > 0 {
                    let rev = self.adj[u][i].rev;
                    self.adj[u][i].flow += got;
                    self.adj[to][rev].flow -= got;
                    return got;
                }
            }
            iter[u] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        assert_ne!(s, t);
        let mut total = 0;
        while let Some(level) = self.bfs_levels(s, t) {
            let mut iter = vec![0; self.adj.len()];
            loop {
                let pushed = self.dfs(s, t, i64::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed as u64;
            }
        }
        total
    }

    /// Vertices reachable from `s` in the residual graph; after a
    /// max-flow run this is the source side of the canonical min cut.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for e in &self.adj[u] {
                if self.residual(e) > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    queue.push_back(e.to);
                }
            }
        }
        seen
    }
}
