//! Constructive engines for expansion and additive-expansion
//! certificates on bipartite views, plus the definitional verifiers.
//!
//! Both finders peel deficient blocks off side A until the remaining
//! view carries the wanted structure. The multiplicative finder runs a
//! max-flow per round (source -> a at capacity q, a -> b unbounded,
//! b -> sink at capacity 1); the additive finder minimizes the surplus
//! `|N(X)| - |X|` over sets containing a fixed vertex with an s-t min
//! cut, which specializes the submodular minimization the Hall-type
//! condition calls for. "Unbounded" capacities are `m + 1`: strictly
//! more than any cut made of unit edges, while staying in machine
//! integers.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::flow::FlowNetwork;
use crate::graph::BipartiteView;
use crate::matching::max_bipartite_matching;
use crate::rng::SplitMix64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("q must be positive")]
    ZeroQ,
    #[error("side A is empty")]
    EmptySideA,
    #[error("side B has {b} vertices, need at least {need}")]
    SideBTooSmall { b: usize, need: usize },
    #[error("vertex {v} in B is isolated")]
    IsolatedInB { v: usize },
    #[error("vertex {v} is not on side A of the view")]
    NotInSideA { v: usize },
}

/// Witness of a q-expansion of `x_set` into `y_set`: every vertex of
/// `x_set` carries exactly `q` edges of `m_edges`, every vertex of
/// `y_set` at most one, and `y_set` has no neighbors outside `x_set`.
/// All vertices are host indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionCertificate {
    pub q: usize,
    pub x_set: Vec<usize>,
    pub y_set: Vec<usize>,
    pub m_edges: Vec<(usize, usize)>,
}

impl ExpansionCertificate {
    /// Reinterprets a (q+1)-expansion as a q-additive expansion on the
    /// same sets. `None` when `q == 1`.
    pub fn as_additive(&self) -> Option<AdditiveExpansionCertificate> {
        (self.q >= 2).then(|| AdditiveExpansionCertificate {
            q: self.q - 1,
            x_set: self.x_set.clone(),
            y_set: self.y_set.clone(),
        })
    }
}

/// Witness of a q-additive expansion: `|N(X') ∩ y_set| >= |X'| + q` for
/// every nonempty `X' ⊆ x_set`, and `y_set` has no neighbors outside
/// `x_set`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveExpansionCertificate {
    pub q: usize,
    pub x_set: Vec<usize>,
    pub y_set: Vec<usize>,
}

/// A set `Z ⊆ A` together with its surplus `|N(Z)| - |Z|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficientSet {
    pub z_set: Vec<usize>,
    pub surplus: i64,
}

fn check_preconditions(h: &BipartiteView, q: usize, strict: bool) -> Result<(), ExpansionError> {
    if q == 0 {
        return Err(ExpansionError::ZeroQ);
    }
    if h.a_len() == 0 {
        return Err(ExpansionError::EmptySideA);
    }
    let need = q.saturating_mul(h.a_len()).saturating_add(usize::from(strict));
    if h.b_len() < need {
        return Err(ExpansionError::SideBTooSmall { b: h.b_len(), need });
    }
    if let Some(v) = h.isolated_in_b() {
        return Err(ExpansionError::IsolatedInB { v });
    }
    Ok(())
}

/// Finds nonempty `X ⊆ A`, `Y ⊆ B` with a q-expansion of X into Y and
/// `N(Y) ⊆ X`. Requires `|B| >= q|A|`, no isolated vertex in B, and a
/// nonempty A; under those the certificate always exists.
///
/// Each round runs a max flow. Full flow `q|A|` yields the certificate
/// with X the current A, Y the entire current B, and M the unit-flow
/// edges. Otherwise the A-side of the residual-reachable set is a
/// nonempty block Z with `|N(Z)| < q|Z|`; deleting Z and N(Z) preserves
/// both preconditions, and fewer than `|A|` rounds remain.
pub fn find_q_expansion(
    h: &BipartiteView,
    q: usize,
) -> Result<ExpansionCertificate, ExpansionError> {
    check_preconditions(h, q, false)?;
    let mut view = h.clone();
    loop {
        let na = view.a_len();
        let nb = view.b_len();
        let unbounded = view.edge_count() as u64 + 1;
        let a_node = |i: usize| 2 + i;
        let b_node = |j: usize| 2 + na + j;
        let mut net = FlowNetwork::new(2 + na + nb);
        for i in 0..na {
            net.add_edge(0, a_node(i), q as u64);
        }
        let mut edge_refs = Vec::with_capacity(view.edge_count());
        for i in 0..na {
            for &j in view.neighbors_of_a(i) {
                edge_refs.push((i, j, net.add_edge(a_node(i), b_node(j), unbounded)));
            }
        }
        for j in 0..nb {
            net.add_edge(b_node(j), 1, 1);
        }
        let flow = net.max_flow(0, 1);
        if flow == (q * na) as u64 {
            let m_edges: Vec<(usize, usize)> = edge_refs
                .iter()
                .filter(|&&(_, _, e)| net.flow_on(e) == 1)
                .map(|&(i, j, _)| (view.a()[i], view.b()[j]))
                .collect();
            debug_assert_eq!(m_edges.len(), q * na);
            return Ok(ExpansionCertificate {
                q,
                x_set: view.a().to_vec(),
                y_set: view.b().to_vec(),
                m_edges,
            });
        }
        let reach = net.residual_reachable(0);
        let keep_a: Vec<bool> = (0..na).map(|i| !reach[a_node(i)]).collect();
        let mut keep_b = vec![true; nb];
        for (i, &keep) in keep_a.iter().enumerate() {
            if !keep {
                for &j in view.neighbors_of_a(i) {
                    keep_b[j] = false;
                }
            }
        }
        debug_assert!(keep_a.iter().any(|&k| !k), "short flow must expose a deficient block");
        debug_assert!(keep_a.iter().any(|&k| k), "the deficient block cannot be all of A");
        view = view.restrict(&keep_a, &keep_b);
    }
}

/// Minimum of `|N(X)| - |X|` over all `X` with `a ∈ X ⊆ A`, together
/// with the (inclusion-minimal) minimizer. `a` is a host index.
///
/// Encoded as an s-t min cut: `source -> a` unbounded, `source -> a'`
/// at capacity 1 for the other A-vertices, view edges unbounded,
/// `b -> sink` at capacity 1. A cut keeping `X` on the source side pays
/// `|A \ X| + |N(X)|`, so the min-cut value is `|A|` plus the minimum
/// surplus; X is read off the residual-reachable side.
pub fn min_surplus_containing(
    h: &BipartiteView,
    a: usize,
) -> Result<DeficientSet, ExpansionError> {
    let a_pos = h.pos_in_a(a).ok_or(ExpansionError::NotInSideA { v: a })?;
    let na = h.a_len();
    let nb = h.b_len();
    let unbounded = h.edge_count() as u64 + 1;
    let a_node = |i: usize| 2 + i;
    let b_node = |j: usize| 2 + na + j;
    let mut net = FlowNetwork::new(2 + na + nb);
    for i in 0..na {
        let cap = if i == a_pos { unbounded } else { 1 };
        net.add_edge(0, a_node(i), cap);
    }
    for i in 0..na {
        for &j in h.neighbors_of_a(i) {
            net.add_edge(a_node(i), b_node(j), unbounded);
        }
    }
    for j in 0..nb {
        net.add_edge(b_node(j), 1, 1);
    }
    let cut = net.max_flow(0, 1);
    let reach = net.residual_reachable(0);
    let z_pos: Vec<usize> = (0..na).filter(|&i| reach[a_node(i)]).collect();
    debug_assert!(z_pos.contains(&a_pos));
    let surplus = cut as i64 - na as i64;
    debug_assert_eq!(surplus, direct_surplus(h, &z_pos));
    Ok(DeficientSet {
        z_set: z_pos.iter().map(|&i| h.a()[i]).collect(),
        surplus,
    })
}

fn direct_surplus(h: &BipartiteView, a_positions: &[usize]) -> i64 {
    let mut nbhd = BTreeSet::new();
    for &i in a_positions {
        nbhd.extend(h.neighbors_of_a(i).iter().copied());
    }
    nbhd.len() as i64 - a_positions.len() as i64
}

/// Scans A in ascending order and returns the first `X` with
/// `|N(X)| < |X| + q`, or `None`, which certifies that every nonempty
/// `X ⊆ A` has surplus at least `q` (a q-additive expansion exists).
pub fn find_additive_violator(h: &BipartiteView, q: usize) -> Option<DeficientSet> {
    for &a in h.a() {
        let ds = min_surplus_containing(h, a).expect("scanning members of A");
        if ds.surplus < q as i64 {
            return Some(ds);
        }
    }
    None
}

/// Finds nonempty `X ⊆ A`, `Y ⊆ B` carrying a q-additive expansion with
/// `N(Y) ⊆ X`. Requires `|B| > q|A|` (strict), no isolated vertex in B,
/// and a nonempty A.
///
/// While a violator X exists it is deleted together with N(X); since
/// `|N(X)| <= |X| + q - 1 <= q|X|`, the strict precondition survives
/// every round, and the loop ends within `|A|` rounds on nonempty sets.
pub fn find_q_additive_expansion(
    h: &BipartiteView,
    q: usize,
) -> Result<AdditiveExpansionCertificate, ExpansionError> {
    check_preconditions(h, q, true)?;
    let mut view = h.clone();
    while let Some(ds) = find_additive_violator(&view, q) {
        let mut keep_a = vec![true; view.a_len()];
        for &host in &ds.z_set {
            keep_a[view.pos_in_a(host).expect("violator lives in the current view")] = false;
        }
        let mut keep_b = vec![true; view.b_len()];
        for (i, &keep) in keep_a.iter().enumerate() {
            if !keep {
                for &j in view.neighbors_of_a(i) {
                    keep_b[j] = false;
                }
            }
        }
        debug_assert!(keep_a.iter().any(|&k| k), "the violator cannot be all of A");
        view = view.restrict(&keep_a, &keep_b);
    }
    debug_assert!(view.a_len() > 0 && view.b_len() > q * view.a_len());
    Ok(AdditiveExpansionCertificate {
        q,
        x_set: view.a().to_vec(),
        y_set: view.b().to_vec(),
    })
}

struct CertSides {
    x_pos: Vec<usize>,
    y_pos: Vec<usize>,
    in_x: Vec<bool>,
    in_y: Vec<bool>,
}

fn resolve_sides(
    h: &BipartiteView,
    x_set: &[usize],
    y_set: &[usize],
) -> Result<CertSides, String> {
    if x_set.is_empty() {
        return Err("X is empty".into());
    }
    if y_set.is_empty() {
        return Err("Y is empty".into());
    }
    let mut in_x = vec![false; h.a_len()];
    let mut x_pos = Vec::with_capacity(x_set.len());
    for &v in x_set {
        let i = h.pos_in_a(v).ok_or(format!("vertex {v} is not in A"))?;
        if in_x[i] {
            return Err(format!("vertex {v} listed twice in X"));
        }
        in_x[i] = true;
        x_pos.push(i);
    }
    let mut in_y = vec![false; h.b_len()];
    let mut y_pos = Vec::with_capacity(y_set.len());
    for &v in y_set {
        let j = h.pos_in_b(v).ok_or(format!("vertex {v} is not in B"))?;
        if in_y[j] {
            return Err(format!("vertex {v} listed twice in Y"));
        }
        in_y[j] = true;
        y_pos.push(j);
    }
    Ok(CertSides { x_pos, y_pos, in_x, in_y })
}

fn check_y_closed(h: &BipartiteView, sides: &CertSides) -> Result<(), String> {
    for &j in &sides.y_pos {
        for &i in h.neighbors_of_b(j) {
            if !sides.in_x[i] {
                return Err(format!(
                    "vertex {} in Y has neighbor {} outside X",
                    h.b()[j],
                    h.a()[i]
                ));
            }
        }
    }
    Ok(())
}

/// Checks an expansion certificate against the definition; `Err` carries
/// the first reason found.
pub fn verify_expansion(h: &BipartiteView, cert: &ExpansionCertificate) -> Result<(), String> {
    if cert.q == 0 {
        return Err("q must be positive".into());
    }
    let sides = resolve_sides(h, &cert.x_set, &cert.y_set)?;
    let mut deg_x = vec![0usize; h.a_len()];
    let mut deg_y = vec![0usize; h.b_len()];
    let mut seen = BTreeSet::new();
    for &(u, v) in &cert.m_edges {
        let i = h.pos_in_a(u).ok_or(format!("M-endpoint {u} is not in A"))?;
        let j = h.pos_in_b(v).ok_or(format!("M-endpoint {v} is not in B"))?;
        if !sides.in_x[i] {
            return Err(format!("M-edge ({u}, {v}) leaves X"));
        }
        if !sides.in_y[j] {
            return Err(format!("M-edge ({u}, {v}) leaves Y"));
        }
        if !h.has_edge(i, j) {
            return Err(format!("({u}, {v}) is not an edge of the view"));
        }
        if !seen.insert((i, j)) {
            return Err(format!("M-edge ({u}, {v}) listed twice"));
        }
        deg_x[i] += 1;
        deg_y[j] += 1;
    }
    for &i in &sides.x_pos {
        if deg_x[i] != cert.q {
            return Err(format!(
                "vertex {} carries {} M-edges, expected exactly q = {}",
                h.a()[i],
                deg_x[i],
                cert.q
            ));
        }
    }
    for &j in &sides.y_pos {
        if deg_y[j] > 1 {
            return Err(format!("vertex {} carries {} M-edges, at most one allowed", h.b()[j], deg_y[j]));
        }
    }
    check_y_closed(h, &sides)
}

/// Checks an additive-expansion certificate: `N(Y) ⊆ X`, the Hall form
/// `|N(X') ∩ Y| >= |X'| + q` exhaustively when `|X| <= 12`, and the
/// definitional form (a matching saturating X survives removing any
/// q-subset of Y) exhaustively when `|Y| <= 12`, otherwise on 64
/// deterministically sampled q-subsets.
pub fn verify_additive_expansion(
    h: &BipartiteView,
    cert: &AdditiveExpansionCertificate,
) -> Result<(), String> {
    if cert.q == 0 {
        return Err("q must be positive".into());
    }
    let sides = resolve_sides(h, &cert.x_set, &cert.y_set)?;
    check_y_closed(h, &sides)?;
    if cert.y_set.len() < cert.x_set.len() + cert.q {
        return Err(format!(
            "|Y| = {} is below |X| + q = {}",
            cert.y_set.len(),
            cert.x_set.len() + cert.q
        ));
    }

    // local adjacency restricted to X and Y
    let y_local: Vec<usize> = sides.y_pos.clone();
    let mut y_index = vec![usize::MAX; h.b_len()];
    for (jj, &j) in y_local.iter().enumerate() {
        y_index[j] = jj;
    }
    let adj: Vec<Vec<usize>> = sides
        .x_pos
        .iter()
        .map(|&i| {
            h.neighbors_of_a(i)
                .iter()
                .filter(|&&j| sides.in_y[j])
                .map(|&j| y_index[j])
                .collect()
        })
        .collect();
    let nx = adj.len();
    let ny = y_local.len();

    if nx <= 12 {
        for bits in 1u64..(1 << nx) {
            let mut nbhd = BTreeSet::new();
            let mut size = 0usize;
            for (t, nbrs) in adj.iter().enumerate() {
                if bits >> t & 1 == 1 {
                    size += 1;
                    nbhd.extend(nbrs.iter().copied());
                }
            }
            if nbhd.len() < size + cert.q {
                let members: Vec<usize> = (0..nx)
                    .filter(|&t| bits >> t & 1 == 1)
                    .map(|t| h.a()[sides.x_pos[t]])
                    .collect();
                return Err(format!(
                    "X' = {members:?} has only {} neighbors in Y, below |X'| + q = {}",
                    nbhd.len(),
                    size + cert.q
                ));
            }
        }
    }

    let saturates = |removed: &[bool]| -> bool {
        let filtered: Vec<Vec<usize>> = adj
            .iter()
            .map(|nbrs| nbrs.iter().copied().filter(|&jj| !removed[jj]).collect())
            .collect();
        max_bipartite_matching(nx, ny, &filtered).size == nx
    };
    let fail = |subset: &[usize]| -> String {
        let hosts: Vec<usize> = subset.iter().map(|&jj| h.b()[y_local[jj]]).collect();
        format!("no matching saturating X after removing B' = {hosts:?}")
    };

    if ny <= 12 {
        let mut subset = Vec::with_capacity(cert.q);
        if let Some(reason) =
            first_failing_subset(ny, cert.q, 0, &mut subset, &saturates, &fail)
        {
            return Err(reason);
        }
    } else {
        let mut rng = SplitMix64::new(0x9E37_79B9_7F4A_7C15);
        for _ in 0..64 {
            let picked = rng.choose(ny, cert.q);
            let mut removed = vec![false; ny];
            for &jj in &picked {
                removed[jj] = true;
            }
            if !saturates(&removed) {
                return Err(fail(&picked));
            }
        }
    }
    Ok(())
}

fn first_failing_subset(
    ny: usize,
    q: usize,
    start: usize,
    subset: &mut Vec<usize>,
    saturates: &dyn Fn(&[bool]) -> bool,
    fail: &dyn Fn(&[usize]) -> String,
) -> Option<String> {
    if subset.len() == q {
        let mut removed = vec![false; ny];
        for &jj in subset.iter() {
            removed[jj] = true;
        }
        if !saturates(&removed) {
            return Some(fail(subset));
        }
        return None;
    }
    let remaining = q - subset.len();
    for jj in start..=ny.saturating_sub(remaining) {
        subset.push(jj);
        if let Some(reason) = first_failing_subset(ny, q, jj + 1, subset, saturates, fail) {
            return Some(reason);
        }
        subset.pop();
    }
    None
}
