//! Reduction rules and the two kernelization pipelines for Partial
//! Vertex Cover, plus solution lifting from kernel back to the original
//! instance.
//!
//! The pipeline removes isolated vertices, answers yes outright when at
//! most `l` edges remain, solves the vertex-cover LP once, answers no
//! when the LP optimum exceeds `k + l`, and then repeatedly deletes
//! expansion certificates found in `G[V1, V0]` while the partition-size
//! guard holds. The LP partition is maintained incrementally under
//! deletions; it is never recomputed.

use std::fmt;

use crate::expansion::{find_q_additive_expansion, find_q_expansion};
use crate::graph::Graph;
use crate::vclp::{solve_vclp, HalfIntegralSolution};

/// One Partial Vertex Cover instance: graph plus budget `k` and edge
/// allowance `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PvcInstance {
    pub graph: Graph,
    pub k: usize,
    pub l: usize,
}

/// The maintained LP partition, as index sets into the current graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub v0: Vec<usize>,
    pub v1: Vec<usize>,
    pub vhalf: Vec<usize>,
}

impl Partition {
    pub fn from_solution(sol: &HalfIntegralSolution) -> Partition {
        Partition {
            v0: sol.v0().to_vec(),
            v1: sol.v1().to_vec(),
            vhalf: sol.vhalf().to_vec(),
        }
    }

    fn remap(&self, old_to_new: &[Option<usize>]) -> Partition {
        let map = |set: &[usize]| set.iter().filter_map(|&v| old_to_new[v]).collect();
        Partition {
            v0: map(&self.v0),
            v1: map(&self.v1),
            vhalf: map(&self.vhalf),
        }
    }
}

/// Which pipeline to run: (l+1)-expansions or l-additive expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Expansion,
    Additive,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Expansion => write!(f, "expansion"),
            Variant::Additive => write!(f, "additive"),
        }
    }
}

/// Vertex bound guaranteed for reduced outcomes, in terms of the input
/// parameters: `(l+2)(k+l)` for the expansion variant and
/// `(max(l,1)+1)(k+l)` for the additive variant.
pub fn variant_bound(variant: Variant, k: usize, l: usize) -> usize {
    let budget = k.saturating_add(l);
    match variant {
        Variant::Expansion => l.saturating_add(2).saturating_mul(budget),
        Variant::Additive => l.max(1).saturating_add(1).saturating_mul(budget),
    }
}

/// One recorded rule application, in original vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleStep {
    /// Rule 1: isolated vertices deleted.
    Isolated { removed: Vec<usize> },
    /// Rule 2 fired: the LP optimum proves a no-instance.
    LpBound,
    /// Rule 3: an (l+1)-expansion (X, Y) deleted, k decreased by |X|.
    Expansion { x: Vec<usize>, y: Vec<usize> },
    /// Rule 4: an l-additive expansion (X, Y) deleted, k decreased by |X|.
    Additive { x: Vec<usize>, y: Vec<usize> },
}

impl RuleStep {
    pub fn rule_id(&self) -> u8 {
        match self {
            RuleStep::Isolated { .. } => 1,
            RuleStep::LpBound => 2,
            RuleStep::Expansion { .. } => 3,
            RuleStep::Additive { .. } => 4,
        }
    }

    pub fn k_decrement(&self) -> usize {
        match self {
            RuleStep::Expansion { x, .. } | RuleStep::Additive { x, .. } => x.len(),
            _ => 0,
        }
    }

    /// All labels the step removed from the graph.
    pub fn deleted_labels(&self) -> Vec<usize> {
        match self {
            RuleStep::Isolated { removed } => removed.clone(),
            RuleStep::LpBound => Vec::new(),
            RuleStep::Expansion { x, y } | RuleStep::Additive { x, y } => {
                let mut all = x.clone();
                all.extend_from_slice(y);
                all.sort_unstable();
                all
            }
        }
    }
}

/// Ordered log of rule applications; deleted sets are recorded in
/// original labels so solutions can be lifted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KernelTrace {
    pub steps: Vec<RuleStep>,
}

impl KernelTrace {
    /// Applications per rule, indexed by rule id minus one.
    pub fn rule_counts(&self) -> [usize; 4] {
        let mut counts = [0; 4];
        for step in &self.steps {
            counts[step.rule_id() as usize - 1] += 1;
        }
        counts
    }

    pub fn total_k_decrement(&self) -> usize {
        self.steps.iter().map(RuleStep::k_decrement).sum()
    }

    /// Union of all deleted X sets, sorted.
    pub fn deleted_x_union(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for step in &self.steps {
            if let RuleStep::Expansion { x, .. } | RuleStep::Additive { x, .. } = step {
                out.extend_from_slice(x);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Yes => write!(f, "yes"),
            Answer::No => write!(f, "no"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionReason {
    /// At most `l` edges remain, so the empty set solves the residual.
    FewEdgesRemain,
    /// `2|V1| + |V1/2| > 2(k + l)`: every solution would need a vertex
    /// cover of size more than `k + l`.
    LpBoundExceeded,
    /// A certificate with `|X|` above the remaining budget was found;
    /// every solution must contain at least `|X|` vertices.
    BudgetExhausted,
}

impl fmt::Display for DecisionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecisionReason::FewEdgesRemain => write!(f, "at most l edges remain"),
            DecisionReason::LpBoundExceeded => write!(f, "LP optimum exceeds k + l"),
            DecisionReason::BudgetExhausted => {
                write!(f, "a reduction requires more than the remaining budget")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionSizes {
    pub v0: usize,
    pub v1: usize,
    pub vhalf: usize,
}

/// Result of a kernelization run. `Decided` carries the residual
/// instance at decision time so reports can state what remained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelOutcome {
    Decided {
        answer: Answer,
        reason: DecisionReason,
        instance: PvcInstance,
        trace: KernelTrace,
    },
    Reduced {
        instance: PvcInstance,
        trace: KernelTrace,
        partition: PartitionSizes,
    },
}

impl KernelOutcome {
    pub fn trace(&self) -> &KernelTrace {
        match self {
            KernelOutcome::Decided { trace, .. } | KernelOutcome::Reduced { trace, .. } => trace,
        }
    }

    pub fn instance(&self) -> &PvcInstance {
        match self {
            KernelOutcome::Decided { instance, .. } | KernelOutcome::Reduced { instance, .. } => {
                instance
            }
        }
    }

    pub fn decided_answer(&self) -> Option<Answer> {
        match self {
            KernelOutcome::Decided { answer, .. } => Some(*answer),
            KernelOutcome::Reduced { .. } => None,
        }
    }
}

/// Rule 1: delete every isolated vertex. Returns the new instance and
/// the removed labels; `k` and `l` are unchanged.
pub fn rr_isolated(inst: &PvcInstance) -> (PvcInstance, Vec<usize>) {
    let iso = inst.graph.isolated_vertices();
    if iso.is_empty() {
        return (inst.clone(), Vec::new());
    }
    let removed = inst.graph.labels_of(&iso);
    let (graph, _) = inst.graph.delete_vertices(&iso).expect("isolated vertices are in range");
    (PvcInstance { graph, k: inst.k, l: inst.l }, removed)
}

/// Rule 2: true means no-instance. Fires iff `2|V1| + |V1/2| > 2(k+l)`,
/// in exact integers.
pub fn rr_lp_bound(sol: &HalfIntegralSolution, k: usize, l: usize) -> bool {
    2 * sol.v1().len() + sol.vhalf().len() > k.saturating_add(l).saturating_mul(2)
}

/// Outcome of one expansion-style rule application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpansionReduction {
    /// X and Y deleted, k decreased by |X|, partition remapped.
    Applied {
        instance: PvcInstance,
        partition: Partition,
        x_labels: Vec<usize>,
        y_labels: Vec<usize>,
    },
    /// The certificate's X exceeds the remaining budget. Any solution
    /// must contain at least |X| vertices, so the instance is a
    /// no-instance.
    ExceedsBudget { x_labels: Vec<usize> },
}

/// Rule 3: if `|V0| >= (l+1)|V1|` with `V1` nonempty, delete an
/// (l+1)-expansion (X, Y) of `G[V1, V0]` and decrease k by |X|.
/// `N(Y) ⊆ X` must hold in the full graph and is asserted.
pub fn rr_expansion(inst: &PvcInstance, part: &Partition) -> Option<ExpansionReduction> {
    let q = inst.l + 1;
    if part.v1.is_empty() || part.v0.len() < q.saturating_mul(part.v1.len()) {
        return None;
    }
    let view = inst
        .graph
        .bipartite_view(&part.v1, &part.v0)
        .expect("partition sides are disjoint vertex sets");
    let cert = find_q_expansion(&view, q)
        .expect("guard and partition invariant imply the expansion lemma preconditions");
    Some(apply_certificate(inst, part, &cert.x_set, &cert.y_set))
}

/// Rule 4: if `|V0| > l|V1|` with `V1` nonempty, delete an l-additive
/// expansion (X, Y) of `G[V1, V0]` and decrease k by |X|. Requires
/// `l >= 1`; the l = 0 pipeline uses 1-expansions instead.
pub fn rr_additive(inst: &PvcInstance, part: &Partition) -> Option<ExpansionReduction> {
    assert!(inst.l >= 1, "rule 4 needs l >= 1");
    let q = inst.l;
    if part.v1.is_empty() || part.v0.len() <= q.saturating_mul(part.v1.len()) {
        return None;
    }
    let view = inst
        .graph
        .bipartite_view(&part.v1, &part.v0)
        .expect("partition sides are disjoint vertex sets");
    let cert = find_q_additive_expansion(&view, q)
        .expect("guard and partition invariant imply the additive lemma preconditions");
    Some(apply_certificate(inst, part, &cert.x_set, &cert.y_set))
}

fn apply_certificate(
    inst: &PvcInstance,
    part: &Partition,
    x_idx: &[usize],
    y_idx: &[usize],
) -> ExpansionReduction {
    let mut in_x = vec![false; inst.graph.n()];
    for &v in x_idx {
        in_x[v] = true;
    }
    for &y in y_idx {
        for &u in inst.graph.neighbors(y) {
            assert!(
                in_x[u],
                "partition invariant corrupted: Y-vertex {} has neighbor {} outside X",
                inst.graph.label(y),
                inst.graph.label(u)
            );
        }
    }
    let x_labels = inst.graph.labels_of(x_idx);
    if x_idx.len() > inst.k {
        return ExpansionReduction::ExceedsBudget { x_labels };
    }
    let y_labels = inst.graph.labels_of(y_idx);
    let mut deleted = x_idx.to_vec();
    deleted.extend_from_slice(y_idx);
    let (graph, old_to_new) = inst
        .graph
        .delete_vertices(&deleted)
        .expect("certificate vertices index the current graph");
    ExpansionReduction::Applied {
        instance: PvcInstance { graph, k: inst.k - x_idx.len(), l: inst.l },
        partition: part.remap(&old_to_new),
        x_labels,
        y_labels,
    }
}

fn assert_partition_invariant(graph: &Graph, part: &Partition) {
    let mut in_v1 = vec![false; graph.n()];
    for &v in &part.v1 {
        in_v1[v] = true;
    }
    for &v in &part.v0 {
        for &u in graph.neighbors(v) {
            assert!(
                in_v1[u],
                "partition invariant corrupted: V0-vertex {} has neighbor {} outside V1",
                graph.label(v),
                graph.label(u)
            );
        }
    }
    debug_assert_eq!(
        part.v0.len() + part.v1.len() + part.vhalf.len(),
        graph.n(),
        "partition must cover the current graph"
    );
}

/// Runs the full pipeline for the chosen variant.
pub fn kernelize(inst: &PvcInstance, variant: Variant) -> KernelOutcome {
    let mut steps = Vec::new();
    let (mut cur, removed) = rr_isolated(inst);
    if !removed.is_empty() {
        steps.push(RuleStep::Isolated { removed });
    }
    if cur.graph.m() <= cur.l {
        return KernelOutcome::Decided {
            answer: Answer::Yes,
            reason: DecisionReason::FewEdgesRemain,
            instance: cur,
            trace: KernelTrace { steps },
        };
    }

    let sol = solve_vclp(&cur.graph);
    if rr_lp_bound(&sol, cur.k, cur.l) {
        steps.push(RuleStep::LpBound);
        return KernelOutcome::Decided {
            answer: Answer::No,
            reason: DecisionReason::LpBoundExceeded,
            instance: cur,
            trace: KernelTrace { steps },
        };
    }

    let mut part = Partition::from_solution(&sol);
    loop {
        let use_additive = variant == Variant::Additive && cur.l >= 1;
        let reduction = if use_additive {
            rr_additive(&cur, &part)
        } else {
            rr_expansion(&cur, &part)
        };
        let Some(reduction) = reduction else { break };
        match reduction {
            ExpansionReduction::ExceedsBudget { .. } => {
                return KernelOutcome::Decided {
                    answer: Answer::No,
                    reason: DecisionReason::BudgetExhausted,
                    instance: cur,
                    trace: KernelTrace { steps },
                };
            }
            ExpansionReduction::Applied { instance, partition, x_labels, y_labels } => {
                steps.push(if use_additive {
                    RuleStep::Additive { x: x_labels, y: y_labels }
                } else {
                    RuleStep::Expansion { x: x_labels, y: y_labels }
                });
                cur = instance;
                part = partition;
                // deleting X can isolate vertices of any class; sweep them
                let iso = cur.graph.isolated_vertices();
                if !iso.is_empty() {
                    let removed = cur.graph.labels_of(&iso);
                    let (graph, old_to_new) =
                        cur.graph.delete_vertices(&iso).expect("isolated vertices are in range");
                    part = part.remap(&old_to_new);
                    cur = PvcInstance { graph, k: cur.k, l: cur.l };
                    steps.push(RuleStep::Isolated { removed });
                }
                assert_partition_invariant(&cur.graph, &part);
            }
        }
    }

    if cur.graph.m() <= cur.l {
        return KernelOutcome::Decided {
            answer: Answer::Yes,
            reason: DecisionReason::FewEdgesRemain,
            instance: cur,
            trace: KernelTrace { steps },
        };
    }

    let bound = variant_bound(variant, inst.k, inst.l);
    assert!(
        cur.graph.n() <= bound,
        "kernel has {} vertices, above the guaranteed bound {bound}",
        cur.graph.n()
    );
    debug_assert!(cur.graph.isolated_vertices().is_empty());
    debug_assert_eq!(cur.k + steps.iter().map(RuleStep::k_decrement).sum::<usize>(), inst.k);
    KernelOutcome::Reduced {
        instance: cur,
        trace: KernelTrace { steps },
        partition: PartitionSizes {
            v0: part.v0.len(),
            v1: part.v1.len(),
            vhalf: part.vhalf.len(),
        },
    }
}

/// Lifts a kernel solution to the original instance by re-adding every
/// deleted X set. Input and output are external labels.
pub fn lift_solution(trace: &KernelTrace, s_kernel: &[usize]) -> Vec<usize> {
    let mut out = s_kernel.to_vec();
    out.extend(trace.deleted_x_union());
    out.sort_unstable();
    out.dedup();
    out
}
