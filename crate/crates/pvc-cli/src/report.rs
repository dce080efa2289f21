//! JSON report emitted by `pvc kernelize`.

use serde::Serialize;

use pvc_kernel::kernel::{rr_isolated, KernelOutcome, RuleStep};
use pvc_kernel::{solve_vclp, variant_bound, Answer, PvcInstance, Variant};

#[derive(Debug, Serialize)]
pub struct Report {
    pub input: InputStats,
    pub vclp: Option<VclpStats>,
    pub steps: Vec<StepRecord>,
    pub outcome: String,
    pub kernel: KernelStats,
    pub bound: usize,
    pub bound_satisfied: bool,
    pub oracle: Option<OracleStats>,
    pub time_ms: u64,
}

#[derive(Debug, Serialize)]
pub struct InputStats {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub l: usize,
}

#[derive(Debug, Serialize)]
pub struct VclpStats {
    pub doubled_value: usize,
    pub v0: usize,
    pub v1: usize,
    pub vhalf: usize,
}

#[derive(Debug, Serialize)]
pub struct KernelStats {
    pub n: usize,
    pub m: usize,
    pub k: usize,
}

#[derive(Debug, Serialize)]
pub struct StepRecord {
    pub rule: u8,
    pub deleted: Vec<usize>,
    pub k_dec: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct OracleStats {
    pub original_answer: String,
    pub kernel_answer: String,
    pub agree: bool,
}

pub fn outcome_str(outcome: &KernelOutcome) -> &'static str {
    match outcome {
        KernelOutcome::Decided { answer: Answer::Yes, .. } => "yes",
        KernelOutcome::Decided { answer: Answer::No, .. } => "no",
        KernelOutcome::Reduced { .. } => "reduced",
    }
}

fn step_record(step: &RuleStep) -> StepRecord {
    let (x, y) = match step {
        RuleStep::Expansion { x, y } | RuleStep::Additive { x, y } => {
            (Some(x.clone()), Some(y.clone()))
        }
        _ => (None, None),
    };
    StepRecord {
        rule: step.rule_id(),
        deleted: step.deleted_labels(),
        k_dec: step.k_decrement(),
        x,
        y,
    }
}

/// Assembles the report. The LP stats are recomputed on the
/// rule-1-cleaned input exactly as the pipeline saw them; `None` when
/// the pipeline decided before solving the LP.
pub fn build(
    input: &PvcInstance,
    variant: Variant,
    outcome: &KernelOutcome,
    oracle: Option<OracleStats>,
    time_ms: u64,
) -> Report {
    let vclp = {
        let (cleaned, _) = rr_isolated(input);
        (cleaned.graph.m() > cleaned.l).then(|| {
            let sol = solve_vclp(&cleaned.graph);
            VclpStats {
                doubled_value: sol.doubled_value(),
                v0: sol.v0().len(),
                v1: sol.v1().len(),
                vhalf: sol.vhalf().len(),
            }
        })
    };
    let kernel_inst = outcome.instance();
    let bound = variant_bound(variant, input.k, input.l);
    let bound_satisfied = match outcome {
        KernelOutcome::Reduced { instance, .. } => instance.graph.n() <= bound,
        KernelOutcome::Decided { .. } => true,
    };
    Report {
        input: InputStats {
            n: input.graph.n(),
            m: input.graph.m(),
            k: input.k,
            l: input.l,
        },
        vclp,
        steps: outcome.trace().steps.iter().map(step_record).collect(),
        outcome: outcome_str(outcome).to_string(),
        kernel: KernelStats {
            n: kernel_inst.graph.n(),
            m: kernel_inst.graph.m(),
            k: kernel_inst.k,
        },
        bound,
        bound_satisfied,
        oracle,
        time_ms,
    }
}
