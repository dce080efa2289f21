//! Kernelization for Partial Vertex Cover.
//!
//! Given a graph and integers `k` and `l`, the question is whether some
//! set of at most `k` vertices can be deleted so that at most `l` edges
//! remain. This crate shrinks such instances with two pipelines seeded
//! by an optimal half-integral solution of the vertex-cover LP: one
//! deletes (l+1)-expansions of `G[V1, V0]` and guarantees at most
//! `(l+2)(k+l)` vertices in any reduced output, the other deletes
//! l-additive expansions and guarantees `(max(l,1)+1)(k+l)`.
//!
//! Everything is exact integer arithmetic and every tie is broken by
//! ascending vertex index, so runs are reproducible. Certificate
//! verifiers and brute-force oracles back the test suites.

pub mod expansion;
mod flow;
pub mod gen;
pub mod graph;
pub mod kernel;
mod matching;
pub mod oracle;
pub mod rng;
pub mod vclp;

#[cfg(test)]
pub(crate) mod testutil;

pub use graph::{BipartiteView, Graph, GraphError, ParseError};
pub use kernel::{
    kernelize, lift_solution, variant_bound, Answer, DecisionReason, KernelOutcome, KernelTrace,
    Partition, PartitionSizes, PvcInstance, RuleStep, Variant,
};
pub use oracle::{solve_pvc_exact, OracleError, OracleVerdict};
pub use vclp::{solve_vclp, verify_half_integral, HalfIntegralSolution};
