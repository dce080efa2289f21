//! `pvc bench`: run every (instance, variant) pair of a suite config and
//! emit one CSV row each, plus one aggregate row per variant with the
//! mean kernel size. Instances are evaluated in parallel; the writer is
//! the single serialization point.

use std::fs;
use std::time::Instant;

use rayon::prelude::*;
use serde::Deserialize;

use pvc_kernel::gen::erdos_renyi;
use pvc_kernel::oracle::solve_pvc_exact;
use pvc_kernel::{kernelize, variant_bound, Answer, KernelOutcome, PvcInstance, Variant};

use crate::{BenchArgs, CliError};

pub const CSV_HEADER: &str = "instance,variant,n,m,k,l,kernel_n,kernel_m,kernel_k,bound,bound_ok,rule1,rule2,rule3,rule4,oracle_agree,time_ms";

/// Oracle cross-checks are switched on automatically up to this size.
const ORACLE_AUTO_N: usize = 16;

#[derive(Debug, Deserialize)]
struct Suite {
    entries: Vec<SuiteEntry>,
}

#[derive(Debug, Deserialize)]
struct SuiteEntry {
    n: usize,
    p: f64,
    k: usize,
    l: usize,
    seeds: Vec<u64>,
}

struct Job {
    name: String,
    instance: PvcInstance,
}

struct Row {
    instance: String,
    variant: Variant,
    n: usize,
    m: usize,
    k: usize,
    l: usize,
    kernel_n: usize,
    kernel_m: usize,
    kernel_k: usize,
    bound: usize,
    bound_ok: bool,
    rule_counts: [usize; 4],
    oracle_agree: Option<bool>,
    time_ms: u64,
}

impl Row {
    fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.instance,
            self.variant,
            self.n,
            self.m,
            self.k,
            self.l,
            self.kernel_n,
            self.kernel_m,
            self.kernel_k,
            self.bound,
            self.bound_ok,
            self.rule_counts[0],
            self.rule_counts[1],
            self.rule_counts[2],
            self.rule_counts[3],
            self.oracle_agree.map(|b| b.to_string()).unwrap_or_default(),
            self.time_ms
        )
    }
}

fn evaluate(job: &Job, variant: Variant) -> Result<Row, CliError> {
    let inst = &job.instance;
    let started = Instant::now();
    let outcome = kernelize(inst, variant);
    let time_ms = started.elapsed().as_millis() as u64;

    let oracle_agree = if inst.graph.n() <= ORACLE_AUTO_N {
        let original = solve_pvc_exact(&inst.graph, inst.k, inst.l)
            .map_err(|e| CliError::input("bench oracle", e))?;
        let kernel_answer = match &outcome {
            KernelOutcome::Decided { answer, .. } => *answer == Answer::Yes,
            KernelOutcome::Reduced { instance, .. } => {
                solve_pvc_exact(&instance.graph, instance.k, instance.l)
                    .map_err(|e| CliError::input("bench oracle", e))?
                    .answer
            }
        };
        Some(original.answer == kernel_answer)
    } else {
        None
    };

    let bound = variant_bound(variant, inst.k, inst.l);
    let kernel = outcome.instance();
    Ok(Row {
        instance: job.name.clone(),
        variant,
        n: inst.graph.n(),
        m: inst.graph.m(),
        k: inst.k,
        l: inst.l,
        kernel_n: kernel.graph.n(),
        kernel_m: kernel.graph.m(),
        kernel_k: kernel.k,
        bound,
        bound_ok: match &outcome {
            KernelOutcome::Reduced { instance, .. } => instance.graph.n() <= bound,
            KernelOutcome::Decided { .. } => true,
        },
        rule_counts: outcome.trace().rule_counts(),
        oracle_agree,
        time_ms,
    })
}

pub fn run(args: BenchArgs) -> Result<(), CliError> {
    let text = fs::read_to_string(&args.suite)
        .map_err(|e| CliError::input(args.suite.display(), e))?;
    let suite: Suite = serde_json::from_str(&text)
        .map_err(|e| CliError::input(args.suite.display(), e))?;

    let mut jobs = Vec::new();
    for entry in &suite.entries {
        for &seed in &entry.seeds {
            let graph = erdos_renyi(entry.n, entry.p, seed)
                .map_err(|e| CliError::input("bench", e))?;
            jobs.push(Job {
                name: format!("er_n{}_p{}_k{}_l{}_s{}", entry.n, entry.p, entry.k, entry.l, seed),
                instance: PvcInstance { graph, k: entry.k, l: entry.l },
            });
        }
    }

    let rows: Vec<Row> = jobs
        .par_iter()
        .map(|job| -> Result<Vec<Row>, CliError> {
            Ok(vec![
                evaluate(job, Variant::Expansion)?,
                evaluate(job, Variant::Additive)?,
            ])
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();

    let mut lines = vec![CSV_HEADER.to_string()];
    lines.extend(rows.iter().map(Row::to_csv));
    for variant in [Variant::Expansion, Variant::Additive] {
        let sizes: Vec<usize> = rows
            .iter()
            .filter(|r| r.variant == variant)
            .map(|r| r.kernel_n)
            .collect();
        if !sizes.is_empty() {
            let mean = sizes.iter().sum::<usize>() as f64 / sizes.len() as f64;
            lines.push(format!("aggregate,{variant},,,,,{mean:.2},,,,,,,,,,"));
        }
    }
    let mut output = lines.join("\n");
    output.push('\n');

    match &args.out {
        None => print!("{output}"),
        Some(path) => fs::write(path, output).map_err(|e| CliError::input(path.display(), e))?,
    }

    if rows.iter().any(|r| r.oracle_agree == Some(false)) {
        return Err(CliError::OracleDisagreement);
    }
    Ok(())
}
