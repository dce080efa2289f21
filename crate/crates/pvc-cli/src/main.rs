//! Command-line surface: parse instances, generate random or planted
//! instances, run either kernelization variant, cross-validate against
//! the brute-force oracle, and emit machine-readable reports.
//!
//! Exit codes: 0 on success, 2 on input/usage errors, 3 when an oracle
//! cross-check disagrees with the pipeline.

mod bench;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pvc_kernel::gen::{erdos_renyi, planted};
use pvc_kernel::oracle::solve_pvc_exact;
use pvc_kernel::{kernelize, Answer, Graph, KernelOutcome, PvcInstance, Variant};

#[derive(Parser)]
#[command(name = "pvc", version, about = "Kernelization for Partial Vertex Cover")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kernelize one instance and print a JSON report
    Kernelize(KernelizeArgs),
    /// Generate instance files
    Gen {
        #[command(subcommand)]
        model: GenModel,
    },
    /// Run a suite of generated instances and print CSV rows
    Bench(BenchArgs),
}

#[derive(Args)]
struct KernelizeArgs {
    /// Graph file in the DIMACS-like text format
    #[arg(long)]
    input: PathBuf,
    /// Deletion budget k
    #[arg(short)]
    k: usize,
    /// Edge allowance l
    #[arg(short)]
    l: usize,
    /// Which pipeline to run
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Cross-validate the outcome against the brute-force oracle
    #[arg(long)]
    oracle_check: bool,
    /// Also write the JSON report to this path
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Expansion,
    Additive,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Expansion => Variant::Expansion,
            VariantArg::Additive => Variant::Additive,
        }
    }
}

#[derive(Subcommand)]
enum GenModel {
    /// Erdos-Renyi G(n, p)
    Er {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        /// Output path (stdout when omitted); a `.params.json` sidecar
        /// is written next to it
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Planted yes-instance: a solution set of size k is chosen, the
    /// rest carries exactly l edges
    Planted {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BenchArgs {
    /// JSON suite config: {"entries": [{"n", "p", "k", "l", "seeds"}]}
    #[arg(long)]
    suite: PathBuf,
    /// Output path for the CSV (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

enum CliError {
    Input(String),
    OracleDisagreement,
}

impl CliError {
    fn input(context: impl std::fmt::Display, err: impl std::fmt::Display) -> CliError {
        CliError::Input(format!("{context}: {err}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Kernelize(args) => run_kernelize(args),
        Command::Gen { model } => run_gen(model),
        Command::Bench(args) => bench::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::OracleDisagreement) => {
            eprintln!("error: oracle disagrees with the kernelization outcome");
            ExitCode::from(3)
        }
    }
}

fn read_instance(path: &Path, k: usize, l: usize) -> Result<PvcInstance, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::input(path.display(), e))?;
    let graph = Graph::parse_dimacs(&text).map_err(|e| CliError::input(path.display(), e))?;
    Ok(PvcInstance { graph, k, l })
}

fn run_kernelize(args: KernelizeArgs) -> Result<(), CliError> {
    let inst = read_instance(&args.input, args.k, args.l)?;
    let variant = Variant::from(args.variant);
    let started = Instant::now();
    let outcome = kernelize(&inst, variant);
    let time_ms = started.elapsed().as_millis() as u64;

    let oracle = if args.oracle_check {
        Some(oracle_stats(&inst, &outcome)?)
    } else {
        None
    };
    let disagreement = matches!(&oracle, Some(o) if !o.agree);

    let report = report::build(&inst, variant, &outcome, oracle, time_ms);
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    println!("{json}");
    if let Some(path) = &args.json {
        fs::write(path, format!("{json}\n")).map_err(|e| CliError::input(path.display(), e))?;
    }
    if disagreement {
        return Err(CliError::OracleDisagreement);
    }
    Ok(())
}

fn oracle_stats(
    inst: &PvcInstance,
    outcome: &KernelOutcome,
) -> Result<report::OracleStats, CliError> {
    let original = solve_pvc_exact(&inst.graph, inst.k, inst.l)
        .map_err(|e| CliError::input("oracle check", e))?;
    let kernel_answer = match outcome {
        KernelOutcome::Decided { answer, .. } => *answer == Answer::Yes,
        KernelOutcome::Reduced { instance, .. } => {
            solve_pvc_exact(&instance.graph, instance.k, instance.l)
                .map_err(|e| CliError::input("oracle check", e))?
                .answer
        }
    };
    Ok(report::OracleStats {
        original_answer: if original.answer { "yes" } else { "no" }.to_string(),
        kernel_answer: if kernel_answer { "yes" } else { "no" }.to_string(),
        agree: original.answer == kernel_answer,
    })
}

fn run_gen(model: GenModel) -> Result<(), CliError> {
    match model {
        GenModel::Er { n, p, seed, out } => {
            let graph = erdos_renyi(n, p, seed).map_err(|e| CliError::input("gen er", e))?;
            let body = graph.to_dimacs().expect("generated labels are canonical");
            let text = format!("c pvc gen er --n {n} --p {p} --seed {seed}\n{body}");
            let sidecar = serde_json::json!({
                "model": "er", "n": n, "p": p, "seed": seed,
            });
            write_generated(out.as_deref(), &text, &sidecar)
        }
        GenModel::Planted { n, k, l, seed, out } => {
            let gen = planted(n, k, l, seed).map_err(|e| CliError::input("gen planted", e))?;
            let body = gen.instance.graph.to_dimacs().expect("generated labels are canonical");
            let solution_list =
                gen.solution.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
            let text = format!(
                "c pvc gen planted --n {n} --k {k} --l {l} --seed {seed}\nc planted solution: {solution_list}\n{body}"
            );
            let sidecar = serde_json::json!({
                "model": "planted", "n": n, "k": k, "l": l, "seed": seed,
                "solution": gen.solution,
            });
            write_generated(out.as_deref(), &text, &sidecar)
        }
    }
}

fn write_generated(
    out: Option<&Path>,
    text: &str,
    sidecar: &serde_json::Value,
) -> Result<(), CliError> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::input(path.display(), e))?;
            let sidecar_path = PathBuf::from(format!("{}.params.json", path.display()));
            let body = serde_json::to_string_pretty(sidecar).expect("sidecar serializes");
            fs::write(&sidecar_path, format!("{body}\n"))
                .map_err(|e| CliError::input(sidecar_path.display(), e))?;
            Ok(())
        }
    }
}
